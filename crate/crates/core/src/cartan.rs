//! Cartan data of G₂ and the Weyl dimension oracle.
//!
//! Weights are stored by their pairings with the simple coroots, so
//! `Weight { h1: a, h2: b }` is `a·Λ₁ + b·Λ₂`. The Cartan matrix has
//! `α₂(h₁) = -3` and `α₁(h₂) = -1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A simple root index of G₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Index {
    One,
    Two,
}

impl Index {
    pub const ALL: [Index; 2] = [Index::One, Index::Two];

    pub fn number(self) -> u8 {
        match self {
            Index::One => 1,
            Index::Two => 2,
        }
    }
}

impl TryFrom<i64> for Index {
    type Error = Error;

    fn try_from(i: i64) -> Result<Self> {
        match i {
            1 => Ok(Index::One),
            2 => Ok(Index::Two),
            other => Err(Error::InvalidIndex(other)),
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// An integral weight `h1·Λ₁ + h2·Λ₂`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub h1: i64,
    pub h2: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { h1: 0, h2: 0 };

    pub const fn new(h1: i64, h2: i64) -> Self {
        Weight { h1, h2 }
    }

    /// The fundamental weight `Λ_i`.
    pub fn fundamental(i: Index) -> Self {
        match i {
            Index::One => Weight::new(1, 0),
            Index::Two => Weight::new(0, 1),
        }
    }

    /// Evaluates the weight on the coroot `h_i`.
    pub fn pairing(self, i: Index) -> i64 {
        match i {
            Index::One => self.h1,
            Index::Two => self.h2,
        }
    }

    pub fn is_dominant(self) -> bool {
        self.h1 >= 0 && self.h2 >= 0
    }
}

/// The simple root `α_i` in the coroot-pairing basis.
pub fn simple_root(i: Index) -> Weight {
    match i {
        Index::One => Weight::new(2, -1),
        Index::Two => Weight::new(-3, 2),
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h1, self.h2)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.h1, self.h2].serialize(serializer)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.h1 + rhs.h1, self.h2 + rhs.h2)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.h1 - rhs.h1, self.h2 - rhs.h2)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        *self = *self + rhs;
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        *self = *self - rhs;
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.h1, -self.h2)
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        Weight::new(self * rhs.h1, self * rhs.h2)
    }
}

/// A dominant integral weight, the only kind of highest weight the
/// B(λ) constructions accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight(Weight);

impl DominantWeight {
    pub fn new(h1: i64, h2: i64) -> Result<Self> {
        Weight::new(h1, h2).try_into()
    }

    pub fn weight(self) -> Weight {
        self.0
    }

    pub fn pairing(self, i: Index) -> i64 {
        self.0.pairing(i)
    }

    pub fn h1(self) -> i64 {
        self.0.h1
    }

    pub fn h2(self) -> i64 {
        self.0.h2
    }

    /// All dominant weights with `h1 + h2 <= max_sum`, ordered by the sum
    /// and then by `h1` descending.
    pub fn up_to_level(max_sum: i64) -> Vec<DominantWeight> {
        let mut out = Vec::new();
        for s in 0..=max_sum {
            for h2 in 0..=s {
                out.push(DominantWeight(Weight::new(s - h2, h2)));
            }
        }
        out
    }
}

impl TryFrom<Weight> for DominantWeight {
    type Error = Error;

    fn try_from(w: Weight) -> Result<Self> {
        if w.is_dominant() {
            Ok(DominantWeight(w))
        } else {
            Err(Error::NotDominant(w))
        }
    }
}

impl From<DominantWeight> for Weight {
    fn from(d: DominantWeight) -> Weight {
        d.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Dimension of the irreducible G₂-module of highest weight `lambda`,
/// by the Weyl dimension formula over the six positive roots.
pub fn weyl_dim(lambda: DominantWeight) -> u128 {
    let m = lambda.h1() as u128;
    let n = lambda.h2() as u128;
    let numerator = (m + 1) * (n + 1) * (m + n + 2) * (m + 2 * n + 3) * (m + 3 * n + 4) * (2 * m + 3 * n + 5);
    debug_assert_eq!(numerator % 120, 0);
    numerator / 120
}
