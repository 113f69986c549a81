//! The two realizations of B(λ): the monomial set N(λ) and the tableau
//! set T(∞)_λ = { T ⊗ t_λ }, together with the bijection ω_λ.
//!
//! Every rational bound below is compared by cross-multiplication.

use std::fmt;
use std::str::FromStr;

use crate::cartan::{simple_root, DominantWeight, Index, Weight};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::tableau::{self, BoxCounts, MlTableau};

/// Exponents of the `U_i(m)⁻¹` factors applied to `N_λ`:
/// `U₂(0)^{-u20} U₁(1)^{-u11} U₂(1)^{-u21} U₁(2)^{-u12} U₂(2)^{-u22} U₁(3)^{-u13}`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UCoords {
    pub u20: u32,
    pub u11: u32,
    pub u21: u32,
    pub u12: u32,
    pub u22: u32,
    pub u13: u32,
}

impl UCoords {
    pub fn new(u20: u32, u11: u32, u21: u32, u12: u32, u22: u32, u13: u32) -> Self {
        UCoords { u20, u11, u21, u12, u22, u13 }
    }

    /// Checks the defining inequalities of N(λ), returning the first one
    /// that fails.
    pub fn check(&self, lambda: DominantWeight) -> std::result::Result<(), &'static str> {
        let l1 = lambda.h1();
        let l2 = lambda.h2();
        let [u20, u11, u21, u12, u22, u13] = self.as_i64();
        let conditions: [(bool, &'static str); 10] = [
            (u20 <= l2, "u20 <= lambda(h2)"),
            (u11 <= 3 * u20 + l1, "u11 <= 3*u20 + lambda(h1)"),
            (3 * u21 <= 2 * u11 + l1, "u21 <= (2*u11 + lambda(h1))/3"),
            (u21 <= u11, "u21 <= u11"),
            (2 * u12 <= 3 * u21 + l1, "u12 <= (3*u21 + lambda(h1))/2"),
            (u12 <= 2 * u21, "u12 <= 2*u21"),
            (3 * u22 <= u12 + l1, "u22 <= (u12 + lambda(h1))/3"),
            (2 * u22 <= u12, "u22 <= u12/2"),
            (u13 <= l1, "u13 <= lambda(h1)"),
            (u13 <= u22, "u13 <= u22"),
        ];
        match conditions.into_iter().find(|(ok, _)| !ok) {
            Some((_, name)) => Err(name),
            None => Ok(()),
        }
    }

    fn as_i64(&self) -> [i64; 6] {
        [self.u20, self.u11, self.u21, self.u12, self.u22, self.u13].map(i64::from)
    }

    /// Number of `f̃₁` and `f̃₂` needed to reach the element from `N_λ`.
    pub fn depth(&self) -> (u32, u32) {
        (self.u11 + self.u12 + self.u13, self.u20 + self.u21 + self.u22)
    }
}

impl fmt::Display for UCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = self;
        write!(f, "{},{},{},{},{},{}", u.u20, u.u11, u.u21, u.u12, u.u22, u.u13)
    }
}

/// The identification of monomial exponents with tableau box counts.
impl From<UCoords> for BoxCounts {
    fn from(u: UCoords) -> BoxCounts {
        BoxCounts {
            t23: u.u20,
            t12: u.u11,
            t13: u.u21,
            t10: u.u12,
            t1bar2: u.u22,
            t1bar1: u.u13,
        }
    }
}

impl From<BoxCounts> for UCoords {
    fn from(t: BoxCounts) -> UCoords {
        UCoords {
            u20: t.t23,
            u11: t.t12,
            u21: t.t13,
            u12: t.t10,
            u22: t.t1bar2,
            u13: t.t1bar1,
        }
    }
}

/// `N_λ = Y₁(1)^{λ(h₁)} Y₂(0)^{λ(h₂)}`.
pub fn highest_monomial(lambda: DominantWeight) -> Monomial {
    Monomial::from_factors([(Index::One, 1, lambda.h1()), (Index::Two, 0, lambda.h2())])
}

fn monomial_of_u_unchecked(u: &UCoords, lambda: DominantWeight) -> Monomial {
    let (l1, l2) = (lambda.h1(), lambda.h2());
    let [u20, u11, u21, u12, u22, u13] = u.as_i64();
    Monomial::from_factors([
        (Index::One, 1, l1 + 3 * u20 - u11),
        (Index::One, 2, 3 * u21 - u11 - u12),
        (Index::One, 3, 3 * u22 - u12 - u13),
        (Index::One, 4, -u13),
        (Index::Two, 0, l2 - u20),
        (Index::Two, 1, -u20 - u21 + u11),
        (Index::Two, 2, -u21 - u22 + u12),
        (Index::Two, 3, -u22 + u13),
    ])
}

/// The element of N(λ) with the given exponents, written in the `Y_i(m)`.
pub fn monomial_of_u(u: &UCoords, lambda: DominantWeight) -> Result<Monomial> {
    u.check(lambda).map_err(Error::ConditionViolated)?;
    Ok(monomial_of_u_unchecked(u, lambda))
}

/// `λ - (u11+u12+u13)α₁ - (u20+u21+u22)α₂`.
pub fn u_weight(u: &UCoords, lambda: DominantWeight) -> Weight {
    let (d1, d2) = u.depth();
    lambda.weight() - i64::from(d1) * simple_root(Index::One) - i64::from(d2) * simple_root(Index::Two)
}

/// Recovers the exponents of `n` if it lies in N(λ).
pub fn in_n_lambda(n: &Monomial, lambda: DominantWeight) -> Option<UCoords> {
    let y1 = |m| n.exponent(Index::One, m);
    let y2 = |m| n.exponent(Index::Two, m);
    // Triangular solve, from the deepest level up.
    let u13 = -y1(4);
    let u22 = u13 - y2(3);
    let u12 = 3 * u22 - u13 - y1(3);
    let u21 = u12 - u22 - y2(2);
    let u20 = lambda.h2() - y2(0);
    let u11 = y2(1) + u20 + u21;
    let to_u32 = |v: i64| u32::try_from(v).ok();
    let u = UCoords {
        u20: to_u32(u20)?,
        u11: to_u32(u11)?,
        u21: to_u32(u21)?,
        u12: to_u32(u12)?,
        u22: to_u32(u22)?,
        u13: to_u32(u13)?,
    };
    u.check(lambda).ok()?;
    // Confirms the Y₁(1), Y₁(2) exponents and rules out stray support.
    (monomial_of_u_unchecked(&u, lambda) == *n).then_some(u)
}

/// All exponent tuples of N(λ), in lexicographic order of
/// `(u20, u11, u21, u12, u22, u13)`.
pub fn enumerate_n_lambda(lambda: DominantWeight) -> Vec<UCoords> {
    let l1 = lambda.h1();
    let l2 = lambda.h2();
    let mut out = Vec::new();
    for u20 in 0..=l2 {
        for u11 in 0..=3 * u20 + l1 {
            for u21 in 0..=((2 * u11 + l1) / 3).min(u11) {
                for u12 in 0..=((3 * u21 + l1) / 2).min(2 * u21) {
                    for u22 in 0..=((u12 + l1) / 3).min(u12 / 2) {
                        for u13 in 0..=l1.min(u22) {
                            let u = [u20, u11, u21, u12, u22, u13].map(|v| v as u32);
                            out.push(UCoords::new(u[0], u[1], u[2], u[3], u[4], u[5]));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Checks the box-count inequalities cutting T(∞)^λ out of T(∞),
/// returning the first one that fails.
pub fn check_t_lambda(t: &BoxCounts, lambda: DominantWeight) -> std::result::Result<(), &'static str> {
    let l1 = lambda.h1();
    let l2 = lambda.h2();
    let [t23, t12, t13, t10, t1bar2, t1bar1] =
        [t.t23, t.t12, t.t13, t.t10, t.t1bar2, t.t1bar1].map(i64::from);
    let conditions: [(bool, &'static str); 6] = [
        (t23 <= l2, "t23 <= lambda(h2)"),
        (t12 <= l1 + 3 * t23, "t12 <= lambda(h1) + 3*t23"),
        (3 * t13 <= l1 + 2 * t12, "t13 <= (lambda(h1) + 2*t12)/3"),
        (2 * t10 <= l1 + 3 * t13, "t10 <= (lambda(h1) + 3*t13)/2"),
        (3 * t1bar2 <= l1 + t10, "t1bar2 <= (lambda(h1) + t10)/3"),
        (t1bar1 <= l1, "t1bar1 <= lambda(h1)"),
    ];
    match conditions.into_iter().find(|(ok, _)| !ok) {
        Some((_, name)) => Err(name),
        None => Ok(()),
    }
}

/// Membership of a marginally large tableau in T(∞)^λ.
pub fn in_t_lambda_set(t: &MlTableau, lambda: DominantWeight) -> bool {
    check_t_lambda(&t.counts(), lambda).is_ok()
}

/// All tableaux of T(∞)^λ, enumerated through their box counts in
/// lexicographic order of `(t23, t12, t13, t10, t1bar2, t1bar1)`.
pub fn enumerate_t_lambda(lambda: DominantWeight) -> Vec<MlTableau> {
    let l1 = lambda.h1() as u32;
    let l2 = lambda.h2() as u32;
    let mut out = Vec::new();
    for t23 in 0..=l2 {
        for t12 in 0..=l1 + 3 * t23 {
            for t13 in 0..=t12.min((l1 + 2 * t12) / 3) {
                for t10 in 0..=(2 * t13).min((l1 + 3 * t13) / 2) {
                    for t1bar2 in 0..=(t10 / 2).min((l1 + t10) / 3) {
                        for t1bar1 in 0..=t1bar2.min(l1) {
                            let counts = BoxCounts { t23, t12, t13, t10, t1bar2, t1bar1 };
                            out.push(MlTableau::from_counts(counts).expect("chain holds by construction"));
                        }
                    }
                }
            }
        }
    }
    out
}

/// `T ⊗ t_λ`, where `t_λ` has weight λ, `ε_i = -λ(h_i)`, `φ_i = 0` and
/// trivial operators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorElement {
    tableau: MlTableau,
    lambda: DominantWeight,
}

impl TensorElement {
    /// Pairs a tableau with `t_λ`. No membership check: any marginally
    /// large tableau gives an element of `T(∞) ⊗ T_λ`.
    pub fn new(tableau: MlTableau, lambda: DominantWeight) -> Self {
        TensorElement { tableau, lambda }
    }

    /// `T_∞ ⊗ t_λ`.
    pub fn highest(lambda: DominantWeight) -> Self {
        TensorElement::new(tableau::highest(), lambda)
    }

    pub fn tableau(&self) -> &MlTableau {
        &self.tableau
    }

    pub fn lambda(&self) -> DominantWeight {
        self.lambda
    }

    pub fn is_in_t_lambda(&self) -> bool {
        in_t_lambda_set(&self.tableau, self.lambda)
    }

    /// Acts on `T` iff `φ_i(T) > ε_i(t_λ) = -λ(h_i)`; otherwise zero.
    pub fn f(&self, i: Index) -> Option<TensorElement> {
        (self.tableau.phi(i) > -self.lambda.pairing(i))
            .then(|| TensorElement::new(self.tableau.f(i), self.lambda))
    }

    /// Acts on `T` iff `φ_i(T) >= -λ(h_i)`; otherwise it would act on
    /// `t_λ` and give zero.
    pub fn e(&self, i: Index) -> Option<TensorElement> {
        if self.tableau.phi(i) >= -self.lambda.pairing(i) {
            self.tableau.e(i).map(|t| TensorElement::new(t, self.lambda))
        } else {
            None
        }
    }

    pub fn weight(&self) -> Weight {
        self.tableau.weight() + self.lambda.weight()
    }

    pub fn eps(&self, i: Index) -> i64 {
        let l = self.lambda.pairing(i);
        self.tableau.eps(i).max(-l - self.tableau.weight().pairing(i))
    }

    pub fn phi(&self, i: Index) -> i64 {
        (self.tableau.phi(i) + self.lambda.pairing(i)).max(0)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{},{}", self.tableau, self.lambda.h1(), self.lambda.h2())
    }
}

impl FromStr for TensorElement {
    type Err = Error;

    /// Parses `<tableau>#<a,b>`.
    fn from_str(s: &str) -> Result<Self> {
        let hash = s
            .find('#')
            .ok_or_else(|| Error::parse(s.len(), "expected `#` followed by the highest weight"))?;
        let tableau = s[..hash].parse()?;
        let lambda = parse_lambda(&s[hash + 1..]).map_err(|e| shift_position(e, hash + 1))?;
        Ok(TensorElement::new(tableau, lambda))
    }
}

fn shift_position(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + by,
            message,
        },
        other => other,
    }
}

/// Parses a dominant weight written `a,b`.
pub fn parse_lambda(s: &str) -> Result<DominantWeight> {
    let comma = s
        .find(',')
        .ok_or_else(|| Error::parse(s.len(), "expected `a,b`"))?;
    let parse = |text: &str, at: usize| -> Result<i64> {
        text.trim()
            .parse()
            .map_err(|_| Error::parse(at, format!("expected an integer, found `{}`", text.trim())))
    };
    let a = parse(&s[..comma], 0)?;
    let b = parse(&s[comma + 1..], comma + 1)?;
    DominantWeight::new(a, b)
}

/// `ω_λ : N(λ) → T(∞)_λ`.
pub fn omega(n: &Monomial, lambda: DominantWeight) -> Result<TensorElement> {
    let u = in_n_lambda(n, lambda)
        .ok_or_else(|| Error::NotMember(format!("{n} is not in N{lambda}")))?;
    Ok(TensorElement::new(MlTableau::from_counts(u.into())?, lambda))
}

/// `ω_λ⁻¹ : T(∞)_λ → N(λ)`.
pub fn omega_inv(x: &TensorElement) -> Result<Monomial> {
    let counts = x.tableau.counts();
    check_t_lambda(&counts, x.lambda)
        .map_err(|c| Error::NotMember(format!("{} is not in T(inf)^{}: {c} fails", x.tableau, x.lambda)))?;
    monomial_of_u(&counts.into(), x.lambda)
}

/// `(N_λ, T_∞ ⊗ t_λ)`.
pub fn highest_elements(lambda: DominantWeight) -> (Monomial, TensorElement) {
    (highest_monomial(lambda), TensorElement::highest(lambda))
}
