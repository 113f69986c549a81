//! Marginally large tableaux: the crystal T(∞) realizing B(∞) for G₂.
//!
//! Operators act on the far-eastern reading through the signature rule
//! (Kashiwara tensor convention), then restore marginal largeness by
//! inserting or removing one basic column.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::cartan::{Index, Weight};
use crate::error::{Error, Result};

/// A box entry, ordered `1 ≺ 2 ≺ 3 ≺ 0 ≺ 3̄ ≺ 2̄ ≺ 1̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    One,
    Two,
    Three,
    Zero,
    Bar3,
    Bar2,
    Bar1,
}

impl Letter {
    pub const ALL: [Letter; 7] = [
        Letter::One,
        Letter::Two,
        Letter::Three,
        Letter::Zero,
        Letter::Bar3,
        Letter::Bar2,
        Letter::Bar1,
    ];

    /// Weight in the seven-element crystal B(Λ₁).
    pub fn weight(self) -> Weight {
        match self {
            Letter::One => Weight::new(1, 0),
            Letter::Two => Weight::new(-1, 1),
            Letter::Three => Weight::new(2, -1),
            Letter::Zero => Weight::new(0, 0),
            Letter::Bar3 => Weight::new(-2, 1),
            Letter::Bar2 => Weight::new(1, -1),
            Letter::Bar1 => Weight::new(-1, 0),
        }
    }

    pub fn phi(self, i: Index) -> i64 {
        match (i, self) {
            (Index::One, Letter::One | Letter::Zero | Letter::Bar2) => 1,
            (Index::One, Letter::Three) => 2,
            (Index::Two, Letter::Two | Letter::Bar3) => 1,
            _ => 0,
        }
    }

    pub fn eps(self, i: Index) -> i64 {
        match (i, self) {
            (Index::One, Letter::Two | Letter::Zero | Letter::Bar1) => 1,
            (Index::One, Letter::Bar3) => 2,
            (Index::Two, Letter::Three | Letter::Bar2) => 1,
            _ => 0,
        }
    }

    /// The `i`-arrow out of this letter.
    pub fn succ(self, i: Index) -> Option<Letter> {
        match (i, self) {
            (Index::One, Letter::One) => Some(Letter::Two),
            (Index::Two, Letter::Two) => Some(Letter::Three),
            (Index::One, Letter::Three) => Some(Letter::Zero),
            (Index::One, Letter::Zero) => Some(Letter::Bar3),
            (Index::Two, Letter::Bar3) => Some(Letter::Bar2),
            (Index::One, Letter::Bar2) => Some(Letter::Bar1),
            _ => None,
        }
    }

    /// The `i`-arrow into this letter.
    pub fn pred(self, i: Index) -> Option<Letter> {
        Letter::ALL.into_iter().find(|b| b.succ(i) == Some(self))
    }

    fn code(self) -> &'static str {
        match self {
            Letter::One => "1",
            Letter::Two => "2",
            Letter::Three => "3",
            Letter::Zero => "0",
            Letter::Bar3 => "-3",
            Letter::Bar2 => "-2",
            Letter::Bar1 => "-1",
        }
    }

    fn from_code(s: &str) -> Option<Letter> {
        Letter::ALL.into_iter().find(|l| l.code() == s)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Reasons a pair of rows fails to be a marginally large tableau.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("second row has {row2} boxes but the first row only {row1}")]
    NotAYoungDiagram { row1: usize, row2: usize },
    #[error("row {row} is not weakly increasing at column {col}")]
    RowNotWeaklyIncreasing { row: usize, col: usize },
    #[error("column {col} is not strictly increasing")]
    ColumnNotStrictlyIncreasing { col: usize },
    #[error("letter {letter} is not allowed in the second row (column {col})")]
    ForbiddenSecondRowLetter { col: usize, letter: Letter },
    #[error("0 appears {count} times in the first row")]
    DuplicateZero { count: usize },
    #[error("first row has {found} boxes labeled 1, expected {expected}")]
    WrongOneCount { found: usize, expected: usize },
    #[error("missing basic {height}-column")]
    MissingBasicColumn { height: usize },
    #[error("{found} basic {height}-columns, expected exactly one")]
    DuplicateBasicColumn { height: usize, found: usize },
}

/// A marginally large tableau with rows stored left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MlTableau {
    row1: Vec<Letter>,
    row2: Vec<Letter>,
}

/// Result of the signature rule on a word. Positions index the word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    /// Owner of the leftmost uncancelled `+`.
    pub f_pos: Option<usize>,
    /// Owner of the rightmost uncancelled `-`.
    pub e_pos: Option<usize>,
    pub eps: i64,
    pub phi_raw: i64,
}

/// Runs the signature rule: each letter contributes `ε_i` minus signs
/// then `φ_i` plus signs, and adjacent `+-` pairs cancel.
pub fn signature(word: &[Letter], i: Index) -> Signature {
    let mut plus: Vec<usize> = Vec::new();
    let mut minus: Vec<usize> = Vec::new();
    for (pos, &b) in word.iter().enumerate() {
        for _ in 0..b.eps(i) {
            if plus.pop().is_none() {
                minus.push(pos);
            }
        }
        for _ in 0..b.phi(i) {
            plus.push(pos);
        }
    }
    Signature {
        f_pos: plus.first().copied(),
        e_pos: minus.last().copied(),
        eps: minus.len() as i64,
        phi_raw: plus.len() as i64,
    }
}

/// Box counts `t_{v,w}` of a marginally large tableau.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxCounts {
    /// 3s in the second row.
    pub t23: u32,
    /// First-row boxes ⪰ 2.
    pub t12: u32,
    /// First-row boxes ⪰ 3.
    pub t13: u32,
    /// First-row boxes ⪰ 0, with 3̄, 2̄ and 1̄ counted twice.
    pub t10: u32,
    /// First-row boxes ⪰ 2̄.
    pub t1bar2: u32,
    /// First-row boxes equal to 1̄.
    pub t1bar1: u32,
}

impl BoxCounts {
    /// Checks `t1bar1 <= t1bar2 <= t10/2 <= t13 <= t12`, naming the first
    /// inequality that fails.
    pub fn check_chain(&self) -> std::result::Result<(), &'static str> {
        let t = self;
        if t.t1bar1 > t.t1bar2 {
            Err("t1bar1 <= t1bar2")
        } else if 2 * t.t1bar2 > t.t10 {
            Err("t1bar2 <= t10/2")
        } else if t.t10 > 2 * t.t13 {
            Err("t10/2 <= t13")
        } else if t.t13 > t.t12 {
            Err("t13 <= t12")
        } else {
            Ok(())
        }
    }
}

/// `T_∞`, the tableau made of the two basic columns.
pub fn highest() -> MlTableau {
    MlTableau {
        row1: vec![Letter::One, Letter::One],
        row2: vec![Letter::Two],
    }
}

impl MlTableau {
    /// Accepts the rows iff they form a marginally large tableau.
    pub fn new(row1: Vec<Letter>, row2: Vec<Letter>) -> std::result::Result<Self, TableauError> {
        Self::validate(&row1, &row2)?;
        Ok(MlTableau { row1, row2 })
    }

    fn validate(row1: &[Letter], row2: &[Letter]) -> std::result::Result<(), TableauError> {
        if row2.len() > row1.len() {
            return Err(TableauError::NotAYoungDiagram { row1: row1.len(), row2: row2.len() });
        }
        for (row, entries) in [(1, row1), (2, row2)] {
            if let Some(col) = entries.windows(2).position(|w| w[0] > w[1]) {
                return Err(TableauError::RowNotWeaklyIncreasing { row, col: col + 1 });
            }
        }
        if let Some(col) = row2.iter().zip(row1).position(|(lo, hi)| hi >= lo) {
            return Err(TableauError::ColumnNotStrictlyIncreasing { col });
        }
        if let Some((col, &letter)) = row2
            .iter()
            .enumerate()
            .find(|(_, l)| !matches!(l, Letter::Two | Letter::Three))
        {
            return Err(TableauError::ForbiddenSecondRowLetter { col, letter });
        }
        let zeros = row1.iter().filter(|&&l| l == Letter::Zero).count();
        if zeros > 1 {
            return Err(TableauError::DuplicateZero { count: zeros });
        }
        match row2.iter().filter(|&&l| l == Letter::Two).count() {
            0 => return Err(TableauError::MissingBasicColumn { height: 2 }),
            1 => {}
            found => return Err(TableauError::DuplicateBasicColumn { height: 2, found }),
        }
        // The 1s sit at the left of the first row; the first len(row2) of
        // them top the height-2 columns, the rest are basic 1-columns.
        let ones = row1.iter().filter(|&&l| l == Letter::One).count();
        let expected = row2.len() + 1;
        if ones < row2.len() {
            Err(TableauError::WrongOneCount { found: ones, expected })
        } else if ones == row2.len() {
            Err(TableauError::MissingBasicColumn { height: 1 })
        } else if ones > expected {
            Err(TableauError::DuplicateBasicColumn { height: 1, found: ones - row2.len() })
        } else {
            Ok(())
        }
    }

    pub fn row1(&self) -> &[Letter] {
        &self.row1
    }

    pub fn row2(&self) -> &[Letter] {
        &self.row2
    }

    pub fn is_highest(&self) -> bool {
        *self == highest()
    }

    /// Box coordinates `(row, col)` in far-eastern order: columns right
    /// to left, each read top to bottom.
    fn reading_coords(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.row1.len() + self.row2.len());
        for col in (0..self.row1.len()).rev() {
            out.push((0, col));
            if col < self.row2.len() {
                out.push((1, col));
            }
        }
        out
    }

    fn at(&self, (row, col): (usize, usize)) -> Letter {
        if row == 0 {
            self.row1[col]
        } else {
            self.row2[col]
        }
    }

    fn set(&mut self, (row, col): (usize, usize), l: Letter) {
        if row == 0 {
            self.row1[col] = l;
        } else {
            self.row2[col] = l;
        }
    }

    /// The far-eastern reading of the tableau.
    pub fn reading(&self) -> Vec<Letter> {
        self.reading_coords().into_iter().map(|c| self.at(c)).collect()
    }

    pub fn signature(&self, i: Index) -> Signature {
        signature(&self.reading(), i)
    }

    /// `f̃_i`. Never zero on T(∞).
    pub fn f(&self, i: Index) -> MlTableau {
        let coords = self.reading_coords();
        let pos = self
            .signature(i)
            .f_pos
            .expect("the basic i-column always carries an uncancelled +");
        let (row, col) = coords[pos];
        let mut out = self.clone();
        let changed = self.at((row, col)).succ(i).expect("a + sign sits on a letter with an i-arrow");
        out.set((row, col), changed);
        if Self::validate(&out.row1, &out.row2).is_ok() {
            return out;
        }
        // Only the i-box of the basic i-column can break largeness; put a
        // fresh basic i-column immediately to its left.
        out.row1.insert(col, Letter::One);
        if i == Index::Two {
            out.row2.insert(col, Letter::Two);
        }
        debug_assert!(Self::validate(&out.row1, &out.row2).is_ok(), "{out}");
        out
    }

    /// `ẽ_i`, or `None` when there is no uncancelled `-`.
    pub fn e(&self, i: Index) -> Option<MlTableau> {
        let coords = self.reading_coords();
        let pos = self.signature(i).e_pos?;
        let (row, col) = coords[pos];
        let mut out = self.clone();
        let changed = self.at((row, col)).pred(i).expect("a - sign sits on a letter with an incoming i-arrow");
        out.set((row, col), changed);
        if Self::validate(&out.row1, &out.row2).is_ok() {
            return Some(out);
        }
        // The changed column became a second basic i-column.
        out.row1.remove(col);
        if col < out.row2.len() {
            out.row2.remove(col);
        }
        debug_assert!(Self::validate(&out.row1, &out.row2).is_ok(), "{out}");
        Some(out)
    }

    /// Sum of box weights, before the shape shift.
    pub fn box_weight(&self) -> Weight {
        self.row1
            .iter()
            .chain(&self.row2)
            .fold(Weight::ZERO, |w, l| w + l.weight())
    }

    /// Weight in T(∞): box weights minus `p·Λ₁ + q·Λ₂`, where `p` and `q`
    /// count columns of height 1 and 2.
    pub fn weight(&self) -> Weight {
        let q = self.row2.len() as i64;
        let p = self.row1.len() as i64 - q;
        self.box_weight() - Weight::new(p, q)
    }

    pub fn eps(&self, i: Index) -> i64 {
        self.signature(i).eps
    }

    /// `φ_i = ε_i + wt(h_i)`; may be negative on T(∞).
    pub fn phi(&self, i: Index) -> i64 {
        self.eps(i) + self.weight().pairing(i)
    }

    pub fn counts(&self) -> BoxCounts {
        let at_least = |w: Letter| self.row1.iter().filter(|&&l| l >= w).count() as u32;
        BoxCounts {
            t23: self.row2.iter().filter(|&&l| l == Letter::Three).count() as u32,
            t12: at_least(Letter::Two),
            t13: at_least(Letter::Three),
            t10: at_least(Letter::Zero) + at_least(Letter::Bar3),
            t1bar2: at_least(Letter::Bar2),
            t1bar1: at_least(Letter::Bar1),
        }
    }

    /// The unique marginally large tableau with the given box counts.
    pub fn from_counts(t: BoxCounts) -> Result<MlTableau> {
        t.check_chain().map_err(Error::NoTableau)?;
        let rep = |l: Letter, n: u32| std::iter::repeat_n(l, n as usize);
        // With A = t13 - t10/2 and B = t10/2 - t1bar2: ⌊A⌋ 3s, ⌊B⌋ 3̄s and
        // one 0 exactly when t10 is odd.
        let threes = t.t13 - t.t10.div_ceil(2);
        let zeros = t.t10 % 2;
        let bar3s = t.t10 / 2 - t.t1bar2;
        let row1 = rep(Letter::One, t.t23 + 2)
            .chain(rep(Letter::Two, t.t12 - t.t13))
            .chain(rep(Letter::Three, threes))
            .chain(rep(Letter::Zero, zeros))
            .chain(rep(Letter::Bar3, bar3s))
            .chain(rep(Letter::Bar2, t.t1bar2 - t.t1bar1))
            .chain(rep(Letter::Bar1, t.t1bar1))
            .collect();
        let row2 = std::iter::once(Letter::Two).chain(rep(Letter::Three, t.t23)).collect();
        Ok(MlTableau::new(row1, row2)?)
    }
}

impl fmt::Display for MlTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[Letter]| row.iter().map(Letter::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}/{}", join(&self.row1), join(&self.row2))
    }
}

impl FromStr for MlTableau {
    type Err = Error;

    /// Parses `row1/row2` with comma-separated entries; barred letters are
    /// written with a leading minus sign.
    fn from_str(s: &str) -> Result<Self> {
        let Some(slash) = s.find('/') else {
            return Err(Error::parse(s.len(), "expected `/` between the two rows"));
        };
        let mut rows = [Vec::new(), Vec::new()];
        for (k, (offset, text)) in [(0, &s[..slash]), (slash + 1, &s[slash + 1..])].into_iter().enumerate() {
            if text.contains('/') {
                return Err(Error::parse(offset + text.find('/').unwrap(), "more than two rows"));
            }
            let mut pos = offset;
            for item in text.split(',') {
                let lead = item.len() - item.trim_start().len();
                let letter = Letter::from_code(item.trim())
                    .ok_or_else(|| Error::parse(pos + lead, format!("unknown entry `{}`", item.trim())))?;
                rows[k].push(letter);
                pos += item.len() + 1;
            }
        }
        let [row1, row2] = rows;
        Ok(MlTableau::new(row1, row2)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::simple_root;
    use proptest::prelude::*;

    use Letter::*;

    const I1: Index = Index::One;
    const I2: Index = Index::Two;

    fn tab(s: &str) -> MlTableau {
        s.parse().unwrap()
    }

    #[test]
    fn letter_tables_satisfy_axioms() {
        for b in Letter::ALL {
            for i in Index::ALL {
                assert_eq!(b.phi(i) - b.eps(i), b.weight().pairing(i), "{b} {i}");
                if let Some(c) = b.succ(i) {
                    assert_eq!(c.weight(), b.weight() - simple_root(i));
                    assert_eq!(c.pred(i), Some(b));
                }
                // string lengths agree with the arrows
                let mut forward = 0;
                let mut x = b;
                while let Some(y) = x.succ(i) {
                    forward += 1;
                    x = y;
                }
                assert_eq!(forward, b.phi(i));
                let mut back = 0;
                let mut x = b;
                while let Some(y) = x.pred(i) {
                    back += 1;
                    x = y;
                }
                assert_eq!(back, b.eps(i));
            }
        }
        let arrows: usize = Letter::ALL
            .iter()
            .map(|b| Index::ALL.iter().filter(|&&i| b.succ(i).is_some()).count())
            .sum();
        assert_eq!(arrows, 6);
    }

    #[test]
    fn validation() {
        assert_eq!(MlTableau::new(vec![One, One], vec![Two]).unwrap(), highest());
        assert!(MlTableau::new(vec![One, One, One, Three, Zero, Bar3, Bar1], vec![Two, Three]).is_ok());
        assert_eq!(
            MlTableau::new(vec![One, One], vec![Three]),
            Err(TableauError::MissingBasicColumn { height: 2 })
        );
        assert_eq!(
            MlTableau::new(vec![One, Three, Two], vec![Two]),
            Err(TableauError::RowNotWeaklyIncreasing { row: 1, col: 2 })
        );
        assert_eq!(
            MlTableau::new(vec![Two, Two], vec![Two]),
            Err(TableauError::ColumnNotStrictlyIncreasing { col: 0 })
        );
        assert_eq!(
            MlTableau::new(vec![One, One, One], vec![Two, Bar2]),
            Err(TableauError::ForbiddenSecondRowLetter { col: 1, letter: Bar2 })
        );
        assert_eq!(
            MlTableau::new(vec![One, One, Zero, Zero], vec![Two]),
            Err(TableauError::DuplicateZero { count: 2 })
        );
        assert_eq!(
            MlTableau::new(vec![One, One, One], vec![Two]),
            Err(TableauError::DuplicateBasicColumn { height: 1, found: 2 })
        );
        assert_eq!(
            MlTableau::new(vec![One, Two], vec![Two]),
            Err(TableauError::MissingBasicColumn { height: 1 })
        );
        assert_eq!(
            MlTableau::new(vec![One, Two, Two], vec![Two, Three]),
            Err(TableauError::WrongOneCount { found: 1, expected: 3 })
        );
        assert_eq!(
            MlTableau::new(vec![One, One, One, One], vec![Two, Two, Three]),
            Err(TableauError::DuplicateBasicColumn { height: 2, found: 2 })
        );
        assert_eq!(
            MlTableau::new(vec![One], vec![Two, Three]),
            Err(TableauError::NotAYoungDiagram { row1: 1, row2: 2 })
        );
    }

    #[test]
    fn far_eastern_reading() {
        assert_eq!(
            tab("1,1,1,3,0,-3,-1/2,3").reading(),
            vec![Bar1, Bar3, Zero, Three, One, One, Three, One, Two]
        );
        assert_eq!(highest().reading(), vec![One, One, Two]);
        // Valid rows are not needed for reading; exercise the raw rule on
        // a two-row shape with a repeated column.
        let raw = MlTableau { row1: vec![One, One, Two], row2: vec![Two] };
        assert_eq!(raw.reading(), vec![Two, One, One, Two]);
    }

    #[test]
    fn signature_examples() {
        assert_eq!(
            signature(&[One, One, Two], I2),
            Signature { f_pos: Some(2), e_pos: None, eps: 0, phi_raw: 1 }
        );
        // 3 carries two plus signs for i = 1; the final 2 cancels one plus.
        assert_eq!(
            signature(&[One, One, Three, One, Two], I1),
            Signature { f_pos: Some(0), e_pos: None, eps: 0, phi_raw: 4 }
        );
        assert_eq!(
            signature(&[Two], I1),
            Signature { f_pos: None, e_pos: Some(0), eps: 1, phi_raw: 0 }
        );
        // -- + - : the middle pair cancels
        assert_eq!(
            signature(&[Two, One, Two], I1),
            Signature { f_pos: None, e_pos: Some(0), eps: 1, phi_raw: 0 }
        );
    }

    #[test]
    fn operators_reproduce_figures() {
        let t = highest();
        let f2 = t.f(I2);
        assert_eq!(f2, tab("1,1,1/2,3"));
        let f1f2 = f2.f(I1);
        assert_eq!(f1f2, tab("1,1,1,2/2,3"));
        assert_eq!(f1f2.f(I2), tab("1,1,1,1,2/2,3,3"));
    }

    #[test]
    fn raising_operators() {
        assert_eq!(highest().e(I1), None);
        assert_eq!(highest().e(I2), None);
        assert_eq!(tab("1,1,1/2,3").e(I2), Some(highest()));
        assert_eq!(tab("1,1,1,2/2,3").e(I1), Some(tab("1,1,1/2,3")));
    }

    #[test]
    fn statistics() {
        let t = highest();
        assert_eq!(t.weight(), Weight::ZERO);
        assert_eq!((t.eps(I1), t.eps(I2), t.phi(I1), t.phi(I2)), (0, 0, 0, 0));

        let t = tab("1,1,1/2,3");
        assert_eq!(t.weight(), Weight::new(3, -2));
        assert_eq!(t.weight(), -simple_root(I2));
        assert_eq!((t.eps(I1), t.eps(I2)), (0, 1));
        assert_eq!((t.phi(I1), t.phi(I2)), (3, -1));

        let t = tab("1,1,1,2/2,3");
        assert_eq!(t.box_weight(), Weight::new(3, 1));
        assert_eq!(t.weight(), Weight::new(1, -1));
        assert_eq!(t.weight(), -simple_root(I1) - simple_root(I2));
    }

    #[test]
    fn box_counts() {
        assert_eq!(highest().counts(), BoxCounts::default());
        assert_eq!(
            tab("1,1,1,3,0,-3,-1/2,3").counts(),
            BoxCounts { t23: 1, t12: 4, t13: 4, t10: 5, t1bar2: 1, t1bar1: 1 }
        );
        assert_eq!(
            tab("1,1,1,0/2,3").counts(),
            BoxCounts { t23: 1, t12: 1, t13: 1, t10: 1, t1bar2: 0, t1bar1: 0 }
        );
    }

    #[test]
    fn tableau_from_counts() {
        assert_eq!(MlTableau::from_counts(BoxCounts::default()).unwrap(), highest());
        let t = BoxCounts { t23: 1, t12: 4, t13: 4, t10: 5, t1bar2: 1, t1bar1: 1 };
        assert_eq!(MlTableau::from_counts(t).unwrap(), tab("1,1,1,3,0,-3,-1/2,3"));
        let bad = BoxCounts { t13: 1, ..BoxCounts::default() };
        assert_eq!(MlTableau::from_counts(bad), Err(Error::NoTableau("t13 <= t12")));
        let bad = BoxCounts { t12: 5, t13: 1, t10: 3, ..BoxCounts::default() };
        assert_eq!(MlTableau::from_counts(bad), Err(Error::NoTableau("t10/2 <= t13")));
    }

    #[test]
    fn text_format_errors() {
        let err = "1,1,x/2".parse::<MlTableau>().unwrap_err();
        assert!(matches!(err, Error::Parse { position: 4, .. }), "{err:?}");
        let err = "1,1".parse::<MlTableau>().unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = "1,1/3".parse::<MlTableau>().unwrap_err();
        assert_eq!(err, Error::Tableau(TableauError::MissingBasicColumn { height: 2 }));
        assert_eq!(tab("1, 1 /2").to_string(), "1,1/2");
    }

    #[test]
    fn reachable_tableaux_are_marginally_large() {
        // every f-word of length <= 8 from T_∞
        let mut level = vec![highest()];
        for _ in 0..8 {
            let mut next = Vec::with_capacity(level.len() * 2);
            for t in &level {
                for i in Index::ALL {
                    let ft = t.f(i);
                    assert!(MlTableau::validate(&ft.row1, &ft.row2).is_ok(), "{ft}");
                    assert_eq!(ft.weight(), t.weight() - simple_root(i));
                    assert_eq!(ft.e(i).as_ref(), Some(t));
                    next.push(ft);
                }
            }
            level = next;
        }
        assert_eq!(level.len(), 256);
    }

    fn arb_counts() -> impl Strategy<Value = BoxCounts> {
        // Build a chain-satisfying tuple from nonnegative increments.
        (0u32..4, 0u32..4, 0u32..4, 0u32..7, 0u32..4, 0u32..4).prop_map(|(t23, d1, d2, d3, d4, t1bar1)| {
            let t1bar2 = t1bar1 + d4;
            let t10 = 2 * t1bar2 + d3;
            let t13 = t10.div_ceil(2) + d2;
            let t12 = t13 + d1;
            BoxCounts { t23, t12, t13, t10, t1bar2, t1bar1 }
        })
    }

    fn arb_word() -> impl Strategy<Value = Vec<Index>> {
        prop::collection::vec(prop::bool::ANY.prop_map(|b| if b { I2 } else { I1 }), 0..14)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn counts_round_trip(t in arb_counts()) {
            let tableau = MlTableau::from_counts(t).unwrap();
            prop_assert_eq!(tableau.counts(), t);
            prop_assert_eq!(MlTableau::from_counts(tableau.counts()).unwrap(), tableau.clone());
            let zeros = tableau.row1().iter().filter(|&&l| l == Zero).count() as u32;
            prop_assert_eq!(zeros, t.t10 % 2);
        }

        #[test]
        fn operator_axioms(word in arb_word()) {
            let mut t = highest();
            for i in word {
                t = t.f(i);
            }
            prop_assert_eq!(t.to_string().parse::<MlTableau>().unwrap(), t.clone());
            for i in Index::ALL {
                prop_assert_eq!(t.phi(i) - t.eps(i), t.weight().pairing(i));
                let ft = t.f(i);
                prop_assert_eq!(ft.weight(), t.weight() - simple_root(i));
                prop_assert_eq!(ft.e(i), Some(t.clone()));
                if let Some(et) = t.e(i) {
                    prop_assert_eq!(et.weight(), t.weight() + simple_root(i));
                    prop_assert_eq!(et.f(i), t.clone());
                }
                let sig = t.signature(i);
                prop_assert_eq!(sig.phi_raw - sig.eps, t.box_weight().pairing(i));
            }
        }
    }
}
