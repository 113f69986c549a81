//! Nakajima monomials in the variables `Y_i(m)` with Kashiwara's crystal
//! structure.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::cartan::{Index, Weight};
use crate::error::{Error, Result};

/// A Laurent monomial `∏ Y_i(m)^{y_i(m)}` kept in sparse canonical form:
/// only nonzero exponents are stored, keyed by `(i, m)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: BTreeMap<(Index, i64), i64>,
}

/// String data of a monomial along one index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StringData {
    pub phi: i64,
    pub eps: i64,
    /// Least level attaining `phi`, when `phi > 0`.
    pub m_f: Option<i64>,
    /// Greatest level attaining `eps`, when `eps > 0`.
    pub m_e: Option<i64>,
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn one() -> Self {
        Self::default()
    }

    /// `Y_i(m)^e`.
    pub fn var(i: Index, m: i64, e: i64) -> Self {
        let mut out = Self::one();
        out.bump(i, m, e);
        out
    }

    /// Builds a monomial from `(i, m, e)` triples, adding exponents of
    /// repeated variables.
    pub fn from_factors<I: IntoIterator<Item = (Index, i64, i64)>>(factors: I) -> Self {
        let mut out = Self::one();
        for (i, m, e) in factors {
            out.bump(i, m, e);
        }
        out
    }

    /// The factor `U_i(m)`:
    /// `U₁(m) = Y₁(m) Y₁(m+1) Y₂(m)⁻¹`, `U₂(m) = Y₂(m) Y₂(m+1) Y₁(m+1)⁻³`.
    pub fn u_factor(i: Index, m: i64) -> Self {
        match i {
            Index::One => Self::from_factors([
                (Index::One, m, 1),
                (Index::One, m + 1, 1),
                (Index::Two, m, -1),
            ]),
            Index::Two => Self::from_factors([
                (Index::Two, m, 1),
                (Index::Two, m + 1, 1),
                (Index::One, m + 1, -3),
            ]),
        }
    }

    fn bump(&mut self, i: Index, m: i64, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.exponents.entry((i, m)).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exponents.remove(&(i, m));
        }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// The exponent `y_i(m)`.
    pub fn exponent(&self, i: Index, m: i64) -> i64 {
        self.exponents.get(&(i, m)).copied().unwrap_or(0)
    }

    /// Nonzero exponents ordered by `(i, m)`.
    pub fn factors(&self) -> impl Iterator<Item = (Index, i64, i64)> + '_ {
        self.exponents.iter().map(|(&(i, m), &e)| (i, m, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.mul_pow(other, 1)
    }

    /// `self · other^k`.
    pub fn mul_pow(&self, other: &Monomial, k: i64) -> Monomial {
        let mut out = self.clone();
        for (i, m, e) in other.factors() {
            out.bump(i, m, k * e);
        }
        out
    }

    pub fn inverse(&self) -> Monomial {
        Monomial::one().mul_pow(self, -1)
    }

    /// `wt(N) = Σ_i (Σ_m y_i(m)) Λ_i`.
    pub fn weight(&self) -> Weight {
        let mut w = Weight::ZERO;
        for (i, _, e) in self.factors() {
            w += e * Weight::fundamental(i);
        }
        w
    }

    fn levels(&self, i: Index) -> Vec<(i64, i64)> {
        self.factors()
            .filter(|&(j, _, _)| j == i)
            .map(|(_, m, e)| (m, e))
            .collect()
    }

    /// `φ_i`, `ε_i`, `m_f` and `m_e`. Both maxima include the empty
    /// prefix/suffix, so `φ_i, ε_i >= 0`.
    pub fn string_data(&self, i: Index) -> StringData {
        let levels = self.levels(i);

        // Prefix sums only change at support points, so the least level
        // attaining the maximum is a support point.
        let mut phi = 0;
        let mut m_f = None;
        let mut prefix = 0;
        for &(m, e) in &levels {
            prefix += e;
            if prefix > phi {
                phi = prefix;
                m_f = Some(m);
            }
        }

        // -Σ_{k>m} y_i(k) is constant for m in [k_j, k_{j+1} - 1]; the
        // greatest level of such a run is k_{j+1} - 1.
        let total: i64 = levels.iter().map(|&(_, e)| e).sum();
        let mut eps = 0;
        let mut m_e = None;
        let mut suffix = total;
        for &(m, e) in &levels {
            if -suffix >= eps && -suffix > 0 {
                eps = -suffix;
                m_e = Some(m - 1);
            }
            suffix -= e;
        }

        StringData { phi, eps, m_f, m_e }
    }

    pub fn phi(&self, i: Index) -> i64 {
        self.string_data(i).phi
    }

    pub fn eps(&self, i: Index) -> i64 {
        self.string_data(i).eps
    }

    /// Kashiwara lowering operator: `U_i(m_f)⁻¹ · N`, or `None` when `φ_i = 0`.
    pub fn f(&self, i: Index) -> Option<Monomial> {
        let m = self.string_data(i).m_f?;
        Some(self.mul_pow(&Monomial::u_factor(i, m), -1))
    }

    /// Kashiwara raising operator: `U_i(m_e) · N`, or `None` when `ε_i = 0`.
    pub fn e(&self, i: Index) -> Option<Monomial> {
        let m = self.string_data(i).m_e?;
        Some(self.mul(&Monomial::u_factor(i, m)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (i, m, e)) in self.factors().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "Y{i}({m})")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses whitespace-separated factors `Y<i>(<m>)^<e>`; `1` alone is
    /// the constant monomial. Positions in errors are byte offsets.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Monomial::one();
        let mut saw_one = false;
        let mut saw_factor = false;
        let mut cursor = Cursor { src: s, pos: 0 };
        loop {
            cursor.skip_ws();
            if cursor.at_end() {
                break;
            }
            let start = cursor.pos;
            if cursor.eat('1') {
                if saw_one || saw_factor {
                    return Err(Error::parse(start, "`1` must stand alone"));
                }
                saw_one = true;
                continue;
            }
            if saw_one {
                return Err(Error::parse(start, "`1` must stand alone"));
            }
            cursor.expect('Y')?;
            let idx_pos = cursor.pos;
            let i = cursor.integer()?;
            let i = Index::try_from(i).map_err(|_| Error::parse(idx_pos, format!("variable index {i} is not 1 or 2")))?;
            cursor.expect('(')?;
            let m = cursor.integer()?;
            cursor.expect(')')?;
            let e = if cursor.eat('^') { cursor.integer()? } else { 1 };
            if !cursor.at_end() && !cursor.peek_ws() {
                return Err(Error::parse(cursor.pos, "expected whitespace between factors"));
            }
            out.bump(i, m, e);
            saw_factor = true;
        }
        if !saw_one && !saw_factor {
            return Err(Error::parse(0, "empty monomial; write `1` for the constant"));
        }
        Ok(out)
    }
}

pub(crate) struct Cursor<'a> {
    pub(crate) src: &'a str,
    pub(crate) pos: usize,
}

impl Cursor<'_> {
    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_ws(&self) -> bool {
        self.peek().is_some_and(char::is_whitespace)
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    pub(crate) fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, want: char) -> Result<()> {
        if self.eat(want) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |c| format!("`{c}`"));
            Err(Error::parse(self.pos, format!("expected `{want}`, found {found}")))
        }
    }

    pub(crate) fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "expected an integer"))
    }
}
