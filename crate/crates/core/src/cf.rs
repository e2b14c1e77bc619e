//! Negative (Hirzebruch–Jung) continued fractions
//! `[a_1, …, a_n] = a_1 - 1/(a_2 - 1/(… - 1/a_n))` with every `a_i <= -2`,
//! Riemenschneider duality between the strings of `-p/q` and `-p/(p-q)`, and
//! complementary truncation of two strings whose reciprocals sum past one.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{parse_integer, Rational};

/// A nonempty string of integers, all `<= -2`. Its value is always `< -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NegCf {
    coeffs: Vec<BigInt>,
}

impl NegCf {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("empty continued fraction".into()));
        }
        let minus_two = BigInt::from(-2);
        if let Some((i, a)) = coeffs.iter().enumerate().find(|(_, a)| **a > minus_two) {
            return Err(Error::Domain(format!(
                "entry {} of the continued fraction is {a}, expected <= -2",
                i + 1
            )));
        }
        Ok(NegCf { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The first `len` entries, `1 <= len <= self.len()`.
    pub fn prefix(&self, len: usize) -> NegCf {
        assert!(len >= 1 && len <= self.len(), "prefix length out of range");
        NegCf {
            coeffs: self.coeffs[..len].to_vec(),
        }
    }

    /// `Σ |a_i|`.
    pub fn abs_sum(&self) -> BigInt {
        self.coeffs.iter().map(|a| a.abs()).sum()
    }

    pub fn eval(&self) -> Rational {
        neg_cf_eval(self)
    }
}

/// Expands `q < -1` into its unique string with all entries `<= -2`.
///
/// Writing `q = -p/q'`, the leading entry is `-⌈p/q'⌉` and the recursion
/// continues on `1/(a_1 - q)` until the remainder vanishes.
pub fn neg_cf_expand(q: &Rational) -> Result<NegCf> {
    if *q >= Rational::from_integer(-1) {
        return Err(Error::Domain(format!(
            "{q} has no negative continued fraction expansion (need a value < -1)"
        )));
    }
    let mut coeffs = Vec::new();
    let mut x = q.clone();
    loop {
        // x = -p/q' gives -⌈p/q'⌉ = ⌊x⌋.
        let a = x.floor();
        let rem = Rational::from_integer(a.clone()) - &x;
        coeffs.push(a);
        if rem.is_zero() {
            break;
        }
        x = rem.recip().expect("nonzero remainder");
    }
    Ok(NegCf { coeffs })
}

pub fn neg_cf_eval(cf: &NegCf) -> Rational {
    let mut iter = cf.coeffs.iter().rev();
    let last = iter.next().expect("NegCf is nonempty");
    let mut acc = Rational::from_integer(last.clone());
    for a in iter {
        acc = Rational::from_integer(a.clone()) - acc.recip().expect("partial values are < -1");
    }
    acc
}

/// Start column of every row in the point diagram, plus the total number of
/// columns. Row `i` holds `|a_i| - 1` points and begins below the last point
/// of row `i - 1`.
fn point_rows(cf: &NegCf) -> (Vec<usize>, usize) {
    let mut starts = Vec::with_capacity(cf.len());
    let mut col = 0usize;
    for a in &cf.coeffs {
        starts.push(col);
        let width = (-a - BigInt::from(2))
            .to_usize()
            .expect("continued fraction entry too large for a point diagram");
        col += width;
    }
    (starts, col + 1)
}

/// Riemenschneider dual by the point rule: the `j`-th column of the point
/// diagram of `cf` holds `|b_j| - 1` points. If `cf` evaluates to `-p/q` the
/// result evaluates to `-p/(p-q)`.
///
/// The output has `Σ(|a_i| - 2) + 1` entries, so huge entries in `cf`
/// produce correspondingly long duals.
pub fn riemenschneider_dual(cf: &NegCf) -> NegCf {
    let (starts, ncols) = point_rows(cf);
    let mut counts = vec![0usize; ncols];
    for (start, a) in starts.iter().zip(&cf.coeffs) {
        let width = (-a - BigInt::from(2)).to_usize().unwrap();
        for c in &mut counts[*start..=*start + width] {
            *c += 1;
        }
    }
    NegCf {
        coeffs: counts.into_iter().map(|c| -BigInt::from(c + 1)).collect(),
    }
}

/// Given strings `a`, `b` with `r + s > 1` where `r = -1/[a]` and
/// `s = -1/[b]`, returns `(n0, m0)` such that the prefixes `a[..n0]` and
/// `b[..m0]` are Riemenschneider duals, i.e. `r0 + s0 = 1`.
///
/// Let `a'` be the dual of `a`. Either `b` extends `a'`, giving
/// `(len a, len a')`, or `k` (counted from 0) is the first index with
/// `b_k > a'_k`; then `m0 = k + 1` and `n0` is the number of rows of the
/// point diagram of `a` starting in the first `k + 1` columns, minus
/// `b_k - a'_k`.
pub fn complementary_truncation(a: &NegCf, b: &NegCf) -> Result<(usize, usize)> {
    let r = -(a.eval().recip().unwrap());
    let s = -(b.eval().recip().unwrap());
    if r.clone() + s.clone() <= Rational::one() {
        return Err(Error::Precondition(format!(
            "complementary truncation needs r + s > 1, got {r} + {s}"
        )));
    }
    let dual = riemenschneider_dual(a);
    let first_diff = dual
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .position(|(x, y)| x != y);
    let (n0, m0) = match first_diff {
        None => {
            // s > r' forces b to be a proper extension of a'.
            assert!(b.len() > dual.len(), "r + s > 1 but b does not extend the dual of a");
            (a.len(), dual.len())
        }
        Some(k) => {
            let (bk, ak) = (&b.coeffs[k], &dual.coeffs[k]);
            assert!(bk > ak, "r + s > 1 but b_k < a'_k");
            let (starts, _) = point_rows(a);
            let rows = starts.iter().filter(|&&c| c <= k).count();
            let excess = (bk - ak).to_usize().expect("small excess");
            assert!(excess < rows, "truncation would remove every row");
            (rows - excess, k + 1)
        }
    };
    debug_assert_eq!(riemenschneider_dual(&a.prefix(n0)), b.prefix(m0));
    Ok((n0, m0))
}

impl fmt::Display for NegCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for NegCf {
    type Err = Error;

    /// Comma-separated integers, e.g. `-2,-2,-3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            coeffs.push(parse_integer(part, s, offset)?);
            offset += part.len() + 1;
        }
        NegCf::new(coeffs)
    }
}

impl Serialize for NegCf {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        crate::rational::bigint_serde::vec::serialize(&self.coeffs, serializer)
    }
}

impl<'de> Deserialize<'de> for NegCf {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = crate::rational::bigint_serde::vec::deserialize(deserializer)?;
        NegCf::new(coeffs).map_err(serde::de::Error::custom)
    }
}
