//! Normalized Seifert invariants `Y(e_0; r_1, …, r_k)`, realizability and
//! special type.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{bigint_serde, parse_integer, parse_rational, Rational};

/// `Y(e_0; r_1, …, r_k)` with `1 > r_1 >= r_2 >= … >= r_k > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertInvariants {
    e0: BigInt,
    rs: Vec<Rational>,
}

impl SeifertInvariants {
    /// Sorts the coefficients non-increasingly after checking each lies in
    /// `(0, 1)`. Indices in errors are 1-based positions in the input.
    pub fn new(e0: impl Into<BigInt>, rs: Vec<Rational>) -> Result<Self> {
        for (i, r) in rs.iter().enumerate() {
            if !r.in_unit_interval() {
                return Err(Error::OutOfRange {
                    index: i + 1,
                    value: r.to_string(),
                });
            }
        }
        let mut rs = rs;
        rs.sort_by(|a, b| b.cmp(a));
        Ok(SeifertInvariants { e0: e0.into(), rs })
    }

    pub fn e0(&self) -> &BigInt {
        &self.e0
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.rs
    }

    pub fn k(&self) -> usize {
        self.rs.len()
    }

    /// `e(Y) = e_0 + Σ r_i`.
    pub fn euler_number(&self) -> Rational {
        Rational::from_integer(self.e0.clone()) + self.rs.iter().sum::<Rational>()
    }

    /// `-Y(e_0; r_1, …, r_k) = Y(-e_0 - k; 1 - r_k, …, 1 - r_1)`.
    pub fn reverse_orientation(&self) -> SeifertInvariants {
        let e0 = -&self.e0 - BigInt::from(self.k());
        let rs = self.rs.iter().rev().map(|r| Rational::one() - r).collect();
        SeifertInvariants::new(e0, rs).expect("1 - r stays in (0,1)")
    }
}

/// Validates and normalizes raw invariants.
pub fn validate(e0: impl Into<BigInt>, rs: Vec<Rational>) -> Result<SeifertInvariants> {
    SeifertInvariants::new(e0, rs)
}

impl fmt::Display for SeifertInvariants {
    /// The manifold grammar `<e0>;<r1>,<r2>,...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.e0)?;
        for (i, r) in self.rs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Parses a comma-separated list of rationals, returning each value with
/// its byte offset. An all-whitespace list is empty.
pub fn parse_rational_list(text: &str, full: &str, offset: usize) -> Result<Vec<(Rational, usize)>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for part in text.split(',') {
        out.push((parse_rational(part, full, pos)?, pos));
        pos += part.len() + 1;
    }
    Ok(out)
}

/// Parses `<e0>;<r1>,<r2>,...`, ignoring whitespace around tokens.
pub fn parse_manifold(text: &str) -> Result<SeifertInvariants> {
    let semi = text.find(';').ok_or_else(|| Error::Parse {
        input: text.to_string(),
        position: text.len(),
        message: "expected `;` after e0".into(),
    })?;
    let e0 = parse_integer(&text[..semi], text, 0)?;
    let items = parse_rational_list(&text[semi + 1..], text, semi + 1)?;
    let positions: Vec<usize> = items.iter().map(|(_, p)| *p).collect();
    let rs = items.into_iter().map(|(r, _)| r).collect();
    SeifertInvariants::new(e0, rs).map_err(|e| match e {
        Error::OutOfRange { index, value } => Error::Parse {
            input: text.to_string(),
            position: positions[index - 1],
            message: format!("r_{index} = {value} is not in (0,1)"),
        },
        other => other,
    })
}

impl FromStr for SeifertInvariants {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_manifold(s)
    }
}

/// Coprime `n > h > 0` with `h/n > r_1`, `(n-h)/n > r_2` and `1/n > r_j`
/// for `j >= 3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RealizabilityWitness {
    #[serde(with = "bigint_serde")]
    pub n: BigInt,
    #[serde(with = "bigint_serde")]
    pub h: BigInt,
}

impl RealizabilityWitness {
    /// Checks the defining inequalities directly.
    pub fn is_valid_for(&self, rs: &[Rational]) -> bool {
        let (n, h) = (&self.n, &self.h);
        if rs.len() < 3 || !(n > h && h > &BigInt::from(0)) || !n.gcd(h).is_one() {
            return false;
        }
        let frac = |num: BigInt| Rational::new(num, n.clone()).unwrap();
        frac(h.clone()) > rs[0] && frac(n - h) > rs[1] && rs[2..].iter().all(|r| frac(BigInt::one()) > *r)
    }
}

/// Outcome of the realizability search, checkable on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RealizabilityCertificate {
    Witness(RealizabilityWitness),
    /// No witness: every `n` in `2..n_bound` was tried, and `n_bound·r_3 >= 1`
    /// rules out every larger `n`.
    Exhausted {
        #[serde(with = "bigint_serde")]
        n_bound: BigInt,
    },
    /// No witness because `r_1 + r_2 >= 1`, which contradicts
    /// `h/n + (n-h)/n = 1`.
    PairSumAtLeastOne,
}

impl RealizabilityCertificate {
    pub fn witness(&self) -> Option<&RealizabilityWitness> {
        match self {
            RealizabilityCertificate::Witness(w) => Some(w),
            _ => None,
        }
    }

    /// Re-derives the certificate by naive enumeration, independent of the
    /// search that produced it.
    pub fn check(&self, rs: &[Rational]) -> bool {
        if rs.len() < 3 {
            return false;
        }
        match self {
            RealizabilityCertificate::Witness(w) => w.is_valid_for(rs),
            RealizabilityCertificate::PairSumAtLeastOne => &rs[0] + &rs[1] >= Rational::one(),
            RealizabilityCertificate::Exhausted { n_bound } => {
                if Rational::from_integer(n_bound.clone()) * &rs[2] < Rational::one() {
                    return false;
                }
                let mut n = BigInt::from(2);
                while &n < n_bound {
                    let mut h = BigInt::one();
                    while h < n {
                        let w = RealizabilityWitness {
                            n: n.clone(),
                            h: h.clone(),
                        };
                        if w.is_valid_for(rs) {
                            return false;
                        }
                        h += 1;
                    }
                    n += 1;
                }
                true
            }
        }
    }
}

fn realizability_search(rs: &[Rational]) -> Result<RealizabilityCertificate> {
    if rs.len() < 3 {
        return Err(Error::Precondition(format!(
            "realizability needs k >= 3, got k = {}",
            rs.len()
        )));
    }
    if &rs[0] + &rs[1] >= Rational::one() {
        return Ok(RealizabilityCertificate::PairSumAtLeastOne);
    }
    // 1/n > r_3 >= r_j bounds n strictly below 1/r_3.
    let n_bound = rs[2].recip().unwrap().ceil();
    let upper = Rational::one() - &rs[1];
    let mut n = BigInt::from(2);
    while n < n_bound {
        let nq = Rational::from_integer(n.clone());
        // r_1 n < h < (1 - r_2) n
        let mut h = (&rs[0] * &nq).floor() + BigInt::one();
        let h_limit = &upper * &nq;
        while Rational::from_integer(h.clone()) < h_limit {
            if h.gcd(&n).is_one() {
                let w = RealizabilityWitness { n: n.clone(), h };
                debug_assert!(w.is_valid_for(rs));
                return Ok(RealizabilityCertificate::Witness(w));
            }
            h += 1;
        }
        n += 1;
    }
    Ok(RealizabilityCertificate::Exhausted { n_bound })
}

/// Lexicographically smallest witness `(n, h)`, or `None` when the tuple is
/// not realizable. Requires `k >= 3` and sorted coefficients.
pub fn find_realizability_witness(rs: &[Rational]) -> Result<Option<RealizabilityWitness>> {
    Ok(realizability_search(rs)?.witness().cloned())
}

/// Like [`find_realizability_witness`] but keeps the certificate for the
/// negative answer.
pub fn realizability_certificate(rs: &[Rational]) -> Result<RealizabilityCertificate> {
    realizability_search(rs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialTypeReport {
    pub is_special: bool,
    /// Absent when the `e_0`/`k` gate already fails.
    pub realizability: Option<RealizabilityCertificate>,
    /// `Σ r_i > 1`.
    pub sum_check: bool,
    /// `r_1 + r_2 < 1`.
    pub pair_check: bool,
    /// `e_0 = -1` and `k >= 3`.
    pub e0_check: bool,
}

/// `Y(-1; r_1, …, r_k)` with `k >= 3`, not realizable and
/// `r_1 + … + r_k > 1 > r_1 + r_2`.
pub fn is_special_type(y: &SeifertInvariants) -> SpecialTypeReport {
    let rs = y.coefficients();
    let e0_check = *y.e0() == BigInt::from(-1) && rs.len() >= 3;
    let sum_check = rs.iter().sum::<Rational>() > Rational::one();
    let pair_check = rs.len() >= 2 && &rs[0] + &rs[1] < Rational::one();
    if !e0_check {
        return SpecialTypeReport {
            is_special: false,
            realizability: None,
            sum_check,
            pair_check,
            e0_check,
        };
    }
    let cert = realizability_search(rs).expect("k >= 3 checked");
    let is_special = cert.witness().is_none() && sum_check && pair_check;
    SpecialTypeReport {
        is_special,
        realizability: Some(cert),
        sum_check,
        pair_check,
        e0_check,
    }
}
