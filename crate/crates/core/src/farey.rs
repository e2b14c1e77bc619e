//! Farey tessellation arcs with both endpoints in `[-∞, -1]`, and the
//! mediant searches that produce the arc configurations used to build
//! fillability witnesses when `r_1 + r_2 > 1`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{ExtendedRational, Rational};

/// A point of `[-∞, -1]` stored as `p/q` with `q >= 0`; `-∞` is `-1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FareyPoint {
    p: BigInt,
    q: BigInt,
}

impl FareyPoint {
    pub fn neg_infinity() -> Self {
        FareyPoint {
            p: -BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn new(r: &Rational) -> Result<Self> {
        if *r > Rational::from_integer(-1) {
            return Err(Error::Domain(format!("{r} lies outside [-inf, -1]")));
        }
        Ok(FareyPoint {
            p: r.numer().clone(),
            q: r.denom().clone(),
        })
    }

    pub fn from_int(n: i64) -> Result<Self> {
        Self::new(&Rational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    pub fn is_neg_infinity(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_neg_infinity() {
            None
        } else {
            Some(Rational::new(self.p.clone(), self.q.clone()).unwrap())
        }
    }

    pub fn to_extended(&self) -> ExtendedRational {
        ExtendedRational::from_projective(self.p.clone(), self.q.clone())
    }

    /// Compares against a finite rational; `-∞` is below everything.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        // Denominators are nonnegative, so cross-multiplication preserves order.
        (&self.p * r.denom()).cmp(&(r.numer() * &self.q))
    }

    fn det(&self, other: &FareyPoint) -> BigInt {
        &self.p * &other.q - &other.p * &self.q
    }
}

impl Ord for FareyPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.p * &other.q).cmp(&(&other.p * &self.q))
    }
}

impl PartialOrd for FareyPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FareyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_one() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl Serialize for FareyPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// True iff `x` and `y` are joined by an arc of the Farey tessellation,
/// i.e. `|p_x q_y - p_y q_x| = 1`.
pub fn is_farey_arc(x: &FareyPoint, y: &FareyPoint) -> bool {
    x.det(y).abs().is_one()
}

/// An arc of the tessellation with `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FareyArc {
    pub lo: FareyPoint,
    pub hi: FareyPoint,
}

impl FareyArc {
    pub fn new(lo: FareyPoint, hi: FareyPoint) -> Result<Self> {
        if lo >= hi {
            return Err(Error::Precondition(format!("arc endpoints {lo} >= {hi}")));
        }
        if !is_farey_arc(&lo, &hi) {
            return Err(Error::Precondition(format!("{lo} and {hi} are not joined by a Farey arc")));
        }
        Ok(FareyArc { lo, hi })
    }

    /// The base arc `(-∞, -1)`.
    pub fn base() -> Self {
        FareyArc {
            lo: FareyPoint::neg_infinity(),
            hi: FareyPoint::from_int(-1).unwrap(),
        }
    }

    fn strictly_contains(&self, s: &Rational) -> bool {
        self.lo.cmp_rational(s) == Ordering::Less && self.hi.cmp_rational(s) == Ordering::Greater
    }
}

/// The mediant of the endpoints, the unique point joined by arcs to both.
pub fn middle_point(arc: &FareyArc) -> FareyPoint {
    mediant(&arc.lo, &arc.hi)
}

fn mediant(x: &FareyPoint, y: &FareyPoint) -> FareyPoint {
    FareyPoint {
        p: &x.p + &y.p,
        q: &x.q + &y.q,
    }
}

fn check_pair(s: &Rational, r2p: &Rational) -> Result<()> {
    let minus_one = Rational::from_integer(-1);
    if *s >= minus_one || *r2p >= minus_one {
        return Err(Error::Precondition(format!("need s, r'_2 < -1, got s = {s}, r'_2 = {r2p}")));
    }
    if s >= r2p {
        return Err(Error::Precondition(format!("need s < r'_2, got s = {s}, r'_2 = {r2p}")));
    }
    Ok(())
}

/// Finds an arc `(α, γ)` with middle point `β` such that
/// `-∞ <= α < s <= β <= r'_2 < γ <= -1`, by bisecting from `(-∞, -1)`.
pub fn find_config1(s: &Rational, r2p: &Rational) -> Result<(FareyPoint, FareyPoint, FareyPoint)> {
    check_pair(s, r2p)?;
    let mut alpha = FareyPoint::neg_infinity();
    let mut gamma = FareyPoint::from_int(-1)?;
    loop {
        let beta = mediant(&alpha, &gamma);
        if beta.cmp_rational(s) == Ordering::Less {
            alpha = beta;
        } else if beta.cmp_rational(r2p) == Ordering::Greater {
            gamma = beta;
        } else {
            return Ok((alpha, beta, gamma));
        }
    }
}

/// Which endpoint of the arc is kept fixed while the other is pulled
/// toward `s` by repeated mediants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Keeps `lo`, returns `β'` with `m(lo, β') <= s < β' <= hi`.
    TowardHi,
    /// Keeps `hi`, returns `α'` with `lo <= α' < s <= m(α', hi)`.
    TowardLo,
}

pub fn refine_arc(s: &Rational, arc: &FareyArc, side: Side) -> Result<FareyPoint> {
    if !arc.strictly_contains(s) {
        return Err(Error::Precondition(format!(
            "{s} is not strictly inside the arc ({}, {})",
            arc.lo, arc.hi
        )));
    }
    match side {
        Side::TowardHi => {
            let mut hi = arc.hi.clone();
            loop {
                let m = mediant(&arc.lo, &hi);
                if m.cmp_rational(s) != Ordering::Greater {
                    return Ok(hi);
                }
                hi = m;
            }
        }
        Side::TowardLo => {
            let mut lo = arc.lo.clone();
            loop {
                let m = mediant(&lo, &arc.hi);
                if m.cmp_rational(s) != Ordering::Less {
                    return Ok(lo);
                }
                lo = m;
            }
        }
    }
}

/// The fourth arc of a configuration besides `αβ`, `βγ`, `γδ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtraArc {
    AlphaGamma,
    BetaDelta,
}

/// Four points `α < β < γ < δ` joined consecutively by arcs, plus the arc
/// recorded in `extra_arc`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FareyConfiguration {
    pub alpha: FareyPoint,
    pub beta: FareyPoint,
    pub gamma: FareyPoint,
    pub delta: FareyPoint,
    pub extra_arc: ExtraArc,
}

impl FareyConfiguration {
    /// All four arcs are tessellation arcs and the points are increasing.
    pub fn is_valid(&self) -> bool {
        let (a, b, c, d) = (&self.alpha, &self.beta, &self.gamma, &self.delta);
        let extra = match self.extra_arc {
            ExtraArc::AlphaGamma => is_farey_arc(a, c),
            ExtraArc::BetaDelta => is_farey_arc(b, d),
        };
        a < b && b < c && c < d && is_farey_arc(a, b) && is_farey_arc(b, c) && is_farey_arc(c, d) && extra
    }

    /// Checks `-∞ <= α < s <= β < γ <= r'_2 < δ <= -1`.
    pub fn satisfies_chain(&self, s: &Rational, r2p: &Rational) -> bool {
        use Ordering::*;
        self.alpha.cmp_rational(s) == Less
            && self.beta.cmp_rational(s) != Less
            && self.beta < self.gamma
            && self.gamma.cmp_rational(r2p) != Greater
            && self.delta.cmp_rational(r2p) == Greater
            && self.delta.cmp_rational(&Rational::from_integer(-1)) != Greater
    }
}

/// Builds a configuration with `-∞ <= α < s <= β < γ <= r'_2 < δ <= -1`.
///
/// Starts from [`find_config1`]. When `s < β` the arc `(α, β)` is refined
/// toward `s` from below and subdivided, giving `(α', m(α', β), β, γ)` with
/// extra arc `α'β`. When `s = β` the arc `(β, γ)` is refined around `r'_2`,
/// giving `(α, β, m(β, β'), β')` with extra arc `ββ'`.
pub fn find_config3(s: &Rational, r2p: &Rational) -> Result<FareyConfiguration> {
    let (alpha, beta, gamma) = find_config1(s, r2p)?;
    let config = if beta.cmp_rational(s) == Ordering::Greater {
        let arc = FareyArc {
            lo: alpha,
            hi: beta.clone(),
        };
        let new_alpha = refine_arc(s, &arc, Side::TowardLo)?;
        let m = mediant(&new_alpha, &beta);
        FareyConfiguration {
            alpha: new_alpha,
            beta: m,
            gamma: beta,
            delta: gamma,
            extra_arc: ExtraArc::AlphaGamma,
        }
    } else {
        let arc = FareyArc {
            lo: beta.clone(),
            hi: gamma,
        };
        let new_delta = refine_arc(r2p, &arc, Side::TowardHi)?;
        let m = mediant(&beta, &new_delta);
        FareyConfiguration {
            alpha,
            beta,
            gamma: m,
            delta: new_delta,
            extra_arc: ExtraArc::BetaDelta,
        }
    };
    debug_assert!(config.is_valid() && config.satisfies_chain(s, r2p));
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> FareyPoint {
        if s == "-1/0" {
            FareyPoint::neg_infinity()
        } else {
            FareyPoint::new(&q(s)).unwrap()
        }
    }

    fn arc(lo: &str, hi: &str) -> FareyArc {
        FareyArc::new(pt(lo), pt(hi)).unwrap()
    }

    #[test]
    fn arc_test_examples() {
        assert!(is_farey_arc(&pt("-1/0"), &pt("-1")));
        assert!(is_farey_arc(&pt("-2"), &pt("-3/2")));
        assert!(!is_farey_arc(&pt("-2"), &pt("-4")));
    }

    #[test]
    fn middle_point_examples() {
        assert_eq!(middle_point(&arc("-1/0", "-1")), pt("-2"));
        assert_eq!(middle_point(&arc("-2", "-1")), pt("-3/2"));
        assert_eq!(middle_point(&arc("-1/0", "-2")), pt("-3"));
    }

    #[test]
    fn neg_infinity_orders_first_and_prints() {
        assert!(pt("-1/0") < pt("-1000000"));
        assert_eq!(pt("-1/0").to_string(), "-1/0");
        assert_eq!(pt("-7/3").to_string(), "-7/3");
        assert!(FareyPoint::new(&q("-1/2")).is_err());
    }

    #[test]
    fn config1_examples() {
        assert_eq!(find_config1(&q("-4"), &q("-3/2")).unwrap(), (pt("-1/0"), pt("-2"), pt("-1")));
        assert_eq!(find_config1(&q("-5/2"), &q("-3/2")).unwrap(), (pt("-1/0"), pt("-2"), pt("-1")));
        assert_eq!(find_config1(&q("-7/3"), &q("-9/4")).unwrap(), (pt("-5/2"), pt("-7/3"), pt("-2")));
    }

    #[test]
    fn config1_rejects_bad_input() {
        assert!(find_config1(&q("-3/2"), &q("-3/2")).is_err());
        assert!(find_config1(&q("-3/2"), &q("-2")).is_err());
        assert!(find_config1(&q("-3"), &q("-1")).is_err());
    }

    #[test]
    fn refine_examples() {
        let base = arc("-1/0", "-1");
        let hi = refine_arc(&q("-5/2"), &base, Side::TowardHi).unwrap();
        assert_eq!(hi, pt("-2"));
        assert_eq!(mediant(&base.lo, &hi), pt("-3"));
        assert_eq!(refine_arc(&q("-5/2"), &base, Side::TowardLo).unwrap(), pt("-1/0"));
        assert_eq!(refine_arc(&q("-7/3"), &arc("-3", "-2"), Side::TowardHi).unwrap(), pt("-2"));
    }

    #[test]
    fn refine_rejects_endpoints() {
        let a = arc("-3", "-2");
        assert!(refine_arc(&q("-3"), &a, Side::TowardHi).is_err());
        assert!(refine_arc(&q("-2"), &a, Side::TowardLo).is_err());
        assert!(refine_arc(&q("-1"), &a, Side::TowardLo).is_err());
    }

    fn config(a: &str, b: &str, c: &str, d: &str, extra: ExtraArc) -> FareyConfiguration {
        FareyConfiguration {
            alpha: pt(a),
            beta: pt(b),
            gamma: pt(c),
            delta: pt(d),
            extra_arc: extra,
        }
    }

    #[test]
    fn config3_examples() {
        let c = find_config3(&q("-4"), &q("-3/2")).unwrap();
        assert_eq!(c, config("-1/0", "-3", "-2", "-1", ExtraArc::AlphaGamma));
        assert!(c.is_valid());
        let c = find_config3(&q("-5/2"), &q("-3/2")).unwrap();
        assert_eq!(c, config("-3", "-5/2", "-2", "-1", ExtraArc::AlphaGamma));
        let c = find_config3(&q("-2"), &q("-3/2")).unwrap();
        assert_eq!(c, config("-1/0", "-2", "-3/2", "-1", ExtraArc::BetaDelta));
        assert!(c.is_valid());
    }
}
