//! Möbius maps on `Q ∪ {∞}` and Gompf's sufficient condition for Stein
//! fillability of `Y(-1; r_1, …, r_k)`.
//!
//! With `r'_i = -1/r_i` and `1/s = -1 - 1/r'_1`, a map
//! `A(r) = (c + d r)/(a + b r)` is admissible when
//!
//! * `ad - bc = ±1`,
//! * `A(s) ∈ (-1, 0]`,
//! * `A(r'_2) ∈ [-∞, -1)`.
//!
//! Each admissible map yields the integer `n_A = -m(⟦t⟧ + 1) - M`, and the
//! manifold is fillable as soon as some `n_A > r'_3, …, r'_k`. The
//! constructions here produce such a map explicitly, so every fillable
//! verdict of this kind can be re-checked by hand.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::farey::{find_config3, ExtraArc, FareyConfiguration, FareyPoint};
use crate::rational::{bigint_serde, ExtendedRational, Rational};
use crate::seifert::RealizabilityWitness;

/// `A(r) = (c + d r)/(a + b r)` with `ad - bc = ±1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MobiusMap {
    #[serde(with = "bigint_serde")]
    a: BigInt,
    #[serde(with = "bigint_serde")]
    b: BigInt,
    #[serde(with = "bigint_serde")]
    c: BigInt,
    #[serde(with = "bigint_serde")]
    d: BigInt,
}

impl MobiusMap {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let map = MobiusMap {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = map.det();
        if !det.abs().is_one() {
            return Err(Error::BadDeterminant(det.to_string()));
        }
        Ok(map)
    }

    pub fn identity() -> Self {
        MobiusMap::new(1, 0, 0, 1).unwrap()
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// `ad - bc`, always `±1`.
    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, x: &ExtendedRational) -> ExtendedRational {
        moebius_apply(self, x)
    }

    pub fn apply_rational(&self, x: &Rational) -> ExtendedRational {
        moebius_apply(self, &ExtendedRational::Finite(x.clone()))
    }

    /// `A(s) ∈ (-1, 0]` and `A(r'_2) ∈ [-∞, -1)`.
    pub fn satisfies_gompf_conditions(&self, s: &Rational, r2p: &Rational) -> bool {
        let at_s = self.apply_rational(s);
        let at_r2 = self.apply_rational(r2p);
        let s_ok = match at_s.finite() {
            Some(v) => *v > Rational::from_integer(-1) && !v.is_positive(),
            None => false,
        };
        let r2_ok = match at_r2.finite() {
            Some(v) => *v < Rational::from_integer(-1),
            None => true,
        };
        s_ok && r2_ok
    }
}

/// `c + dr` with unit and zero coefficients folded, e.g. `2 + r`, `-2 - r`.
fn linear_term(c: &BigInt, d: &BigInt) -> String {
    let r = match d.magnitude().to_string().as_str() {
        "0" => return c.to_string(),
        "1" => "r".to_string(),
        m => format!("{m}r"),
    };
    match (c.is_zero(), d.is_negative()) {
        (true, false) => r,
        (true, true) => format!("-{r}"),
        (false, false) => format!("{c} + {r}"),
        (false, true) => format!("{c} - {r}"),
    }
}

impl std::fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})/({})", linear_term(&self.c, &self.d), linear_term(&self.a, &self.b))
    }
}

/// Projective evaluation: `A(∞) = d/b` and `A(-a/b) = ∞`.
pub fn moebius_apply(map: &MobiusMap, x: &ExtendedRational) -> ExtendedRational {
    let (p, q) = x.to_projective();
    let num = &map.d * &p + &map.c * &q;
    let den = &map.b * &p + &map.a * &q;
    ExtendedRational::from_projective(num, den)
}

/// Prescribed images for three points of a Farey triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleImages {
    /// `x1 ↦ 0`, `x2 ↦ ∞`, `x3 ↦ -1`.
    ZeroInfNegOne,
    /// `x1 ↦ -1`, `x2 ↦ 0`, `x3 ↦ ∞`.
    NegOneZeroInf,
}

fn det2(x: (&BigInt, &BigInt), y: (&BigInt, &BigInt)) -> BigInt {
    x.0 * y.1 - y.0 * x.1
}

/// The unique integral map sending a Farey triangle to `{0, ∞, -1}` as
/// prescribed.
///
/// The overall sign of the coefficients is fixed by requiring the point sent
/// to `-1`, in canonical coordinates `(p, q)` with `q >= 0`, to land on
/// exactly `(-1, 1)`.
pub fn moebius_from_triple(
    x1: &FareyPoint,
    x2: &FareyPoint,
    x3: &FareyPoint,
    images: TripleImages,
) -> Result<MobiusMap> {
    let (to_zero, to_inf, to_neg_one) = match images {
        TripleImages::ZeroInfNegOne => (x1, x2, x3),
        TripleImages::NegOneZeroInf => (x2, x3, x1),
    };
    let zero = (to_zero.numer(), to_zero.denom());
    let inf = (to_inf.numer(), to_inf.denom());
    let neg_one = (to_neg_one.numer(), to_neg_one.denom());

    // The inverse map sends (1,0) to u·inf and (0,1) to v·zero, and hence
    // (-1,1) to -u·inf + v·zero, which must equal neg_one.
    let minus_inf = (-inf.0, -inf.1);
    let base = det2((&minus_inf.0, &minus_inf.1), zero);
    if !base.abs().is_one() {
        return Err(Error::NotFareyTriangle);
    }
    let u = det2(neg_one, zero) * &base;
    let v = det2((&minus_inf.0, &minus_inf.1), neg_one) * &base;
    if !u.abs().is_one() || !v.abs().is_one() {
        return Err(Error::NotFareyTriangle);
    }
    // Inverse matrix [[u p_inf, v p_zero], [u q_inf, v q_zero]] with
    // determinant delta; invert to get [[d, c], [b, a]].
    let delta = &u * &v * det2(inf, zero);
    let d = &v * zero.1 * &delta;
    let c = -(&v * zero.0) * &delta;
    let b = -(&u * inf.1) * &delta;
    let a = &u * inf.0 * &delta;
    MobiusMap::new(a, b, c, d)
}

/// `s = 1/(r_1 - 1)`, equivalently `1/s = -1 - 1/r'_1`.
pub fn gompf_s(r1: &Rational) -> Result<Rational> {
    if !r1.in_unit_interval() {
        return Err(Error::Precondition(format!("gompf_s needs r_1 in (0,1), got {r1}")));
    }
    Ok((r1 - &Rational::one()).recip().unwrap())
}

/// Which clause of the piecewise definition of `t` applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TBranch {
    /// `A(0) ∈ [0, +∞]`, `t = 0`.
    Zero,
    /// `A(0) ∈ [-1, 0)`, `t = 1/A(s)`.
    ReciprocalAtS,
    /// `A(0) ∈ (-∞, -1)`, `t = A(r'_2)`.
    AtR2Prime,
}

fn check_admissible(map: &MobiusMap, s: &Rational, r2p: &Rational) -> Result<()> {
    if !map.satisfies_gompf_conditions(s, r2p) {
        return Err(Error::Precondition(format!(
            "map {map} violates A(s) in (-1,0] or A(r'_2) in [-inf,-1) for s = {s}, r'_2 = {r2p}"
        )));
    }
    Ok(())
}

fn t_with_branch(map: &MobiusMap, s: &Rational, r2p: &Rational) -> Result<(ExtendedRational, TBranch, ExtendedRational)> {
    check_admissible(map, s, r2p)?;
    let at_zero = map.apply_rational(&Rational::zero());
    let minus_one = Rational::from_integer(-1);
    let (t, branch) = match at_zero.finite() {
        None => (ExtendedRational::Finite(Rational::zero()), TBranch::Zero),
        Some(v) if !v.is_negative() => (ExtendedRational::Finite(Rational::zero()), TBranch::Zero),
        Some(v) if *v >= minus_one => (map.apply_rational(s).recip(), TBranch::ReciprocalAtS),
        Some(_) => (map.apply_rational(r2p), TBranch::AtR2Prime),
    };
    Ok((t, branch, at_zero))
}

/// The quantity `t` of Gompf's condition. It is `∞` exactly when
/// `A(s) = 0` in the second clause or `A(r'_2) = ∞` in the third.
pub fn gompf_t(map: &MobiusMap, s: &Rational, r2p: &Rational) -> Result<ExtendedRational> {
    t_with_branch(map, s, r2p).map(|(t, _, _)| t)
}

/// Everything computed from one admissible map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GompfReport {
    pub map: MobiusMap,
    pub r1_prime: Rational,
    pub r2_prime: Rational,
    pub s: Rational,
    pub a_at_zero: ExtendedRational,
    pub t_branch: TBranch,
    pub t: ExtendedRational,
    /// `t = ∞`: `⟦t⟧ + 1` was replaced by the integer `N = ⌊1/A(0)⌋`
    /// (second clause) or `N = ⌊A(0)⌋` (third clause).
    pub boundary_floor: bool,
    #[serde(rename = "M", with = "bigint_serde")]
    pub big_m: BigInt,
    #[serde(rename = "m", with = "bigint_serde")]
    pub small_m: BigInt,
    /// `n_A`, a lower bound for the supremum over all admissible maps.
    #[serde(with = "bigint_serde")]
    pub n_a: BigInt,
    /// `n_A > r'_j` for every remaining `j >= 3`.
    pub condition_holds: bool,
}

/// `r'_1 = -1/r_1` gives `s` through `1/s = -1 - 1/r'_1`.
fn s_from_r1_prime(r1p: &Rational) -> Result<Rational> {
    if *r1p >= Rational::from_integer(-1) {
        return Err(Error::Precondition(format!("need r'_1 < -1, got {r1p}")));
    }
    let inv = -Rational::one() - r1p.recip().unwrap();
    Ok(inv.recip().unwrap())
}

/// Evaluates `n_A` and the condition against `rest = (r_3, …, r_k)`.
pub fn gompf_report(map: &MobiusMap, r1p: &Rational, r2p: &Rational, rest: &[Rational]) -> Result<GompfReport> {
    let s = s_from_r1_prime(r1p)?;
    let (t, branch, at_zero) = t_with_branch(map, &s, r2p)?;
    let (abs_a, abs_c) = (map.a.abs(), map.c.abs());
    let (big_m, small_m) = if abs_a >= abs_c { (abs_a, abs_c) } else { (abs_c, abs_a) };
    let (floor_plus_one, boundary) = match &t {
        ExtendedRational::Finite(t) => (t.floor() + BigInt::one(), false),
        ExtendedRational::Infinity => {
            let a0 = at_zero.finite().expect("boundary t needs a finite A(0)");
            let n = match branch {
                TBranch::ReciprocalAtS => a0.recip().expect("A(0) is nonzero here").floor(),
                TBranch::AtR2Prime => a0.floor(),
                TBranch::Zero => unreachable!("t = 0 in the first clause"),
            };
            (n, true)
        }
    };
    let n_a = -(&small_m * floor_plus_one) - &big_m;
    let condition_holds = check_condition(&n_a, rest);
    Ok(GompfReport {
        map: map.clone(),
        r1_prime: r1p.clone(),
        r2_prime: r2p.clone(),
        s,
        a_at_zero: at_zero,
        t_branch: branch,
        t,
        boundary_floor: boundary,
        big_m,
        small_m,
        n_a,
        condition_holds,
    })
}

/// `n_A = -m(⟦t⟧ + 1) - M` for an admissible map.
pub fn gompf_n_a(map: &MobiusMap, r1p: &Rational, r2p: &Rational) -> Result<BigInt> {
    gompf_report(map, r1p, r2p, &[]).map(|r| r.n_a)
}

/// True iff `n > -1/r_j` for every `r_j` in `rest`.
pub fn check_condition(n: &BigInt, rest: &[Rational]) -> bool {
    let n = Rational::from_integer(n.clone());
    rest.iter().all(|r| n > -r.recip().expect("r_j is positive"))
}

fn r_prime(r: &Rational) -> Rational {
    -(r.recip().expect("r_i is positive"))
}

/// Output of [`witness_realizable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizableWitnessReport {
    /// The realizability witness `(n, h)` the construction started from.
    pub seed: RealizabilityWitness,
    /// Minimal `n` with some coprime `h` and `r'_2 < -n/h < s`.
    #[serde(with = "bigint_serde")]
    pub n: BigInt,
    #[serde(with = "bigint_serde")]
    pub h: BigInt,
    pub report: GompfReport,
}

fn check_tuple(rs: &[Rational]) -> Result<()> {
    if rs.len() < 3 {
        return Err(Error::Precondition(format!("need at least 3 coefficients, got {}", rs.len())));
    }
    for (i, r) in rs.iter().enumerate() {
        if !r.in_unit_interval() {
            return Err(Error::OutOfRange {
                index: i + 1,
                value: r.to_string(),
            });
        }
    }
    if rs.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition("coefficients must be sorted non-increasingly".into()));
    }
    Ok(())
}

/// Builds an admissible map with `n_A = -n > r'_3, …, r'_k` from a
/// realizability witness.
///
/// The witness `(n_0, h)` translates to `h_0 = n_0 - h` with
/// `r'_2 < -n_0/h_0 < s`. The smallest `n <= n_0` admitting a coprime `h`
/// in that window is chosen (smallest `h` on ties), `ah - bn = 1` is solved
/// with `0 <= a < n`, and the map is `r + n - 1` when `b = 0` and
/// `-1 + (n + hr)/(a + br)` otherwise.
pub fn witness_realizable(rs: &[Rational], seed: &RealizabilityWitness) -> Result<RealizableWitnessReport> {
    check_tuple(rs)?;
    if !seed.is_valid_for(rs) {
        return Err(Error::InvalidWitness {
            n: seed.n.to_string(),
            h: seed.h.to_string(),
        });
    }
    let s = gompf_s(&rs[0])?;
    let r1p = r_prime(&rs[0]);
    let r2p = r_prime(&rs[1]);
    if s == r2p {
        return Err(Error::DegeneratePairSum);
    }

    let n0 = seed.n.clone();
    let in_window = |n: &BigInt, h: &BigInt| {
        let x = -Rational::new(n.clone(), h.clone()).unwrap();
        r2p < x && x < s
    };
    debug_assert!(in_window(&n0, &(&n0 - &seed.h)));

    let mut found = None;
    let mut n = BigInt::from(2);
    'search: while n <= n0 {
        let mut h = BigInt::one();
        while h < n {
            if h.gcd(&n).is_one() && in_window(&n, &h) {
                found = Some((n.clone(), h));
                break 'search;
            }
            h += 1;
        }
        n += 1;
    }
    let (n, h) = found.expect("the seed itself lies in the window");

    let egcd = h.extended_gcd(&n);
    let a = egcd.x.mod_floor(&n);
    let b = (&a * &h - BigInt::one()) / &n;
    debug_assert_eq!(&a * &h - &b * &n, BigInt::one());

    let map = if b.is_zero() {
        MobiusMap::new(1, 0, &n - 1, 1)?
    } else {
        MobiusMap::new(a.clone(), b.clone(), &n - &a, &h - &b)?
    };
    let report = gompf_report(&map, &r1p, &r2p, &rs[2..])?;
    debug_assert_eq!(report.n_a, -n.clone());
    Ok(RealizableWitnessReport {
        seed: seed.clone(),
        n,
        h,
        report,
    })
}

/// Output of [`witness_farey`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FareyWitnessReport {
    pub configuration: FareyConfiguration,
    pub report: GompfReport,
}

/// Builds an admissible map with `n_A >= -1` when `r_1 + r_2 > 1`.
///
/// A configuration `(α, β, γ, δ)` from [`find_config3`] with extra arc `βδ`
/// is sent to `(·, 0, ∞, -1)`; with extra arc `αγ` the triangle `(α, β, γ)`
/// is sent to `(-1, 0, ∞)`.
pub fn witness_farey(rs: &[Rational]) -> Result<FareyWitnessReport> {
    check_tuple(rs)?;
    let pair = &rs[0] + &rs[1];
    match pair.cmp(&Rational::one()) {
        Ordering::Less => {
            return Err(Error::Precondition(format!("Farey witness needs r_1 + r_2 >= 1, got {pair}")))
        }
        Ordering::Equal => return Err(Error::DegeneratePairSum),
        Ordering::Greater => {}
    }
    let s = gompf_s(&rs[0])?;
    let r1p = r_prime(&rs[0]);
    let r2p = r_prime(&rs[1]);
    let configuration = find_config3(&s, &r2p)?;
    let c = &configuration;
    let map = match c.extra_arc {
        ExtraArc::BetaDelta => moebius_from_triple(&c.beta, &c.gamma, &c.delta, TripleImages::ZeroInfNegOne)?,
        ExtraArc::AlphaGamma => moebius_from_triple(&c.alpha, &c.beta, &c.gamma, TripleImages::NegOneZeroInf)?,
    };
    let report = gompf_report(&map, &r1p, &r2p, &rs[2..])?;
    assert!(report.n_a >= -BigInt::one(), "Farey witness produced n_A < -1");
    Ok(FareyWitnessReport { configuration, report })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ext(s: &str) -> ExtendedRational {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> FareyPoint {
        if s == "-1/0" {
            FareyPoint::neg_infinity()
        } else {
            FareyPoint::new(&q(s)).unwrap()
        }
    }

    fn map(a: i64, b: i64, c: i64, d: i64) -> MobiusMap {
        MobiusMap::new(a, b, c, d).unwrap()
    }

    fn rs(v: &[&str]) -> Vec<Rational> {
        v.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn display_examples() {
        assert_eq!(map(3, 1, 2, 1).to_string(), "(2 + r)/(3 + r)");
        assert_eq!(map(-2, -1, 3, 1).to_string(), "(3 + r)/(-2 - r)");
        assert_eq!(map(3, 2, -2, -1).to_string(), "(-2 - r)/(3 + 2r)");
        assert_eq!(map(1, 0, 0, 1).to_string(), "(r)/(1)");
    }

    #[test]
    fn apply_examples() {
        assert_eq!(MobiusMap::identity().apply(&ext("-7/5")), ext("-7/5"));
        assert_eq!(map(3, 1, 2, 1).apply(&ext("-5/2")), ext("-1"));
        assert_eq!(map(-2, -1, 3, 1).apply(&ext("inf")), ext("-1"));
        assert_eq!(map(3, 1, 2, 1).apply(&ext("-3")), ext("inf"));
        assert_eq!(map(1, 0, 7, 1).apply(&ext("inf")), ext("inf"));
    }

    #[test]
    fn rejects_non_unimodular_coefficients() {
        assert_eq!(MobiusMap::new(2, 0, 0, 2), Err(Error::BadDeterminant("4".into())));
    }

    #[test]
    fn from_triple_examples() {
        // (-3, -1) is not an arc, so no unimodular map sends (-3,-2,-1) to (0,∞,-1).
        assert_eq!(
            moebius_from_triple(&pt("-3"), &pt("-2"), &pt("-1"), TripleImages::ZeroInfNegOne),
            Err(Error::NotFareyTriangle)
        );
        let m = moebius_from_triple(&pt("-1/0"), &pt("-3"), &pt("-2"), TripleImages::NegOneZeroInf).unwrap();
        assert_eq!(m, map(-2, -1, 3, 1));
        let m = moebius_from_triple(&pt("-2"), &pt("-3/2"), &pt("-1"), TripleImages::ZeroInfNegOne).unwrap();
        assert_eq!(m, map(3, 2, -2, -1));
        assert_eq!(m.det(), BigInt::one());
        assert_eq!(m.apply(&ext("0")), ext("-2/3"));
    }

    #[test]
    fn s_examples() {
        assert_eq!(gompf_s(&q("1/2")).unwrap(), q("-2"));
        assert_eq!(gompf_s(&q("3/4")).unwrap(), q("-4"));
        assert_eq!(gompf_s(&q("6/7")).unwrap(), q("-7"));
        assert!(gompf_s(&q("1")).is_err());
        assert!(gompf_s(&q("0")).is_err());
    }

    #[test]
    fn t_examples() {
        assert_eq!(gompf_t(&map(3, 1, 2, 1), &q("-2"), &q("-3")).unwrap(), ext("0"));
        assert_eq!(gompf_t(&map(-2, -1, 3, 1), &q("-4"), &q("-3/2")).unwrap(), ext("-3"));
        assert_eq!(gompf_t(&map(3, 2, -2, -1), &q("-2"), &q("-3/2")).unwrap(), ext("inf"));
    }

    #[test]
    fn t_rejects_inadmissible_maps() {
        // Identity: A(s) = s < -1.
        assert!(gompf_t(&MobiusMap::identity(), &q("-2"), &q("-3/2")).is_err());
    }

    #[test]
    fn n_a_examples() {
        assert_eq!(gompf_n_a(&map(3, 1, 2, 1), &q("-2"), &q("-3")).unwrap(), BigInt::from(-5));
        assert_eq!(gompf_n_a(&map(1, 0, 7, 1), &q("-7/6"), &q("-10")).unwrap(), BigInt::from(-8));
        assert_eq!(gompf_n_a(&map(-2, -1, 3, 1), &q("-4/3"), &q("-3/2")).unwrap(), BigInt::from(1));
    }

    #[test]
    fn condition_examples() {
        assert!(check_condition(&BigInt::from(-5), &rs(&["1/7"])));
        assert!(check_condition(&BigInt::from(0), &rs(&["1/2", "1/3", "999/1000"])));
        assert!(!check_condition(&BigInt::from(-8), &rs(&["1/5"])));
    }

    fn seed(n: i64, h: i64) -> RealizabilityWitness {
        RealizabilityWitness {
            n: BigInt::from(n),
            h: BigInt::from(h),
        }
    }

    #[test]
    fn realizable_witness_examples() {
        let w = witness_realizable(&rs(&["1/2", "1/3", "1/7"]), &seed(5, 3)).unwrap();
        assert_eq!((w.n.clone(), w.h.clone()), (BigInt::from(5), BigInt::from(2)));
        assert_eq!(w.report.map, map(3, 1, 2, 1));
        assert_eq!(w.report.n_a, BigInt::from(-5));
        assert!(w.report.condition_holds);

        let w = witness_realizable(&rs(&["6/7", "1/10", "1/10"]), &seed(8, 7)).unwrap();
        assert_eq!((w.n.clone(), w.h.clone()), (BigInt::from(8), BigInt::from(1)));
        assert_eq!(w.report.map, map(1, 0, 7, 1));
        assert_eq!(w.report.n_a, BigInt::from(-8));
        assert!(w.report.condition_holds);

        let w = witness_realizable(&rs(&["3/5", "3/10", "3/10", "3/10"]), &seed(3, 2)).unwrap();
        assert_eq!((w.n.clone(), w.h.clone()), (BigInt::from(3), BigInt::from(1)));
        assert_eq!(w.report.map, map(1, 0, 2, 1));
        assert_eq!(w.report.n_a, BigInt::from(-3));
        assert!(w.report.condition_holds);
    }

    #[test]
    fn realizable_witness_rejects_bad_seed() {
        let err = witness_realizable(&rs(&["1/2", "1/3", "1/7"]), &seed(5, 2)).unwrap_err();
        assert!(matches!(err, Error::InvalidWitness { .. }));
        let err = witness_realizable(&rs(&["1/2", "1/3"]), &seed(5, 3)).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn farey_witness_examples() {
        let w = witness_farey(&rs(&["3/4", "2/3", "1/2"])).unwrap();
        assert_eq!(w.configuration.alpha, FareyPoint::neg_infinity());
        assert_eq!(w.configuration.extra_arc, ExtraArc::AlphaGamma);
        assert_eq!(w.report.map, map(-2, -1, 3, 1));
        assert_eq!(w.report.t, ext("-3"));
        assert_eq!(w.report.n_a, BigInt::from(1));
        assert!(!w.report.boundary_floor);

        let w = witness_farey(&rs(&["2/3", "1/2", "1/2"])).unwrap();
        assert_eq!(
            (&w.configuration.beta, &w.configuration.gamma, &w.configuration.delta),
            (&pt("-3"), &pt("-2"), &pt("-1"))
        );
        assert_eq!(w.report.map, map(-2, -1, 3, 1));
        assert_eq!(w.report.t, ext("inf"));
        assert!(w.report.boundary_floor);
        assert_eq!(w.report.n_a, BigInt::from(1));

        assert_eq!(witness_farey(&rs(&["2/3", "1/3", "1/3"])), Err(Error::DegeneratePairSum));
        assert!(matches!(witness_farey(&rs(&["1/2", "1/3", "1/5"])), Err(Error::Precondition(_))));
    }
}
