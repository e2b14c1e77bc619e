#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use seifert_fill::{NegCf, Rational, SeifertInvariants};

/// `p/q` with `0 < p < q <= max_den`.
pub fn unit_rational(max_den: i64) -> impl Strategy<Value = Rational> {
    (2..=max_den).prop_flat_map(|q| (1..q).prop_map(move |p| Rational::frac(p, q)))
}

/// A rational strictly below -1.
pub fn below_minus_one(max: i64) -> impl Strategy<Value = Rational> {
    (1..=max).prop_flat_map(move |q| ((q + 1)..=(q * 8 + max)).prop_map(move |p| Rational::frac(-p, q)))
}

pub fn neg_cf(max_len: usize, max_abs: i64) -> impl Strategy<Value = NegCf> {
    prop::collection::vec(2..=max_abs, 1..=max_len)
        .prop_map(|v| NegCf::from_i64s(&v.into_iter().map(|x| -x).collect::<Vec<_>>()).unwrap())
}

pub fn manifold(max_k: usize, max_den: i64) -> impl Strategy<Value = SeifertInvariants> {
    (-3i64..=1, prop::collection::vec(unit_rational(max_den), 0..=max_k))
        .prop_map(|(e0, rs)| SeifertInvariants::new(e0, rs).unwrap())
}

/// Manifolds with `e0 = -1` and `k >= 3`, where all interesting branches live.
pub fn critical_manifold(max_k: usize, max_den: i64) -> impl Strategy<Value = SeifertInvariants> {
    prop::collection::vec(unit_rational(max_den), 3..=max_k).prop_map(|rs| SeifertInvariants::new(-1, rs).unwrap())
}

pub fn random_unit<R: Rng>(rng: &mut R, max_den: i64) -> Rational {
    let q = rng.gen_range(2..=max_den);
    Rational::frac(rng.gen_range(1..q), q)
}

pub fn neg_cf_of(v: &[i64]) -> NegCf {
    NegCf::from_i64s(v).unwrap()
}

/// Fixed-seed configuration so every run explores the same cases.
pub fn cases(n: u32) -> ProptestConfig {
    ProptestConfig {
        cases: n,
        failure_persistence: None,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x5e1f_e27),
        ..ProptestConfig::default()
    }
}

/// A string `b` with `-1/[a] - 1/[b] > 1`: the dual of `a`, either extended
/// or with one entry raised, followed by an arbitrary tail.
pub fn overlapping_pair(max_len: usize, max_abs: i64) -> impl Strategy<Value = (NegCf, NegCf)> {
    (neg_cf(max_len, max_abs), any::<prop::sample::Index>(), any::<prop::sample::Index>(), prop::collection::vec(2..=max_abs, 0..=3))
        .prop_map(|(a, at, by, tail)| {
            let dual: Vec<i64> = seifert_fill::riemenschneider_dual(&a)
                .coeffs()
                .iter()
                .map(|x| i64::try_from(x).unwrap())
                .collect();
            let raisable: Vec<usize> = (0..dual.len()).filter(|&k| dual[k] <= -3).collect();
            let tail: Vec<i64> = tail.into_iter().map(|x| -x).collect();
            let mut b;
            if raisable.is_empty() || at.index(2) == 0 {
                b = dual.clone();
                b.push(-2);
            } else {
                let k = raisable[at.index(raisable.len())];
                b = dual[..k].to_vec();
                let room = -dual[k] - 2;
                b.push(dual[k] + 1 + by.index(room as usize) as i64);
            }
            b.extend(tail);
            (a, NegCf::from_i64s(&b).unwrap())
        })
}

/// `k >= 3` coefficients with sum at most one, sorted or not.
pub fn small_sum_tuple(max_k: usize, max_den: i64) -> impl Strategy<Value = Vec<Rational>> {
    (3..=max_k, 6..=max_den).prop_flat_map(|(k, n)| {
        prop::sample::subsequence((1..=n).collect::<Vec<i64>>(), k).prop_map(move |cuts| {
            let mut prev = 0;
            cuts.into_iter()
                .map(|c| {
                    let r = Rational::frac(c - prev, n);
                    prev = c;
                    r
                })
                .collect()
        })
    })
}

/// Manifolds with negative Euler number.
pub fn negative_euler_manifold(max_k: usize, max_den: i64) -> impl Strategy<Value = SeifertInvariants> {
    (prop::collection::vec(unit_rational(max_den), 0..=max_k), 0i64..3).prop_map(|(rs, extra)| {
        let sum: Rational = rs.iter().sum();
        let e0 = -sum.floor() - 1 - extra;
        SeifertInvariants::new(e0, rs).unwrap()
    })
}

/// Rejection-samples special-type manifolds from a seeded RNG.
pub fn random_special<R: Rng>(rng: &mut R, max_k: usize, max_den: i64) -> SeifertInvariants {
    loop {
        let k = rng.gen_range(3..=max_k);
        let rs = (0..k).map(|_| random_unit(rng, max_den)).collect();
        let m = SeifertInvariants::new(-1, rs).unwrap();
        if seifert_fill::is_special_type(&m).is_special {
            return m;
        }
    }
}
