//! The fillability decision for closed Seifert fibered 3-manifolds.
//!
//! A manifold admits Stein fillings, equivalently symplectic fillings,
//! exactly when it is not of special type. Fillable verdicts carry a
//! constructive witness whenever one exists; the special-type verdict
//! carries the special-type report and, on request, a lattice embedding
//! search on the plumbing of the reversed manifold.

use serde::Serialize;

use crate::embedding::{find_embedding, SearchCertificate, SearchLimits};
use crate::gompf::{gompf_s, witness_farey, witness_realizable, FareyWitnessReport, RealizableWitnessReport};
use crate::plumbing::{build_plumbing, intersection_form};
use crate::rational::Rational;
use crate::seifert::{is_special_type, realizability_certificate, SeifertInvariants, SpecialTypeReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// `e_0 != -1` or `k < 3`: fillable by Gompf's general construction.
    GompfUnconditional,
    Realizable,
    /// `r_1 + r_2 = 1`, where Gompf's condition holds automatically.
    PairSumAutomatic,
    FareyWitness,
    SpecialType,
}

impl Reason {
    pub fn as_str(&self) -> &'static str {
        match self {
            Reason::GompfUnconditional => "gompf_unconditional",
            Reason::Realizable => "realizable",
            Reason::PairSumAutomatic => "pair_sum_automatic",
            Reason::FareyWitness => "farey_witness",
            Reason::SpecialType => "special_type",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairSumEvidence {
    pub s: Rational,
    pub r2_prime: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialTypeEvidence {
    pub report: SpecialTypeReport,
    /// Embedding search on the intersection lattice of the plumbing of `-Y`.
    pub embedding: Option<SearchCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Evidence {
    Realizable(RealizableWitnessReport),
    PairSum(PairSumEvidence),
    Farey(FareyWitnessReport),
    SpecialType(SpecialTypeEvidence),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub fillable: bool,
    pub reason: Reason,
    pub evidence: Option<Evidence>,
}

impl Verdict {
    pub fn gompf_report(&self) -> Option<&crate::gompf::GompfReport> {
        match &self.evidence {
            Some(Evidence::Realizable(w)) => Some(&w.report),
            Some(Evidence::Farey(w)) => Some(&w.report),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    /// When set, special-type verdicts also run the embedding search.
    pub embedding_search: Option<SearchLimits>,
}

pub fn classify(y: &SeifertInvariants) -> Verdict {
    classify_with(y, &ClassifyOptions::default())
}

pub fn classify_with(y: &SeifertInvariants, options: &ClassifyOptions) -> Verdict {
    let rs = y.coefficients();
    if *y.e0() != (-1).into() || rs.len() < 3 {
        return Verdict {
            fillable: true,
            reason: Reason::GompfUnconditional,
            evidence: None,
        };
    }

    let cert = realizability_certificate(rs).expect("k >= 3");
    if let Some(seed) = cert.witness() {
        let w = witness_realizable(rs, seed).expect("valid realizability witness");
        return Verdict {
            fillable: true,
            reason: Reason::Realizable,
            evidence: Some(Evidence::Realizable(w)),
        };
    }

    let pair = &rs[0] + &rs[1];
    let one = Rational::one();
    if pair == one {
        let s = gompf_s(&rs[0]).expect("r_1 in (0,1)");
        let r2_prime = -rs[1].recip().unwrap();
        return Verdict {
            fillable: true,
            reason: Reason::PairSumAutomatic,
            evidence: Some(Evidence::PairSum(PairSumEvidence { s, r2_prime })),
        };
    }
    if pair > one {
        let w = witness_farey(rs).expect("r_1 + r_2 > 1");
        return Verdict {
            fillable: true,
            reason: Reason::FareyWitness,
            evidence: Some(Evidence::Farey(w)),
        };
    }

    let report = is_special_type(y);
    assert!(
        report.is_special,
        "{y}: not realizable with r_1 + r_2 < 1 forces r_1 + ... + r_k > 1"
    );
    let embedding = options.embedding_search.as_ref().map(|limits| {
        let lattice = intersection_form(&build_plumbing(&y.reverse_orientation()));
        find_embedding(&lattice, limits).expect("plumbing of -Y has negative weights")
    });
    Verdict {
        fillable: false,
        reason: Reason::SpecialType,
        evidence: Some(Evidence::SpecialType(SpecialTypeEvidence { report, embedding })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gompf::MobiusMap;
    use num_bigint::BigInt;

    fn y(s: &str) -> SeifertInvariants {
        s.parse().unwrap()
    }

    #[test]
    fn special_type_is_not_fillable() {
        let v = classify(&y("-1;1/2,1/3,1/5"));
        assert!(!v.fillable);
        assert_eq!(v.reason, Reason::SpecialType);
    }

    #[test]
    fn realizable_carries_gompf_witness() {
        let v = classify(&y("-1;1/2,1/3,1/7"));
        assert!(v.fillable);
        assert_eq!(v.reason, Reason::Realizable);
        let r = v.gompf_report().unwrap();
        assert_eq!(r.map, MobiusMap::new(3, 1, 2, 1).unwrap());
        assert_eq!(r.n_a, BigInt::from(-5));
    }

    #[test]
    fn farey_branch() {
        let v = classify(&y("-1;3/4,2/3,1/2"));
        assert_eq!(v.reason, Reason::FareyWitness);
        assert_eq!(v.gompf_report().unwrap().n_a, BigInt::from(1));
    }

    #[test]
    fn other_branches() {
        assert_eq!(classify(&y("0;1/2,1/2,1/2")).reason, Reason::GompfUnconditional);
        assert_eq!(classify(&y("-1;1/2,1/2")).reason, Reason::GompfUnconditional);
        assert_eq!(classify(&y("-1;2/3,1/3,1/3")).reason, Reason::PairSumAutomatic);
    }
}
