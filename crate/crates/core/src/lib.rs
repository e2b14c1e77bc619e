//! Exact fillability classification of Seifert fibered 3-manifolds.
//!
//! `Y(e0; r1, ..., rk)` admits a Stein (equivalently symplectic) filling
//! unless it is of special type. Every verdict carries a certificate that can
//! be re-checked independently: a realizability witness, a Möbius map
//! satisfying Gompf's conditions, a Farey configuration, or the special-type
//! report together with a lattice embedding search.

pub mod cf;
pub mod classify;
pub mod embedding;
pub mod error;
pub mod farey;
pub mod gompf;
#[cfg(any(test, feature = "test-oracles"))]
pub mod oracle;
pub mod plumbing;
pub mod rational;
pub mod seifert;

pub use cf::{complementary_truncation, neg_cf_eval, neg_cf_expand, riemenschneider_dual, NegCf};
pub use classify::{classify, classify_with, ClassifyOptions, Evidence, Reason, Verdict};
pub use embedding::{find_embedding, verify_embedding, Embedding, SearchCertificate, SearchLimits};
pub use error::{Error, Result};
pub use farey::{find_config1, find_config3, FareyArc, FareyConfiguration, FareyPoint};
pub use gompf::{moebius_apply, moebius_from_triple, GompfReport, MobiusMap};
pub use plumbing::{build_plumbing, determinant, intersection_form, is_negative_definite, IntersectionLattice, StarGraph};
pub use rational::{ExtendedRational, Rational};
pub use seifert::{is_special_type, parse_manifold, RealizabilityCertificate, RealizabilityWitness, SeifertInvariants};
