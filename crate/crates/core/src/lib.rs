//! Cyclic codes over finite fields built from periodic sequences.
//!
//! The crate provides exact finite-field and polynomial arithmetic, sequence
//! construction and linear-complexity analysis, cyclic-code analysis
//! (weight distributions, minimum distance with provenance), difference-set
//! tools, and a registry of parameterized predictions about codes from trace
//! sequences of monomials and Dickson polynomials, together with an engine
//! that checks them.

pub mod claims;
pub mod code;
pub mod cyclotomic;
pub mod design;
mod enumerate;
pub mod error;
pub mod field;
pub mod poly;
pub mod sequence;

pub use claims::{
    distance_verdict, lookup, predict, registry, resolve, verify_claim, Claim, ClaimReport,
    DistanceClaim, ParamKind, Params, Prediction, Verdict, VerifyOptions,
};
pub use code::{
    macwilliams_transform, min_distance, sphere_packing_check, weight_distribution, CodeRecord,
    CyclicCode, DistanceMethod, DistanceResult, SpherePacking, WeightDistribution,
};
pub use cyclotomic::CosetTable;
pub use design::{classify_subset, count_vectors, kappa, DesignKind, DesignReport, SingerVariant};
pub use error::{Error, Result};
pub use field::{build_field, np_indicator, BaseField, FieldCtx, FieldElem, FieldTag};
pub use poly::{factor_xn_minus_1, minimal_polynomial_of_element, Poly};
pub use sequence::{berlekamp_massey, minimal_poly_via_gcd, LfsrProfile, PeriodicSequence};
