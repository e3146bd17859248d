//! Canonical / klt / lc certificates for permutation quotients.
//!
//! Verdicts are one-sided: stratum dimensions for proper subgroups are only
//! bounded from above, so the engine certifies membership in a class or
//! reports that it could not. The single negative verdict, `pair_klt =
//! FALSE`, comes from a boundary coefficient equal to 1, not from a bound.

mod report;
mod rules;

pub use report::{
    anchor, CanonicalVerdict, ClassificationReport, KltVerdict, LcVerdict, TraceEntry, VerdictField,
};
pub use rules::{
    certify_canonical_no_transposition, classify, discrepancy_reduction, pair_status,
    v_of_discriminant, NoTranspositionCertificate, PairClass, PairStatus,
};
