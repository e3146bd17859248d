//! Brute-force checks of the dimension formulas by counting covers of the
//! punctured formal disk over small finite fields.

mod artin_schreier;
mod gf;
mod growth;
mod tame;

pub use artin_schreier::{
    artin_schreier_image, as_class_count, count_exact_jump, reduce_principal_part, ASQuotient,
    CountMethod, PrincipalPart, BRUTE_FORCE_LIMIT,
};
pub use gf::{prime_power, FiniteField, MAX_FIELD_SIZE};
pub use growth::{
    discriminant_of_jump, infer_dimension, verify_dimension_growth, GrowthReport, GrowthSample,
};
pub use tame::tame_totally_ramified_count;
