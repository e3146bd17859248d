//! Certified classification of quotient singularities `A^n / G` for
//! permutation groups `G ⊆ S_n`.
//!
//! The crate is split along the lines of the argument it certifies:
//!
//! - [`permgroup`]: permutations, brute-force group closure, transpositions,
//!   and the Gorenstein / boundary data of the quotient map.
//! - [`strata`]: the dimension formula for loci of connected degree-`n`
//!   covers of the punctured formal disk, stratification by partitions, and
//!   closed-form suprema of `dim - d/2`.
//! - [`classifier`]: combines the above into canonical / klt / lc verdicts,
//!   each carried by a trace of rule applications.
//! - [`oracle`]: brute-force counts of Artin–Schreier classes and tame
//!   Kummer extensions over small finite fields, used to validate the
//!   dimension formulas independently.
//!
//! All arithmetic is exact; values that can be `-∞` use [`ExtHalf`].

pub mod characteristic;
pub mod classifier;
pub mod error;
pub mod half;
pub mod oracle;
pub mod permgroup;
pub mod strata;

pub use characteristic::Characteristic;
pub use error::{Error, Result};
pub use half::{ExtHalf, HalfInt};
