//! Strata of degree-`n` covers of the punctured formal disk and the
//! dimension bounds that drive the classifier.

mod dimension;
mod partition;
mod sup;

pub use dimension::{dim_connected, dim_cyclic_cubic_galois, sup_cyclic_cubic_galois};
pub use partition::{enumerate_strata, nontrivial_partitions, partitions, StratumShape};
pub use sup::{
    global_sup, refined_stratum_bound, refined_stratum_sup, sup_component, Attainment, BoundRule,
    ComponentSup, GlobalSup, RefinedBound,
};

pub(crate) use partition::fmt_tuple;

use crate::characteristic::Characteristic;
use crate::error::Result;
use crate::half::ExtHalf;

/// `Σ_i dim_connected(ν_i, δ_i, p)`, an upper bound on the dimension of the
/// stratum regardless of the group.
pub fn stratum_dim_sum(shape: &StratumShape, p: Characteristic) -> Result<ExtHalf> {
    shape
        .nu()
        .iter()
        .zip(shape.delta())
        .map(|(&part, &delta)| dim_connected(part, delta, p))
        .sum()
}

/// Formats a partition as `(a,b,c)`.
pub fn format_partition(nu: &[u32]) -> String {
    fmt_tuple(nu)
}
