//! Permutations of `{1..n}`, the subgroups they generate, and the
//! branch/Gorenstein data of the induced action on `A^n`.

mod gorenstein;
mod group;
mod parse;
mod permutation;
mod presets;

pub use gorenstein::{gorenstein_report, GorensteinReport};
pub use group::{PermutationGroup, MAX_GROUP_ORDER};
pub use parse::{parse_generators, parse_permutation};
pub use permutation::Permutation;
pub use presets::GroupPreset;

use crate::error::Result;

/// Closes `generators` to the subgroup of `S_n` they generate.
pub fn group_closure(generators: Vec<Permutation>, n: usize) -> Result<PermutationGroup> {
    PermutationGroup::closure(generators, n)
}
