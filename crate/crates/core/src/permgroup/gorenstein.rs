use serde::{Deserialize, Serialize};

use crate::characteristic::Characteristic;
use crate::half::HalfInt;
use crate::permgroup::PermutationGroup;

/// Gorenstein and boundary data of `X = A^n / G` and the pair `(X, B)`,
/// where `π*(K_X + B) = K_V`.
///
/// Indices are reported as divisibility bounds: the exact index is not
/// determined in general.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GorensteinReport {
    /// `r` with `r K_X` Cartier.
    pub kx_index_divides: u32,
    /// Coefficient of `B` along each branch component; `None` when `B = 0`.
    pub boundary_coefficient: Option<HalfInt>,
    /// `r` with `r B` Cartier; `None` when `B = 0`.
    pub b_cartier_index_divides: Option<u32>,
    pub branch_component_count: usize,
}

impl GorensteinReport {
    pub fn new(group: &PermutationGroup, p: Characteristic) -> Self {
        let branch_component_count = group.branch_components();
        // 2K_X is always Cartier. In characteristic 2 the form
        // ∏(x_i - x_j) dx_1∧…∧dx_n is invariant, and so is dx_1∧…∧dx_n when
        // every element is even.
        let kx_index_divides = if p.is_two() || group.is_even() { 1 } else { 2 };
        let boundary_coefficient = (branch_component_count > 0).then(|| {
            if p.is_two() {
                HalfInt::ONE
            } else {
                HalfInt::HALF
            }
        });
        let b_cartier_index_divides =
            boundary_coefficient.map(|c| if c.is_integer() { 1 } else { 2 });
        GorensteinReport {
            kx_index_divides,
            boundary_coefficient,
            b_cartier_index_divides,
            branch_component_count,
        }
    }
}

/// Convenience wrapper over [`GorensteinReport::new`].
pub fn gorenstein_report(group: &PermutationGroup, p: Characteristic) -> GorensteinReport {
    GorensteinReport::new(group, p)
}
