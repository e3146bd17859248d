//! Closed-form suprema of `dim - d/2` over strata.
//!
//! Everything here quantifies over all discriminant exponents at once, so
//! nothing is computed by scanning `d`.

use serde::{Deserialize, Serialize};

use crate::characteristic::Characteristic;
use crate::error::{Error, Result};
use crate::half::{ExtHalf, HalfInt};
use crate::strata::dimension::sup_cyclic_cubic_galois;
use crate::strata::partition::nontrivial_partitions;

/// Where a supremum over `δ` is attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Attainment {
    Empty,
    At(u32),
    /// Every `δ = start + k·step`, `k ≥ 0`.
    Progression {
        start: u32,
        step: u32,
    },
}

/// `sup_δ (dim_connected(part, δ, p) - δ/2)` for a single connected piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSup {
    pub value: ExtHalf,
    pub attained_at: Attainment,
    /// Whether the values tend to `-∞` as `δ` grows.
    pub eventually_decreasing: bool,
}

/// Closed form:
///
/// - `part = 1`: `0` at `δ = 0`;
/// - `p ∤ part`: `-(part - 1)/2` at `δ = part - 1`, the only non-empty `δ`;
/// - `p | part`, `p ≥ 3`: `1 - part/2` at `δ = part`, strictly smaller for
///   every larger `δ` once a period has passed;
/// - `p = 2 | part`: `1 - part/2` at every even `δ ≥ part` (constant).
pub fn sup_component(part: u32, p: Characteristic) -> Result<ComponentSup> {
    if part == 0 {
        return Err(Error::ZeroDegree);
    }
    let part_i = i64::from(part);
    if part == 1 {
        return Ok(ComponentSup {
            value: ExtHalf::ZERO,
            attained_at: Attainment::At(0),
            eventually_decreasing: true,
        });
    }
    if !p.divides(part_i) {
        return Ok(ComponentSup {
            value: ExtHalf::halves(-(part_i - 1)),
            attained_at: Attainment::At(part - 1),
            eventually_decreasing: true,
        });
    }
    let value = ExtHalf::Finite(HalfInt::ONE - HalfInt::from_halves(part_i));
    if p.is_two() {
        Ok(ComponentSup {
            value,
            attained_at: Attainment::Progression {
                start: part,
                step: 2,
            },
            eventually_decreasing: false,
        })
    } else {
        Ok(ComponentSup {
            value,
            attained_at: Attainment::At(part),
            eventually_decreasing: true,
        })
    }
}

/// Which bound [`refined_stratum_bound`] used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundRule {
    /// Sum of per-part suprema.
    Generic,
    /// `p ≠ 2`, largest part 2 occurring once: the cover's monodromy is
    /// generated by a transposition, so a transposition-free group has no
    /// point in the stratum.
    ForcedTransposition,
    /// `p = 2`, largest part 2: the quadratic pieces have linearly
    /// dependent Artin–Schreier classes, which costs at least one piece's
    /// dimension.
    QuadraticDependence,
    /// `p = 3`, `ν = (3, 1, …, 1)`: only Galois cubics avoid a
    /// transposition.
    GaloisCubic,
}

impl BoundRule {
    pub fn id(self) -> &'static str {
        match self {
            BoundRule::Generic => "generic",
            BoundRule::ForcedTransposition => "forced-transposition",
            BoundRule::QuadraticDependence => "quadratic-dependence",
            BoundRule::GaloisCubic => "galois-cubic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinedBound {
    /// Upper bound on `sup_δ (dim Δ^{(G)}_{ν,δ} - d/2)`.
    pub value: ExtHalf,
    pub rule: BoundRule,
    pub eventually_decreasing: bool,
}

/// Upper bound on `sup_δ (dim Δ^{(G)}_{ν,δ} - d/2)` for partition `nu`,
/// with the sharper case analysis when `G` has no transposition.
pub fn refined_stratum_bound(
    nu: &[u32],
    p: Characteristic,
    transposition_free: bool,
) -> Result<RefinedBound> {
    if nu.contains(&0) {
        return Err(Error::InvalidShape("parts must be positive"));
    }
    let largest = nu.iter().copied().max().unwrap_or(0);
    if largest <= 1 {
        return Err(Error::TrivialPartition);
    }
    let twos = nu.iter().filter(|&&x| x == 2).count();
    let non_units = nu.iter().filter(|&&x| x > 1).count();

    if transposition_free {
        if largest == 2 && !p.is_two() && twos == 1 {
            return Ok(RefinedBound {
                value: ExtHalf::NegInfinity,
                rule: BoundRule::ForcedTransposition,
                eventually_decreasing: true,
            });
        }
        if largest == 2 && p.is_two() {
            // Per δ the bound is -min_i δ_i/2 over the quadratic pieces, and
            // each δ_i is even and ≥ 2; fixing one δ_i = 2 keeps it at -1.
            return Ok(RefinedBound {
                value: ExtHalf::int(-1),
                rule: BoundRule::QuadraticDependence,
                eventually_decreasing: false,
            });
        }
        if largest == 3 && p.get() == 3 && non_units == 1 {
            return Ok(RefinedBound {
                value: sup_cyclic_cubic_galois(),
                rule: BoundRule::GaloisCubic,
                eventually_decreasing: true,
            });
        }
    }

    let mut value = ExtHalf::ZERO;
    let mut eventually_decreasing = true;
    for &part in nu {
        let c = sup_component(part, p)?;
        value = value + c.value;
        eventually_decreasing &= c.eventually_decreasing;
    }
    Ok(RefinedBound {
        value,
        rule: BoundRule::Generic,
        eventually_decreasing,
    })
}

/// Value of [`refined_stratum_bound`].
pub fn refined_stratum_sup(
    nu: &[u32],
    p: Characteristic,
    transposition_free: bool,
) -> Result<ExtHalf> {
    refined_stratum_bound(nu, p, transposition_free).map(|b| b.value)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalSup {
    pub sup: ExtHalf,
    /// Whether `dim - d/2 → -∞` along every sequence of distinct strata.
    pub limit_minus_infinity: bool,
    /// A maximizing partition; `None` for `n = 1`. Ties go to the partition
    /// with the most parts larger than 1, then to the first in reverse
    /// lexicographic order.
    pub worst: Option<Vec<u32>>,
}

/// Maximum of [`refined_stratum_bound`] over all nontrivial partitions of
/// `n`.
pub fn global_sup(n: u32, p: Characteristic, transposition_free: bool) -> Result<GlobalSup> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut sup = ExtHalf::NegInfinity;
    let mut worst: Option<(Vec<u32>, usize)> = None;
    let mut limit_minus_infinity = true;
    for nu in nontrivial_partitions(n) {
        let bound = refined_stratum_bound(&nu, p, transposition_free)?;
        if bound.value.is_finite() {
            limit_minus_infinity &= bound.eventually_decreasing;
        }
        let weight = nu.iter().filter(|&&x| x > 1).count();
        let better = match &worst {
            None => true,
            Some((_, w)) => bound.value > sup || (bound.value == sup && weight > *w),
        };
        if better {
            sup = bound.value;
            worst = Some((nu, weight));
        }
    }
    Ok(GlobalSup {
        sup,
        limit_minus_infinity,
        worst: worst.map(|(nu, _)| nu),
    })
}
