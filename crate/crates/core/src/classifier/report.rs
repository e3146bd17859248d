use serde::{Deserialize, Serialize};

use crate::characteristic::Characteristic;
use crate::half::ExtHalf;
use crate::permgroup::GorensteinReport;

/// One-sided: the engine certifies canonicity or says nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CanonicalVerdict {
    Certified,
    NotCertified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum KltVerdict {
    True,
    False,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LcVerdict {
    True,
    Unknown,
}

/// Report fields a trace entry can justify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictField {
    Canonical,
    PairKlt,
    PairLc,
    StringyDimBound,
    Gorenstein,
}

/// Stable anchor identifiers for the facts a trace entry relies on.
pub mod anchor {
    pub const GORENSTEIN_INDEX: &str = "1-2-Gor";
    pub const BOUNDARY_COEFFICIENT: &str = "coef-boundary";
    pub const BOUNDARY_CARTIER: &str = "Cartier";
    pub const DIMENSION_FORMULA: &str = "dimensions-loci";
    pub const DIMENSION_BOUND: &str = "loci-dim-bound";
    pub const DIMENSION_BOUND_ALWAYS: &str = "loci-dim-bound(4) / dim - v <= 0";
    pub const KEY_INEQUALITY: &str = "key-prop";
    pub const KEY_FORCED_TRANSPOSITION: &str = "key-prop / p!=2 forced transposition";
    pub const KEY_DEPENDENCE: &str = "key-prop / p=2 dependence bound";
    pub const KEY_GALOIS_CUBIC: &str = "key-prop / p=3 Galois cubic via dim-cyc-cubic";
    pub const CANONICAL_CRITERION: &str = "canonical-criterion";
    pub const KLT_CRITERION: &str = "klt-lc(1) / limit -inf";
    pub const LC_CRITERION: &str = "klt-lc(2) / bounded sup";
    pub const BOUNDARY_BRANCH: &str = "main-non-log / discrepancy on Supp(B)";
    pub const OFF_BOUNDARY_BRANCH: &str = "main-non-log / off Supp(B), no transpositions";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceEntry {
    /// Short machine-readable rule id.
    pub rule: String,
    pub anchor: String,
    pub statement: String,
    /// Set when the conclusion is derived by combining results rather than
    /// stated outright by the cited fact.
    pub derived: bool,
    pub justifies: Vec<VerdictField>,
}

impl TraceEntry {
    pub(crate) fn new(
        rule: &str,
        anchor: &str,
        statement: impl Into<String>,
        justifies: &[VerdictField],
    ) -> Self {
        TraceEntry {
            rule: rule.to_string(),
            anchor: anchor.to_string(),
            statement: statement.into(),
            derived: false,
            justifies: justifies.to_vec(),
        }
    }

    pub(crate) fn derived(mut self) -> Self {
        self.derived = true;
        self
    }
}

/// Certificate for `A^n / G` in characteristic `p`.
///
/// Invariants:
/// - `canonical == Certified` implies `pair_lc == True`, and `pair_klt ==
///   True` when the boundary is empty;
/// - `pair_klt == False` only for `p = 2` with a transposition in `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationReport {
    pub n: usize,
    pub p: Characteristic,
    pub group_order: usize,
    pub has_transposition: bool,
    pub canonical: CanonicalVerdict,
    pub pair_klt: KltVerdict,
    pub pair_lc: LcVerdict,
    /// Bound on `n + sup_j (dim C_j - v(C_j))` over nontrivial strata.
    pub stringy_dim_bound: ExtHalf,
    pub gorenstein: GorensteinReport,
    /// Informational: largest fixed-space dimension of a non-identity
    /// element, bounding the locus with non-trivial stabilizers.
    pub non_free_locus_dim_bound: Option<usize>,
    pub trace: Vec<TraceEntry>,
}

impl ClassificationReport {
    pub fn justified(&self, field: VerdictField) -> bool {
        self.trace
            .iter()
            .any(|e| !e.anchor.is_empty() && e.justifies.contains(&field))
    }
}
