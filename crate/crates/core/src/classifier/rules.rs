use serde::{Deserialize, Serialize};

use crate::characteristic::Characteristic;
use crate::classifier::report::{
    anchor, CanonicalVerdict, ClassificationReport, KltVerdict, LcVerdict, TraceEntry, VerdictField,
};
use crate::error::{Error, Result};
use crate::half::{ExtHalf, HalfInt};
use crate::permgroup::{GorensteinReport, PermutationGroup};
use crate::strata::{format_partition, global_sup, refined_stratum_bound, BoundRule};

use VerdictField::*;

/// `v = d/2`: the weight of a cover with discriminant exponent `d`.
pub fn v_of_discriminant(d: u32) -> ExtHalf {
    ExtHalf::halves(i64::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoTranspositionCertificate {
    /// `sup (dim - d/2) ≤ -1` over all nontrivial strata.
    pub ok: bool,
    pub worst_partition: Option<Vec<u32>>,
    pub worst_value: ExtHalf,
    pub worst_rule: Option<BoundRule>,
}

/// Checks the key inequality `dim Δ_{G,d} - d/2 ≤ -1` for every `d ≥ 1`,
/// assuming `G ⊆ S_n` has no transposition. It holds for every `(n, p)`,
/// so `ok == false` indicates a bug.
pub fn certify_canonical_no_transposition(
    n: u32,
    p: Characteristic,
) -> Result<NoTranspositionCertificate> {
    let g = global_sup(n, p, true)?;
    let worst_rule = match &g.worst {
        Some(nu) => Some(refined_stratum_bound(nu, p, true)?.rule),
        None => None,
    };
    Ok(NoTranspositionCertificate {
        ok: g.sup <= ExtHalf::int(-1),
        worst_partition: g.worst,
        worst_value: g.sup,
        worst_rule,
    })
}

fn key_anchor(rule: Option<BoundRule>) -> &'static str {
    match rule {
        Some(BoundRule::ForcedTransposition) => anchor::KEY_FORCED_TRANSPOSITION,
        Some(BoundRule::QuadraticDependence) => anchor::KEY_DEPENDENCE,
        Some(BoundRule::GaloisCubic) => anchor::KEY_GALOIS_CUBIC,
        Some(BoundRule::Generic) | None => anchor::KEY_INEQUALITY,
    }
}

fn describe(cert: &NoTranspositionCertificate) -> String {
    match &cert.worst_partition {
        Some(nu) => format!(
            "worst stratum bound {} at nu={} ({})",
            cert.worst_value,
            format_partition(nu),
            cert.worst_rule.map_or("none", BoundRule::id)
        ),
        None => "no nontrivial strata".to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairStatus {
    pub klt: KltVerdict,
    pub lc: LcVerdict,
    pub trace: Vec<TraceEntry>,
}

/// klt / lc verdicts for the pair `(X, B)`.
pub fn pair_status(n: u32, p: Characteristic, has_transposition: bool) -> Result<PairStatus> {
    let generic = global_sup(n, p, false)?;
    let mut trace = Vec::new();

    // There is no +∞ in the value domain; the check records that the
    // generic bound is the one from the dimension estimate.
    let lc = if generic.sup <= ExtHalf::ZERO {
        trace.push(TraceEntry::new(
            "lc-bounded-sup",
            anchor::LC_CRITERION,
            format!("sup(dim - v) <= {} < +inf over all strata", generic.sup),
            &[PairLc],
        ));
        trace.push(TraceEntry::new(
            "dimension-bound",
            anchor::DIMENSION_BOUND_ALWAYS,
            "dim - d/2 <= 0 for every connected piece",
            &[PairLc],
        ));
        LcVerdict::True
    } else {
        LcVerdict::Unknown
    };

    let klt = if generic.limit_minus_infinity {
        trace.push(TraceEntry::new(
            "klt-limit",
            anchor::KLT_CRITERION,
            format!("dim - v -> -inf along strata (p={p})"),
            &[PairKlt],
        ));
        KltVerdict::True
    } else if p.is_two() && has_transposition {
        trace.push(TraceEntry::new(
            "klt-fails-coefficient-one",
            anchor::BOUNDARY_COEFFICIENT,
            "B has coefficient 1 along its support, so discrep(B) = -1",
            &[PairKlt],
        ));
        KltVerdict::False
    } else if !has_transposition {
        let cert = certify_canonical_no_transposition(n, p)?;
        if cert.ok {
            trace.push(
                TraceEntry::new(
                    "klt-from-canonical",
                    anchor::CANONICAL_CRITERION,
                    format!(
                        "B = 0 and X is canonical, so discrepancies >= 0 > -1; {}",
                        describe(&cert)
                    ),
                    &[PairKlt],
                )
                .derived(),
            );
            KltVerdict::True
        } else {
            KltVerdict::Unknown
        }
    } else {
        KltVerdict::Unknown
    };

    Ok(PairStatus { klt, lc, trace })
}

/// The pair-level singularity class used in [`discrepancy_reduction`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairClass {
    Klt,
    Lc,
}

/// Lower bound on `discrep(E; X) = discrep(E; X, B) + mult_E(f*B)` for a
/// divisor `E` over `Supp(B)`.
///
/// `discrep(E; X, B)` lies in `(1/r)Z` for `r` the Cartier index of
/// `K_X + B`, so klt gives `≥ -1 + 1/r` and lc gives `≥ -1`;
/// `mult_E(f*B)` is at least the smallest boundary coefficient.
pub fn discrepancy_reduction(
    p: Characteristic,
    pair: PairClass,
    b_cartier_index: u32,
    min_boundary_coeff: Option<HalfInt>,
) -> Result<ExtHalf> {
    let coeff = min_boundary_coeff.ok_or(Error::EmptyBoundary)?;
    let step = match b_cartier_index {
        1 => HalfInt::ONE,
        2 => HalfInt::HALF,
        other => return Err(Error::CartierIndex(other)),
    };
    let _ = p;
    let discrete = match pair {
        PairClass::Klt => -HalfInt::ONE + step,
        PairClass::Lc => -HalfInt::ONE,
    };
    Ok(ExtHalf::Finite(discrete + coeff))
}

/// Classifies `A^n / G` in characteristic `p`.
pub fn classify(group: &PermutationGroup, p: Characteristic) -> Result<ClassificationReport> {
    let n = group.degree();
    let n32 = u32::try_from(n).map_err(|_| Error::ZeroDegree)?;
    let gorenstein = GorensteinReport::new(group, p);
    let has_transposition = gorenstein.branch_component_count > 0;
    let mut trace = gorenstein_trace(&gorenstein, p, group.is_even());

    let pair = pair_status(n32, p, has_transposition)?;
    trace.extend(pair.trace);

    let canonical = if has_transposition {
        certify_with_boundary(n32, p, &gorenstein, pair.klt, pair.lc, &mut trace)?
    } else {
        let cert = certify_canonical_no_transposition(n32, p)?;
        trace.push(TraceEntry::new(
            "key-inequality",
            key_anchor(cert.worst_rule),
            format!("no transpositions; {}; ok={}", describe(&cert), cert.ok),
            &[Canonical],
        ));
        trace.push(TraceEntry::new(
            "canonical-criterion",
            anchor::CANONICAL_CRITERION,
            format!(
                "dim C_j - v(C_j) <= -1 for all j, and dim X_sing <= n - 1 = {}",
                n - 1
            ),
            &[Canonical],
        ));
        verdict(cert.ok)
    };

    let sup = global_sup(n32, p, !has_transposition)?;
    let stringy_dim_bound = sup.sup + HalfInt::from_int(n as i64);
    trace.push(TraceEntry::new(
        "stringy-dimension",
        if has_transposition {
            anchor::DIMENSION_BOUND
        } else {
            anchor::KEY_INEQUALITY
        },
        format!(
            "n + sup(dim - v) = {n} + {} = {stringy_dim_bound} over nontrivial strata",
            sup.sup
        ),
        &[StringyDimBound],
    ));
    trace.push(TraceEntry::new(
        "dimension-formula",
        anchor::DIMENSION_FORMULA,
        "per-piece dimensions from the five-case formula for connected covers",
        &[StringyDimBound],
    ));

    Ok(ClassificationReport {
        n,
        p,
        group_order: group.order(),
        has_transposition,
        canonical,
        pair_klt: pair.klt,
        pair_lc: pair.lc,
        stringy_dim_bound,
        gorenstein,
        non_free_locus_dim_bound: group.max_nontrivial_fixed_dimension(),
        trace,
    })
}

fn verdict(ok: bool) -> CanonicalVerdict {
    if ok {
        CanonicalVerdict::Certified
    } else {
        CanonicalVerdict::NotCertified
    }
}

fn gorenstein_trace(g: &GorensteinReport, p: Characteristic, even: bool) -> Vec<TraceEntry> {
    let mut trace = Vec::new();
    let why = if p.is_two() {
        "p = 2: the invariant generator of omega_V(-R) descends"
    } else if even {
        "G is even: dx_1 ^ ... ^ dx_n is invariant"
    } else {
        "eta^2 is invariant"
    };
    let mut entry = TraceEntry::new(
        "gorenstein-index",
        anchor::GORENSTEIN_INDEX,
        format!("index of K_X divides {} ({why})", g.kx_index_divides),
        &[Gorenstein],
    );
    if !p.is_two() && even {
        entry = entry.derived();
    }
    trace.push(entry);
    match g.boundary_coefficient {
        Some(c) => {
            trace.push(TraceEntry::new(
                "boundary-coefficient",
                anchor::BOUNDARY_COEFFICIENT,
                format!(
                    "B has coefficient {c} on each of {} component(s)",
                    g.branch_component_count
                ),
                &[Gorenstein],
            ));
            trace.push(TraceEntry::new(
                "boundary-cartier",
                anchor::BOUNDARY_CARTIER,
                format!(
                    "index of B divides {}",
                    g.b_cartier_index_divides.unwrap_or(1)
                ),
                &[Gorenstein],
            ));
        }
        None => trace.push(TraceEntry::new(
            "boundary-empty",
            anchor::BOUNDARY_COEFFICIENT,
            "no transpositions, so B = 0",
            &[Gorenstein],
        )),
    }
    trace
}

/// Canonicity when `G` contains transpositions: divisors over `Supp(B)` via
/// discrepancy arithmetic, the rest via the transposition-free case in every
/// degree `m ≤ n`.
fn certify_with_boundary(
    n: u32,
    p: Characteristic,
    g: &GorensteinReport,
    klt: KltVerdict,
    lc: LcVerdict,
    trace: &mut Vec<TraceEntry>,
) -> Result<CanonicalVerdict> {
    let pair = match (klt, lc) {
        (KltVerdict::True, _) => Some(PairClass::Klt),
        (_, LcVerdict::True) => Some(PairClass::Lc),
        _ => None,
    };
    let on_boundary = match (pair, g.b_cartier_index_divides) {
        (Some(pair), Some(index)) => {
            let lower = discrepancy_reduction(p, pair, index, g.boundary_coefficient)?;
            let ok = lower >= ExtHalf::ZERO;
            trace.push(TraceEntry::new(
                "boundary-discrepancy",
                anchor::BOUNDARY_BRANCH,
                format!(
                    "discrep(E;X) >= discrep(E;X,B) + mult_E(f*B) >= {lower} ({} pair, B index {index}, coefficient {})",
                    match pair {
                        PairClass::Klt => "klt",
                        PairClass::Lc => "lc",
                    },
                    g.boundary_coefficient.unwrap_or_default(),
                ),
                &[Canonical],
            ));
            ok
        }
        _ => false,
    };

    let mut off_boundary = true;
    for m in 1..=n {
        let cert = certify_canonical_no_transposition(m, p)?;
        off_boundary &= cert.ok;
    }
    trace.push(
        TraceEntry::new(
            "off-boundary",
            anchor::OFF_BOUNDARY_BRANCH,
            format!(
                "key inequality holds without transpositions in every degree m <= {n}: {off_boundary}"
            ),
            &[Canonical],
        )
        .derived(),
    );
    Ok(verdict(on_boundary && off_boundary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{parse_generators, GroupPreset};

    fn p(v: u32) -> Characteristic {
        Characteristic::new(v).unwrap()
    }

    fn group(text: &str, n: usize) -> PermutationGroup {
        PermutationGroup::closure(parse_generators(text, n).unwrap(), n).unwrap()
    }

    #[test]
    fn v_examples() {
        assert_eq!(v_of_discriminant(0), ExtHalf::ZERO);
        assert_eq!(v_of_discriminant(3), ExtHalf::halves(3));
        assert_eq!(v_of_discriminant(4), ExtHalf::int(2));
    }

    #[test]
    fn no_transposition_examples() {
        let c = certify_canonical_no_transposition(4, p(2)).unwrap();
        assert!(c.ok);
        assert_eq!(c.worst_value, ExtHalf::int(-1));
        assert_eq!(c.worst_partition, Some(vec![2, 2]));

        let c = certify_canonical_no_transposition(3, p(3)).unwrap();
        assert!(c.ok);
        assert_eq!(c.worst_value, ExtHalf::int(-1));
        assert_eq!(c.worst_partition, Some(vec![3]));
        assert_eq!(c.worst_rule, Some(BoundRule::GaloisCubic));

        let c = certify_canonical_no_transposition(2, p(7)).unwrap();
        assert!(c.ok);
        assert_eq!(c.worst_value, ExtHalf::NegInfinity);
        assert_eq!(c.worst_rule, Some(BoundRule::ForcedTransposition));
    }

    #[test]
    fn pair_examples() {
        let s = pair_status(5, p(3), true).unwrap();
        assert_eq!((s.klt, s.lc), (KltVerdict::True, LcVerdict::True));
        let s = pair_status(2, p(2), true).unwrap();
        assert_eq!((s.klt, s.lc), (KltVerdict::False, LcVerdict::True));
        let s = pair_status(4, p(2), false).unwrap();
        assert_eq!((s.klt, s.lc), (KltVerdict::True, LcVerdict::True));
        assert!(s
            .trace
            .iter()
            .any(|e| e.derived && e.justifies.contains(&PairKlt)));
    }

    #[test]
    fn discrepancy_examples() {
        let half = Some(HalfInt::HALF);
        assert_eq!(
            discrepancy_reduction(p(5), PairClass::Klt, 2, half).unwrap(),
            ExtHalf::ZERO
        );
        assert_eq!(
            discrepancy_reduction(p(2), PairClass::Lc, 1, Some(HalfInt::ONE)).unwrap(),
            ExtHalf::ZERO
        );
        assert_eq!(
            discrepancy_reduction(p(3), PairClass::Klt, 2, half).unwrap(),
            ExtHalf::ZERO
        );
        assert_eq!(
            discrepancy_reduction(p(3), PairClass::Klt, 2, None),
            Err(Error::EmptyBoundary)
        );
        assert_eq!(
            discrepancy_reduction(p(3), PairClass::Klt, 3, half),
            Err(Error::CartierIndex(3))
        );
        // An lc pair with half coefficients is not enough.
        assert!(discrepancy_reduction(p(3), PairClass::Lc, 2, half).unwrap() < ExtHalf::ZERO);
    }

    #[test]
    fn classify_s2_char_two() {
        let r = classify(&group("(1 2)", 2), p(2)).unwrap();
        assert_eq!(r.canonical, CanonicalVerdict::Certified);
        assert_eq!(r.pair_klt, KltVerdict::False);
        assert_eq!(r.pair_lc, LcVerdict::True);
        assert_eq!(r.gorenstein.kx_index_divides, 1);
        assert_eq!(r.gorenstein.boundary_coefficient, Some(HalfInt::ONE));
        assert_eq!(r.gorenstein.branch_component_count, 1);
        assert_eq!(r.stringy_dim_bound, ExtHalf::int(2));
    }

    #[test]
    fn classify_a4_char_two() {
        let a4 = GroupPreset::Alternating.build(4).unwrap();
        let r = classify(&a4, p(2)).unwrap();
        assert!(!r.has_transposition);
        assert_eq!(r.canonical, CanonicalVerdict::Certified);
        assert_eq!(r.stringy_dim_bound, ExtHalf::int(3));
    }

    #[test]
    fn classify_trivial_group() {
        for q in [0, 2, 3, 5] {
            let r = classify(&PermutationGroup::trivial(1).unwrap(), p(q)).unwrap();
            assert_eq!(r.canonical, CanonicalVerdict::Certified);
            assert_eq!(r.stringy_dim_bound, ExtHalf::NegInfinity);
            assert_eq!(r.non_free_locus_dim_bound, None);
        }
    }

    #[test]
    fn classify_c3_char_three() {
        let r = classify(&group("(1 2 3)", 3), p(3)).unwrap();
        assert_eq!(r.canonical, CanonicalVerdict::Certified);
        assert_eq!(r.pair_klt, KltVerdict::True);
        assert_eq!(r.non_free_locus_dim_bound, Some(1));
    }

    #[test]
    fn every_field_is_justified() {
        for (text, n) in [("(1 2)", 2), ("(1 2 3)", 3), ("(1 2);(3 4)", 4), ("", 1)] {
            for q in [0, 2, 3] {
                let r = classify(&group(text, n), p(q)).unwrap();
                for f in [Canonical, PairKlt, PairLc, StringyDimBound, Gorenstein] {
                    assert!(r.justified(f), "{text} p={q}: {f:?}");
                }
            }
        }
    }
}
