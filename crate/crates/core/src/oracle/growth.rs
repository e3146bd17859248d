use serde::{Deserialize, Serialize};

use crate::characteristic::Characteristic;
use crate::error::{Error, Result};
use crate::half::ExtHalf;
use crate::oracle::artin_schreier::count_exact_jump;
use crate::oracle::gf::prime_power;
use crate::strata::{dim_connected, dim_cyclic_cubic_galois};

/// `d = (p - 1)(j + 1)` for a `Z/pZ`-extension with ramification jump `j`.
pub fn discriminant_of_jump(p: u32, jump: u32) -> Result<u32> {
    if p < 2 {
        return Err(Error::InvalidCharacteristic(u64::from(p)));
    }
    if jump == 0 {
        return Err(Error::OracleParameter("jump must be positive".into()));
    }
    if jump.is_multiple_of(p) {
        return Err(Error::JumpDivisibleByP { p, jump });
    }
    Ok((p - 1) * (jump + 1))
}

/// Reads a dimension off a point count: `(q - 1)·q^{k}` gives `k + 1`, and
/// 0 gives `-∞`. Any other count has no such reading.
pub fn infer_dimension(q: u32, count: u64) -> Option<ExtHalf> {
    if count == 0 {
        return Some(ExtHalf::NegInfinity);
    }
    let q = u64::from(q);
    if !count.is_multiple_of(q - 1) {
        return None;
    }
    let mut rest = count / (q - 1);
    let mut k = 0;
    while rest.is_multiple_of(q) && rest > 1 {
        rest /= q;
        k += 1;
    }
    (rest == 1).then_some(ExtHalf::int(k + 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthSample {
    pub q: u32,
    pub count: u64,
    /// `None` when the count is not of the form `(q - 1)·q^{k}`.
    pub measured_dimension: Option<ExtHalf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub p: u32,
    pub n: u32,
    pub d: u32,
    pub predicted: ExtHalf,
    pub samples: Vec<GrowthSample>,
    /// Every count equals `(q - 1)·q^{predicted - 1}` (0 when `-∞`).
    pub ok: bool,
}

/// Compares point counts of the `Z/pZ` loci with the predicted dimension:
/// `(p, n) = (2, 2)` uses `dim_connected(2, d, 2)` with jump `d - 1`, and
/// `(3, 3)` uses the Galois cubic locus with jump `d/2 - 1`.
pub fn verify_dimension_growth(p: u32, n: u32, d: u32, qs: &[u32]) -> Result<GrowthReport> {
    let (predicted, jump) = match (p, n) {
        (2, 2) => (dim_connected(2, d, Characteristic::TWO)?, d.checked_sub(1)),
        (3, 3) => (
            dim_cyclic_cubic_galois(d)?,
            d.is_multiple_of(2)
                .then(|| (d / 2).checked_sub(1))
                .flatten(),
        ),
        _ => return Err(Error::UnsupportedGrowth { p, n }),
    };
    if qs.is_empty() {
        return Err(Error::OracleParameter("no field sizes given".into()));
    }
    let mut samples = Vec::with_capacity(qs.len());
    for &q in qs {
        if prime_power(q).map(|(r, _)| r) != Some(p) {
            return Err(Error::OracleParameter(format!("{q} is not a power of {p}")));
        }
        let count = match jump {
            Some(j) if j > 0 => count_exact_jump(q, j)?.0,
            _ => 0,
        };
        samples.push(GrowthSample {
            q,
            count,
            measured_dimension: infer_dimension(q, count),
        });
    }
    let ok = samples.iter().all(|s| match predicted {
        ExtHalf::NegInfinity => s.count == 0,
        ExtHalf::Finite(dim) => {
            let k = dim.twice() / 2 - 1;
            dim.is_integer()
                && k >= 0
                && s.count == u64::from(s.q - 1) * u64::from(s.q).pow(k as u32)
        }
    });
    Ok(GrowthReport {
        p,
        n,
        d,
        predicted,
        samples,
        ok,
    })
}
