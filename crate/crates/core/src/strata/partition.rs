use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Partitions of `n` into positive parts, each weakly decreasing, listed in
/// reverse lexicographic order: `(n)` first, `(1, …, 1)` last.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` other than `(1, …, 1)`.
pub fn nontrivial_partitions(n: u32) -> Vec<Vec<u32>> {
    partitions(n)
        .into_iter()
        .filter(|nu| nu.iter().any(|&x| x > 1))
        .collect()
}

/// A stratum of degree-`n` covers: connected pieces of degrees `nu[i]` with
/// discriminant exponents `delta[i]`.
///
/// Stored canonically: pairs `(nu[i], delta[i])` in weakly decreasing
/// lexicographic order, so equal parts carry weakly decreasing exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StratumShape {
    nu: Vec<u32>,
    delta: Vec<u32>,
}

impl StratumShape {
    /// Validates and canonicalizes. Requires equal lengths, positive parts,
    /// and `delta[i] > 0 ⟺ nu[i] > 1`.
    pub fn new(nu: Vec<u32>, delta: Vec<u32>) -> Result<Self> {
        if nu.len() != delta.len() {
            return Err(Error::InvalidShape("nu and delta differ in length"));
        }
        if nu.is_empty() {
            return Err(Error::InvalidShape("empty partition"));
        }
        if nu.contains(&0) {
            return Err(Error::InvalidShape("parts must be positive"));
        }
        if nu.iter().zip(&delta).any(|(&a, &b)| (b > 0) != (a > 1)) {
            return Err(Error::InvalidShape(
                "delta_i > 0 must hold exactly when nu_i > 1",
            ));
        }
        let mut pairs: Vec<(u32, u32)> = nu.into_iter().zip(delta).collect();
        pairs.sort_unstable_by(|a, b| b.cmp(a));
        let (nu, delta) = pairs.into_iter().unzip();
        Ok(StratumShape { nu, delta })
    }

    pub fn nu(&self) -> &[u32] {
        &self.nu
    }

    pub fn delta(&self) -> &[u32] {
        &self.delta
    }

    pub fn degree(&self) -> u32 {
        self.nu.iter().sum()
    }

    pub fn discriminant(&self) -> u32 {
        self.delta.iter().sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.nu.iter().all(|&x| x == 1)
    }
}

pub(crate) fn fmt_tuple(xs: &[u32]) -> String {
    let body: Vec<String> = xs.iter().map(u32::to_string).collect();
    format!("({})", body.join(","))
}

impl fmt::Display for StratumShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", fmt_tuple(&self.nu), fmt_tuple(&self.delta))
    }
}

/// All strata `(ν, δ)` of degree-`n` covers with total discriminant
/// exponent `d`, in canonical form, ordered by `ν` (reverse lexicographic)
/// and then by `δ` (reverse lexicographic).
pub fn enumerate_strata(n: u32, d: u32) -> Result<Vec<StratumShape>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    fn fill(
        nu: &[u32],
        i: usize,
        remaining: u32,
        delta: &mut Vec<u32>,
        out: &mut Vec<StratumShape>,
    ) {
        if i == nu.len() {
            if remaining == 0 {
                out.push(StratumShape {
                    nu: nu.to_vec(),
                    delta: delta.clone(),
                });
            }
            return;
        }
        if nu[i] == 1 {
            delta.push(0);
            fill(nu, i + 1, remaining, delta, out);
            delta.pop();
            return;
        }
        // Each later part > 1 needs at least 1.
        let later = nu[i + 1..].iter().filter(|&&x| x > 1).count() as u32;
        let mut hi = remaining.saturating_sub(later);
        if i > 0 && nu[i - 1] == nu[i] {
            hi = hi.min(delta[i - 1]);
        }
        for di in (1..=hi).rev() {
            delta.push(di);
            fill(nu, i + 1, remaining - di, delta, out);
            delta.pop();
        }
    }
    let mut out = Vec::new();
    for nu in partitions(n) {
        fill(&nu, 0, d, &mut Vec::with_capacity(nu.len()), &mut out);
    }
    Ok(out)
}
