use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::oracle::gf::FiniteField;

/// Number of totally ramified degree-`n` extensions of `F_q((t))` inside a
/// fixed separable closure, for `p ∤ n`.
///
/// Each is `F_q((t))(ξ)` with `ξ^n = u·t` for a class `u` in
/// `F_q^* / (F_q^*)^n`. The conjugates `ζ·ξ`, `ζ ∈ μ_n`, generate `n /
/// |μ_n(F_q)|` distinct fields, and distinct classes give distinct fields.
pub fn tame_totally_ramified_count(q: u32, n: u32) -> Result<u64> {
    let field = FiniteField::new(q)?;
    let p = field.characteristic();
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if n.is_multiple_of(p) {
        return Err(Error::OracleParameter(format!(
            "degree {n} is divisible by the characteristic {p}"
        )));
    }
    let n64 = u64::from(n);
    let nth_powers: BTreeSet<u32> = (1..q).map(|a| field.pow(a, n64)).collect();
    let roots_of_unity = (1..q).filter(|&a| field.pow(a, n64) == 1).count() as u64;

    // Partition F_q^* into cosets of the n-th powers.
    let mut unclassified: BTreeSet<u32> = (1..q).collect();
    let mut total = 0;
    while let Some(&u) = unclassified.iter().next() {
        for &h in &nth_powers {
            unclassified.remove(&field.mul(u, h));
        }
        total += n64 / roots_of_unity;
    }
    Ok(total)
}
