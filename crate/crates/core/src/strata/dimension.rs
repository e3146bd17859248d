use crate::characteristic::Characteristic;
use crate::error::{Error, Result};
use crate::half::ExtHalf;

/// Dimension of the locus of geometrically connected degree-`n` covers of
/// the punctured formal disk with discriminant exponent `d`, in
/// characteristic `p`. Empty loci have dimension `-∞`.
///
/// With `e = d - n + 1`:
///
/// | condition                   | dimension      |
/// |-----------------------------|----------------|
/// | `p ∤ n`, `e = 0`            | `0`            |
/// | `p ∤ n`, `e ≠ 0`            | `-∞`           |
/// | `p | n`, `p ∤ e`, `e ≥ 0`   | `⌈e / p⌉`      |
/// | `p | n`, `p ∤ e`, `e < 0`   | `-∞`           |
/// | `p | n`, `p | e`            | `-∞`           |
///
/// Characteristic 0 divides nothing.
pub fn dim_connected(n: u32, d: u32, p: Characteristic) -> Result<ExtHalf> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let n = i64::from(n);
    let e = i64::from(d) - n + 1;
    if !p.divides(n) {
        return Ok(if e == 0 {
            ExtHalf::ZERO
        } else {
            ExtHalf::NegInfinity
        });
    }
    if p.divides(e) || e < 0 {
        return Ok(ExtHalf::NegInfinity);
    }
    let p = i64::from(p.get());
    Ok(ExtHalf::int((e + p - 1) / p))
}

/// Dimension of the locus of cyclic cubic (Galois) extensions with
/// discriminant exponent `d` in characteristic 3.
///
/// Such an extension with ramification jump `j` (`j > 0`, `3 ∤ j`) has
/// `d = 2(j + 1)`, and its locus is `G_m × A^{j - ⌊j/3⌋ - 1}`.
pub fn dim_cyclic_cubic_galois(d: u32) -> Result<ExtHalf> {
    if d == 0 {
        return Err(Error::NonPositiveDiscriminant);
    }
    if !d.is_multiple_of(2) {
        return Ok(ExtHalf::NegInfinity);
    }
    let j = i64::from(d / 2) - 1;
    if j <= 0 || j % 3 == 0 {
        return Ok(ExtHalf::NegInfinity);
    }
    Ok(ExtHalf::int(j - j / 3))
}

/// `sup_d (dim_cyclic_cubic_galois(d) - d/2)`.
///
/// The difference is `-⌊j/3⌋ - 1`, so the supremum `-1` is attained at
/// `j ∈ {1, 2}` (`d ∈ {4, 6}`) and the values tend to `-∞`.
pub fn sup_cyclic_cubic_galois() -> ExtHalf {
    ExtHalf::int(-1)
}
