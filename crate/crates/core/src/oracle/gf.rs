//! Small finite fields `F_q`, `q = p^e ≤ 81`, by lookup table.
//!
//! An element is encoded as the integer whose base-`p` digits are its
//! coordinates in the basis `1, x, …, x^{e-1}`, so addition is digit-wise
//! and the encoding doubles as an `F_p`-coordinate vector.

use crate::characteristic::is_prime;
use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u32 = 81;

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    mul: Vec<u32>,
}

/// Splits `q` as `p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1 && is_prime(u64::from(p))).then_some((p, e))
}

fn digits(mut a: u32, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Product of `a` and `b` as polynomials reduced modulo the monic
/// polynomial `x^e + modulus(x)`; `modulus` holds the low coefficients.
fn poly_mul(a: u32, b: u32, modulus: &[u32], p: u32, e: u32) -> u32 {
    let (a, b) = (digits(a, p, e), digits(b, p, e));
    let e = e as usize;
    let mut prod = vec![0u32; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (e..2 * e).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        // x^k = -modulus(x) · x^{k-e}
        for (i, &m) in modulus.iter().enumerate() {
            prod[k - e + i] = (prod[k - e + i] + (p - c) * m) % p;
        }
    }
    undigits(&prod[..e], p)
}

impl FiniteField {
    /// Builds `F_q`; the defining polynomial is the first monic degree-`e`
    /// polynomial (by encoding) whose quotient ring has no zero divisors.
    pub fn new(q: u32) -> Result<Self> {
        if q > MAX_FIELD_SIZE {
            return Err(Error::OracleParameter(format!(
                "field size {q} exceeds {MAX_FIELD_SIZE}"
            )));
        }
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::OracleParameter(format!("{q} is not a prime power")))?;
        for candidate in 0..q {
            let modulus = digits(candidate, p, e);
            let mul: Vec<u32> = (0..q * q)
                .map(|ab| poly_mul(ab / q, ab % q, &modulus, p, e))
                .collect();
            let domain = (1..q).all(|a| (1..q).all(|b| mul[(a * q + b) as usize] != 0));
            if domain {
                return Ok(FiniteField { p, e, q, mul });
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// `e` with `q = p^e`.
    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (p, e) = (self.p, self.e);
        let sum: Vec<u32> = digits(a, p, e)
            .iter()
            .zip(digits(b, p, e))
            .map(|(x, y)| (x + y) % p)
            .collect();
        undigits(&sum, p)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let p = self.p;
        let ds: Vec<u32> = digits(a, p, self.e).iter().map(|&x| (p - x) % p).collect();
        undigits(&ds, p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        let mut acc = 1;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `a^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, u64::from(self.p))
    }

    /// The unique `b` with `b^p = a`, namely `a^{q/p}`.
    pub fn frobenius_root(&self, a: u32) -> u32 {
        self.pow(a, u64::from(self.q / self.p))
    }

    /// Elements of the `F_p`-basis `1, x, …, x^{e-1}`.
    pub fn prime_basis(&self) -> Vec<u32> {
        (0..self.e).map(|k| self.p.pow(k)).collect()
    }
}
