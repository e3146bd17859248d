//! Principal parts in `F_q((t))` modulo the Artin–Schreier operator
//! `℘(f) = f^p - f`.
//!
//! A principal part of pole order `≤ m` is a vector over `F_p` of length
//! `m·e` (`q = p^e`): coordinate `(i-1)·e + k` is the `k`-th base-`p` digit
//! of the coefficient of `t^{-i}`. With this layout the integer whose
//! base-`q` digits are the coefficients has exactly these base-`p` digits.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::gf::FiniteField;

/// Largest `q^m` for which classes are counted by enumerating every
/// principal part; beyond it the count comes from ranks.
pub const BRUTE_FORCE_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalPart {
    pub p: u32,
    pub q: u32,
    /// Pole order `i ≥ 1` to nonzero coefficient.
    pub coeffs: BTreeMap<u32, u32>,
}

impl PrincipalPart {
    pub fn new(field: &FiniteField, coeffs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, c) in coeffs {
            if i == 0 {
                return Err(Error::OracleParameter("pole orders start at 1".into()));
            }
            if c >= field.size() {
                return Err(Error::OracleParameter(format!(
                    "coefficient {c} is not an element of F_{}",
                    field.size()
                )));
            }
            if c != 0 {
                map.insert(i, c);
            }
        }
        Ok(PrincipalPart {
            p: field.characteristic(),
            q: field.size(),
            coeffs: map,
        })
    }

    pub fn zero(field: &FiniteField) -> Self {
        PrincipalPart {
            p: field.characteristic(),
            q: field.size(),
            coeffs: BTreeMap::new(),
        }
    }

    /// Largest pole order with a nonzero coefficient, 0 for the zero part.
    pub fn pole_order(&self) -> u32 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: u32) -> u32 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn add(&self, field: &FiniteField, other: &PrincipalPart) -> PrincipalPart {
        let mut out = self.coeffs.clone();
        for (&i, &c) in &other.coeffs {
            let sum = field.add(out.get(&i).copied().unwrap_or(0), c);
            if sum == 0 {
                out.remove(&i);
            } else {
                out.insert(i, sum);
            }
        }
        PrincipalPart {
            coeffs: out,
            ..*self
        }
    }

    fn to_vector(&self, field: &FiniteField, max_pole: u32) -> Vec<u8> {
        let e = field.degree() as usize;
        let p = field.characteristic();
        let mut v = vec![0u8; max_pole as usize * e];
        for (&i, &c) in &self.coeffs {
            let mut c = c;
            for k in 0..e {
                v[(i as usize - 1) * e + k] = (c % p) as u8;
                c /= p;
            }
        }
        v
    }

    fn from_vector(field: &FiniteField, v: &[u8]) -> PrincipalPart {
        let e = field.degree() as usize;
        let p = field.characteristic();
        let coeffs = v.chunks(e).enumerate().filter_map(|(i, digits)| {
            let c = digits
                .iter()
                .rev()
                .fold(0, |acc, &d| acc * p + u32::from(d));
            (c != 0).then_some((i as u32 + 1, c))
        });
        PrincipalPart {
            p,
            q: field.size(),
            coeffs: coeffs.collect(),
        }
    }
}

/// `℘(b·t^{-i}) = b^p·t^{-ip} - b·t^{-i}`.
pub fn artin_schreier_image(field: &FiniteField, b: u32, i: u32) -> PrincipalPart {
    let p = field.characteristic();
    let high = PrincipalPart {
        p,
        q: field.size(),
        coeffs: BTreeMap::from([(i * p, field.frobenius(b))]),
    };
    let low = PrincipalPart {
        p,
        q: field.size(),
        coeffs: BTreeMap::from([(i, field.neg(b))]),
    };
    high.add(field, &low)
}

/// Rewrites every term `c·t^{-i}` with `p | i` as `c^{1/p}·t^{-i/p}`, from
/// the highest pole down, which changes the part by an element of `℘(K)`.
/// The result is supported on pole orders prime to `p`.
pub fn reduce_principal_part(field: &FiniteField, part: &PrincipalPart) -> PrincipalPart {
    let p = field.characteristic();
    let mut out = part.clone();
    while let Some((&i, &c)) = out.coeffs.iter().rev().find(|(i, _)| *i % p == 0) {
        out.coeffs.remove(&i);
        let term = PrincipalPart {
            coeffs: BTreeMap::from([(i / p, field.frobenius_root(c))]),
            ..out.clone()
        };
        out = out.add(field, &term);
    }
    out
}

/// `W_m / (W_m ∩ ℘(K))`, with `W_m` the principal parts of pole order
/// `≤ m`.
#[derive(Debug, Clone)]
pub struct ASQuotient {
    field: FiniteField,
    max_pole: u32,
    /// Echelon basis of `W_m ∩ ℘(K)`, pivot (highest nonzero coordinate)
    /// normalized to 1, sorted by decreasing pivot.
    rows: Vec<(usize, Vec<u8>)>,
}

impl ASQuotient {
    pub fn new(field: FiniteField, max_pole: u32) -> Self {
        let p = field.characteristic();
        let mut rows: Vec<(usize, Vec<u8>)> = Vec::new();
        for i in 1..=max_pole / p {
            for b in field.prime_basis() {
                let v = artin_schreier_image(&field, b, i).to_vector(&field, max_pole);
                let v = reduce_vector(&rows, v, p);
                if let Some(pivot) = v.iter().rposition(|&x| x != 0) {
                    let inv = inverse_mod(u32::from(v[pivot]), p);
                    let v: Vec<u8> = v.iter().map(|&x| (u32::from(x) * inv % p) as u8).collect();
                    rows.push((pivot, v));
                    rows.sort_by_key(|row| std::cmp::Reverse(row.0));
                }
            }
        }
        ASQuotient {
            field,
            max_pole,
            rows,
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn max_pole(&self) -> u32 {
        self.max_pole
    }

    /// `dim_{F_p} W_m`.
    pub fn ambient_dimension(&self) -> usize {
        self.max_pole as usize * self.field.degree() as usize
    }

    /// `dim_{F_p} (W_m ∩ ℘(K))`.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `|W_m / (W_m ∩ ℘(K))|`.
    pub fn class_count(&self) -> u64 {
        u64::from(self.field.characteristic()).pow((self.ambient_dimension() - self.rank()) as u32)
    }

    /// Unique representative of the class of `part`.
    pub fn normal_form(&self, part: &PrincipalPart) -> Result<PrincipalPart> {
        self.check(part)?;
        let v = part.to_vector(&self.field, self.max_pole);
        Ok(PrincipalPart::from_vector(
            &self.field,
            &reduce_vector(&self.rows, v, self.field.characteristic()),
        ))
    }

    pub fn equivalent(&self, a: &PrincipalPart, b: &PrincipalPart) -> Result<bool> {
        Ok(self.normal_form(a)? == self.normal_form(b)?)
    }

    /// `b·t^{-i}` for `p ∤ i ≤ m` and `b` in the `F_p`-basis of `F_q`; their
    /// classes form a basis of the quotient.
    pub fn coprime_basis(&self) -> Vec<PrincipalPart> {
        let p = self.field.characteristic();
        (1..=self.max_pole)
            .filter(|i| i % p != 0)
            .flat_map(|i| {
                self.field
                    .prime_basis()
                    .into_iter()
                    .map(move |b| PrincipalPart {
                        p,
                        q: self.field.size(),
                        coeffs: BTreeMap::from([(i, b)]),
                    })
            })
            .collect()
    }

    fn check(&self, part: &PrincipalPart) -> Result<()> {
        if part.q != self.field.size() || part.pole_order() > self.max_pole {
            return Err(Error::OracleParameter(format!(
                "principal part does not live in W_{} over F_{}",
                self.max_pole,
                self.field.size()
            )));
        }
        Ok(())
    }

    /// Normal form of the part whose packed coefficient vector is `x`,
    /// packed back into an integer in base `p`.
    fn packed_normal_form(&self, x: u64) -> u64 {
        let p = u64::from(self.field.characteristic());
        let mut v = Vec::with_capacity(self.ambient_dimension());
        let mut rest = x;
        for _ in 0..self.ambient_dimension() {
            v.push((rest % p) as u8);
            rest /= p;
        }
        let v = reduce_vector(&self.rows, v, p as u32);
        v.iter().rev().fold(0, |acc, &d| acc * p + u64::from(d))
    }
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    (1..p)
        .find(|b| a * b % p == 1)
        .expect("nonzero residue mod a prime")
}

fn reduce_vector(rows: &[(usize, Vec<u8>)], mut v: Vec<u8>, p: u32) -> Vec<u8> {
    for (pivot, row) in rows {
        let c = u32::from(v[*pivot]);
        if c == 0 {
            continue;
        }
        for (x, &r) in v.iter_mut().zip(row) {
            *x = ((u32::from(*x) + (p - c) * u32::from(r)) % p) as u8;
        }
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    /// Every principal part of pole order `≤ m` was reduced.
    BruteForce,
    /// `|W_m/U_m| - |W_{m-1}/U_{m-1}|` from ranks.
    Rank,
}

fn desk_scale(q: u32, jump: u32) -> Result<FiniteField> {
    if jump == 0 || jump > 9 {
        return Err(Error::OracleParameter(format!(
            "jump {jump} is outside 1..=9"
        )));
    }
    FiniteField::new(q)
}

/// Number of classes in `K/℘K` whose reduced representative has pole order
/// exactly `jump`. Zero when `p | jump`.
pub fn count_exact_jump(q: u32, jump: u32) -> Result<(u64, CountMethod)> {
    let field = desk_scale(q, jump)?;
    let total = u64::from(q).pow(jump);
    if total <= BRUTE_FORCE_LIMIT {
        let quotient = ASQuotient::new(field, jump);
        let below = u64::from(q).pow(jump - 1);
        // Pole order is nondecreasing in the packed encoding, so a class
        // first seen at or above `below` has minimal pole order `jump`.
        let mut seen = HashSet::new();
        let mut count = 0;
        for x in 0..total {
            if seen.insert(quotient.packed_normal_form(x)) && x >= below {
                count += 1;
            }
        }
        Ok((count, CountMethod::BruteForce))
    } else {
        let upper = ASQuotient::new(field.clone(), jump).class_count();
        let lower = ASQuotient::new(field, jump - 1).class_count();
        Ok((upper - lower, CountMethod::Rank))
    }
}

/// Number of ramified `Z/pZ`-classes with ramification jump `jump` over
/// `F_q((t))`, `p ∈ {2, 3}`.
pub fn as_class_count(p: u32, q: u32, jump: u32) -> Result<u64> {
    if p != 2 && p != 3 {
        return Err(Error::OracleParameter(format!("p must be 2 or 3, got {p}")));
    }
    if crate::oracle::gf::prime_power(q).map(|(r, _)| r) != Some(p) {
        return Err(Error::OracleParameter(format!("{q} is not a power of {p}")));
    }
    if jump.is_multiple_of(p) {
        return Err(Error::JumpDivisibleByP { p, jump });
    }
    count_exact_jump(q, jump).map(|(c, _)| c)
}
