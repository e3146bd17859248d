//! Exact half-integers, optionally extended by `-∞`.
//!
//! Every dimension bound in this crate lives in `(1/2)Z ∪ {-∞}`: the
//! dimensions themselves are integers (or `-∞` for empty loci) and the
//! weight function contributes `d/2`. Storing twice the value keeps all
//! comparisons exact.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of `(1/2)Z`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };

    pub const fn from_int(k: i64) -> Self {
        HalfInt { twice: 2 * k }
    }

    /// The value `h / 2`.
    pub const fn from_halves(h: i64) -> Self {
        HalfInt { twice: h }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    /// Reduced numerator; the denominator is [`HalfInt::denominator`].
    pub fn numerator(self) -> i64 {
        if self.is_integer() {
            self.twice / 2
        } else {
            self.twice
        }
    }

    pub fn denominator(self) -> i64 {
        if self.is_integer() {
            1
        } else {
            2
        }
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn from_fraction(num: i64, den: i64) -> Result<Self> {
        let bad = || Error::ParseHalf(format!("{num}/{den}"));
        match den {
            1 => num.checked_mul(2).map(HalfInt::from_halves).ok_or_else(bad),
            2 => Ok(HalfInt::from_halves(num)),
            _ => Err(bad()),
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice + rhs.twice,
        }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice - rhs.twice,
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, Add::add)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `k` or `a/2` with `a` odd (the reduced forms printed by
    /// `Display`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseHalf(s.to_string());
        let parse_int = |t: &str| -> Result<i64> {
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<i64>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => {
                let k = parse_int(s)?;
                k.checked_mul(2).map(HalfInt::from_halves).ok_or_else(bad)
            }
            Some((num, "2")) => {
                let a = parse_int(num)?;
                if a % 2 == 0 {
                    return Err(bad());
                }
                Ok(HalfInt::from_halves(a))
            }
            Some(_) => Err(bad()),
        }
    }
}

/// JSON form: `{"num": a, "den": b}` with the fraction reduced.
impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("HalfInt", 2)?;
        st.serialize_field("num", &self.numerator())?;
        st.serialize_field("den", &self.denominator())?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Fraction {
    num: i64,
    den: i64,
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let Fraction { num, den } = Fraction::deserialize(deserializer)?;
        if den == 1 || (den == 2 && num % 2 != 0) {
            num.checked_mul(3 - den)
                .map(HalfInt::from_halves)
                .ok_or_else(|| de::Error::custom("half-integer overflow"))
        } else {
            Err(de::Error::custom(format!(
                "{num}/{den} is not a reduced half-integer"
            )))
        }
    }
}

/// `(1/2)Z ∪ {-∞}` with `-∞` as the least element.
///
/// `-∞` is absorbing for addition. There is no `+∞`, so subtracting `-∞`
/// is not defined and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtHalf {
    NegInfinity,
    Finite(HalfInt),
}

impl ExtHalf {
    pub const ZERO: ExtHalf = ExtHalf::Finite(HalfInt::ZERO);

    pub const fn int(k: i64) -> Self {
        ExtHalf::Finite(HalfInt::from_int(k))
    }

    pub const fn halves(h: i64) -> Self {
        ExtHalf::Finite(HalfInt::from_halves(h))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtHalf::Finite(_))
    }

    pub fn finite(self) -> Option<HalfInt> {
        match self {
            ExtHalf::Finite(h) => Some(h),
            ExtHalf::NegInfinity => None,
        }
    }
}

impl From<HalfInt> for ExtHalf {
    fn from(h: HalfInt) -> Self {
        ExtHalf::Finite(h)
    }
}

impl PartialOrd for ExtHalf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtHalf {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtHalf::NegInfinity, ExtHalf::NegInfinity) => Ordering::Equal,
            (ExtHalf::NegInfinity, _) => Ordering::Less,
            (_, ExtHalf::NegInfinity) => Ordering::Greater,
            (ExtHalf::Finite(a), ExtHalf::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for ExtHalf {
    type Output = ExtHalf;
    fn add(self, rhs: ExtHalf) -> ExtHalf {
        match (self, rhs) {
            (ExtHalf::Finite(a), ExtHalf::Finite(b)) => ExtHalf::Finite(a + b),
            _ => ExtHalf::NegInfinity,
        }
    }
}

impl Add<HalfInt> for ExtHalf {
    type Output = ExtHalf;
    fn add(self, rhs: HalfInt) -> ExtHalf {
        self + ExtHalf::Finite(rhs)
    }
}

impl Sub<HalfInt> for ExtHalf {
    type Output = ExtHalf;
    fn sub(self, rhs: HalfInt) -> ExtHalf {
        self + (-rhs)
    }
}

impl Sub for ExtHalf {
    type Output = ExtHalf;
    fn sub(self, rhs: ExtHalf) -> ExtHalf {
        match rhs {
            ExtHalf::Finite(h) => self - h,
            ExtHalf::NegInfinity => panic!("subtracting -inf is undefined in (1/2)Z ∪ {{-inf}}"),
        }
    }
}

impl Sum for ExtHalf {
    fn sum<I: Iterator<Item = ExtHalf>>(iter: I) -> ExtHalf {
        iter.fold(ExtHalf::ZERO, Add::add)
    }
}

impl fmt::Display for ExtHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtHalf::NegInfinity => f.write_str("-inf"),
            ExtHalf::Finite(h) => h.fmt(f),
        }
    }
}

impl FromStr for ExtHalf {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "-inf" {
            Ok(ExtHalf::NegInfinity)
        } else {
            s.parse().map(ExtHalf::Finite)
        }
    }
}

/// JSON form: `{"finite": true, "value": {"num": a, "den": b}}` or
/// `{"finite": false, "value": null}`.
impl Serialize for ExtHalf {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ExtHalf", 2)?;
        st.serialize_field("finite", &self.is_finite())?;
        st.serialize_field("value", &self.finite())?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtHalfRepr {
    finite: bool,
    value: Option<HalfInt>,
}

impl<'de> Deserialize<'de> for ExtHalf {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ExtHalfRepr::deserialize(deserializer)?;
        match (repr.finite, repr.value) {
            (true, Some(h)) => Ok(ExtHalf::Finite(h)),
            (false, None) => Ok(ExtHalf::NegInfinity),
            _ => Err(de::Error::custom("`finite` disagrees with `value`")),
        }
    }
}
