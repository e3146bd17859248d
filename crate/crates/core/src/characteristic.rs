use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The characteristic `p` of the base field: `0` or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Characteristic(u32);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);
    pub const TWO: Characteristic = Characteristic(2);
    pub const THREE: Characteristic = Characteristic(3);

    pub fn new(p: u32) -> Result<Self> {
        if p == 0 || is_prime(u64::from(p)) {
            Ok(Characteristic(p))
        } else {
            Err(Error::InvalidCharacteristic(u64::from(p)))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `p | m`, with the convention that characteristic 0 divides nothing.
    pub fn divides(self, m: i64) -> bool {
        self.0 != 0 && m % i64::from(self.0) == 0
    }

    pub fn is_two(self) -> bool {
        self.0 == 2
    }
}

impl TryFrom<u32> for Characteristic {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Characteristic::new(p)
    }
}

impl From<Characteristic> for u32 {
    fn from(p: Characteristic) -> u32 {
        p.0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= m {
        if m.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}
