use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact integer or half-integer, stored as twice its value.
///
/// Monopole numbers, angular momenta and their projections all live on the
/// half-integer lattice; keeping them exact makes shell enumeration and
/// degeneracy counting free of rounding.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    pub const ZERO: HalfInteger = HalfInteger { twice: 0 };
    pub const HALF: HalfInteger = HalfInteger { twice: 1 };
    pub const ONE: HalfInteger = HalfInteger { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInteger { twice }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInteger { twice: 2 * value }
    }

    /// Twice the value, always an exact integer.
    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn abs(self) -> Self {
        HalfInteger {
            twice: self.twice.abs(),
        }
    }

    /// The value as an integer, if it is one.
    pub const fn to_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    /// True when `self - other` is an integer (same "parity class").
    pub const fn differs_by_integer(self, other: HalfInteger) -> bool {
        (self.twice - other.twice) % 2 == 0
    }

    pub const fn is_negative(self) -> bool {
        self.twice < 0
    }

    pub fn max(self, other: HalfInteger) -> HalfInteger {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger::from_twice(self.twice + rhs.twice)
    }
}

impl Add<i64> for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: i64) -> HalfInteger {
        HalfInteger::from_twice(self.twice + 2 * rhs)
    }
}

impl Sub for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger::from_twice(self.twice - rhs.twice)
    }
}

impl Sub<i64> for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: i64) -> HalfInteger {
        HalfInteger::from_twice(self.twice - 2 * rhs)
    }
}

impl Neg for HalfInteger {
    type Output = HalfInteger;
    fn neg(self) -> HalfInteger {
        HalfInteger::from_twice(-self.twice)
    }
}

impl PartialEq<i64> for HalfInteger {
    fn eq(&self, other: &i64) -> bool {
        self.twice == 2 * other
    }
}

impl PartialOrd<i64> for HalfInteger {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.twice.partial_cmp(&(2 * other))
    }
}

impl From<i64> for HalfInteger {
    fn from(value: i64) -> Self {
        HalfInteger::from_int(value)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `3`, `-3/2`, `1.5` and `-0.5`. Anything that is not an exact
/// multiple of one half is rejected.
impl FromStr for HalfInteger {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        let bad = || Error::Argument(format!("`{text}` is not an integer or half-integer"));
        if let Some((num, den)) = text.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            return match den.trim() {
                "1" => Ok(HalfInteger::from_int(num)),
                "2" => Ok(HalfInteger::from_twice(num)),
                _ => Err(bad()),
            };
        }
        if let Ok(value) = text.parse::<i64>() {
            return Ok(HalfInteger::from_int(value));
        }
        let value: f64 = text.parse().map_err(|_| bad())?;
        let twice = 2.0 * value;
        if !twice.is_finite() || twice.fract() != 0.0 || twice.abs() > 1e15 {
            return Err(bad());
        }
        Ok(HalfInteger::from_twice(twice as i64))
    }
}

impl Serialize for HalfInteger {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInteger {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
