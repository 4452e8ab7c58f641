//! Exact unit-interval scalars.
//!
//! Memberships, non-memberships, preferences and relation degrees are all
//! [`Degree`]s. They are backed by a scaled-integer decimal so that values
//! such as `0.1` or `0.015` are represented exactly and comparisons used by
//! the ranking pipeline never see binary rounding noise.

use std::fmt;
use std::str::FromStr;

use rust_decimal::{Decimal, RoundingStrategy};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Largest number of fractional digits a [`Degree`] can carry.
pub const MAX_DIGITS: u32 = 28;

/// A value in `[0, 1]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(Decimal);

impl Degree {
    pub const ZERO: Degree = Degree(Decimal::ZERO);
    pub const ONE: Degree = Degree(Decimal::ONE);

    pub fn new(value: Decimal) -> Result<Self, Error> {
        if value < Decimal::ZERO || value > Decimal::ONE {
            return Err(Error::DegreeOutOfRange(value.to_string()));
        }
        Ok(Degree(value.normalize()))
    }

    /// Builds a degree from an integer count of `10^-scale` units,
    /// e.g. `from_scaled(15, 3)` is `0.015`.
    pub fn from_scaled(units: u64, scale: u32) -> Result<Self, Error> {
        if scale > MAX_DIGITS {
            return Err(Error::InvalidPrecision(scale));
        }
        Degree::new(Decimal::from_i128_with_scale(i128::from(units), scale))
    }

    /// Clamps into `[0, 1]`. Only used on results of norm functions, which
    /// stay in range for every registered pair.
    pub(crate) fn saturating(value: Decimal) -> Self {
        Degree(value.clamp(Decimal::ZERO, Decimal::ONE).normalize())
    }

    pub fn value(self) -> Decimal {
        self.0
    }

    /// Number of significant fractional digits (`0.150` has 2).
    pub fn fractional_digits(self) -> u32 {
        self.0.scale()
    }

    /// `1 - self`.
    pub fn complement(self) -> Degree {
        Degree((Decimal::ONE - self.0).normalize())
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    /// Lossy conversion for display and plotting only.
    pub fn to_f64(self) -> f64 {
        use rust_decimal::prelude::ToPrimitive;
        self.0.to_f64().unwrap_or(0.0)
    }

    /// Parses and additionally rejects more than `max_digits` fractional digits.
    pub fn parse_with_precision(text: &str, precision: Precision) -> Result<Self, Error> {
        let degree: Degree = text.parse()?;
        if let Precision::Digits(max) = precision {
            if degree.fractional_digits() > max {
                return Err(Error::TooManyDigits {
                    value: text.to_string(),
                    digits: degree.fractional_digits(),
                    precision: max,
                });
            }
        }
        Ok(degree)
    }
}

impl FromStr for Degree {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed.contains(['e', 'E', '_']) {
            return Err(Error::InvalidDecimal(text.to_string()));
        }
        let value = Decimal::from_str_exact(trimmed)
            .map_err(|_| Error::InvalidDecimal(text.to_string()))?;
        Degree::new(value)
    }
}

impl TryFrom<&str> for Degree {
    type Error = Error;

    fn try_from(text: &str) -> Result<Self, Self::Error> {
        text.parse()
    }
}

impl From<Degree> for Decimal {
    fn from(d: Degree) -> Decimal {
        d.0
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // normalised on construction: trailing zeros are already gone
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// How results of norm applications are rounded.
///
/// `Digits(n)` rounds half-to-even to `n` fractional digits after every
/// application. `Exact` keeps full decimal precision (up to [`MAX_DIGITS`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Precision {
    Digits(u32),
    Exact,
}

impl Precision {
    pub const DEFAULT: Precision = Precision::Digits(6);

    pub fn digits(n: u32) -> Result<Self, Error> {
        if n > MAX_DIGITS {
            return Err(Error::InvalidPrecision(n));
        }
        Ok(Precision::Digits(n))
    }

    pub fn round(self, value: Decimal) -> Decimal {
        match self {
            Precision::Digits(n) => {
                value.round_dp_with_strategy(n, RoundingStrategy::MidpointNearestEven)
            }
            Precision::Exact => value,
        }
    }

    /// One unit in the last place, `None` for exact arithmetic.
    pub fn ulp(self) -> Option<Decimal> {
        match self {
            Precision::Digits(n) => Some(Decimal::new(1, n)),
            Precision::Exact => None,
        }
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::DEFAULT
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precision::Digits(n) => write!(f, "{n} digits"),
            Precision::Exact => f.write_str("exact"),
        }
    }
}
