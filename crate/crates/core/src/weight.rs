//! Exact weight arithmetic.
//!
//! Node weights and all derived totals are `BigRational` values, so solver
//! comparisons and tie-breaks never depend on floating-point rounding or on
//! accumulation order. Decimal strings parse exactly (`"1.5"` becomes 3/2)
//! and anything with a terminating decimal expansion formats back exactly.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Exact rational scalar used for weights, weight sums, and bounds.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("weight must be a plain decimal number, got {0:?}")]
    Malformed(String),
    #[error("weight must be positive, got {0}")]
    NotPositive(String),
}

/// A strictly positive node weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Rational);

impl Weight {
    /// Wraps an exact rational, rejecting zero and negative values.
    pub fn new(value: Rational) -> Result<Self, WeightError> {
        if value.is_positive() {
            Ok(Weight(value))
        } else {
            Err(WeightError::NotPositive(format_decimal(&value)))
        }
    }

    /// Parses a plain decimal such as `"2"`, `"0.5"`, or `"10.25"`.
    pub fn parse_decimal(text: &str) -> Result<Self, WeightError> {
        let value =
            parse_decimal(text).ok_or_else(|| WeightError::Malformed(text.to_string()))?;
        Weight::new(value)
    }

    pub fn from_integer(value: u64) -> Self {
        Weight(Rational::from_integer(BigInt::from(value)))
    }

    /// Builds `micros / 1_000_000`, the grid the generator samples from.
    pub fn from_micros(micros: u64) -> Result<Self, WeightError> {
        Weight::new(Rational::new(BigInt::from(micros), BigInt::from(1_000_000u32)))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_decimal(&self.0))
    }
}

impl FromStr for Weight {
    type Err = WeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Weight::parse_decimal(s)
    }
}

/// Parses a non-negative plain decimal (`digits[.digits]`) into an exact
/// rational. Returns `None` for anything else (signs, exponents, empty parts).
pub fn parse_decimal(text: &str) -> Option<Rational> {
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if text.contains('.') && (frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()))
    {
        return None;
    }
    let mut digits = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    let numer = BigInt::from_str(&digits).ok()?;
    let denom = num::pow::pow(BigInt::from(10u32), frac_part.len());
    Some(Rational::new(numer, denom))
}

/// Formats a rational as a decimal string.
///
/// Values with a terminating decimal expansion (denominator of the form
/// 2^a * 5^b) round-trip exactly through [`parse_decimal`]; anything else is
/// rounded to twelve fractional digits.
pub fn format_decimal(value: &Rational) -> String {
    if value.is_negative() {
        return format!("-{}", format_decimal(&-value.clone()));
    }
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let mut den = value.denom().clone();
    let mut twos = 0usize;
    let mut fives = 0usize;
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    let scale = if den.is_one() {
        twos.max(fives)
    } else {
        12
    };
    let pow10 = num::pow::pow(BigInt::from(10u32), scale);
    // Round half up when the expansion does not terminate (exact otherwise).
    let scaled = (value.numer() * &pow10 * &two + value.denom()) / (value.denom() * &two);
    let text = scaled.to_string();
    if scale == 0 {
        return text;
    }
    let padded = format!("{text:0>width$}", width = scale + 1);
    let split = padded.len() - scale;
    let (int_digits, frac_digits) = padded.split_at(split);
    let frac_trimmed = frac_digits.trim_end_matches('0');
    if frac_trimmed.is_empty() {
        int_digits.to_string()
    } else {
        format!("{int_digits}.{frac_trimmed}")
    }
}

/// Sums an iterator of rationals.
pub fn rational_sum<'a>(values: impl Iterator<Item = &'a Rational>) -> Rational {
    values.fold(Rational::zero(), |acc, v| acc + v)
}
