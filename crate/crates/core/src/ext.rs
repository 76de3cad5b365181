// SPDX-License-Identifier: Apache-2.0

//! Exact rationals and the extended half-line `[0, ∞]`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number. Always kept in lowest terms with a positive denominator.
pub type Rational = Ratio<i128>;

/// Builds a reduced rational `num / den`.
///
/// Panics if `den` is zero.
pub fn rational(num: i128, den: i128) -> Rational {
    Ratio::new(num, den)
}

/// Formats a rational as `num/den`, including a denominator of 1.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer. Negative values are accepted here; callers
/// that need nonnegativity check it themselves.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<i128> {
        let t = t.trim();
        if t.is_empty() || t.len() > 38 {
            return Err(Error::input(format!("malformed integer {t:?}")));
        }
        t.parse::<i128>()
            .map_err(|_| Error::input(format!("malformed integer {t:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d == 0 {
                return Err(Error::input(format!("zero denominator in {s:?}")));
            }
            Ok(Ratio::new(n, d))
        }
        None => Ok(Ratio::from_integer(parse_int(s)?)),
    }
}

/// A value in `[0, ∞]`.
///
/// Arithmetic follows the conventions used for quasi-norms: `a + ∞ = ∞`,
/// `a·∞ = ∞` for `a > 0`, `a/0 = ∞` and `a/∞ = 0` for finite `a > 0`.
/// The derived order puts every finite value below `Infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtValue {
    Finite(Rational),
    Infinity,
}

impl ExtValue {
    pub const ZERO: ExtValue = ExtValue::Finite(Ratio::new_raw(0, 1));
    pub const ONE: ExtValue = ExtValue::Finite(Ratio::new_raw(1, 1));

    /// Wraps a nonnegative rational.
    pub fn finite(r: Rational) -> Result<Self> {
        if r.is_negative() {
            Err(Error::input(format!(
                "negative value {} is outside [0, inf]",
                format_rational(&r)
            )))
        } else {
            Ok(ExtValue::Finite(r))
        }
    }

    pub fn from_integer(n: u64) -> Self {
        ExtValue::Finite(Ratio::from_integer(n as i128))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtValue::Finite(r) if r.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtValue::Finite(_))
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            ExtValue::Finite(r) => Some(*r),
            ExtValue::Infinity => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtValue::Finite(r) => *r.numer() as f64 / *r.denom() as f64,
            ExtValue::Infinity => f64::INFINITY,
        }
    }

    /// `self + other`, with `∞` absorbing.
    pub fn add(self, other: ExtValue) -> ExtValue {
        match (self, other) {
            (ExtValue::Finite(a), ExtValue::Finite(b)) => ExtValue::Finite(a + b),
            _ => ExtValue::Infinity,
        }
    }

    /// Multiplies by a strictly positive rational. `∞` stays `∞`.
    pub fn scale(self, factor: Rational) -> ExtValue {
        debug_assert!(factor.is_positive());
        match self {
            ExtValue::Finite(a) => ExtValue::Finite(a * factor),
            ExtValue::Infinity => ExtValue::Infinity,
        }
    }

    /// `numerator / self` for a strictly positive finite numerator.
    ///
    /// `a/0 = ∞` and `a/∞ = 0`. The caller never passes a zero numerator: `0/0`
    /// has no convention and does not arise in any sup formula.
    pub fn divide_into(self, numerator: Rational) -> ExtValue {
        debug_assert!(numerator.is_positive(), "numerator must be positive");
        match self {
            ExtValue::Infinity => ExtValue::ZERO,
            ExtValue::Finite(d) if d.is_zero() => ExtValue::Infinity,
            ExtValue::Finite(d) => ExtValue::Finite(numerator / d),
        }
    }
}

impl Default for ExtValue {
    fn default() -> Self {
        ExtValue::ZERO
    }
}

impl From<Rational> for ExtValue {
    /// Panics on negative input; use [`ExtValue::finite`] for untrusted values.
    fn from(r: Rational) -> Self {
        assert!(!r.is_negative(), "ExtValue must be nonnegative");
        ExtValue::Finite(r)
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            ExtValue::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtValue {
    type Err = Error;

    /// Accepts `num/den`, a bare integer, or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") {
            return Ok(ExtValue::Infinity);
        }
        ExtValue::finite(parse_rational(t)?)
    }
}

/// Dist to the nearest integer of `r`, i.e. the arc-length norm of `exp(2πi r)`.
pub fn circle_distance(r: Rational) -> Rational {
    let frac = r - r.floor();
    let other = Rational::one() - frac;
    if frac <= other {
        frac
    } else {
        other
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!("3/6".parse::<ExtValue>().unwrap(), ExtValue::Finite(rational(1, 2)));
        assert_eq!("inf".parse::<ExtValue>().unwrap(), ExtValue::Infinity);
        assert_eq!("2".parse::<ExtValue>().unwrap(), ExtValue::from_integer(2));
        assert_eq!(ExtValue::Finite(rational(4, 9)).to_string(), "4/9");
        assert_eq!(ExtValue::ONE.to_string(), "1/1");
        assert_eq!(ExtValue::ZERO.to_string(), "0/1");
        assert!("-1/2".parse::<ExtValue>().is_err());
        assert!("1/0".parse::<ExtValue>().is_err());
        assert!("x".parse::<ExtValue>().is_err());
        assert!("".parse::<ExtValue>().is_err());
    }

    #[test]
    fn conventions() {
        let half = rational(1, 2);
        assert_eq!(ExtValue::ZERO.divide_into(half), ExtValue::Infinity);
        assert_eq!(ExtValue::Infinity.divide_into(half), ExtValue::ZERO);
        assert_eq!(ExtValue::from_integer(2).divide_into(half), ExtValue::Finite(rational(1, 4)));
        assert_eq!(ExtValue::ONE.add(ExtValue::Infinity), ExtValue::Infinity);
        assert_eq!(ExtValue::Infinity.scale(half), ExtValue::Infinity);
        assert!(ExtValue::Finite(rational(1_000_000, 1)) < ExtValue::Infinity);
        assert!(ExtValue::ZERO < ExtValue::ONE);
    }

    #[test]
    fn circle_distance_values() {
        assert_eq!(circle_distance(rational(1, 3)), rational(1, 3));
        assert_eq!(circle_distance(rational(2, 3)), rational(1, 3));
        assert_eq!(circle_distance(rational(7, 2)), rational(1, 2));
        assert_eq!(circle_distance(rational(-1, 4)), rational(1, 4));
        assert_eq!(circle_distance(rational(5, 1)), rational(0, 1));
    }
}
