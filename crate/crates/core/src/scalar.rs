//! Exact scalars of the max-plus semiring: rationals extended with a
//! distinguished bottom element standing for negative infinity.
//!
//! The semiring operations are `oplus` (maximum) and `otimes` (ordinary
//! addition). Bottom is neutral for `oplus` and absorbing for `otimes`.
//! All arithmetic is exact; there is no floating point anywhere, so
//! tightness tests of the form `a + x_j == x_i` are decided without
//! tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational};

use crate::error::Error;

/// A max-plus scalar: an exact rational number or `Bottom` (-infinity).
///
/// `Bottom` is a distinct variant, never a sentinel numeric value, so no
/// arithmetic can accidentally treat -infinity as a finite quantity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum MaxPlusScalar {
    Bottom,
    Finite(BigRational),
}

pub use MaxPlusScalar::Bottom;

impl MaxPlusScalar {
    pub fn from_int(value: i64) -> Self {
        MaxPlusScalar::Finite(BigRational::from_integer(BigInt::from(value)))
    }

    /// Builds `numer/denom` exactly. Panics if `denom` is zero; use the
    /// `FromStr` impl to reject untrusted tokens gracefully.
    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        MaxPlusScalar::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, MaxPlusScalar::Bottom)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_bottom()
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            MaxPlusScalar::Bottom => None,
            MaxPlusScalar::Finite(r) => Some(r),
        }
    }

    /// Semiring addition: the maximum, with `Bottom` as the least element.
    pub fn oplus(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Semiring multiplication: ordinary addition, with `Bottom` absorbing.
    pub fn otimes(&self, other: &Self) -> Self {
        match (self, other) {
            (MaxPlusScalar::Finite(a), MaxPlusScalar::Finite(b)) => {
                MaxPlusScalar::Finite(a + b)
            }
            _ => MaxPlusScalar::Bottom,
        }
    }
}

impl Ord for MaxPlusScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (MaxPlusScalar::Bottom, MaxPlusScalar::Bottom) => Ordering::Equal,
            (MaxPlusScalar::Bottom, _) => Ordering::Less,
            (_, MaxPlusScalar::Bottom) => Ordering::Greater,
            (MaxPlusScalar::Finite(a), MaxPlusScalar::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for MaxPlusScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MaxPlusScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxPlusScalar::Bottom => write!(f, "-inf"),
            MaxPlusScalar::Finite(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for MaxPlusScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MaxPlusScalar {
    type Err = Error;

    /// Parses a scalar token: an integer, a `p/q` rational, or `-inf`
    /// (case-insensitive) for bottom.
    fn from_str(token: &str) -> Result<Self, Error> {
        if token.eq_ignore_ascii_case("-inf") {
            return Ok(MaxPlusScalar::Bottom);
        }
        let bad = || Error::invalid(format!("malformed scalar token '{token}'"));
        if let Some((p, q)) = token.split_once('/') {
            let numer = BigInt::from_str(p).map_err(|_| bad())?;
            let denom = BigInt::from_str(q).map_err(|_| bad())?;
            if denom == BigInt::from(0) {
                return Err(Error::invalid(format!(
                    "zero denominator in token '{token}'"
                )));
            }
            Ok(MaxPlusScalar::Finite(BigRational::new(numer, denom)))
        } else {
            let value = BigInt::from_str(token).map_err(|_| bad())?;
            Ok(MaxPlusScalar::Finite(BigRational::from_integer(value)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> MaxPlusScalar {
        MaxPlusScalar::from_int(v)
    }

    #[test]
    fn oplus_takes_maximum() {
        assert_eq!(s(3).oplus(&s(5)), s(5));
        assert_eq!(Bottom.oplus(&s(-2)), s(-2));
        assert_eq!(s(0).oplus(&s(0)), s(0));
    }

    #[test]
    fn otimes_adds_with_absorbing_bottom() {
        assert_eq!(s(3).otimes(&s(5)), s(8));
        assert_eq!(Bottom.otimes(&s(7)), Bottom);
        assert_eq!(s(0).otimes(&s(42)), s(42));
    }

    #[test]
    fn ordering_puts_bottom_least() {
        assert!(Bottom < s(-1_000_000));
        assert!(s(-1) < s(0));
        assert_eq!(Bottom.cmp(&Bottom), Ordering::Equal);
    }

    #[test]
    fn tokens_round_trip() {
        for text in ["-inf", "0", "-3", "17", "5/2", "-7/3"] {
            let value: MaxPlusScalar = text.parse().unwrap();
            assert_eq!(value.to_string(), text);
        }
        // Non-canonical spellings parse to the reduced form.
        assert_eq!("4/2".parse::<MaxPlusScalar>().unwrap(), s(2));
        assert_eq!("3/-6".parse::<MaxPlusScalar>().unwrap().to_string(), "-1/2");
        assert_eq!("-INF".parse::<MaxPlusScalar>().unwrap(), Bottom);
    }

    #[test]
    fn bad_tokens_are_rejected() {
        assert!("5/0".parse::<MaxPlusScalar>().is_err());
        assert!("abc".parse::<MaxPlusScalar>().is_err());
        assert!("1.5".parse::<MaxPlusScalar>().is_err());
        assert!("".parse::<MaxPlusScalar>().is_err());
    }
}
