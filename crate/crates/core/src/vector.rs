//! Column vectors over the max-plus semiring.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::MaxPlusScalar;

/// A length-`n` vector of max-plus scalars, `n >= 1`.
///
/// The support of a vector is the set of coordinates holding a finite
/// value; a vector is *proper* when its support is nonempty.
#[derive(Clone, PartialEq, Eq)]
pub struct MaxPlusVector {
    entries: Vec<MaxPlusScalar>,
}

impl MaxPlusVector {
    pub fn new(entries: Vec<MaxPlusScalar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid("vector must have at least one entry"));
        }
        Ok(MaxPlusVector { entries })
    }

    /// Convenience constructor from plain integers (all finite).
    pub fn from_ints(values: &[i64]) -> Self {
        MaxPlusVector::new(values.iter().map(|&v| MaxPlusScalar::from_int(v)).collect())
            .expect("non-empty slice")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is at least 1 by construction
    }

    pub fn get(&self, i: usize) -> &MaxPlusScalar {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[MaxPlusScalar] {
        &self.entries
    }

    /// Indices of the finite coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_finite())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_proper(&self) -> bool {
        self.entries.iter().any(|v| v.is_finite())
    }

    /// The maximum entry (`Bottom` when every coordinate is bottom).
    pub fn norm(&self) -> MaxPlusScalar {
        self.entries
            .iter()
            .fold(MaxPlusScalar::Bottom, |acc, v| acc.oplus(v))
    }

    /// Entrywise maximum of two vectors of equal length.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::invalid(format!(
                "vector length mismatch: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        MaxPlusVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.oplus(b))
                .collect(),
        )
    }

    /// The scalar multiple `alpha (x) x`, i.e. `alpha` added to every entry.
    pub fn scalar_multiple(&self, alpha: &MaxPlusScalar) -> Self {
        MaxPlusVector {
            entries: self.entries.iter().map(|v| alpha.otimes(v)).collect(),
        }
    }

    /// Normalizes so the maximum entry is 0, by multiplying with the
    /// inverse of the norm. Errors on a vector with empty support.
    pub fn scale(&self) -> Result<Self> {
        match self.norm() {
            MaxPlusScalar::Bottom => Err(Error::invalid(
                "cannot scale a vector with empty support",
            )),
            MaxPlusScalar::Finite(norm) => {
                let inverse = MaxPlusScalar::Finite(-norm);
                Ok(self.scalar_multiple(&inverse))
            }
        }
    }

    /// Pointwise `<=`. Panics if the lengths differ.
    pub fn le(&self, other: &Self) -> bool {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for MaxPlusVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", tokens.join(" "))
    }
}

impl fmt::Debug for MaxPlusVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for MaxPlusVector {
    type Err = Error;

    /// Parses one line of whitespace-separated scalar tokens.
    fn from_str(line: &str) -> Result<Self> {
        let entries: Result<Vec<MaxPlusScalar>> =
            line.split_whitespace().map(|t| t.parse()).collect();
        MaxPlusVector::new(entries?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_skips_bottom_entries() {
        let x: MaxPlusVector = "0 -inf 3 -inf".parse().unwrap();
        assert_eq!(x.support(), vec![0, 2]);
        assert!(x.is_proper());
        assert!(!"-inf -inf".parse::<MaxPlusVector>().unwrap().is_proper());
    }

    #[test]
    fn scale_subtracts_the_maximum() {
        let x: MaxPlusVector = "2 -1 -inf".parse().unwrap();
        assert_eq!(x.scale().unwrap().to_string(), "0 -3 -inf");
        let already: MaxPlusVector = "0 0 0 -3 -inf".parse().unwrap();
        assert_eq!(already.scale().unwrap(), already);
        let single = MaxPlusVector::from_ints(&[-5]);
        assert_eq!(single.scale().unwrap().to_string(), "0");
        assert!("-inf".parse::<MaxPlusVector>().unwrap().scale().is_err());
    }

    #[test]
    fn scale_is_idempotent() {
        let x: MaxPlusVector = "7/2 -1 0".parse().unwrap();
        let scaled = x.scale().unwrap();
        assert_eq!(scaled.scale().unwrap(), scaled);
    }

    #[test]
    fn oplus_is_entrywise_max() {
        let a: MaxPlusVector = "0 -2 -inf".parse().unwrap();
        let b: MaxPlusVector = "-1 0 -inf".parse().unwrap();
        assert_eq!(a.oplus(&b).unwrap().to_string(), "0 0 -inf");
        let short: MaxPlusVector = "0".parse().unwrap();
        assert!(a.oplus(&short).is_err());
    }

    #[test]
    fn empty_vectors_are_rejected() {
        assert!(MaxPlusVector::new(vec![]).is_err());
        assert!("".parse::<MaxPlusVector>().is_err());
    }
}
