//! Dense square matrices over the max-plus semiring, and the membership
//! test for the solution set of `A (x) x >= x`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::MaxPlusScalar;
use crate::vector::MaxPlusVector;

/// A dense `n x n` matrix of max-plus scalars, `n >= 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct MaxPlusMatrix {
    n: usize,
    entries: Vec<MaxPlusScalar>, // row-major
}

impl MaxPlusMatrix {
    pub fn from_rows(rows: Vec<Vec<MaxPlusScalar>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("matrix must have at least one row"));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(MaxPlusMatrix { n, entries })
    }

    /// The max-plus identity: 0 on the diagonal, bottom elsewhere.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        let mut entries = vec![MaxPlusScalar::Bottom; n * n];
        for i in 0..n {
            entries[i * n + i] = MaxPlusScalar::from_int(0);
        }
        MaxPlusMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MaxPlusScalar {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[MaxPlusScalar] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// The product `A (x) x`, i.e. `y_i = max_k (a_ik + x_k)`.
    pub fn mat_vec(&self, x: &MaxPlusVector) -> Result<MaxPlusVector> {
        if x.len() != self.n {
            return Err(Error::invalid(format!(
                "dimension mismatch: matrix is {0}x{0}, vector has length {1}",
                self.n,
                x.len()
            )));
        }
        let entries = (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x.entries())
                    .fold(MaxPlusScalar::Bottom, |acc, (a, v)| acc.oplus(&a.otimes(v)))
            })
            .collect();
        MaxPlusVector::new(entries)
    }

    /// True iff `x` is a proper solution: `(A (x) x)_i >= x_i` for every
    /// coordinate and the support of `x` is nonempty.
    ///
    /// Panics on a dimension mismatch (a programming error, not a data
    /// error; callers validate dimensions when reading untrusted input).
    pub fn is_solution(&self, x: &MaxPlusVector) -> bool {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        let ax = self.mat_vec(x).expect("dimensions checked");
        x.is_proper() && ax.entries().iter().zip(x.entries()).all(|(a, b)| a >= b)
    }

    /// Support coordinates whose constraint holds with equality:
    /// `{i in Supp(x) : (A (x) x)_i == x_i}`. Errors if `x` is not a
    /// proper solution.
    pub fn tight_rows(&self, x: &MaxPlusVector) -> Result<Vec<usize>> {
        let ax = self.solution_image(x)?;
        Ok(x.support()
            .into_iter()
            .filter(|&i| ax.get(i) == x.get(i))
            .collect())
    }

    /// Computes `A (x) x` and verifies that `x` is a proper solution,
    /// reporting the first violated row otherwise.
    pub fn solution_image(&self, x: &MaxPlusVector) -> Result<MaxPlusVector> {
        if x.len() != self.n {
            return Err(Error::invalid(format!(
                "dimension mismatch: matrix is {0}x{0}, vector has length {1}",
                self.n,
                x.len()
            )));
        }
        if !x.is_proper() {
            return Err(Error::invalid(
                "x has empty support: the all-bottom vector is excluded",
            ));
        }
        let ax = self.mat_vec(x)?;
        for i in 0..self.n {
            if ax.get(i) < x.get(i) {
                return Err(Error::invalid(format!(
                    "x is not a solution: row {} gives {} < {}",
                    i + 1,
                    ax.get(i),
                    x.get(i)
                )));
            }
        }
        Ok(ax)
    }
}

impl fmt::Display for MaxPlusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let tokens: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", tokens.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MaxPlusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\n{self}")
    }
}

impl FromStr for MaxPlusMatrix {
    type Err = Error;

    /// Parses one matrix row per non-blank line, whitespace-separated.
    fn from_str(text: &str) -> Result<Self> {
        let rows: Result<Vec<Vec<MaxPlusScalar>>> = text
            .lines()
            .filter(|line| !line.trim().is_empty())
            .map(|line| line.split_whitespace().map(|t| t.parse()).collect())
            .collect();
        MaxPlusMatrix::from_rows(rows?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 5x5 instance used throughout the crate's tests; x1 below is an
    /// extremal solution, x2 is not.
    fn five_node_matrix() -> MaxPlusMatrix {
        "-5 0 -inf -inf -inf\n\
         0 -inf -inf -inf -inf\n\
         0 -inf -inf -inf -inf\n\
         -inf -inf -3 -inf 0\n\
         -inf -inf -inf 0 -inf"
            .parse()
            .unwrap()
    }

    #[test]
    fn mat_vec_takes_row_maxima() {
        let a = five_node_matrix();
        let x: MaxPlusVector = "0 0 0 -3 -inf".parse().unwrap();
        let ax = a.mat_vec(&x).unwrap();
        // Independent per-row evaluation: row i max of a_ik + x_k.
        let mut expected = Vec::new();
        for i in 0..5 {
            let mut best = MaxPlusScalar::Bottom;
            for k in 0..5 {
                let term = a.get(i, k).otimes(x.get(k));
                if term > best {
                    best = term;
                }
            }
            expected.push(best);
        }
        assert_eq!(ax.entries(), expected.as_slice());
        assert_eq!(ax.to_string(), "0 0 0 -3 -3");
    }

    #[test]
    fn identity_is_neutral_for_mat_vec() {
        let x: MaxPlusVector = "3 -inf -7/2".parse().unwrap();
        assert_eq!(MaxPlusMatrix::identity(3).mat_vec(&x).unwrap(), x);
    }

    #[test]
    fn all_bottom_matrix_absorbs() {
        let a: MaxPlusMatrix = "-inf -inf\n-inf -inf".parse().unwrap();
        let x = MaxPlusVector::from_ints(&[1, 2]);
        assert_eq!(a.mat_vec(&x).unwrap().to_string(), "-inf -inf");
    }

    #[test]
    fn solution_membership() {
        let a = five_node_matrix();
        let x1: MaxPlusVector = "0 0 0 -3 -inf".parse().unwrap();
        let x2: MaxPlusVector = "0 0 0 0 0".parse().unwrap();
        assert!(a.is_solution(&x1));
        assert!(a.is_solution(&x2));
        let bottom: MaxPlusVector = "-inf -inf -inf -inf -inf".parse().unwrap();
        assert!(!a.is_solution(&bottom));
    }

    #[test]
    fn tight_rows_compare_image_to_x() {
        let a = five_node_matrix();
        let x1: MaxPlusVector = "0 0 0 -3 -inf".parse().unwrap();
        assert_eq!(a.tight_rows(&x1).unwrap(), vec![0, 1, 2, 3]);

        let identity = MaxPlusMatrix::identity(4);
        let x: MaxPlusVector = "0 -inf 2 -1".parse().unwrap();
        assert_eq!(identity.tight_rows(&x).unwrap(), x.support());

        // All rows strictly slack: diagonal entries above zero.
        let slack: MaxPlusMatrix = "1 -inf\n-inf 1".parse().unwrap();
        let y = MaxPlusVector::from_ints(&[0, 0]);
        assert_eq!(slack.tight_rows(&y).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn tight_rows_reject_non_solutions() {
        let a: MaxPlusMatrix = "-1 -inf\n-inf -1".parse().unwrap();
        let x = MaxPlusVector::from_ints(&[0, 0]);
        let err = a.tight_rows(&x).unwrap_err();
        assert!(err.to_string().contains("row 1"));
    }

    #[test]
    fn ragged_rows_are_rejected() {
        assert!("0 1\n2".parse::<MaxPlusMatrix>().is_err());
    }
}
