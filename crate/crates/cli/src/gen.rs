//! Deterministic random instance generation.
//!
//! Instances are built so that the drawn vector is always a solution:
//! first draw `x` with full support, then draw the matrix at the requested
//! density, then repair every row `i` whose constraint fails by planting
//! `a_ij := x_i − x_j` at one uniformly chosen column `j`, which makes the
//! row tight. Repair avoids the bias of rejection sampling: a density-0.1
//! draw stays sparse instead of being resampled until feasible.

use maxplus_core::{Error, MaxPlusMatrix, MaxPlusScalar, MaxPlusVector, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parameters for one deterministic draw.
#[derive(Clone, Debug)]
pub struct GenParams {
    /// Dimension, at least 1.
    pub n: usize,
    /// Probability that a matrix entry is finite, in (0, 1].
    pub density: f64,
    /// Smallest finite entry drawn.
    pub min: i64,
    /// Largest finite entry drawn.
    pub max: i64,
    /// Seed; identical parameters and seed give identical output bytes.
    pub seed: u64,
}

impl GenParams {
    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("the dimension must be at least 1"));
        }
        if !(self.density > 0.0 && self.density <= 1.0) {
            return Err(Error::invalid(format!(
                "the density must lie in (0, 1], got {}",
                self.density
            )));
        }
        if self.min > self.max {
            return Err(Error::invalid(format!(
                "empty entry range: {} > {}",
                self.min, self.max
            )));
        }
        const BOUND: i64 = 1 << 40;
        if self.min.abs() > BOUND || self.max.abs() > BOUND {
            return Err(Error::invalid(format!(
                "entry range must stay within ±{BOUND}"
            )));
        }
        Ok(())
    }
}

/// Draws a matrix and a vector with the vector guaranteed to be a solution.
pub fn generate(params: &GenParams) -> Result<(MaxPlusMatrix, MaxPlusVector)> {
    params.validate()?;
    let n = params.n;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    let xs: Vec<i64> = (0..n)
        .map(|_| rng.gen_range(params.min..=params.max))
        .collect();

    let mut grid: Vec<Vec<Option<i64>>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_bool(params.density) {
                        Some(rng.gen_range(params.min..=params.max))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();

    for i in 0..n {
        let best = grid[i]
            .iter()
            .zip(&xs)
            .filter_map(|(a, &xj)| a.map(|a| a + xj))
            .max();
        if best.is_none_or(|b| b < xs[i]) {
            let j = rng.gen_range(0..n);
            grid[i][j] = Some(xs[i] - xs[j]);
        }
    }

    let rows = grid
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| match v {
                    Some(v) => MaxPlusScalar::from_int(v),
                    None => MaxPlusScalar::Bottom,
                })
                .collect()
        })
        .collect();
    let a = MaxPlusMatrix::from_rows(rows)?;
    let x = MaxPlusVector::from_ints(&xs);
    debug_assert!(a.is_solution(&x));
    Ok((a, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, density: f64, seed: u64) -> GenParams {
        GenParams {
            n,
            density,
            min: -5,
            max: 5,
            seed,
        }
    }

    #[test]
    fn output_is_always_a_solution() {
        for seed in 0..200 {
            for &(n, d) in &[(1, 0.3), (2, 0.1), (4, 0.5), (7, 1.0)] {
                let (a, x) = generate(&params(n, d, seed)).unwrap();
                assert!(a.is_solution(&x), "seed {seed}, n {n}, density {d}");
                assert_eq!(x.support().len(), n, "full support");
            }
        }
    }

    #[test]
    fn identical_seeds_give_identical_instances() {
        let one = generate(&params(6, 0.4, 99)).unwrap();
        let two = generate(&params(6, 0.4, 99)).unwrap();
        assert_eq!(one, two);
        let three = generate(&params(6, 0.4, 100)).unwrap();
        assert_ne!(one, three);
    }

    #[test]
    fn one_by_one_entry_is_nonnegative() {
        // The only way a 1×1 row can hold x_1 is a_11 + x_1 ≥ x_1.
        let zero = MaxPlusScalar::from_int(0);
        for seed in 0..50 {
            let (a, _) = generate(&params(1, 0.5, seed)).unwrap();
            assert!(a.get(0, 0).is_finite());
            assert!(*a.get(0, 0) >= zero);
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(generate(&params(0, 0.5, 1)).is_err());
        assert!(generate(&params(3, 0.0, 1)).is_err());
        assert!(generate(&params(3, 1.5, 1)).is_err());
        let mut p = params(3, 0.5, 1);
        p.min = 7;
        p.max = -7;
        assert!(generate(&p).is_err());
    }
}
