//! Quick scaling measurements for the decision procedure.
//!
//! For each requested size a batch of dense instances is generated up
//! front; only the call to [`maxplus_core::check`] is timed. Consecutive
//! sizes are compared by the slope of the log-log line through their
//! median times: an O(n²) procedure shows slopes near 2.

use std::time::Instant;

use maxplus_core::{check, Error, Result};

use crate::gen::{generate, GenParams};

/// One measured size.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    /// Median over the repetitions, in seconds.
    pub median_secs: f64,
    /// log(t_k/t_{k-1}) / log(n_k/n_{k-1}); `None` on the first row.
    pub slope: Option<f64>,
}

/// Times `check` on freshly generated instances of each size.
///
/// Sizes are sorted and deduplicated first; each size runs `reps`
/// repetitions on distinct seeded instances.
pub fn run(sizes: &[usize], seed: u64, reps: usize, density: f64) -> Result<Vec<BenchRow>> {
    if sizes.is_empty() {
        return Err(Error::invalid("no sizes given"));
    }
    if let Some(&bad) = sizes.iter().find(|&&n| n < 2) {
        return Err(Error::invalid(format!("sizes must be at least 2, got {bad}")));
    }
    if reps == 0 {
        return Err(Error::invalid("need at least one repetition"));
    }

    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    sizes.dedup();

    let mut rows: Vec<BenchRow> = Vec::with_capacity(sizes.len());
    for &n in &sizes {
        let mut times: Vec<f64> = Vec::with_capacity(reps);
        for rep in 0..reps {
            // One instance per repetition, deterministically seeded.
            let inst_seed = seed
                .wrapping_add((n as u64) << 20)
                .wrapping_add(rep as u64);
            let (a, x) = generate(&GenParams {
                n,
                density,
                min: -9,
                max: 9,
                seed: inst_seed,
            })?;
            let t0 = Instant::now();
            let verdict = check(&a, &x)?;
            times.push(t0.elapsed().as_secs_f64());
            // Keep the verdict alive so the call cannot be elided.
            std::hint::black_box(verdict);
        }
        let median = median(&mut times);
        let slope = rows.last().map(|prev: &BenchRow| {
            (median / prev.median_secs).ln() / (n as f64 / prev.n as f64).ln()
        });
        rows.push(BenchRow {
            n,
            median_secs: median,
            slope,
        });
    }
    Ok(rows)
}

fn median(times: &mut [f64]) -> f64 {
    times.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite timings"));
    let mid = times.len() / 2;
    if times.len() % 2 == 1 {
        times[mid]
    } else {
        (times[mid - 1] + times[mid]) / 2.0
    }
}

/// Renders rows as an aligned text table.
pub fn format_table(rows: &[BenchRow]) -> String {
    let mut out = String::from("     n   median (ms)      slope\n");
    for row in rows {
        let slope = match row.slope {
            Some(s) => format!("{s:10.3}"),
            None => format!("{:>10}", "-"),
        };
        out.push_str(&format!(
            "{:6}  {:12.4} {slope}\n",
            row.n,
            row.median_secs * 1e3
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_come_back_sorted_with_slopes() {
        let rows = run(&[8, 4, 8], 7, 3, 1.0).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].n, 4);
        assert_eq!(rows[1].n, 8);
        assert!(rows[0].slope.is_none());
        assert!(rows[1].slope.is_some());
        assert!(rows.iter().all(|r| r.median_secs > 0.0));
    }

    #[test]
    fn single_size_has_no_slope() {
        let rows = run(&[5], 1, 3, 1.0).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].slope.is_none());
        let table = format_table(&rows);
        assert!(table.contains('5'));
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(run(&[], 0, 5, 1.0).is_err());
        assert!(run(&[1, 4], 0, 5, 1.0).is_err());
        assert!(run(&[4], 0, 0, 1.0).is_err());
    }
}
