//! Independent, definition-level oracle for extremality, used to
//! cross-validate the graph-based decision procedure.
//!
//! The oracle works with symbolically perturbed values `b - eps`, where
//! `eps` stands for one fixed infinitesimal in `(0, 1)` and all bases
//! are integers. Every comparison between such values then has the same
//! outcome for every concrete `eps` in `(0, 1)`, so one run of the
//! greatest-fixpoint iteration answers a strict-inequality question
//! exactly; instantiating `eps = 1/2` afterwards yields a concrete
//! witness vector that can be checked with ordinary arithmetic.
//!
//! `extremal_bruteforce` reduces extremality to feasibility questions:
//! `x` fails to be extremal exactly when two proper nonempty contact
//! sets `S1, S2` covering the support are both feasible, where `S`
//! is feasible when some proper solution `y <= x` agrees with `x`
//! exactly on `S` and stays strictly below elsewhere on the support.
//! The two feasibility witnesses then join back to `x`.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::MaxPlusMatrix;
use crate::scalar::MaxPlusScalar;
use crate::vector::MaxPlusVector;
use crate::witness::{verify_decomposition, WitnessPair, WitnessProvenance};

/// An integer symbolically lowered by `eps` (one infinitesimal in
/// `(0, 1)`), or bottom. Ordering is uniform in the choice of `eps`:
/// bases dominate, and for equal bases the unlowered value is larger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PerturbedValue {
    Bottom,
    Finite { base: BigInt, lowered: bool },
}

impl PerturbedValue {
    pub fn exact(base: impl Into<BigInt>) -> Self {
        PerturbedValue::Finite {
            base: base.into(),
            lowered: false,
        }
    }

    pub fn lowered(base: impl Into<BigInt>) -> Self {
        PerturbedValue::Finite {
            base: base.into(),
            lowered: true,
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, PerturbedValue::Bottom)
    }

    fn plus_base(&self, delta: &BigInt) -> Self {
        match self {
            PerturbedValue::Bottom => PerturbedValue::Bottom,
            PerturbedValue::Finite { base, lowered } => PerturbedValue::Finite {
                base: base + delta,
                lowered: *lowered,
            },
        }
    }

    /// Instantiates `eps = 1/2` and divides by `scale`, undoing the
    /// integer scaling of the system.
    fn concrete(&self, scale: &BigInt) -> MaxPlusScalar {
        match self {
            PerturbedValue::Bottom => MaxPlusScalar::Bottom,
            PerturbedValue::Finite { base, lowered } => {
                let mut value = BigRational::from_integer(base.clone());
                if *lowered {
                    value -= BigRational::new(BigInt::one(), BigInt::from(2));
                }
                MaxPlusScalar::Finite(value / BigRational::from_integer(scale.clone()))
            }
        }
    }
}

impl Ord for PerturbedValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use PerturbedValue::*;
        match (self, other) {
            (Bottom, Bottom) => std::cmp::Ordering::Equal,
            (Bottom, Finite { .. }) => std::cmp::Ordering::Less,
            (Finite { .. }, Bottom) => std::cmp::Ordering::Greater,
            (
                Finite { base: b1, lowered: l1 },
                Finite { base: b2, lowered: l2 },
            ) => b1.cmp(b2).then_with(|| l2.cmp(l1)),
        }
    }
}

impl PartialOrd for PerturbedValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn integer_entries(a: &MaxPlusMatrix) -> Result<Vec<Option<BigInt>>> {
    let n = a.n();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(match a.get(i, j).finite() {
                None => None,
                Some(r) if r.is_integer() => Some(r.to_integer()),
                Some(_) => {
                    return Err(Error::invalid(format!(
                        "matrix entry at row {}, column {} is not an integer; \
                         scale the system first",
                        i + 1,
                        j + 1
                    )))
                }
            });
        }
    }
    Ok(entries)
}

/// Greatest vector `y <= cap` with `A (x) y >= y`, over symbolically
/// perturbed values. The matrix must have integer (or bottom) entries.
///
/// Starting from the cap, the Jacobi step `y <- cap /\ (A (x) y)` is
/// applied until it stabilizes. Every iterate dominates every capped
/// solution, so the limit is the greatest one. A coordinate of the true
/// greatest solution is either bottom or reaches a cap along at most
/// `n - 1` arcs, which bounds it below by the floor `L`; iterates
/// falling to `L` or beyond are therefore forced to bottom, which also
/// forces termination.
pub fn greatest_capped_solution(
    a: &MaxPlusMatrix,
    cap: &[PerturbedValue],
) -> Result<Vec<PerturbedValue>> {
    let n = a.n();
    if cap.len() != n {
        return Err(Error::invalid(format!(
            "cap has length {} but the matrix has dimension {n}",
            cap.len()
        )));
    }
    let entries = integer_entries(a)?;

    let weight = entries
        .iter()
        .flatten()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero);
    let min_cap_base = cap
        .iter()
        .filter_map(|c| match c {
            PerturbedValue::Finite { base, .. } => Some(base.clone()),
            PerturbedValue::Bottom => None,
        })
        .min();
    let min_cap_base = match min_cap_base {
        Some(b) => b,
        None => return Ok(cap.to_vec()), // the all-bottom cap is a fixpoint
    };
    let floor = &min_cap_base - BigInt::from(n) * &weight - BigInt::one();

    // Each non-final round strictly lowers some coordinate, whose base
    // travels from its cap down to the floor in unit-or-larger steps
    // with at most one extra eps-only step per base value.
    let mut budget = BigInt::one();
    for c in cap {
        if let PerturbedValue::Finite { base, .. } = c {
            budget += BigInt::from(2) * (base - &floor) + BigInt::from(4);
        }
    }

    let mut y = cap.to_vec();
    loop {
        let mut next = Vec::with_capacity(n);
        for i in 0..n {
            let mut best = PerturbedValue::Bottom;
            for (j, yj) in y.iter().enumerate() {
                if let Some(w) = &entries[i * n + j] {
                    let term = yj.plus_base(w);
                    if term > best {
                        best = term;
                    }
                }
            }
            let mut z = best.min(cap[i].clone());
            if let PerturbedValue::Finite { base, .. } = &z {
                if base <= &floor {
                    z = PerturbedValue::Bottom;
                }
            }
            next.push(z);
        }
        if next == y {
            return Ok(y);
        }
        y = next;
        budget -= BigInt::one();
        if budget.is_negative() {
            return Err(Error::invariant(
                "capped fixpoint iteration exceeded its round budget".to_string(),
            ));
        }
    }
}

/// Least common multiple of all denominators appearing in the system,
/// i.e. the factor that makes every finite value an integer.
fn common_scale(a: &MaxPlusMatrix, x: &MaxPlusVector) -> BigInt {
    let mut m = BigInt::one();
    let mut absorb = |r: &BigRational| {
        m = m.lcm(r.denom());
    };
    for i in 0..a.n() {
        for j in 0..a.n() {
            if let Some(r) = a.get(i, j).finite() {
                absorb(r);
            }
        }
        if let Some(r) = x.get(i).finite() {
            absorb(r);
        }
    }
    m
}

fn scaled_matrix(a: &MaxPlusMatrix, m: &BigInt) -> MaxPlusMatrix {
    let factor = BigRational::from_integer(m.clone());
    let n = a.n();
    let rows: Vec<Vec<MaxPlusScalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match a.get(i, j).finite() {
                    None => MaxPlusScalar::Bottom,
                    Some(r) => MaxPlusScalar::Finite(r * &factor),
                })
                .collect()
        })
        .collect();
    MaxPlusMatrix::from_rows(rows).expect("same shape as a")
}

/// Asks whether some proper solution `y <= x` touches `x` exactly on
/// the coordinate set `s` (and stays strictly below `x` on the rest of
/// the support). Returns such a `y`, with `eps` instantiated to `1/2`
/// of the scaled grid, or `None` when the set is infeasible.
pub fn is_feasible_fixed_set(
    a: &MaxPlusMatrix,
    x: &MaxPlusVector,
    s: &[usize],
) -> Result<Option<MaxPlusVector>> {
    a.solution_image(x)?;
    let n = a.n();
    let mut fixed = vec![false; n];
    for &i in s {
        if i >= n {
            return Err(Error::invalid(format!(
                "the fixed set mentions coordinate {} outside the dimension {n}",
                i + 1
            )));
        }
        if x.get(i).is_bottom() {
            return Err(Error::invalid(format!(
                "the fixed set mentions coordinate {} outside the support",
                i + 1
            )));
        }
        if fixed[i] {
            return Err(Error::invalid(format!(
                "the fixed set mentions coordinate {} twice",
                i + 1
            )));
        }
        fixed[i] = true;
    }

    let m = common_scale(a, x);
    let scaled = scaled_matrix(a, &m);
    let factor = BigRational::from_integer(m.clone());
    let cap: Vec<PerturbedValue> = (0..n)
        .map(|i| match x.get(i).finite() {
            None => PerturbedValue::Bottom,
            Some(r) => {
                let base = (r * &factor).to_integer();
                if fixed[i] {
                    PerturbedValue::exact(base)
                } else {
                    PerturbedValue::lowered(base)
                }
            }
        })
        .collect();

    let fix = greatest_capped_solution(&scaled, &cap)?;
    let keeps_contact = (0..n).all(|i| !fixed[i] || fix[i] == cap[i]);
    let proper = fix.iter().any(|v| !v.is_bottom());
    if !keeps_contact || !proper {
        return Ok(None);
    }
    let entries: Vec<MaxPlusScalar> = fix.iter().map(|v| v.concrete(&m)).collect();
    Ok(Some(MaxPlusVector::new(entries).expect("n >= 1")))
}

/// Oracle verdict: either extremal, or a concrete verified
/// decomposition found by subset search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Extremal,
    NotExtremal(WitnessPair),
}

impl OracleVerdict {
    pub fn is_extremal(&self) -> bool {
        matches!(self, OracleVerdict::Extremal)
    }

    pub fn witness(&self) -> Option<&WitnessPair> {
        match self {
            OracleVerdict::Extremal => None,
            OracleVerdict::NotExtremal(pair) => Some(pair),
        }
    }
}

/// Decides extremality from the definition: `x` decomposes as
/// `x1 (+) x2` with both parts proper solutions strictly below `x`
/// exactly when two proper nonempty contact sets covering the support
/// are both feasible. All `2^s - 2` candidate sets are tried, so the
/// support size `s` is capped at 12. The first feasible covering pair
/// (sets enumerated in ascending mask order over the sorted support) is
/// returned as a verified witness.
pub fn extremal_bruteforce(a: &MaxPlusMatrix, x: &MaxPlusVector) -> Result<OracleVerdict> {
    a.solution_image(x)?;
    let support = x.support();
    let s = support.len();
    if s > 12 {
        return Err(Error::invalid(format!(
            "support size {s} exceeds the brute-force cap of 12"
        )));
    }

    let full: u32 = (1u32 << s) - 1;
    let mut feasible: Vec<(u32, MaxPlusVector)> = Vec::new();
    for mask in 1..full {
        let subset: Vec<usize> = (0..s)
            .filter(|&k| mask & (1 << k) != 0)
            .map(|k| support[k])
            .collect();
        if let Some(vector) = is_feasible_fixed_set(a, x, &subset)? {
            feasible.push((mask, vector));
        }
    }

    for (idx, (mask1, x1)) in feasible.iter().enumerate() {
        for (mask2, x2) in &feasible[idx + 1..] {
            if mask1 | mask2 == full {
                let pair = WitnessPair {
                    x1: x1.clone(),
                    x2: x2.clone(),
                    provenance: WitnessProvenance::SubsetSearch,
                };
                verify_decomposition(a, x, &pair).map_err(|e| {
                    Error::invariant(format!(
                        "subset search produced an invalid decomposition: {e}"
                    ))
                })?;
                return Ok(OracleVerdict::NotExtremal(pair));
            }
        }
    }
    Ok(OracleVerdict::Extremal)
}
