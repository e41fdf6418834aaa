//! Exact max-plus (tropical) linear algebra over the rationals, and a
//! quadratic-time decision procedure for whether a solution of
//! `A (x) x >= x` is an extremal generator of the solution set.
//!
//! The semiring is `(Q u {-inf}, max, +)` with `(+)` for `max` and
//! `(x)` for `+`. A proper solution (one with nonempty support) is
//! extremal when it cannot be written as the pointwise join of two
//! proper solutions dominated by it and distinct from it. Extremality
//! turns out to be a purely combinatorial property of the *tangent
//! digraph* of the solution — the graph of tight row/column incidences —
//! namely weak connectivity, absence of two node-disjoint cycles, and at
//! most one variable node.
//!
//! Modules:
//! - [`scalar`], [`vector`], [`matrix`]: exact max-plus arithmetic with
//!   a distinguished bottom element, text parsing and printing.
//! - [`digraph`]: tangent digraph construction, node classification
//!   (invariable / type I / type II variable), DOT export.
//! - [`extremality`]: the three-criteria decision procedure with
//!   machine-checkable evidence, plus a brute-force cross-check.
//! - [`witness`]: constructions that turn evidence into an explicit
//!   decomposition `x = x1 (+) x2`, and an independent verifier.
//! - [`oracle`]: a definition-level baseline using symbolically
//!   perturbed values, for cross-validation.

pub mod digraph;
pub mod error;
pub mod extremality;
pub mod matrix;
pub mod oracle;
pub mod scalar;
pub mod vector;
pub mod witness;

pub use digraph::{NodeClass, TangentDigraph};
pub use error::{Error, Result};
pub use extremality::{
    check, check_with_stats, has_two_disjoint_cycles_bruteforce, CheckStats,
    Evidence, ExtremalityVerdict, ViolatedCondition,
};
pub use matrix::MaxPlusMatrix;
pub use oracle::{
    extremal_bruteforce, is_feasible_fixed_set, OracleVerdict, PerturbedValue,
};
pub use scalar::MaxPlusScalar;
pub use vector::MaxPlusVector;
pub use witness::{
    find_witness, verify_decomposition, WitnessPair, WitnessProvenance,
};
