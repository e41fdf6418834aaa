//! Decides whether a solution of `A (x) x >= x` is an extremal generator
//! of the solution set.
//!
//! A proper solution `x` is extremal exactly when its tangent digraph
//! satisfies all three of:
//!
//! 1. no proper nonempty isolated subset of the support (weak
//!    connectivity),
//! 2. no two node-disjoint elementary cycles,
//! 3. at most one variable node.
//!
//! `check` decides this in `O(n^2)` total work. After the cheap degree
//! screens, the interesting case has exactly one node `o` of in-degree
//! two or more; every other node then has exactly one incoming arc and no
//! loop, so the reversed digraph is an `o`-fountain: unique-successor
//! walks from `o` (the *jets*) and one reachability sweep decide
//! condition 2 without general cycle enumeration. Each arc is touched a
//! bounded number of times, which `CheckStats` records.

use serde_json::{json, Value};

use crate::digraph::TangentDigraph;
use crate::error::{Error, Result};
use crate::matrix::MaxPlusMatrix;
use crate::vector::MaxPlusVector;
use crate::witness::WitnessPair;

/// Which of the three extremality conditions a non-extremal verdict
/// violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolatedCondition {
    IsolatedSubset,
    DisjointCycles,
    TwoVariableNodes,
}

impl ViolatedCondition {
    pub fn name(self) -> &'static str {
        match self {
            ViolatedCondition::IsolatedSubset => "ISOLATED_SUBSET",
            ViolatedCondition::DisjointCycles => "DISJOINT_CYCLES",
            ViolatedCondition::TwoVariableNodes => "TWO_VARIABLE_NODES",
        }
    }
}

/// Checkable evidence attached to a non-extremal verdict. Node indices
/// are 0-based internally; cycles list their nodes in arc order (each
/// consecutive pair, wrapping around, is an arc of the tangent digraph),
/// rotated so the smallest node comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    IsolatedSubset {
        subset: Vec<usize>,
        complement: Vec<usize>,
    },
    DisjointCycles {
        cycle1: Vec<usize>,
        cycle2: Vec<usize>,
    },
    TwoVariableNodes {
        node1: usize,
        node2: usize,
    },
}

impl Evidence {
    pub fn condition(&self) -> ViolatedCondition {
        match self {
            Evidence::IsolatedSubset { .. } => ViolatedCondition::IsolatedSubset,
            Evidence::DisjointCycles { .. } => ViolatedCondition::DisjointCycles,
            Evidence::TwoVariableNodes { .. } => ViolatedCondition::TwoVariableNodes,
        }
    }

    fn to_json(&self) -> Value {
        fn one_based(nodes: &[usize]) -> Vec<usize> {
            nodes.iter().map(|&i| i + 1).collect()
        }
        match self {
            Evidence::IsolatedSubset { subset, complement } => json!({
                "subset": one_based(subset),
                "complement": one_based(complement),
            }),
            Evidence::DisjointCycles { cycle1, cycle2 } => json!({
                "cycle1": one_based(cycle1),
                "cycle2": one_based(cycle2),
            }),
            Evidence::TwoVariableNodes { node1, node2 } => json!({
                "node1": node1 + 1,
                "node2": node2 + 1,
            }),
        }
    }
}

/// The outcome of an extremality check. `evidence` is present exactly
/// when the vector is not extremal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalityVerdict {
    pub is_extremal: bool,
    pub evidence: Option<Evidence>,
}

impl ExtremalityVerdict {
    fn extremal() -> Self {
        ExtremalityVerdict {
            is_extremal: true,
            evidence: None,
        }
    }

    fn violation(evidence: Evidence) -> Self {
        ExtremalityVerdict {
            is_extremal: false,
            evidence: Some(evidence),
        }
    }

    pub fn violated_condition(&self) -> Option<ViolatedCondition> {
        self.evidence.as_ref().map(Evidence::condition)
    }

    /// Serializes the verdict (and an optional verified witness pair) as
    /// `{extremal, condition, evidence, witness}` with 1-based indices
    /// and scalar entries rendered as text tokens.
    pub fn to_json(&self, witness: Option<&WitnessPair>) -> Value {
        json!({
            "extremal": self.is_extremal,
            "condition": self.violated_condition().map(|c| c.name()),
            "evidence": self.evidence.as_ref().map(Evidence::to_json),
            "witness": witness.map(WitnessPair::to_json),
        })
    }
}

/// Instrumentation from one `check_with_stats` run: whether the jet
/// phase ran, and how often each arc of the tangent digraph was walked
/// during the jet scan, the cover sweep, and evidence extraction
/// (indexed like `TangentDigraph::arcs`).
#[derive(Clone, Debug)]
pub struct CheckStats {
    pub entered_jet_phase: bool,
    pub arc_visits: Vec<u32>,
}

impl CheckStats {
    pub fn max_arc_visits(&self) -> u32 {
        self.arc_visits.iter().copied().max().unwrap_or(0)
    }
}

/// Per-jet walk record. `nodes` are the nodes first claimed by this jet,
/// in walk order (excluding `o`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetTrace {
    pub first_node: usize,
    pub nodes: Vec<usize>,
    pub outcome: JetOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JetOutcome {
    /// The walk returned to `o`.
    OCycle,
    /// The walk closed a new cycle avoiding `o`; index into
    /// `JetSummary::sigma_cycles`.
    NewSigma(usize),
    /// The walk reached a node claimed by an earlier jet and inherits
    /// that jet's outcome; the value is the earlier jet's index.
    MergedInto(usize),
}

/// Result of scanning all jets out of `o` in the reversed digraph.
///
/// Cycles are reported in the forward (tangent digraph) orientation,
/// canonically rotated. Distinct sigma cycles are automatically
/// node-disjoint, and any sigma cycle is node-disjoint from any cycle
/// through `o`, so the caller only has to count them.
#[derive(Clone, Debug)]
pub struct JetSummary {
    pub sigma_cycles: Vec<Vec<usize>>,
    pub has_o_cycle: bool,
    pub o_cycle: Option<Vec<usize>>,
    pub jet_traces: Vec<JetTrace>,
}

/// Rotates an elementary cycle so its smallest node comes first.
fn canonical_cycle(nodes: &[usize]) -> Vec<usize> {
    let pivot = nodes
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(p, _)| p)
        .expect("cycle is nonempty");
    let mut rotated = Vec::with_capacity(nodes.len());
    rotated.extend_from_slice(&nodes[pivot..]);
    rotated.extend_from_slice(&nodes[..pivot]);
    rotated
}

/// Converts a cycle recorded along reversed arcs into the forward
/// orientation and canonicalizes it.
fn forward_cycle(reversed_walk: &[usize]) -> Vec<usize> {
    let forward: Vec<usize> = reversed_walk.iter().rev().copied().collect();
    canonical_cycle(&forward)
}

/// Verifies the fountain shape of a reversed tangent digraph: every node
/// except `o` has exactly one outgoing arc and no loop, and `o` has at
/// least two. This is a theorem for the digraphs that reach the jet
/// phase, so a failure is an internal error, not bad input.
fn require_fountain(g_rev: &TangentDigraph, o: usize) -> Result<()> {
    if !g_rev.contains_node(o) {
        return Err(Error::invalid(format!("node {} is not in the support", o + 1)));
    }
    if g_rev.out_degree(o) < 2 {
        return Err(Error::invariant(format!(
            "fountain root {} has out-degree {} < 2",
            o + 1,
            g_rev.out_degree(o)
        )));
    }
    for &u in g_rev.nodes() {
        if u == o {
            continue;
        }
        if g_rev.out_degree(u) != 1 || g_rev.has_loop(u) {
            return Err(Error::invariant(format!(
                "node {} breaks the fountain shape (out-degree {}, loop: {})",
                u + 1,
                g_rev.out_degree(u),
                g_rev.has_loop(u)
            )));
        }
    }
    Ok(())
}

/// The unique outgoing arc of a non-root node in a fountain, as
/// `(arc index, successor)`.
fn unique_successor(g_rev: &TangentDigraph, u: usize) -> (usize, usize) {
    let idx = g_rev.out_arcs(u)[0];
    (idx, g_rev.arcs()[idx].1)
}

/// Walks every jet out of `o` in the reversed digraph `g_rev`.
///
/// Jets are processed in ascending order of their first node. Each walk
/// follows unique successors until it returns to `o` (an o-cycle),
/// revisits one of its own nodes (a new sigma cycle), or reaches a node
/// claimed by an earlier jet (a merge, inheriting that jet's outcome).
/// No arc is traversed twice across all jets; `visits` (indexed like
/// `g_rev.arcs()`) is incremented per traversal to make that checkable.
pub fn jet_scan(
    g_rev: &TangentDigraph,
    o: usize,
    visits: &mut [u32],
) -> Result<JetSummary> {
    require_fountain(g_rev, o)?;
    assert_eq!(visits.len(), g_rev.arcs().len(), "visit counters mismatch");

    const UNCLAIMED: usize = usize::MAX;
    let mut claimed_by = vec![UNCLAIMED; g_rev.dimension()];

    let mut starts: Vec<(usize, usize)> = g_rev
        .out_arcs(o)
        .iter()
        .map(|&idx| (g_rev.arcs()[idx].1, idx))
        .collect();
    starts.sort_unstable();

    let mut summary = JetSummary {
        sigma_cycles: Vec::new(),
        has_o_cycle: false,
        o_cycle: None,
        jet_traces: Vec::new(),
    };

    for (jet_id, &(start, start_arc)) in starts.iter().enumerate() {
        visits[start_arc] += 1;
        if start == o {
            // A loop on o is the shortest possible o-cycle.
            summary.has_o_cycle = true;
            summary.o_cycle.get_or_insert_with(|| vec![o]);
            summary.jet_traces.push(JetTrace {
                first_node: start,
                nodes: Vec::new(),
                outcome: JetOutcome::OCycle,
            });
            continue;
        }

        let mut path: Vec<usize> = Vec::new();
        let mut current = start;
        let outcome = loop {
            let owner = claimed_by[current];
            if owner != UNCLAIMED {
                if owner == jet_id {
                    // Closed a cycle within this jet's own path.
                    let pos = path
                        .iter()
                        .position(|&u| u == current)
                        .expect("claimed by the running jet");
                    let cycle = forward_cycle(&path[pos..]);
                    summary.sigma_cycles.push(cycle);
                    let sigma_index = summary.sigma_cycles.len() - 1;
                    break JetOutcome::NewSigma(sigma_index);
                }
                // Reached an earlier jet: from here the walk retraces
                // that jet, so this jet ends the same way.
                break JetOutcome::MergedInto(owner);
            }
            claimed_by[current] = jet_id;
            path.push(current);
            let (arc, next) = unique_successor(g_rev, current);
            visits[arc] += 1;
            if next == o {
                summary.has_o_cycle = true;
                if summary.o_cycle.is_none() {
                    let mut walk = vec![o];
                    walk.extend_from_slice(&path);
                    summary.o_cycle = Some(forward_cycle(&walk));
                }
                break JetOutcome::OCycle;
            }
            current = next;
        };
        summary.jet_traces.push(JetTrace {
            first_node: start,
            nodes: path,
            outcome,
        });
    }

    Ok(summary)
}

/// Computes the cover `D-bar_o` of the reversed digraph — the nodes
/// reachable from `o` plus every node with a directed path into that set
/// — and returns the nodes outside it, ascending. A nonempty remainder
/// certifies a cycle node-disjoint from everything reachable from `o`.
pub fn remainder_after_cover(
    g_rev: &TangentDigraph,
    o: usize,
    visits: &mut [u32],
) -> Result<Vec<usize>> {
    require_fountain(g_rev, o)?;
    assert_eq!(visits.len(), g_rev.arcs().len(), "visit counters mismatch");

    let n = g_rev.dimension();
    let mut covered = vec![false; n];
    covered[o] = true;
    let mut queue = vec![o];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &arc in g_rev.out_arcs(u) {
            visits[arc] += 1;
            let v = g_rev.arcs()[arc].1;
            if !covered[v] {
                covered[v] = true;
                queue.push(v);
            }
        }
    }
    // Pull in every node that can reach the forward set, re-sweeping the
    // same queue backwards along incoming arcs.
    head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &arc in g_rev.in_arcs(u) {
            visits[arc] += 1;
            let w = g_rev.arcs()[arc].0;
            if !covered[w] {
                covered[w] = true;
                queue.push(w);
            }
        }
    }
    Ok(g_rev
        .nodes()
        .iter()
        .copied()
        .filter(|&u| !covered[u])
        .collect())
}

/// Extracts the unique cycle inside the remainder by a unique-successor
/// walk, reported in forward orientation.
fn remainder_cycle(
    g_rev: &TangentDigraph,
    remainder: &[usize],
    visits: &mut [u32],
) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let mut position = vec![UNSEEN; g_rev.dimension()];
    let mut walk: Vec<usize> = Vec::new();
    let mut current = remainder[0];
    loop {
        position[current] = walk.len();
        walk.push(current);
        let (arc, next) = unique_successor(g_rev, current);
        visits[arc] += 1;
        if position[next] != UNSEEN {
            return forward_cycle(&walk[position[next]..]);
        }
        current = next;
    }
}

/// Decides extremality of `x`, additionally returning traversal
/// statistics. Errors if `x` is not a proper solution
/// (`InvalidInput`), or if an internal structure theorem fails to hold
/// (`InvariantViolation`, indicating a bug).
pub fn check_with_stats(
    a: &MaxPlusMatrix,
    x: &MaxPlusVector,
) -> Result<(ExtremalityVerdict, CheckStats)> {
    a.solution_image(x)?;
    let no_stats = |extra: usize| CheckStats {
        entered_jet_phase: false,
        arc_visits: vec![0; extra],
    };

    // A single support coordinate is always extremal.
    if x.support().len() == 1 {
        return Ok((ExtremalityVerdict::extremal(), no_stats(0)));
    }

    let g = TangentDigraph::build(a, x)?;

    // Condition 3 first: more than one variable node.
    let variables = g.variable_nodes();
    if variables.len() > 1 {
        let verdict = ExtremalityVerdict::violation(Evidence::TwoVariableNodes {
            node1: variables[0],
            node2: variables[1],
        });
        return Ok((verdict, no_stats(g.arcs().len())));
    }

    // With every in-degree at most one, each weak component carries at
    // most one cycle, so conditions 1 and 2 coincide and connectivity
    // alone decides.
    if g.nodes().iter().all(|&u| g.in_degree(u) <= 1) {
        let components = g.weak_components();
        if components.len() == 1 {
            return Ok((ExtremalityVerdict::extremal(), no_stats(g.arcs().len())));
        }
        let subset = components[0].clone();
        let mut complement: Vec<usize> =
            components[1..].iter().flatten().copied().collect();
        complement.sort_unstable();
        let verdict = ExtremalityVerdict::violation(Evidence::IsolatedSubset {
            subset,
            complement,
        });
        return Ok((verdict, no_stats(g.arcs().len())));
    }

    // Exactly one node of in-degree >= 2 can exist here: all remaining
    // nodes must have exactly one incoming arc and no loop. Both facts
    // are theorems for digraphs with at most one variable node, so we
    // assert rather than assume them.
    let heavy: Vec<usize> = g
        .nodes()
        .iter()
        .copied()
        .filter(|&u| g.in_degree(u) >= 2)
        .collect();
    if heavy.len() != 1 {
        return Err(Error::invariant(format!(
            "expected exactly one node of in-degree >= 2, found {:?}",
            heavy.iter().map(|&u| u + 1).collect::<Vec<_>>()
        )));
    }
    let o = heavy[0];
    for &u in g.nodes() {
        if u != o && (g.in_degree(u) != 1 || g.has_loop(u)) {
            return Err(Error::invariant(format!(
                "node {} should have exactly one incoming arc and no loop \
                 (in-degree {}, loop: {})",
                u + 1,
                g.in_degree(u),
                g.has_loop(u)
            )));
        }
    }

    let g_rev = g.reverse();
    let mut visits = vec![0u32; g.arcs().len()];
    let jets = jet_scan(&g_rev, o, &mut visits)?;

    let finish = |verdict: ExtremalityVerdict, visits: Vec<u32>| {
        let stats = CheckStats {
            entered_jet_phase: true,
            arc_visits: visits,
        };
        Ok((verdict, stats))
    };

    // Two distinct sigma cycles, or a sigma cycle alongside an o-cycle,
    // are node-disjoint by construction.
    if jets.sigma_cycles.len() >= 2 {
        let evidence = disjoint_cycles_evidence(
            jets.sigma_cycles[0].clone(),
            jets.sigma_cycles[1].clone(),
        );
        return finish(ExtremalityVerdict::violation(evidence), visits);
    }
    if jets.has_o_cycle && !jets.sigma_cycles.is_empty() {
        let o_cycle = jets.o_cycle.clone().expect("recorded with has_o_cycle");
        let evidence =
            disjoint_cycles_evidence(o_cycle, jets.sigma_cycles[0].clone());
        return finish(ExtremalityVerdict::violation(evidence), visits);
    }

    let remainder = remainder_after_cover(&g_rev, o, &mut visits)?;
    if !remainder.is_empty() {
        let first = jets
            .sigma_cycles
            .first()
            .cloned()
            .or_else(|| jets.o_cycle.clone())
            .ok_or_else(|| {
                Error::invariant("jet scan finished without any cycle".to_string())
            })?;
        let second = remainder_cycle(&g_rev, &remainder, &mut visits);
        let evidence = disjoint_cycles_evidence(first, second);
        return finish(ExtremalityVerdict::violation(evidence), visits);
    }

    finish(ExtremalityVerdict::extremal(), visits)
}

fn disjoint_cycles_evidence(a: Vec<usize>, b: Vec<usize>) -> Evidence {
    // Canonical cycles start at their smallest node; order the pair by it.
    if a[0] <= b[0] {
        Evidence::DisjointCycles { cycle1: a, cycle2: b }
    } else {
        Evidence::DisjointCycles { cycle1: b, cycle2: a }
    }
}

/// Decides extremality of `x`. See `check_with_stats` for the errors.
pub fn check(a: &MaxPlusMatrix, x: &MaxPlusVector) -> Result<ExtremalityVerdict> {
    check_with_stats(a, x).map(|(verdict, _)| verdict)
}

/// Definition-level test for two node-disjoint elementary cycles, by
/// enumerating all elementary cycles. Exponential; capped at 12 nodes
/// and meant for cross-validation in tests, not production use.
pub fn has_two_disjoint_cycles_bruteforce(g: &TangentDigraph) -> Result<bool> {
    let nodes = g.nodes();
    let count = nodes.len();
    if count > 12 {
        return Err(Error::invalid(format!(
            "{count} nodes exceed the brute-force cap of 12"
        )));
    }
    let mut position = vec![usize::MAX; g.dimension()];
    for (p, &u) in nodes.iter().enumerate() {
        position[u] = p;
    }
    let successors: Vec<Vec<usize>> = nodes
        .iter()
        .map(|&u| {
            g.out_arcs(u)
                .iter()
                .map(|&idx| position[g.arcs()[idx].1])
                .collect()
        })
        .collect();

    // Enumerate each elementary cycle exactly once: only walk positions
    // strictly above the start, closing back to the start.
    fn explore(
        current: usize,
        start: usize,
        mask: u32,
        successors: &[Vec<usize>],
        cycles: &mut Vec<u32>,
    ) -> bool {
        for &next in &successors[current] {
            if next == start {
                if cycles.iter().any(|&m| m & mask == 0) {
                    return true;
                }
                cycles.push(mask);
            } else if next > start && mask & (1 << next) == 0 {
                if explore(next, start, mask | (1 << next), successors, cycles) {
                    return true;
                }
            }
        }
        false
    }

    let mut cycles: Vec<u32> = Vec::new();
    for start in 0..count {
        if explore(start, start, 1 << start, &successors, &mut cycles) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::MaxPlusScalar;

    fn five_node_matrix() -> MaxPlusMatrix {
        "-5 0 -inf -inf -inf\n\
         0 -inf -inf -inf -inf\n\
         0 -inf -inf -inf -inf\n\
         -inf -inf -3 -inf 0\n\
         -inf -inf -inf 0 -inf"
            .parse()
            .unwrap()
    }

    /// Builds a tangent digraph with exactly the given arcs on `n` nodes:
    /// arc (j, i) is realized by a zero entry `a_ij` against the all-zero
    /// vector, and rows without incoming arcs are kept strictly slack.
    fn digraph_from_arcs(n: usize, arcs: &[(usize, usize)]) -> TangentDigraph {
        let mut rows = vec![vec![MaxPlusScalar::Bottom; n]; n];
        for &(j, i) in arcs {
            rows[i][j] = MaxPlusScalar::from_int(0);
        }
        for (i, row) in rows.iter_mut().enumerate() {
            if arcs.iter().all(|&(_, head)| head != i) {
                row[(i + 1) % n] = MaxPlusScalar::from_int(1);
            }
        }
        let a = MaxPlusMatrix::from_rows(rows).unwrap();
        let x = MaxPlusVector::from_ints(&vec![0; n]);
        let g = TangentDigraph::build(&a, &x).unwrap();
        assert_eq!(g.arcs().len(), arcs.len());
        g
    }

    fn check_verdict(a: &MaxPlusMatrix, x: &str) -> ExtremalityVerdict {
        check(a, &x.parse().unwrap()).unwrap()
    }

    #[test]
    fn extremal_and_isolated_subset_on_the_reference_instance() {
        let a = five_node_matrix();
        let v1 = check_verdict(&a, "0 0 0 -3 -inf");
        assert!(v1.is_extremal);
        assert_eq!(v1.evidence, None);

        let v2 = check_verdict(&a, "0 0 0 0 0");
        assert!(!v2.is_extremal);
        assert_eq!(
            v2.evidence,
            Some(Evidence::IsolatedSubset {
                subset: vec![0, 1, 2],
                complement: vec![3, 4],
            })
        );
        assert_eq!(
            v2.violated_condition(),
            Some(ViolatedCondition::IsolatedSubset)
        );
    }

    #[test]
    fn single_support_coordinate_is_extremal() {
        let a: MaxPlusMatrix = "3".parse().unwrap();
        assert!(check_verdict(&a, "0").is_extremal);
        let b: MaxPlusMatrix = "-inf -inf\n0 0".parse().unwrap();
        assert!(check_verdict(&b, "-inf 0").is_extremal);
    }

    #[test]
    fn two_variable_nodes_are_detected() {
        let a: MaxPlusMatrix = "0 0\n-inf 0".parse().unwrap();
        let verdict = check_verdict(&a, "0 0");
        assert_eq!(
            verdict.evidence,
            Some(Evidence::TwoVariableNodes { node1: 0, node2: 1 })
        );
    }

    #[test]
    fn fountain_branch_accepts_a_merged_sigma() {
        // Arcs (1,0), (0,1), (0,2), (1,2): node 2 has in-degree two, the
        // only cycle is {0,1}; extremal.
        let a: MaxPlusMatrix = "-inf 0 -inf\n0 -inf -inf\n0 0 -inf".parse().unwrap();
        let x = MaxPlusVector::from_ints(&[0, 0, 0]);
        let (verdict, stats) = check_with_stats(&a, &x).unwrap();
        assert!(verdict.is_extremal);
        assert!(stats.entered_jet_phase);
        assert!(stats.max_arc_visits() <= 4);
    }

    #[test]
    fn fountain_branch_rejects_o_cycle_next_to_sigma() {
        // Loop at node 0 plus the cycle {1,2}: two node-disjoint cycles.
        let a: MaxPlusMatrix = "0 0 -inf\n-inf -inf 0\n-inf 0 -inf".parse().unwrap();
        let verdict = check_verdict(&a, "0 0 0");
        assert_eq!(
            verdict.evidence,
            Some(Evidence::DisjointCycles {
                cycle1: vec![0],
                cycle2: vec![1, 2],
            })
        );
    }

    #[test]
    fn fountain_branch_rejects_uncovered_remainder() {
        // Component {0,1,2} as in the merged-sigma test, plus the
        // separate cycle {3,4} that nothing connects to the fountain.
        let a: MaxPlusMatrix = "-inf 0 -inf -inf -inf\n\
                                0 -inf -inf -inf -inf\n\
                                0 0 -inf -inf -inf\n\
                                -inf -inf -inf -inf 0\n\
                                -inf -inf -inf 0 -inf"
            .parse()
            .unwrap();
        let x = MaxPlusVector::from_ints(&[0, 0, 0, 0, 0]);
        let (verdict, stats) = check_with_stats(&a, &x).unwrap();
        assert_eq!(
            verdict.evidence,
            Some(Evidence::DisjointCycles {
                cycle1: vec![0, 1],
                cycle2: vec![3, 4],
            })
        );
        assert!(stats.max_arc_visits() <= 4);
    }

    #[test]
    fn check_rejects_non_solutions_and_bottom_vectors() {
        let a = five_node_matrix();
        assert!(check(&a, &"0 0 0 0 9".parse().unwrap()).is_err());
        assert!(check(&a, &"-inf -inf -inf -inf -inf".parse().unwrap()).is_err());
    }

    #[test]
    fn jets_merge_into_a_shared_cycle() {
        // Star from the spec'd walk shape: two arcs out of node 0 whose
        // walks share the cycle {1,2}.
        let g_rev = digraph_from_arcs(3, &[(0, 1), (0, 2), (1, 2), (2, 1)]);
        let mut visits = vec![0u32; g_rev.arcs().len()];
        let summary = jet_scan(&g_rev, 0, &mut visits).unwrap();
        assert_eq!(summary.sigma_cycles, vec![vec![1, 2]]);
        assert!(!summary.has_o_cycle);
        assert_eq!(summary.jet_traces.len(), 2);
        assert_eq!(summary.jet_traces[0].outcome, JetOutcome::NewSigma(0));
        assert_eq!(summary.jet_traces[1].outcome, JetOutcome::MergedInto(0));
        assert!(visits.iter().all(|&v| v <= 1));
    }

    #[test]
    fn jet_loop_on_o_counts_as_o_cycle() {
        let g_rev = digraph_from_arcs(3, &[(0, 0), (0, 1), (1, 2), (2, 1)]);
        let mut visits = vec![0u32; g_rev.arcs().len()];
        let summary = jet_scan(&g_rev, 0, &mut visits).unwrap();
        assert!(summary.has_o_cycle);
        assert_eq!(summary.o_cycle, Some(vec![0]));
        assert_eq!(summary.sigma_cycles, vec![vec![1, 2]]);
    }

    #[test]
    fn jet_scan_requires_a_fountain() {
        // Node 1 has two outgoing arcs: not a fountain rooted at 0.
        let g_rev = digraph_from_arcs(3, &[(0, 1), (0, 2), (1, 0), (1, 2)]);
        let mut visits = vec![0u32; g_rev.arcs().len()];
        assert!(matches!(
            jet_scan(&g_rev, 0, &mut visits),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn remainder_is_empty_when_everything_has_access() {
        let g_rev = digraph_from_arcs(3, &[(0, 1), (0, 2), (1, 2), (2, 1)]);
        let mut visits = vec![0u32; g_rev.arcs().len()];
        assert!(remainder_after_cover(&g_rev, 0, &mut visits)
            .unwrap()
            .is_empty());

        // A single o-cycle through every node.
        let cycle = digraph_from_arcs(3, &[(0, 0), (0, 1), (1, 2), (2, 0)]);
        let mut visits = vec![0u32; cycle.arcs().len()];
        assert!(remainder_after_cover(&cycle, 0, &mut visits)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn remainder_reports_the_component_without_o() {
        let g_rev = digraph_from_arcs(
            5,
            &[(0, 1), (0, 2), (1, 2), (2, 1), (3, 4), (4, 3)],
        );
        let mut visits = vec![0u32; g_rev.arcs().len()];
        assert_eq!(
            remainder_after_cover(&g_rev, 0, &mut visits).unwrap(),
            vec![3, 4]
        );
    }

    #[test]
    fn bruteforce_counts_disjoint_cycles() {
        let a = five_node_matrix();
        let g1 = TangentDigraph::build(&a, &"0 0 0 -3 -inf".parse().unwrap()).unwrap();
        assert!(!has_two_disjoint_cycles_bruteforce(&g1).unwrap());
        let g2 = TangentDigraph::build(&a, &"0 0 0 0 0".parse().unwrap()).unwrap();
        assert!(has_two_disjoint_cycles_bruteforce(&g2).unwrap());

        let single_loop = digraph_from_arcs(2, &[(0, 0)]);
        assert!(!has_two_disjoint_cycles_bruteforce(&single_loop).unwrap());

        let big = digraph_from_arcs(13, &[(0, 0)]);
        assert!(has_two_disjoint_cycles_bruteforce(&big).is_err());
    }

    #[test]
    fn verdict_json_shape() {
        let a = five_node_matrix();
        let verdict = check_verdict(&a, "0 0 0 0 0");
        let doc = verdict.to_json(None);
        assert_eq!(doc["extremal"], serde_json::json!(false));
        assert_eq!(doc["condition"], serde_json::json!("ISOLATED_SUBSET"));
        assert_eq!(doc["evidence"]["subset"], serde_json::json!([1, 2, 3]));
        assert_eq!(doc["evidence"]["complement"], serde_json::json!([4, 5]));
        assert_eq!(doc["witness"], serde_json::Value::Null);
    }
}
