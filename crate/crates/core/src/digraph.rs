//! The tangent digraph of a solution and the three-way node
//! classification driving the extremality analysis.
//!
//! For a proper solution `x` of `A (x) x >= x`, the tangent digraph has
//! node set `Supp(x)` and an arc `(j, i)` exactly when row `i` is tight
//! (`(A (x) x)_i == x_i`) and the row maximum is attained at column `j`
//! (`a_ij + x_j == x_i`). Arcs point from the attaining column to the
//! tight row, so an arc `(j, i)` records that lowering `x_j` threatens
//! the constraint of row `i`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matrix::MaxPlusMatrix;
use crate::vector::MaxPlusVector;

/// One of the three node kinds.
///
/// * `IVariable`: no outgoing arc other than possibly the loop.
/// * `IIVariable`: has non-loop outgoing arcs, but every non-loop
///   out-neighbor has another incoming arc.
/// * `Invariable`: some non-loop outgoing arc leads to a node whose only
///   incoming arc it is.
///
/// A node is *variable* when it is I-variable or II-variable; exactly the
/// variable coordinates of `x` can be lowered individually while staying
/// inside the solution set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeClass {
    IVariable,
    IIVariable,
    Invariable,
}

impl NodeClass {
    pub fn is_variable(self) -> bool {
        !matches!(self, NodeClass::Invariable)
    }

    pub fn label(self) -> &'static str {
        match self {
            NodeClass::IVariable => "I-variable",
            NodeClass::IIVariable => "II-variable",
            NodeClass::Invariable => "invariable",
        }
    }
}

/// The tangent digraph at a solution, with cached degrees and loop flags.
///
/// Nodes are the 0-based support coordinates of `x`; all external output
/// (DOT, JSON, tables) renders them 1-based. Immutable after `build`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentDigraph {
    dimension: usize,
    nodes: Vec<usize>,
    in_support: Vec<bool>,
    arcs: Vec<(usize, usize)>, // (tail j, head i)
    out_adj: Vec<Vec<usize>>,  // arc indices by tail
    in_adj: Vec<Vec<usize>>,   // arc indices by head
    in_degree: Vec<usize>,     // loops counted
    out_degree: Vec<usize>,
    has_loop: Vec<bool>,
}

impl TangentDigraph {
    /// Builds the tangent digraph in one pass over the matrix. Errors if
    /// `x` is not a proper solution.
    pub fn build(a: &MaxPlusMatrix, x: &MaxPlusVector) -> Result<Self> {
        let ax = a.solution_image(x)?;
        let n = a.n();
        let nodes = x.support();
        let mut graph = TangentDigraph {
            dimension: n,
            nodes: nodes.clone(),
            in_support: vec![false; n],
            arcs: Vec::new(),
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            in_degree: vec![0; n],
            out_degree: vec![0; n],
            has_loop: vec![false; n],
        };
        for &i in &nodes {
            graph.in_support[i] = true;
        }
        for &i in &nodes {
            if ax.get(i) != x.get(i) {
                continue; // row i is slack: no incoming arcs
            }
            for j in 0..n {
                if a.get(i, j).otimes(x.get(j)) == *x.get(i) {
                    graph.push_arc(j, i);
                }
            }
        }
        Ok(graph)
    }

    fn push_arc(&mut self, tail: usize, head: usize) {
        let idx = self.arcs.len();
        self.arcs.push((tail, head));
        self.out_adj[tail].push(idx);
        self.in_adj[head].push(idx);
        self.out_degree[tail] += 1;
        self.in_degree[head] += 1;
        if tail == head {
            self.has_loop[tail] = true;
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Support nodes, ascending.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn contains_node(&self, i: usize) -> bool {
        i < self.dimension && self.in_support[i]
    }

    /// All arcs as `(tail, head)` pairs, in construction order
    /// (sorted by head, then tail).
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn in_degree(&self, i: usize) -> usize {
        self.in_degree[i]
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.out_degree[i]
    }

    pub fn has_loop(&self, i: usize) -> bool {
        self.has_loop[i]
    }

    /// Arc indices leaving `i`; resolve through `arcs()`.
    pub fn out_arcs(&self, i: usize) -> &[usize] {
        &self.out_adj[i]
    }

    /// Arc indices entering `i`.
    pub fn in_arcs(&self, i: usize) -> &[usize] {
        &self.in_adj[i]
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        tail < self.dimension
            && self.out_adj[tail]
                .iter()
                .any(|&idx| self.arcs[idx].1 == head)
    }

    /// Classifies a support node by the deterministic degree rule:
    /// invariable if some non-loop out-arc reaches a node of in-degree 1,
    /// otherwise I-variable if there is no non-loop out-arc at all,
    /// otherwise II-variable.
    pub fn classify_node(&self, i: usize) -> Result<NodeClass> {
        if !self.contains_node(i) {
            return Err(Error::invalid(format!(
                "node {} is not in the support",
                i + 1
            )));
        }
        let mut has_non_loop_out = false;
        for &idx in &self.out_adj[i] {
            let (_, head) = self.arcs[idx];
            if head == i {
                continue;
            }
            has_non_loop_out = true;
            if self.in_degree[head] == 1 {
                return Ok(NodeClass::Invariable);
            }
        }
        if has_non_loop_out {
            Ok(NodeClass::IIVariable)
        } else {
            Ok(NodeClass::IVariable)
        }
    }

    /// The variable (I- or II-variable) nodes, ascending.
    pub fn variable_nodes(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .copied()
            .filter(|&i| {
                self.classify_node(i)
                    .expect("support node")
                    .is_variable()
            })
            .collect()
    }

    /// Weakly connected components of the underlying undirected graph,
    /// each sorted ascending, ordered by smallest node.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.dimension];
        let mut components = Vec::new();
        for &start in &self.nodes {
            if seen[start] {
                continue;
            }
            let mut component = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                component.push(u);
                let neighbors = self.out_adj[u]
                    .iter()
                    .map(|&idx| self.arcs[idx].1)
                    .chain(self.in_adj[u].iter().map(|&idx| self.arcs[idx].0));
                for v in neighbors {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// True iff no proper nonempty subset of the node set is isolated,
    /// i.e. the underlying undirected graph is connected.
    pub fn is_weakly_connected(&self) -> bool {
        self.weak_components().len() == 1
    }

    /// The digraph with every arc reversed. Arc indices are preserved:
    /// arc `k` of the reverse is arc `k` of the original, flipped.
    pub fn reverse(&self) -> TangentDigraph {
        TangentDigraph {
            dimension: self.dimension,
            nodes: self.nodes.clone(),
            in_support: self.in_support.clone(),
            arcs: self.arcs.iter().map(|&(j, i)| (i, j)).collect(),
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            in_degree: self.out_degree.clone(),
            out_degree: self.in_degree.clone(),
            has_loop: self.has_loop.clone(),
        }
    }

    /// DOT rendering with 1-based node ids labelled by class.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph tangent {\n");
        for &i in &self.nodes {
            let class = self.classify_node(i).expect("support node");
            let _ = writeln!(out, "    {} [label=\"{} [{}]\"];", i + 1, i + 1, class.label());
        }
        for &(j, i) in &self.arcs {
            let _ = writeln!(out, "    {} -> {};", j + 1, i + 1);
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five_node_matrix() -> MaxPlusMatrix {
        "-5 0 -inf -inf -inf\n\
         0 -inf -inf -inf -inf\n\
         0 -inf -inf -inf -inf\n\
         -inf -inf -3 -inf 0\n\
         -inf -inf -inf 0 -inf"
            .parse()
            .unwrap()
    }

    fn x1() -> MaxPlusVector {
        "0 0 0 -3 -inf".parse().unwrap()
    }

    fn x2() -> MaxPlusVector {
        "0 0 0 0 0".parse().unwrap()
    }

    fn sorted_arcs(g: &TangentDigraph) -> Vec<(usize, usize)> {
        let mut arcs = g.arcs().to_vec();
        arcs.sort_unstable();
        arcs
    }

    #[test]
    fn build_extracts_tight_attainments() {
        let a = five_node_matrix();
        let g = TangentDigraph::build(&a, &x1()).unwrap();
        assert_eq!(g.nodes(), &[0, 1, 2, 3]);
        assert_eq!(sorted_arcs(&g), vec![(0, 1), (0, 2), (1, 0), (2, 3)]);

        let g2 = TangentDigraph::build(&a, &x2()).unwrap();
        assert_eq!(g2.nodes(), &[0, 1, 2, 3, 4]);
        assert_eq!(
            sorted_arcs(&g2),
            vec![(0, 1), (0, 2), (1, 0), (3, 4), (4, 3)]
        );
    }

    #[test]
    fn identity_digraph_is_all_loops() {
        let a = MaxPlusMatrix::identity(3);
        let x = MaxPlusVector::from_ints(&[5, -1, 0]);
        let g = TangentDigraph::build(&a, &x).unwrap();
        assert_eq!(sorted_arcs(&g), vec![(0, 0), (1, 1), (2, 2)]);
        assert!(g.has_loop(0) && g.has_loop(1) && g.has_loop(2));
        assert_eq!(g.variable_nodes(), vec![0, 1, 2]); // loops only: all I-variable
    }

    #[test]
    fn build_rejects_non_solutions() {
        let a: MaxPlusMatrix = "-1 -inf\n-inf -1".parse().unwrap();
        let x = MaxPlusVector::from_ints(&[0, 0]);
        assert!(TangentDigraph::build(&a, &x).is_err());
    }

    #[test]
    fn classification_by_degree_rule() {
        let a = five_node_matrix();
        let g = TangentDigraph::build(&a, &x1()).unwrap();
        assert_eq!(g.classify_node(3).unwrap(), NodeClass::IVariable);
        assert_eq!(g.classify_node(0).unwrap(), NodeClass::Invariable);
        assert_eq!(g.classify_node(2).unwrap(), NodeClass::Invariable);
        assert_eq!(g.variable_nodes(), vec![3]);
        assert!(g.classify_node(4).is_err()); // off support

        // The second solution: node 2 (0-based) has no outgoing arc at
        // all, hence is I-variable; the rest are invariable.
        let g2 = TangentDigraph::build(&a, &x2()).unwrap();
        assert_eq!(g2.classify_node(2).unwrap(), NodeClass::IVariable);
        for i in [0, 1, 3, 4] {
            assert_eq!(g2.classify_node(i).unwrap(), NodeClass::Invariable);
        }
        assert_eq!(g2.variable_nodes(), vec![2]);
    }

    #[test]
    fn two_variable_kinds_are_distinguished() {
        // Node 1 has a loop plus an arc to node 0; node 0's other incoming
        // arc is the loop (0,0), so node 1 is II-variable.
        let a: MaxPlusMatrix = "0 0\n-inf 0".parse().unwrap();
        let x = MaxPlusVector::from_ints(&[0, 0]);
        let g = TangentDigraph::build(&a, &x).unwrap();
        assert_eq!(sorted_arcs(&g), vec![(0, 0), (1, 0), (1, 1)]);
        assert_eq!(g.classify_node(1).unwrap(), NodeClass::IIVariable);
        assert_eq!(g.classify_node(0).unwrap(), NodeClass::IVariable);
    }

    #[test]
    fn weak_connectivity_finds_isolated_subsets() {
        let a = five_node_matrix();
        assert!(TangentDigraph::build(&a, &x1()).unwrap().is_weakly_connected());

        let g2 = TangentDigraph::build(&a, &x2()).unwrap();
        assert!(!g2.is_weakly_connected());
        assert_eq!(g2.weak_components(), vec![vec![0, 1, 2], vec![3, 4]]);

        let single = MaxPlusMatrix::identity(1);
        let x = MaxPlusVector::from_ints(&[0]);
        assert!(TangentDigraph::build(&single, &x)
            .unwrap()
            .is_weakly_connected());
    }

    #[test]
    fn reverse_swaps_arcs_and_degrees() {
        let a = five_node_matrix();
        let g = TangentDigraph::build(&a, &x1()).unwrap();
        let rev = g.reverse();
        assert_eq!(sorted_arcs(&rev), vec![(0, 1), (1, 0), (2, 0), (3, 2)]);
        assert_eq!(rev.in_degree(0), g.out_degree(0));
        assert_eq!(rev.out_degree(3), g.in_degree(3));
        assert_eq!(rev.reverse(), g);
    }

    #[test]
    fn dot_export_labels_nodes_with_classes() {
        let a = five_node_matrix();
        let dot = TangentDigraph::build(&a, &x1()).unwrap().to_dot();
        assert!(dot.starts_with("digraph tangent {"));
        assert!(dot.contains("4 [label=\"4 [I-variable]\"];"));
        assert!(dot.contains("1 [label=\"1 [invariable]\"];"));
        assert!(dot.contains("    2 -> 1;"));
        assert!(dot.contains("    3 -> 4;"));
        assert!(!dot.contains("5 ["));
    }
}
