//! Digraph ↔ matched bipartite graph translation and undirected doubling.
//!
//! Convention: with matching pairs `(w_i, b_i)`, the contraction has the arc
//! `i -> j` (for `i != j`) exactly when `b_i ~ w_j`. Then
//! `d(w_i) = d⁻(i) + 1` and `d(b_i) = d⁺(i) + 1`, and the alternating cycle
//! `w_{y0} b_{y0} w_{y1} b_{y1} ...` corresponds to the directed cycle
//! `y0 -> y1 -> ...`.

use crate::graph::bits::bit;
use crate::graph::{AlternatingCycle, BipartiteGraphWithMatching, Digraph, UndirectedGraph};
use crate::error::Result;

pub fn contract(g: &BipartiteGraphWithMatching) -> Digraph {
    let rows: Vec<u64> = (0..g.half_order()).map(|i| g.b_row(i) & !bit(i)).collect();
    Digraph::from_out_rows(&rows).expect("rows come from a valid bipartite value")
}

pub fn expand(d: &Digraph) -> BipartiteGraphWithMatching {
    let rows: Vec<u64> = (0..d.order()).map(|j| d.in_row(j) | bit(j)).collect();
    BipartiteGraphWithMatching::from_w_rows(&rows).expect("digraph rows are in range")
}

/// Both arcs for every edge.
pub fn double_undirected(g: &UndirectedGraph) -> Digraph {
    Digraph::from_out_rows(g.rows()).expect("undirected rows are loop-free")
}

/// Reverses every arc; the contraction under the opposite orientation rule.
pub fn converse(d: &Digraph) -> Digraph {
    d.converse()
}

/// Directed cycle (vertex list) of the contraction to the alternating cycle.
pub fn cycle_to_alternating(g: &BipartiteGraphWithMatching, cycle: &[usize]) -> Result<AlternatingCycle> {
    AlternatingCycle::from_pairs(g, cycle.to_vec())
}

/// Alternating cycle to the directed cycle of the contraction.
pub fn alternating_to_cycle(c: &AlternatingCycle) -> Vec<usize> {
    c.pairs().to_vec()
}
