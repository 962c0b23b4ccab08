//! Greedy cycle growth by path insertion, with the exact solver as fallback.

use serde::{Deserialize, Serialize};

use super::exact::{find_alternating_hamilton_cycle, EXACT_CAP};
use super::merge::{merge_path_into_cycle, PathCertificate, PathMergeOutcome};
use crate::correspondence::contract;
use crate::error::{check_cap, Result};
use crate::graph::bits::{bit, Bits};
use crate::graph::{AlternatingCycle, AlternatingPath, BipartiteGraphWithMatching, Digraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "camelCase")]
pub enum TraceStep {
    /// First cycle, as matching-pair indices.
    Start { pairs: Vec<usize> },
    /// A closed path (pair indices) inserted at a cycle index.
    PathMerge { index: usize, path: Vec<usize>, length: usize },
    /// No insertion is possible; certificates for every single outside pair.
    Stall {
        length: usize,
        certificates: Vec<(usize, Vec<PathCertificate>)>,
    },
    ExactFallback { found: bool },
    /// The graph has no alternating cycle at all.
    NoCycle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructiveResult {
    /// An alternating Hamilton cycle, if one exists.
    pub cycle: Option<AlternatingCycle>,
    pub trace: Vec<TraceStep>,
}

pub fn constructive_solve(g: &BipartiteGraphWithMatching) -> Result<ConstructiveResult> {
    check_cap("constructive solve order", g.order(), 2 * EXACT_CAP)?;
    let d = contract(g);
    let mut trace = Vec::new();
    let Some(first) = (0..d.order()).find_map(|v| shortest_cycle_through(&d, v)) else {
        trace.push(TraceStep::NoCycle);
        return Ok(ConstructiveResult { cycle: None, trace });
    };
    trace.push(TraceStep::Start { pairs: first.clone() });
    let mut cycle = AlternatingCycle::from_pairs(g, first)?;
    loop {
        if cycle.is_hamiltonian(g) {
            return Ok(ConstructiveResult {
                cycle: Some(cycle),
                trace,
            });
        }
        match find_insertion(g, &d, &cycle)? {
            Some((merged, index, path)) => {
                trace.push(TraceStep::PathMerge {
                    index,
                    path,
                    length: merged.len(),
                });
                cycle = merged;
            }
            None => break,
        }
    }
    let outside = d.vertex_mask() & !cycle.pair_mask();
    let mut certificates = Vec::new();
    for x in Bits(outside) {
        let p = AlternatingPath::from_pairs(g, vec![x])?;
        if let PathMergeOutcome::Blocked(c) = merge_path_into_cycle(g, &cycle, &p)? {
            certificates.push((x, c));
        }
    }
    trace.push(TraceStep::Stall {
        length: cycle.len(),
        certificates,
    });
    let exact = find_alternating_hamilton_cycle(g)?;
    trace.push(TraceStep::ExactFallback { found: exact.is_some() });
    Ok(ConstructiveResult { cycle: exact, trace })
}

/// A path outside the cycle that can be inserted somewhere, with the merge.
fn find_insertion(
    g: &BipartiteGraphWithMatching,
    d: &Digraph,
    cycle: &AlternatingCycle,
) -> Result<Option<(AlternatingCycle, usize, Vec<usize>)>> {
    let y = cycle.pairs();
    let m = y.len();
    let outside = d.vertex_mask() & !cycle.pair_mask();
    for k in 0..m {
        let (prev, next) = (y[(k + m - 1) % m], y[k]);
        let sources = d.out_row(prev) & outside;
        let targets = d.in_row(next) & outside;
        if let Some(path) = bfs_path(d, sources, targets, outside) {
            let p = AlternatingPath::from_pairs(g, path.clone())?;
            if let PathMergeOutcome::Merged { cycle, index } = merge_path_into_cycle(g, cycle, &p)? {
                return Ok(Some((cycle, index, path)));
            }
        }
    }
    Ok(None)
}

/// Shortest path inside `allowed` from any source to any target.
fn bfs_path(d: &Digraph, sources: u64, targets: u64, allowed: u64) -> Option<Vec<usize>> {
    if sources == 0 || targets == 0 {
        return None;
    }
    let mut parent = vec![usize::MAX; d.order()];
    let mut seen = sources;
    let mut frontier: Vec<usize> = Bits(sources).collect();
    while !frontier.is_empty() {
        for &v in &frontier {
            if targets & bit(v) != 0 {
                let mut path = vec![v];
                let mut cur = v;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
        }
        let mut next = Vec::new();
        for &v in &frontier {
            for u in Bits(d.out_row(v) & allowed & !seen) {
                seen |= bit(u);
                parent[u] = v;
                next.push(u);
            }
        }
        frontier = next;
    }
    None
}

fn shortest_cycle_through(d: &Digraph, v: usize) -> Option<Vec<usize>> {
    let allowed = d.vertex_mask() & !bit(v);
    if d.out_row(v) & d.in_row(v) != 0 {
        let u = (d.out_row(v) & d.in_row(v)).trailing_zeros() as usize;
        return Some(vec![v, u]);
    }
    let mut path = bfs_path(d, d.out_row(v) & allowed, d.in_row(v) & allowed, allowed)?;
    path.insert(0, v);
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::expand;

    #[test]
    fn complete_digraph_expansion() {
        let g = expand(&Digraph::complete(4).unwrap());
        let r = constructive_solve(&g).unwrap();
        let c = r.cycle.unwrap();
        assert!(c.is_hamiltonian(&g));
        c.validate(&g).unwrap();
        assert!(matches!(r.trace[0], TraceStep::Start { .. }));
        assert!(!r.trace.iter().any(|s| matches!(s, TraceStep::ExactFallback { .. })));
    }

    #[test]
    fn non_hamiltonian_falls_back() {
        // two 2-cycles sharing vertex 0
        let d = Digraph::from_arcs(3, [(0, 1), (1, 0), (0, 2), (2, 0)]).unwrap();
        let r = constructive_solve(&expand(&d)).unwrap();
        assert!(r.cycle.is_none());
        assert!(matches!(r.trace.last(), Some(TraceStep::ExactFallback { found: false })));
        assert!(r.trace.iter().any(|s| matches!(s, TraceStep::Stall { .. })));
    }

    #[test]
    fn acyclic_input() {
        let r = constructive_solve(&expand(&Digraph::transitive_tournament(3).unwrap())).unwrap();
        assert_eq!(r.trace, vec![TraceStep::NoCycle]);
    }
}
