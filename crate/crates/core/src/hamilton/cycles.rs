//! Longest directed cycles and paths by depth-bounded enumeration.

use crate::correspondence::contract;
use crate::error::{check_cap, Result};
use crate::graph::bits::{bit, Bits};
use crate::graph::{AlternatingCycle, BipartiteGraphWithMatching, Digraph};

/// Largest contraction order for longest-cycle and analyzer searches
/// (`ν <= 20`).
pub const LONGEST_CAP: usize = 10;

/// Every directed cycle of maximum length, each listed once starting at its
/// smallest vertex, up to `limit` cycles. Returns `None` for acyclic input.
pub fn all_longest_cycles(d: &Digraph, limit: usize) -> Result<Option<(usize, Vec<Vec<usize>>)>> {
    check_cap("longest cycle order", d.order(), LONGEST_CAP)?;
    for len in (2..=d.order()).rev() {
        let found = cycles_of_length(d, len, limit.max(1));
        if !found.is_empty() {
            return Ok(Some((len, found)));
        }
    }
    Ok(None)
}

pub fn longest_cycle(d: &Digraph) -> Result<Option<Vec<usize>>> {
    Ok(all_longest_cycles(d, 1)?.map(|(_, mut v)| v.swap_remove(0)))
}

/// Longest alternating cycle through the contraction.
pub fn longest_alternating_cycle(g: &BipartiteGraphWithMatching) -> Result<Option<AlternatingCycle>> {
    check_cap("longest alternating cycle order", g.order(), 2 * LONGEST_CAP)?;
    match longest_cycle(&contract(g))? {
        Some(c) => Ok(Some(AlternatingCycle::from_pairs(g, c)?)),
        None => Ok(None),
    }
}

fn cycles_of_length(d: &Digraph, len: usize, limit: usize) -> Vec<Vec<usize>> {
    let n = d.order();
    let mut out = Vec::new();
    for root in 0..n {
        let allowed = d.vertex_mask() & !((bit(root) << 1) - 1);
        if (allowed.count_ones() as usize) + 1 < len {
            break;
        }
        let mut path = vec![root];
        extend(d, root, allowed, len, &mut path, &mut out, limit);
        if out.len() >= limit {
            break;
        }
    }
    out
}

fn extend(d: &Digraph, root: usize, allowed: u64, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
    let cur = *path.last().expect("path starts at root");
    if path.len() == len {
        if d.has_arc(cur, root) {
            out.push(path.clone());
        }
        return;
    }
    for v in Bits(d.out_row(cur) & allowed) {
        if out.len() >= limit {
            return;
        }
        // the rest of the cycle must still be able to return to the root
        if path.len() + 1 == len && !d.has_arc(v, root) {
            continue;
        }
        path.push(v);
        extend(d, root, allowed & !bit(v), len, path, out, limit);
        path.pop();
    }
}

/// All longest directed paths inside `mask` (as vertex sequences), up to
/// `limit`. A single vertex is a path with one vertex.
pub fn longest_paths(d: &Digraph, mask: u64, limit: usize) -> Vec<Vec<usize>> {
    let mut best_len = 0;
    let mut best: Vec<Vec<usize>> = Vec::new();
    let target = mask.count_ones() as usize;
    for start in Bits(mask) {
        let mut path = vec![start];
        walk(d, mask & !bit(start), &mut path, &mut best_len, &mut best, limit, target);
    }
    best
}

fn walk(
    d: &Digraph,
    allowed: u64,
    path: &mut Vec<usize>,
    best_len: &mut usize,
    best: &mut Vec<Vec<usize>>,
    limit: usize,
    target: usize,
) {
    if path.len() > *best_len {
        *best_len = path.len();
        best.clear();
    }
    if path.len() == *best_len && best.len() < limit {
        best.push(path.clone());
    }
    if path.len() == target {
        return;
    }
    let cur = *path.last().expect("non-empty");
    for v in Bits(d.out_row(cur) & allowed) {
        path.push(v);
        walk(d, allowed & !bit(v), path, best_len, best, limit, target);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_digraph_longest_is_hamiltonian() {
        let (len, cs) = all_longest_cycles(&Digraph::complete(4).unwrap(), 64).unwrap().unwrap();
        assert_eq!(len, 4);
        assert_eq!(cs.len(), 6); // (4-1)! directed Hamilton cycles
    }

    #[test]
    fn acyclic_has_none() {
        assert!(all_longest_cycles(&Digraph::transitive_tournament(4).unwrap(), 8)
            .unwrap()
            .is_none());
    }

    #[test]
    fn alternating_lengths() {
        let g = BipartiteGraphWithMatching::from_normalized(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(longest_alternating_cycle(&g).unwrap().unwrap().len(), 4);
        let e = crate::correspondence::expand(&Digraph::directed_cycle(3).unwrap());
        assert_eq!(longest_alternating_cycle(&e).unwrap().unwrap().len(), 6);
    }

    #[test]
    fn paths() {
        let d = Digraph::transitive_tournament(3).unwrap();
        assert_eq!(longest_paths(&d, 0b111, 16), vec![vec![0, 1, 2]]);
        assert_eq!(longest_paths(&d, 0b100, 16), vec![vec![2]]);
    }
}
