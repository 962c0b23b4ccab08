use super::CancelToken;
use crate::correspondence::{contract, double_undirected};
use crate::error::{check_cap, domain, Error, Result};
use crate::graph::bits::{bit, Bits};
use crate::graph::{AlternatingCycle, BipartiteGraphWithMatching, Digraph, UndirectedGraph};

/// Largest digraph order accepted by the exact solver.
pub const EXACT_CAP: usize = 20;

/// A directed Hamilton cycle starting at vertex 0, or `None`.
pub fn find_hamilton_cycle(d: &Digraph) -> Result<Option<Vec<usize>>> {
    find_hamilton_cycle_with(d, &CancelToken::new())
}

pub fn is_hamiltonian(d: &Digraph) -> Result<bool> {
    Ok(find_hamilton_cycle(d)?.is_some())
}

pub fn find_hamilton_cycle_with(d: &Digraph, cancel: &CancelToken) -> Result<Option<Vec<usize>>> {
    let n = d.order();
    if n < 2 {
        return domain("a Hamilton cycle needs at least 2 vertices");
    }
    check_cap("exact Hamilton search order", n, EXACT_CAP)?;
    if (0..n).any(|v| d.dout(v) == 0 || d.din(v) == 0) || !d.is_strongly_connected() {
        return Ok(None);
    }
    let mut s = Search {
        d,
        all: d.vertex_mask(),
        path: vec![0],
        cancel,
        nodes: 0,
    };
    if s.dfs(0, bit(0))? {
        debug_assert!(validate_directed_cycle(d, &s.path).is_ok());
        Ok(Some(s.path))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    d: &'a Digraph,
    all: u64,
    path: Vec<usize>,
    cancel: &'a CancelToken,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, cur: usize, visited: u64) -> Result<bool> {
        let d = self.d;
        if visited == self.all {
            return Ok(d.has_arc(cur, 0));
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && self.cancel.is_cancelled() {
            return Err(Error::Cancelled);
        }
        let rem = self.all & !visited;
        if d.in_row(0) & rem == 0 {
            return Ok(false);
        }
        let mut forced = None;
        for v in Bits(rem) {
            let ins = d.in_row(v) & (rem | bit(cur));
            if ins == 0 || d.out_row(v) & (rem | 1) == 0 {
                return Ok(false);
            }
            if ins == bit(cur) {
                if forced.is_some() {
                    return Ok(false);
                }
                forced = Some(v);
            }
        }
        if d.reach(cur, rem | bit(cur)) != rem | bit(cur) {
            return Ok(false);
        }
        let candidates = match forced {
            Some(v) => bit(v) & d.out_row(cur),
            None => d.out_row(cur) & rem,
        };
        for v in Bits(candidates) {
            self.path.push(v);
            if self.dfs(v, visited | bit(v))? {
                return Ok(true);
            }
            self.path.pop();
        }
        Ok(false)
    }
}

/// Solves on the contraction and translates back.
pub fn find_alternating_hamilton_cycle(g: &BipartiteGraphWithMatching) -> Result<Option<AlternatingCycle>> {
    check_cap("exact alternating search order", g.order(), 2 * EXACT_CAP)?;
    if g.half_order() < 2 {
        return Ok(None);
    }
    match find_hamilton_cycle(&contract(g))? {
        Some(c) => Ok(Some(AlternatingCycle::from_pairs(g, c)?)),
        None => Ok(None),
    }
}

/// Solves on the doubling; graphs below order 3 have no Hamilton cycle.
pub fn find_undirected_hamilton_cycle(g: &UndirectedGraph) -> Result<Option<Vec<usize>>> {
    check_cap("exact Hamilton search order", g.order(), EXACT_CAP)?;
    if g.order() < 3 {
        return Ok(None);
    }
    find_hamilton_cycle(&double_undirected(g))
}

/// Checks that `cycle` lists every vertex once and follows arcs cyclically.
pub fn validate_directed_cycle(d: &Digraph, cycle: &[usize]) -> Result<()> {
    let n = cycle.len();
    if n < 2 {
        return domain("cycle too short");
    }
    let mut seen = 0u64;
    for (i, &v) in cycle.iter().enumerate() {
        d.check_vertex(v)?;
        if seen & bit(v) != 0 {
            return domain(format!("vertex {v} repeated"));
        }
        seen |= bit(v);
        let next = cycle[(i + 1) % n];
        if !d.has_arc(v, next) {
            return domain(format!("missing arc {v} -> {next}"));
        }
    }
    Ok(())
}
