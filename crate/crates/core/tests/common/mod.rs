//! Independent oracles shared by the integration tests. None of them call
//! the library's solvers, checkers or canonical labeling.
#![allow(dead_code)]

use hamlab::graph::{BVertex, BipartiteGraphWithMatching, Digraph, UndirectedGraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Held–Karp over subsets: is there a Hamilton cycle in the relation `arc`?
pub fn ham_dp(n: usize, arc: impl Fn(usize, usize) -> bool) -> bool {
    if n < 2 {
        return false;
    }
    let full = (1usize << n) - 1;
    // reach[mask] = set of end vertices v such that a path 0 .. v covers mask
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 || reach[mask] == 0 {
            continue;
        }
        for v in 0..n {
            if reach[mask] >> v & 1 == 0 {
                continue;
            }
            for w in 0..n {
                if mask >> w & 1 == 0 && arc(v, w) {
                    reach[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    (0..n).any(|v| reach[full] >> v & 1 == 1 && arc(v, 0))
}

pub fn directed_ham(d: &Digraph) -> bool {
    ham_dp(d.order(), |u, v| d.has_arc(u, v))
}

/// Alternating Hamilton cycle: pairs in an order where `b` of each pair sees
/// `w` of the next, asked of the bipartite graph directly.
pub fn alternating_ham(g: &BipartiteGraphWithMatching) -> bool {
    ham_dp(g.half_order(), |i, j| i != j && g.adjacent(BVertex::b(i), BVertex::w(j)))
}

pub fn undirected_ham(g: &UndirectedGraph) -> bool {
    g.order() >= 3 && ham_dp(g.order(), |u, v| g.has_edge(u, v))
}

fn dout(d: &Digraph, v: usize) -> i64 {
    (0..d.order()).filter(|&w| d.has_arc(v, w)).count() as i64
}

fn din(d: &Digraph, v: usize) -> i64 {
    (0..d.order()).filter(|&w| d.has_arc(w, v)).count() as i64
}

/// Minimum of `d⁺(u) + d⁻(v) - n` over ordered pairs `u != v` without arc `u -> v`.
pub fn woodall_oracle(d: &Digraph) -> Option<i64> {
    let n = d.order();
    let mut best = None;
    for u in 0..n {
        for v in 0..n {
            if u != v && !d.has_arc(u, v) {
                let s = dout(d, u) + din(d, v) - n as i64;
                best = Some(best.map_or(s, |b: i64| b.min(s)));
            }
        }
    }
    best
}

/// Minimum over all ordered pairs, the diagonal included.
pub fn all_pairs_oracle(d: &Digraph) -> i64 {
    let n = d.order();
    (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .map(|(u, v)| dout(d, u) + din(d, v) - n as i64)
        .min()
        .expect("non-empty")
}

pub fn ore_oracle(g: &UndirectedGraph) -> Option<i64> {
    let n = g.order();
    let deg = |v: usize| (0..n).filter(|&w| g.has_edge(v, w)).count() as i64;
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let s = deg(u) + deg(v) - n as i64;
                best = Some(best.map_or(s, |b: i64| b.min(s)));
            }
        }
    }
    best
}

/// `d(w) + d(b) - (ν/2 + 2)` minimized over nonadjacent `w, b`.
pub fn las_vergnas_oracle(g: &BipartiteGraphWithMatching) -> Option<i64> {
    let h = g.half_order();
    let nu = 2 * h as i64;
    let deg = |v: BVertex| g.vertices().filter(|&x| g.adjacent(v, x)).count() as i64;
    let mut best = None;
    for w in 0..h {
        for b in 0..h {
            if !g.adjacent(BVertex::w(w), BVertex::b(b)) {
                let s = deg(BVertex::w(w)) + deg(BVertex::b(b)) - (nu / 2 + 2);
                best = Some(best.map_or(s, |x: i64| x.min(s)));
            }
        }
    }
    best
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Brute-force digraph isomorphism, for small orders.
pub fn isomorphic(a: &Digraph, b: &Digraph) -> bool {
    let n = a.order();
    if n != b.order() || a.arc_count() != b.arc_count() {
        return false;
    }
    permutations(n)
        .iter()
        .any(|p| a.arcs().all(|(u, v)| b.has_arc(p[u], p[v])))
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_digraph(r: &mut StdRng, n: usize, p: f64) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|(u, v)| u != v)
        .collect();
    Digraph::from_arcs(n, arcs.into_iter().filter(|_| r.gen_bool(p))).unwrap()
}

pub fn random_bipartite(r: &mut StdRng, half: usize, p: f64) -> BipartiteGraphWithMatching {
    let mut edges = Vec::new();
    for w in 0..half {
        for b in 0..half {
            if w == b || r.gen_bool(p) {
                edges.push((w, b));
            }
        }
    }
    BipartiteGraphWithMatching::from_normalized(half, edges).unwrap()
}
