//! Balanced bipartite graphs carrying a perfect matching.
//!
//! Values are normalized so that the matching pairs `w_i` with `b_i`; every
//! routine downstream indexes matching pairs by `i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::bits::{bit, low_mask, Bits};
use super::digraph::MAX_ORDER;
use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    W,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::W => Side::B,
            Side::B => Side::W,
        }
    }
}

/// A vertex of a matched bipartite graph: side plus matching-pair index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BVertex {
    pub side: Side,
    pub index: usize,
}

impl BVertex {
    pub fn w(index: usize) -> Self {
        BVertex {
            side: Side::W,
            index,
        }
    }

    pub fn b(index: usize) -> Self {
        BVertex {
            side: Side::B,
            index,
        }
    }

    /// The other endpoint of this vertex's matching edge.
    pub fn partner(self) -> Self {
        BVertex {
            side: self.side.other(),
            index: self.index,
        }
    }
}

impl fmt::Debug for BVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::W => write!(f, "w{}", self.index),
            Side::B => write!(f, "b{}", self.index),
        }
    }
}

impl fmt::Display for BVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Balanced bipartite graph `(W, B)` with the perfect matching `{w_i b_i}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraphWithMatching {
    half: usize,
    /// `w_adj[i]` = indices `j` with `w_i ~ b_j`.
    w_adj: Vec<u64>,
    /// `b_adj[j]` = indices `i` with `w_i ~ b_j`.
    b_adj: Vec<u64>,
}

impl BipartiteGraphWithMatching {
    /// Builds from edges `(w, b)` and an explicit perfect matching given as
    /// `(w, b)` pairs. `b` vertices are renumbered so that the partner of
    /// `w_i` becomes `b_i`; `W` indices are kept.
    pub fn new(half: usize, edges: &[(usize, usize)], matching: &[(usize, usize)]) -> Result<Self> {
        if half > MAX_ORDER {
            return domain(format!("half order {half} exceeds {MAX_ORDER}"));
        }
        if matching.len() != half {
            return domain("matching is not perfect");
        }
        let mut b_new = vec![usize::MAX; half];
        let mut w_seen = 0u64;
        for &(w, b) in matching {
            if w >= half || b >= half {
                return domain(format!("matching edge ({w},{b}) out of range"));
            }
            if w_seen & bit(w) != 0 || b_new[b] != usize::MAX {
                return domain("matching covers a vertex twice");
            }
            w_seen |= bit(w);
            b_new[b] = w;
        }
        let mut edge_set = vec![0u64; half];
        for &(w, b) in edges {
            if w >= half || b >= half {
                return domain(format!("edge ({w},{b}) out of range"));
            }
            edge_set[w] |= bit(b);
        }
        for &(w, b) in matching {
            if edge_set[w] & bit(b) == 0 {
                return domain(format!("matching edge (w{w},b{b}) is not an edge"));
            }
        }
        let normalized = edges.iter().map(|&(w, b)| (w, b_new[b]));
        Self::from_normalized(half, normalized)
    }

    /// Builds from edges `(w_i, b_j)` under the normalized matching
    /// `{w_i b_i}`. Matching edges are added if absent.
    pub fn from_normalized<I>(half: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if half > MAX_ORDER {
            return domain(format!("half order {half} exceeds {MAX_ORDER}"));
        }
        let mut g = BipartiteGraphWithMatching {
            half,
            w_adj: vec![0; half],
            b_adj: vec![0; half],
        };
        for i in 0..half {
            g.set_edge(i, i);
        }
        for (w, b) in edges {
            if w >= half || b >= half {
                return domain(format!("edge ({w},{b}) out of range"));
            }
            g.set_edge(w, b);
        }
        Ok(g)
    }

    /// Builds from `W`-side rows (`rows[i]` = B-neighbours of `w_i`).
    pub fn from_w_rows(rows: &[u64]) -> Result<Self> {
        let half = rows.len();
        let mask = low_mask(half);
        let mut edges = Vec::new();
        for (w, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return domain(format!("row of w{w} out of range"));
            }
            edges.extend(Bits(row).map(|b| (w, b)));
        }
        Self::from_normalized(half, edges)
    }

    /// Number of matching pairs, `ν/2`.
    #[inline]
    pub fn half_order(&self) -> usize {
        self.half
    }

    /// Total vertex count `ν`.
    #[inline]
    pub fn order(&self) -> usize {
        2 * self.half
    }

    #[inline]
    pub fn has_edge(&self, w: usize, b: usize) -> bool {
        w < self.half && b < self.half && self.w_adj[w] & bit(b) != 0
    }

    /// Adjacency between two vertices on any sides.
    pub fn adjacent(&self, x: BVertex, y: BVertex) -> bool {
        match (x.side, y.side) {
            (Side::W, Side::B) => self.has_edge(x.index, y.index),
            (Side::B, Side::W) => self.has_edge(y.index, x.index),
            _ => false,
        }
    }

    #[inline]
    pub fn w_row(&self, w: usize) -> u64 {
        self.w_adj[w]
    }

    #[inline]
    pub fn b_row(&self, b: usize) -> u64 {
        self.b_adj[b]
    }

    pub fn w_rows(&self) -> &[u64] {
        &self.w_adj
    }

    /// Neighbour indices (on the opposite side) of `v`.
    pub fn neighbors(&self, v: BVertex) -> u64 {
        match v.side {
            Side::W => self.w_adj[v.index],
            Side::B => self.b_adj[v.index],
        }
    }

    pub fn degree(&self, v: BVertex) -> Result<usize> {
        if v.index >= self.half {
            return domain(format!("vertex {v} out of range"));
        }
        Ok(self.neighbors(v).count_ones() as usize)
    }

    #[inline]
    pub(crate) fn deg(&self, v: BVertex) -> usize {
        self.neighbors(v).count_ones() as usize
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.half).flat_map(move |w| Bits(self.w_adj[w]).map(move |b| (w, b)))
    }

    pub fn edge_count(&self) -> usize {
        self.w_adj.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = BVertex> {
        let h = self.half;
        (0..h).map(BVertex::w).chain((0..h).map(BVertex::b))
    }

    /// Exchanges the roles of `W` and `B`.
    pub fn swap_sides(&self) -> Self {
        BipartiteGraphWithMatching {
            half: self.half,
            w_adj: self.b_adj.clone(),
            b_adj: self.w_adj.clone(),
        }
    }

    /// Renumbers matching pair `i` as `perm[i]` (same permutation on both sides).
    pub fn relabel_pairs(&self, perm: &[usize]) -> Result<Self> {
        super::digraph::check_permutation(perm, self.half)?;
        Self::from_normalized(self.half, self.edges().map(|(w, b)| (perm[w], perm[b])))
    }

    /// Subgraph induced by the listed matching pairs, re-indexed in order.
    pub fn induced_pairs(&self, pairs: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut seen = 0u64;
        for &p in pairs {
            if p >= self.half || seen & bit(p) != 0 {
                return domain(format!("bad pair index {p}"));
            }
            seen |= bit(p);
        }
        let mut edges = Vec::new();
        for (i, &wi) in pairs.iter().enumerate() {
            for (j, &bj) in pairs.iter().enumerate() {
                if self.has_edge(wi, bj) {
                    edges.push((i, j));
                }
            }
        }
        Ok((Self::from_normalized(pairs.len(), edges)?, pairs.to_vec()))
    }

    /// Subgraph induced by an arbitrary vertex set, which must be closed
    /// under the matching. Returns the subgraph and the new-to-old pair table.
    pub fn induced(&self, vertices: &[BVertex]) -> Result<(Self, Vec<usize>)> {
        let mut ws = 0u64;
        let mut bs = 0u64;
        for v in vertices {
            if v.index >= self.half {
                return domain(format!("vertex {v} out of range"));
            }
            match v.side {
                Side::W => ws |= bit(v.index),
                Side::B => bs |= bit(v.index),
            }
        }
        if ws != bs {
            return domain("vertex set is not closed under the matching");
        }
        let pairs: Vec<usize> = Bits(ws).collect();
        self.induced_pairs(&pairs)
    }

    fn set_edge(&mut self, w: usize, b: usize) {
        self.w_adj[w] |= bit(b);
        self.b_adj[b] |= bit(w);
    }
}

impl fmt::Debug for BipartiteGraphWithMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .filter(|(w, b)| w != b)
            .map(|(w, b)| format!("w{w}b{b}"))
            .collect();
        write!(f, "Matched(ν={}; {})", self.order(), edges.join(" "))
    }
}

/// Maximum matching of a bipartite graph given by W-side rows, via
/// augmenting paths. Returns `mate[w] = Some(b)`.
pub fn maximum_matching(half: usize, w_rows: &[u64]) -> Vec<Option<usize>> {
    fn augment(
        w: usize,
        w_rows: &[u64],
        visited: &mut u64,
        mate_b: &mut [Option<usize>],
        mate_w: &mut [Option<usize>],
    ) -> bool {
        for b in Bits(w_rows[w] & !*visited) {
            *visited |= bit(b);
            let free = match mate_b[b] {
                None => true,
                Some(w2) => augment(w2, w_rows, visited, mate_b, mate_w),
            };
            if free {
                mate_b[b] = Some(w);
                mate_w[w] = Some(b);
                return true;
            }
        }
        false
    }
    let mut mate_b = vec![None; half];
    let mut mate_w = vec![None; half];
    for w in 0..half {
        let mut visited = 0u64;
        augment(w, w_rows, &mut visited, &mut mate_b, &mut mate_w);
    }
    mate_w
}

/// Builds a matched value from a bipartite graph that comes without a
/// designated matching, choosing one perfect matching. Fails if none exists.
pub fn with_some_perfect_matching(half: usize, edges: &[(usize, usize)]) -> Result<BipartiteGraphWithMatching> {
    if half > MAX_ORDER {
        return domain(format!("half order {half} exceeds {MAX_ORDER}"));
    }
    let mut rows = vec![0u64; half];
    for &(w, b) in edges {
        if w >= half || b >= half {
            return domain(format!("edge ({w},{b}) out of range"));
        }
        rows[w] |= bit(b);
    }
    let mate = maximum_matching(half, &rows);
    let matching: Option<Vec<(usize, usize)>> =
        mate.iter().enumerate().map(|(w, b)| b.map(|b| (w, b))).collect();
    match matching {
        Some(m) => BipartiteGraphWithMatching::new(half, edges, &m),
        None => domain("bipartite graph has no perfect matching"),
    }
}
