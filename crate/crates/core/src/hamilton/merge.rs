//! Augmenting an alternating cycle by a disjoint closed path or cycle.
//!
//! On a cycle `C` with pairs `y_0 .. y_{m-1}` we write `u_{2i} = w_{y_i}`
//! and `u_{2i-1} = b_{y_{i-1}}`, so the non-matching edges of `C` are
//! `u_{2i-1} u_{2i}`. A merge at index `k` opens `C` at that edge.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::graph::{AlternatingCycle, AlternatingPath, BipartiteGraphWithMatching};

/// For index `i`: whether `u_{2i}` misses the path's `B` end and whether
/// `u_{2i-1}` misses its `W` end. A blocked merge has at least one flag set
/// at every index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PathCertificate {
    pub index: usize,
    pub cycle_w_misses_b_end: bool,
    pub cycle_b_misses_w_end: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathMergeOutcome {
    Merged { cycle: AlternatingCycle, index: usize },
    Blocked(Vec<PathCertificate>),
}

/// For index `i`: whether `u_{2i-1}` and `u_{2i}` send no edge to the other
/// cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PairCertificate {
    pub index: usize,
    pub b_misses_other: bool,
    pub w_misses_other: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleMergeOutcome {
    Merged { cycle: AlternatingCycle, index: usize },
    Blocked(Vec<PairCertificate>),
}

impl PathCertificate {
    /// Re-derives the flags from adjacency queries.
    pub fn recheck(&self, g: &BipartiteGraphWithMatching, c: &AlternatingCycle, p: &AlternatingPath) -> bool {
        let y = c.pairs();
        let m = y.len();
        let (wi, bi) = (y[self.index], y[(self.index + m - 1) % m]);
        let ps = p.pairs();
        (self.cycle_w_misses_b_end || self.cycle_b_misses_w_end)
            && self.cycle_w_misses_b_end == !g.has_edge(wi, *ps.last().expect("non-empty"))
            && self.cycle_b_misses_w_end == !g.has_edge(ps[0], bi)
    }
}

impl PairCertificate {
    pub fn recheck(&self, g: &BipartiteGraphWithMatching, c: &AlternatingCycle, other: &AlternatingCycle) -> bool {
        let y = c.pairs();
        let m = y.len();
        let mask = other.pair_mask();
        (self.b_misses_other || self.w_misses_other)
            && self.b_misses_other == (g.b_row(y[(self.index + m - 1) % m]) & mask == 0)
            && self.w_misses_other == (g.w_row(y[self.index]) & mask == 0)
    }
}

fn rotated_from(y: &[usize], k: usize) -> Vec<usize> {
    y[k..].iter().chain(&y[..k]).copied().collect()
}

/// Inserts `p` between `u_{2k-1}` and `u_{2k}` for the first index `k` with
/// `u_{2k} ~ b` and `u_{2k-1} ~ w`; the result is
/// `u_{2k} C u_{2k-1} w P b u_{2k}`.
pub fn merge_path_into_cycle(
    g: &BipartiteGraphWithMatching,
    c: &AlternatingCycle,
    p: &AlternatingPath,
) -> Result<PathMergeOutcome> {
    c.validate(g)?;
    p.validate(g)?;
    if c.pair_mask() & p.pair_mask() != 0 {
        return domain("path and cycle share vertices");
    }
    let y = c.pairs();
    let m = y.len();
    let (w_end, b_end) = (p.pairs()[0], *p.pairs().last().expect("validated non-empty"));
    let mut certs = Vec::with_capacity(m);
    for i in 0..m {
        let w_miss = !g.has_edge(y[i], b_end);
        let b_miss = !g.has_edge(w_end, y[(i + m - 1) % m]);
        if !w_miss && !b_miss {
            let mut pairs = rotated_from(y, i);
            pairs.extend_from_slice(p.pairs());
            let cycle = AlternatingCycle::from_pairs(g, pairs)?;
            return Ok(PathMergeOutcome::Merged { cycle, index: i });
        }
        certs.push(PathCertificate {
            index: i,
            cycle_w_misses_b_end: w_miss,
            cycle_b_misses_w_end: b_miss,
        });
    }
    Ok(PathMergeOutcome::Blocked(certs))
}

/// Merges `c1` into `c` at the first index `k` where both `u_{2k-1}` and
/// `u_{2k}` have neighbours on `c1`. The inserted part is the longest segment
/// of `c1` running from a `W` neighbour of `u_{2k-1}` to a `B` neighbour of
/// `u_{2k}` (all of `c1` when possible).
pub fn merge_cycle_into_cycle(
    g: &BipartiteGraphWithMatching,
    c: &AlternatingCycle,
    c1: &AlternatingCycle,
) -> Result<CycleMergeOutcome> {
    c.validate(g)?;
    c1.validate(g)?;
    if c.pair_mask() & c1.pair_mask() != 0 {
        return domain("cycles share vertices");
    }
    let y = c.pairs();
    let z = c1.pairs();
    let (m, q) = (y.len(), z.len());
    let mask = c1.pair_mask();
    let mut certs = Vec::with_capacity(m);
    for i in 0..m {
        let prev = y[(i + m - 1) % m];
        let b_miss = g.b_row(prev) & mask == 0;
        let w_miss = g.w_row(y[i]) & mask == 0;
        if !b_miss && !w_miss {
            // segment z_a .. z_c with b_prev ~ w_{z_a} and w_{y_i} ~ b_{z_c}
            let mut best: Option<(usize, usize)> = None;
            for a in 0..q {
                if !g.has_edge(z[a], prev) {
                    continue;
                }
                for (c_end, &zc) in z.iter().enumerate() {
                    if !g.has_edge(y[i], zc) {
                        continue;
                    }
                    let len = (c_end + q - a) % q + 1;
                    if best.is_none_or(|(_, l)| len > l) {
                        best = Some((a, len));
                    }
                }
            }
            let (a, len) = best.expect("both ends attach");
            let mut pairs = rotated_from(y, i);
            pairs.extend((0..len).map(|t| z[(a + t) % q]));
            let cycle = AlternatingCycle::from_pairs(g, pairs)?;
            return Ok(CycleMergeOutcome::Merged { cycle, index: i });
        }
        certs.push(PairCertificate {
            index: i,
            b_misses_other: b_miss,
            w_misses_other: w_miss,
        });
    }
    Ok(CycleMergeOutcome::Blocked(certs))
}
