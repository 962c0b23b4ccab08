//! Matching-alternating cycles and closed alternating paths.
//!
//! A closed alternating path from `w_{p0}` to `b_{pk}` reads
//! `w_{p0} b_{p0} w_{p1} b_{p1} ... w_{pk} b_{pk}`; it is stored by its pair
//! sequence `[p0, ..., pk]`. Cycles are stored the same way after rotating
//! and orienting them so that position 0 is a `W` vertex followed by its
//! matched partner.

use serde::{Deserialize, Serialize};

use super::bipartite::{BVertex, BipartiteGraphWithMatching, Side};
use super::bits::bit;
use crate::error::{domain, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlternatingCycle {
    pairs: Vec<usize>,
}

impl AlternatingCycle {
    /// Cycle `w_{p0} b_{p0} w_{p1} ... b_{p(k-1)} w_{p0}`.
    pub fn from_pairs(g: &BipartiteGraphWithMatching, pairs: Vec<usize>) -> Result<Self> {
        let c = AlternatingCycle { pairs };
        validate_cycle_sequence(g, &c.sequence())?;
        Ok(c)
    }

    /// Accepts any rotation and direction of an alternating vertex sequence.
    pub fn from_sequence(g: &BipartiteGraphWithMatching, seq: &[BVertex]) -> Result<Self> {
        validate_cycle_sequence(g, seq)?;
        let n = seq.len();
        // find a W vertex whose successor is its partner, possibly after reversal
        let start = (0..n).find(|&i| seq[i].side == Side::W && seq[(i + 1) % n] == seq[i].partner());
        let pairs = match start {
            Some(s) => (0..n / 2).map(|k| seq[(s + 2 * k) % n].index).collect(),
            None => {
                let s = (0..n)
                    .find(|&i| seq[i].side == Side::W && seq[(i + n - 1) % n] == seq[i].partner())
                    .expect("validated cycle alternates matching edges");
                (0..n / 2).map(|k| seq[(s + n - 2 * k) % n].index).collect()
            }
        };
        Ok(AlternatingCycle { pairs })
    }

    /// Matching pairs in cycle order; consecutive pairs `x, y` satisfy `b_x ~ w_y`.
    pub fn pairs(&self) -> &[usize] {
        &self.pairs
    }

    /// Vertex count `2m`.
    pub fn len(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The vertex sequence `u_0 u_1 ... u_{2m-1}` with `u_{2i} ∈ W` and
    /// `u_{2i} u_{2i+1}` in the matching.
    pub fn sequence(&self) -> Vec<BVertex> {
        self.pairs
            .iter()
            .flat_map(|&p| [BVertex::w(p), BVertex::b(p)])
            .collect()
    }

    /// Positions `i` such that `(u_i, u_{i+1})` is a matching edge.
    pub fn m_edge_offsets(&self) -> Vec<usize> {
        (0..self.pairs.len()).map(|i| 2 * i).collect()
    }

    pub fn pair_mask(&self) -> u64 {
        self.pairs.iter().fold(0, |m, &p| m | bit(p))
    }

    /// Re-checks the cycle against `g` by direct adjacency queries.
    pub fn validate(&self, g: &BipartiteGraphWithMatching) -> Result<()> {
        validate_cycle_sequence(g, &self.sequence())
    }

    pub fn is_hamiltonian(&self, g: &BipartiteGraphWithMatching) -> bool {
        self.pairs.len() == g.half_order()
    }
}

/// Closed alternating path `w_{p0} b_{p0} ... w_{pk} b_{pk}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlternatingPath {
    pairs: Vec<usize>,
}

impl AlternatingPath {
    pub fn from_pairs(g: &BipartiteGraphWithMatching, pairs: Vec<usize>) -> Result<Self> {
        let p = AlternatingPath { pairs };
        p.validate(g)?;
        Ok(p)
    }

    pub fn pairs(&self) -> &[usize] {
        &self.pairs
    }

    /// Vertex count `|P|`.
    pub fn len(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// End in `W` (the path starts here with a matching edge).
    pub fn w_end(&self) -> BVertex {
        BVertex::w(self.pairs[0])
    }

    /// End in `B` (the path finishes here with a matching edge).
    pub fn b_end(&self) -> BVertex {
        BVertex::b(*self.pairs.last().expect("non-empty path"))
    }

    pub fn sequence(&self) -> Vec<BVertex> {
        self.pairs
            .iter()
            .flat_map(|&p| [BVertex::w(p), BVertex::b(p)])
            .collect()
    }

    pub fn pair_mask(&self) -> u64 {
        self.pairs.iter().fold(0, |m, &p| m | bit(p))
    }

    pub fn validate(&self, g: &BipartiteGraphWithMatching) -> Result<()> {
        if self.pairs.is_empty() {
            return domain("empty alternating path");
        }
        let seq = self.sequence();
        check_distinct(g, &seq)?;
        for (i, pair) in seq.windows(2).enumerate() {
            if !g.adjacent(pair[0], pair[1]) {
                return domain(format!("{} and {} are not adjacent", pair[0], pair[1]));
            }
            let is_m = pair[0].index == pair[1].index;
            if is_m != (i % 2 == 0) {
                return domain("path does not alternate between matching and non-matching edges");
            }
        }
        Ok(())
    }
}

fn check_distinct(g: &BipartiteGraphWithMatching, seq: &[BVertex]) -> Result<()> {
    let mut seen_w = 0u64;
    let mut seen_b = 0u64;
    for v in seq {
        if v.index >= g.half_order() {
            return domain(format!("vertex {v} out of range"));
        }
        let set = match v.side {
            Side::W => &mut seen_w,
            Side::B => &mut seen_b,
        };
        if *set & bit(v.index) != 0 {
            return domain(format!("vertex {v} repeated"));
        }
        *set |= bit(v.index);
    }
    Ok(())
}

/// Independent validator: even length at least 4, alternating sides,
/// consecutive vertices adjacent, edges alternating between the matching
/// and the rest, no repeated vertex.
pub fn validate_cycle_sequence(g: &BipartiteGraphWithMatching, seq: &[BVertex]) -> Result<()> {
    let n = seq.len();
    if n < 4 || !n.is_multiple_of(2) {
        return domain(format!("alternating cycle length {n} is not an even number >= 4"));
    }
    check_distinct(g, seq)?;
    let mut m_flags = Vec::with_capacity(n);
    for i in 0..n {
        let (x, y) = (seq[i], seq[(i + 1) % n]);
        if x.side == y.side {
            return domain("consecutive vertices on the same side");
        }
        if !g.adjacent(x, y) {
            return domain(format!("{x} and {y} are not adjacent"));
        }
        m_flags.push(x.index == y.index);
    }
    for i in 0..n {
        if m_flags[i] == m_flags[(i + 1) % n] {
            return domain("edges do not alternate between matching and non-matching");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> BipartiteGraphWithMatching {
        BipartiteGraphWithMatching::from_normalized(2, [(0, 1), (1, 0)]).unwrap()
    }

    #[test]
    fn four_cycle_validates() {
        let g = c4();
        let c = AlternatingCycle::from_pairs(&g, vec![0, 1]).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.m_edge_offsets(), vec![0, 2]);
        assert!(c.is_hamiltonian(&g));
    }

    #[test]
    fn sequence_is_normalized() {
        let g = c4();
        // b1 w1 b0 w0 : rotation/reversal of w0 b0 w1 b1
        let seq = [BVertex::b(0), BVertex::w(0), BVertex::b(1), BVertex::w(1)];
        let c = AlternatingCycle::from_sequence(&g, &seq).unwrap();
        assert_eq!(c.sequence()[0].side, Side::W);
        c.validate(&g).unwrap();
        let seq2 = [BVertex::b(0), BVertex::w(1), BVertex::b(1), BVertex::w(0)];
        let c2 = AlternatingCycle::from_sequence(&g, &seq2).unwrap();
        c2.validate(&g).unwrap();
    }

    #[test]
    fn rejects_non_alternating() {
        let g = BipartiteGraphWithMatching::from_normalized(2, [(0, 1)]).unwrap();
        assert!(AlternatingCycle::from_pairs(&g, vec![0, 1]).is_err());
        assert!(AlternatingCycle::from_pairs(&g, vec![0]).is_err());
        // starting on a non-matching edge is just another rotation
        let k = BipartiteGraphWithMatching::from_normalized(2, [(0, 1), (1, 0)]).unwrap();
        let rotated = [BVertex::w(0), BVertex::b(1), BVertex::w(1), BVertex::b(0)];
        assert!(AlternatingCycle::from_sequence(&k, &rotated).is_ok());
        let repeated = [BVertex::w(0), BVertex::b(0), BVertex::w(0), BVertex::b(0)];
        assert!(validate_cycle_sequence(&k, &repeated).is_err());
    }

    #[test]
    fn closed_paths() {
        let g = BipartiteGraphWithMatching::from_normalized(3, [(1, 0), (2, 1)]).unwrap();
        let p = AlternatingPath::from_pairs(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(p.w_end(), BVertex::w(0));
        assert_eq!(p.b_end(), BVertex::b(2));
        assert_eq!(p.len(), 6);
        assert!(AlternatingPath::from_pairs(&g, vec![2, 1]).is_err());
        assert!(AlternatingPath::from_pairs(&g, vec![1]).is_ok());
    }
}
