use std::fmt;

use super::bits::{bit, low_mask, Bits};
use crate::error::{domain, Result};

/// Largest order a dense bit-row value can hold.
pub const MAX_ORDER: usize = 64;

/// Loop-free simple digraph on vertices `0..order`, stored as out- and
/// in-neighbour bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    /// Arcless digraph.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return domain(format!("order {order} exceeds {MAX_ORDER}"));
        }
        Ok(Digraph {
            order,
            out: vec![0; order],
            inn: vec![0; order],
        })
    }

    /// Digraph from an arc list. Duplicate arcs collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_arcs<I>(order: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(order)?;
        for (u, v) in arcs {
            d.try_set_arc(u, v)?;
        }
        Ok(d)
    }

    /// Complete digraph: every ordered pair of distinct vertices is an arc.
    pub fn complete(order: usize) -> Result<Self> {
        let mut d = Digraph::empty(order)?;
        let all = low_mask(order);
        for v in 0..order {
            d.out[v] = all & !bit(v);
            d.inn[v] = all & !bit(v);
        }
        Ok(d)
    }

    /// Directed cycle `0 -> 1 -> ... -> order-1 -> 0`.
    pub fn directed_cycle(order: usize) -> Result<Self> {
        if order < 2 {
            return domain("a directed cycle needs at least 2 vertices");
        }
        Digraph::from_arcs(order, (0..order).map(|v| (v, (v + 1) % order)))
    }

    /// Arcs `(i, j)` for all `i < j`.
    pub fn transitive_tournament(order: usize) -> Result<Self> {
        Digraph::from_arcs(
            order,
            (0..order).flat_map(|i| (i + 1..order).map(move |j| (i, j))),
        )
    }

    /// Builds from out-neighbour rows; rows must be loop-free and in range.
    pub fn from_out_rows(rows: &[u64]) -> Result<Self> {
        let order = rows.len();
        let mut d = Digraph::empty(order)?;
        let all = low_mask(order);
        for (u, &row) in rows.iter().enumerate() {
            if row & !all != 0 || row & bit(u) != 0 {
                return domain(format!("invalid out-row for vertex {u}"));
            }
            for v in Bits(row) {
                d.set_arc(u, v);
            }
        }
        Ok(d)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.out[u] & bit(v) != 0
    }

    /// Out-neighbours of `v` as a bit set. Panics if `v` is out of range.
    #[inline]
    pub fn out_row(&self, v: usize) -> u64 {
        self.out[v]
    }

    /// In-neighbours of `v` as a bit set. Panics if `v` is out of range.
    #[inline]
    pub fn in_row(&self, v: usize) -> u64 {
        self.inn[v]
    }

    pub fn out_rows(&self) -> &[u64] {
        &self.out
    }

    pub fn out_degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.out[v].count_ones() as usize)
    }

    pub fn in_degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.inn[v].count_ones() as usize)
    }

    #[inline]
    pub(crate) fn dout(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    #[inline]
    pub(crate) fn din(&self, v: usize) -> usize {
        self.inn[v].count_ones() as usize
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| Bits(self.out[u]).map(move |v| (u, v)))
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order)
    }

    /// Copy with one extra arc.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Self> {
        let mut d = self.clone();
        d.try_set_arc(u, v)?;
        Ok(d)
    }

    /// Reverses every arc.
    pub fn converse(&self) -> Self {
        Digraph {
            order: self.order,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Relabels vertex `v` as `perm[v]`; `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.order)?;
        let mut d = Digraph::empty(self.order)?;
        for (u, v) in self.arcs() {
            d.set_arc(perm[u], perm[v]);
        }
        Ok(d)
    }

    /// Subgraph induced by `vertices` (in the given order). Returns the
    /// subgraph and the table mapping new indices to old ones.
    pub fn induced(&self, vertices: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut seen = 0u64;
        for &v in vertices {
            self.check_vertex(v)?;
            if seen & bit(v) != 0 {
                return domain(format!("vertex {v} listed twice"));
            }
            seen |= bit(v);
        }
        let mut d = Digraph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.out[u] & bit(v) != 0 {
                    d.set_arc(i, j);
                }
            }
        }
        Ok((d, vertices.to_vec()))
    }

    /// Induced subgraph on a vertex mask, vertices kept in increasing order.
    pub fn induced_mask(&self, mask: u64) -> (Self, Vec<usize>) {
        let vs: Vec<usize> = Bits(mask & self.vertex_mask()).collect();
        self.induced(&vs).expect("mask vertices are in range and distinct")
    }

    /// Vertices reachable from `start` inside `allowed` (start included).
    pub fn reach(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.out[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn reach_back(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.inn[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Strong connectivity of the subgraph induced by `mask`.
    pub fn is_strong_on(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let s = mask.trailing_zeros() as usize;
        self.reach(s, mask) == mask && self.reach_back(s, mask) == mask
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.is_strong_on(self.vertex_mask())
    }

    /// Undirected adjacency (either arc direction) of `v`.
    #[inline]
    pub fn adjacency_row(&self, v: usize) -> u64 {
        self.out[v] | self.inn[v]
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            domain(format!("vertex {v} out of range for order {}", self.order))
        }
    }

    fn try_set_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return domain(format!("loop at vertex {u}"));
        }
        self.set_arc(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn set_arc(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.out[u] |= bit(v);
        self.inn[v] |= bit(u);
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}; ", self.order)?;
        let arcs: Vec<String> = self.arcs().map(|(u, v)| format!("{u}>{v}")).collect();
        write!(f, "{})", arcs.join(" "))
    }
}

pub(crate) fn check_permutation(perm: &[usize], order: usize) -> Result<()> {
    if perm.len() != order {
        return domain("permutation length does not match order");
    }
    let mut seen = 0u64;
    for &p in perm {
        if p >= order || seen & bit(p) != 0 {
            return domain("not a permutation");
        }
        seen |= bit(p);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_of_small_digraphs() {
        let k3 = Digraph::complete(3).unwrap();
        for v in 0..3 {
            assert_eq!(k3.out_degree(v).unwrap(), 2);
            assert_eq!(k3.in_degree(v).unwrap(), 2);
        }
        let c3 = Digraph::directed_cycle(3).unwrap();
        for v in 0..3 {
            assert_eq!(c3.out_degree(v).unwrap(), 1);
            assert_eq!(c3.in_degree(v).unwrap(), 1);
        }
        assert!(k3.out_degree(3).is_err());
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(Digraph::from_arcs(2, [(0, 0)]).is_err());
        assert!(Digraph::from_arcs(2, [(0, 2)]).is_err());
        assert!(Digraph::empty(65).is_err());
        assert!(Digraph::from_out_rows(&[0b01]).is_err());
    }

    #[test]
    fn duplicate_arcs_collapse() {
        let d = Digraph::from_arcs(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(d.arc_count(), 1);
    }

    #[test]
    fn induced_keeps_adjacency() {
        let d = Digraph::directed_cycle(4).unwrap();
        let (h, map) = d.induced(&[2, 3, 0]).unwrap();
        assert_eq!(map, vec![2, 3, 0]);
        assert!(h.has_arc(0, 1));
        assert!(h.has_arc(1, 2));
        assert!(!h.has_arc(2, 0));
        let (e, _) = d.induced(&[]).unwrap();
        assert_eq!(e.order(), 0);
        assert!(d.induced(&[1, 1]).is_err());
    }

    #[test]
    fn strong_connectivity() {
        assert!(Digraph::directed_cycle(5).unwrap().is_strongly_connected());
        assert!(!Digraph::transitive_tournament(3)
            .unwrap()
            .is_strongly_connected());
    }

    #[test]
    fn converse_and_relabel() {
        let t = Digraph::transitive_tournament(3).unwrap();
        let c = t.converse();
        assert!(c.has_arc(2, 0) && !c.has_arc(0, 2));
        let r = t.relabel(&[2, 1, 0]).unwrap();
        assert_eq!(r, c);
        assert!(t.relabel(&[0, 0, 1]).is_err());
    }
}
