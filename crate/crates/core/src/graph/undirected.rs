use std::fmt;

use super::bits::{bit, low_mask, Bits};
use super::digraph::{check_permutation, MAX_ORDER};
use crate::error::{domain, Result};

/// Simple undirected graph on `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    order: usize,
    adj: Vec<u64>,
}

impl UndirectedGraph {
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return domain(format!("order {order} exceeds {MAX_ORDER}"));
        }
        Ok(UndirectedGraph {
            order,
            adj: vec![0; order],
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = UndirectedGraph::empty(order)?;
        for (u, v) in edges {
            if u >= order || v >= order {
                return domain(format!("edge ({u},{v}) out of range for order {order}"));
            }
            if u == v {
                return domain(format!("loop at vertex {u}"));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Result<Self> {
        let mut g = UndirectedGraph::empty(order)?;
        for v in 0..order {
            g.adj[v] = low_mask(order) & !bit(v);
        }
        Ok(g)
    }

    /// Path `0 - 1 - ... - order-1`.
    pub fn path(order: usize) -> Result<Self> {
        UndirectedGraph::from_edges(order, (1..order).map(|v| (v - 1, v)))
    }

    pub fn cycle(order: usize) -> Result<Self> {
        if order < 3 {
            return domain("a cycle needs at least 3 vertices");
        }
        UndirectedGraph::from_edges(order, (0..order).map(|v| (v, (v + 1) % order)))
    }

    /// Builds from adjacency rows; rows must be symmetric and loop-free.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let order = rows.len();
        let mut g = UndirectedGraph::empty(order)?;
        for (u, &row) in rows.iter().enumerate() {
            if row & !low_mask(order) != 0 || row & bit(u) != 0 {
                return domain(format!("invalid adjacency row for vertex {u}"));
            }
            for v in Bits(row) {
                if rows[v] & bit(u) == 0 {
                    return domain("adjacency rows are not symmetric");
                }
            }
            g.adj[u] = row;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.order {
            return domain(format!("vertex {v} out of range for order {}", self.order));
        }
        Ok(self.adj[v].count_ones() as usize)
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order)
            .flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        if u >= self.order || v >= self.order || u == v {
            return domain(format!("cannot add edge ({u},{v})"));
        }
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.order)?;
        let mut g = UndirectedGraph::empty(self.order)?;
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    pub fn induced(&self, vertices: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut seen = 0u64;
        for &v in vertices {
            if v >= self.order || seen & bit(v) != 0 {
                return domain(format!("bad vertex {v} in induced set"));
            }
            seen |= bit(v);
        }
        let mut g = UndirectedGraph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adj[u] & bit(v) != 0 {
                    g.set_edge(i, j);
                }
            }
        }
        Ok((g, vertices.to_vec()))
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let all = low_mask(self.order);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= all & !seen;
            seen |= next;
            frontier = next;
        }
        seen == all
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }
}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "Graph({}; {})", self.order, edges.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_shapes() {
        let p = UndirectedGraph::path(3).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.degree(1).unwrap(), 2);
        assert!(p.degree(3).is_err());
        let k = UndirectedGraph::complete(4).unwrap();
        assert_eq!(k.edge_count(), 6);
        assert!(k.is_connected());
        assert!(!UndirectedGraph::empty(2).unwrap().is_connected());
    }

    #[test]
    fn rows_must_be_symmetric() {
        assert!(UndirectedGraph::from_rows(&[0b10, 0b00]).is_err());
        assert!(UndirectedGraph::from_rows(&[0b10, 0b01]).is_ok());
    }
}
