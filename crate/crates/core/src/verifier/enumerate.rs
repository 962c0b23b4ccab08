//! Labeled enumeration by out-rows (digraphs) or upper rows (graphs), with
//! the keyspace split into row prefixes for sharding and parallel work.

use serde::{Deserialize, Serialize};

use crate::conditions::{ore_slack, woodall_slack};
use crate::error::{check_cap, domain, Result};
use crate::graph::bits::{bit, low_mask, Bits};
use crate::graph::{Digraph, UndirectedGraph};

/// Largest digraph order for full labeled enumeration.
pub const DIGRAPH_ENUM_CAP: usize = 6;
/// Largest undirected order for full labeled enumeration.
pub const UNDIRECTED_ENUM_CAP: usize = 7;

/// Part `index` of `count` disjoint parts of the keyspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const FULL: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Self> {
        if count == 0 || index >= count {
            return domain(format!("shard {index} of {count} is invalid"));
        }
        Ok(Shard { index, count })
    }

    pub fn owns(self, prefix: usize) -> bool {
        prefix % self.count == self.index
    }
}

impl Default for Shard {
    fn default() -> Self {
        Shard::FULL
    }
}

const PREFIX_ROWS: usize = 2;

/// Digraph or graph keyspace of a given order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Space {
    Directed(usize),
    Undirected(usize),
}

impl Space {
    pub(crate) fn directed(order: usize) -> Result<Self> {
        check_cap("labeled digraph enumeration order", order, DIGRAPH_ENUM_CAP)?;
        Ok(Space::Directed(order))
    }

    pub(crate) fn undirected(order: usize) -> Result<Self> {
        check_cap("labeled graph enumeration order", order, UNDIRECTED_ENUM_CAP)?;
        Ok(Space::Undirected(order))
    }

    fn order(self) -> usize {
        match self {
            Space::Directed(n) | Space::Undirected(n) => n,
        }
    }

    /// Free bits in the row of vertex `v`.
    fn row_bits(self, v: usize) -> usize {
        match self {
            Space::Directed(n) => n - 1,
            Space::Undirected(n) => n - 1 - v,
        }
    }

    fn prefix_rows(self) -> usize {
        PREFIX_ROWS.min(self.order())
    }

    pub(crate) fn prefix_count(self) -> usize {
        (0..self.prefix_rows()).map(|v| 1usize << self.row_bits(v)).product()
    }

    /// Labeled objects below one prefix.
    fn per_prefix(self) -> u64 {
        (self.prefix_rows()..self.order()).map(|v| 1u64 << self.row_bits(v)).product()
    }

    pub(crate) fn labeled_in_shard(self, shard: Shard) -> u64 {
        let owned = (0..self.prefix_count()).filter(|&p| shard.owns(p)).count() as u64;
        owned * self.per_prefix()
    }

    /// Spreads the compact row code `x` over the row of vertex `v`.
    fn row(self, v: usize, x: u64) -> u64 {
        match self {
            Space::Directed(_) => {
                let low = x & low_mask(v);
                let high = (x >> v) << (v + 1);
                low | high
            }
            Space::Undirected(_) => x << (v + 1),
        }
    }

    /// Calls `f` on every object under prefix `p` that survives the slack
    /// filter (Woodall for digraphs, Ore for graphs) at `level`.
    pub(crate) fn visit_prefix(self, p: usize, level: Option<i64>, f: &mut dyn FnMut(Rows<'_>)) {
        let n = self.order();
        let mut w = Walker {
            space: self,
            n,
            level,
            rows: vec![0; n],
            out: vec![0; n],
            deg_in: vec![0; n],
        };
        let mut rest = p;
        for v in 0..self.prefix_rows() {
            let width = 1usize << self.row_bits(v);
            let x = (rest % width) as u64;
            rest /= width;
            w.assign(v, self.row(v, x));
            if !w.feasible(v) {
                return;
            }
        }
        w.descend(self.prefix_rows(), f);
    }
}

/// Completed rows handed to a visitor: out-rows for digraphs, full
/// adjacency rows for graphs.
pub(crate) struct Rows<'a>(pub(crate) &'a [u64]);

struct Walker {
    space: Space,
    n: usize,
    level: Option<i64>,
    rows: Vec<u64>,
    /// Out-degree so far (digraphs) or degree so far (graphs).
    out: Vec<usize>,
    deg_in: Vec<usize>,
}

impl Walker {
    fn assign(&mut self, v: usize, row: u64) {
        match self.space {
            Space::Directed(_) => {
                self.rows[v] = row;
                self.out[v] = row.count_ones() as usize;
                for w in Bits(row) {
                    self.deg_in[w] += 1;
                }
            }
            Space::Undirected(_) => {
                self.rows[v] |= row;
                self.out[v] += row.count_ones() as usize;
                for w in Bits(row) {
                    self.out[w] += 1;
                    self.rows[w] |= bit(v);
                }
            }
        }
    }

    fn unassign(&mut self, v: usize, row: u64) {
        match self.space {
            Space::Directed(_) => {
                for w in Bits(row) {
                    self.deg_in[w] -= 1;
                }
                self.out[v] = 0;
                self.rows[v] = 0;
            }
            Space::Undirected(_) => {
                self.out[v] -= row.count_ones() as usize;
                for w in Bits(row) {
                    self.out[w] -= 1;
                    self.rows[w] &= !bit(v);
                }
                self.rows[v] &= low_mask(v);
            }
        }
    }

    /// Rows `0..=v` are final. Every decided non-adjacent pair must still be
    /// able to reach the threshold with the best possible completion.
    fn feasible(&self, v: usize) -> bool {
        let Some(level) = self.level else { return true };
        let n = self.n;
        let need = n as i64 + level;
        let later = |w: usize| (v + 1..n).filter(|&x| x != w).count();
        match self.space {
            Space::Directed(_) => (0..=v).all(|u| {
                Bits(!self.rows[u] & low_mask(n) & !bit(u))
                    .all(|w| (self.out[u] + self.deg_in[w] + later(w)) as i64 >= need)
            }),
            Space::Undirected(_) => (0..=v).all(|u| {
                Bits(!self.rows[u] & low_mask(n) & !bit(u))
                    .all(|w| (self.out[u] + self.out[w] + if w > v { later(w) } else { 0 }) as i64 >= need)
            }),
        }
    }

    fn descend(&mut self, v: usize, f: &mut dyn FnMut(Rows<'_>)) {
        if v == self.n {
            f(Rows(&self.rows));
            return;
        }
        let width = 1u64 << self.space.row_bits(v);
        for x in 0..width {
            let row = self.space.row(v, x);
            self.assign(v, row);
            if self.feasible(v) {
                self.descend(v + 1, f);
            }
            self.unassign(v, row);
        }
    }
}

fn digraph_passes(d: &Digraph, level: Option<i64>) -> bool {
    level.is_none_or(|l| woodall_slack(d).at_least(l))
}

fn graph_passes(g: &UndirectedGraph, level: Option<i64>) -> bool {
    level.is_none_or(|l| ore_slack(g).at_least(l))
}

/// Visits every labeled digraph of `order` in `shard`. With `level`, only
/// digraphs of Woodall slack at least `level` are visited, and subtrees that
/// cannot reach it are skipped. Returns the number of labeled digraphs the
/// shard covers, visited or pruned.
pub fn for_each_digraph(order: usize, shard: Shard, level: Option<i64>, mut f: impl FnMut(Digraph)) -> Result<u64> {
    let space = Space::directed(order)?;
    for p in (0..space.prefix_count()).filter(|&p| shard.owns(p)) {
        space.visit_prefix(p, level, &mut |rows| {
            let d = Digraph::from_out_rows(rows.0).expect("enumerated rows are valid");
            if digraph_passes(&d, level) {
                f(d);
            }
        });
    }
    Ok(space.labeled_in_shard(shard))
}

pub fn enumerate_digraphs(order: usize, shard: Shard, level: Option<i64>) -> Result<Vec<Digraph>> {
    let mut out = Vec::new();
    for_each_digraph(order, shard, level, |d| out.push(d))?;
    Ok(out)
}

/// Undirected analogue of [`for_each_digraph`] with the Ore filter.
pub fn for_each_graph(
    order: usize,
    shard: Shard,
    level: Option<i64>,
    mut f: impl FnMut(UndirectedGraph),
) -> Result<u64> {
    let space = Space::undirected(order)?;
    for p in (0..space.prefix_count()).filter(|&p| shard.owns(p)) {
        space.visit_prefix(p, level, &mut |rows| {
            let g = UndirectedGraph::from_rows(rows.0).expect("enumerated rows are valid");
            if graph_passes(&g, level) {
                f(g);
            }
        });
    }
    Ok(space.labeled_in_shard(shard))
}

pub fn enumerate_graphs(order: usize, shard: Shard, level: Option<i64>) -> Result<Vec<UndirectedGraph>> {
    let mut out = Vec::new();
    for_each_graph(order, shard, level, |g| out.push(g))?;
    Ok(out)
}

pub(crate) fn rows_to_digraph(rows: Rows<'_>) -> Digraph {
    Digraph::from_out_rows(rows.0).expect("enumerated rows are valid")
}

pub(crate) fn rows_to_graph(rows: Rows<'_>) -> UndirectedGraph {
    UndirectedGraph::from_rows(rows.0).expect("enumerated rows are valid")
}

pub(crate) fn passes_directed(d: &Digraph, level: Option<i64>) -> bool {
    digraph_passes(d, level)
}

pub(crate) fn passes_undirected(g: &UndirectedGraph, level: Option<i64>) -> bool {
    graph_passes(g, level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_digraphs(2, Shard::FULL, None).unwrap().len(), 4);
        assert_eq!(enumerate_digraphs(3, Shard::FULL, None).unwrap().len(), 64);
        assert_eq!(enumerate_graphs(4, Shard::FULL, None).unwrap().len(), 64);
        assert!(enumerate_digraphs(7, Shard::FULL, None).is_err());
    }

    #[test]
    fn shards_partition() {
        let mut seen = HashSet::new();
        let mut total = 0;
        for i in 0..5 {
            total += for_each_digraph(3, Shard::new(i, 5).unwrap(), None, |d| assert!(seen.insert(d))).unwrap();
        }
        assert_eq!(seen.len(), 64);
        assert_eq!(total, 64);
    }

    #[test]
    fn pruning_matches_post_filter() {
        for n in 2..=4 {
            let all = enumerate_digraphs(n, Shard::FULL, None).unwrap();
            let want: HashSet<_> = all.into_iter().filter(|d| woodall_slack(d).at_least(-1)).collect();
            let got: HashSet<_> = enumerate_digraphs(n, Shard::FULL, Some(-1)).unwrap().into_iter().collect();
            assert_eq!(got, want);
        }
        for n in 3..=5 {
            let all = enumerate_graphs(n, Shard::FULL, None).unwrap();
            let want: HashSet<_> = all.into_iter().filter(|g| ore_slack(g).at_least(-1)).collect();
            let got: HashSet<_> = enumerate_graphs(n, Shard::FULL, Some(-1)).unwrap().into_iter().collect();
            assert_eq!(got, want);
        }
    }
}
