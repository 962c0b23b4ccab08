//! Degree conditions with exact slack and witnesses.
//!
//! Slack is the minimum, over the condition's quantified set, of the achieved
//! degree sum minus the classical threshold. Slack `>= 0` is the classical
//! condition, slack `>= -1` the relaxed one. An empty quantified set gives
//! [`Slack::Vacuous`]. Half-integer thresholds (`n/2`) are rounded up, which
//! leaves the integer level sets unchanged.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::correspondence::contract;
use crate::error::{domain, Result};
use crate::graph::bits::{bit, low_mask, Bits};
use crate::graph::{BVertex, BipartiteGraphWithMatching, Digraph, UndirectedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// `d⁺(u) + d⁻(v) >= n` for ordered pairs with no arc `u -> v`.
    Woodall,
    /// `d⁺(u) + d⁻(v) >= n` for every ordered pair, `u = v` included.
    AllPairs,
    /// `d⁺(v) + d⁻(v) >= n` for every vertex.
    GhouilaHouri,
    /// `min(d⁺(v), d⁻(v)) >= n/2`.
    SemiDegree,
    /// `d(w) + d(b) >= ν/2 + 2` for nonadjacent `w ∈ W`, `b ∈ B`.
    LasVergnas,
    /// `d(u) + d(v) >= n` for nonadjacent pairs.
    Ore,
    /// `d(v) >= n/2`.
    Dirac,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::Woodall => "woodall",
            Condition::AllPairs => "all-pairs",
            Condition::GhouilaHouri => "ghouila",
            Condition::SemiDegree => "semidegree",
            Condition::LasVergnas => "las-vergnas",
            Condition::Ore => "ore",
            Condition::Dirac => "dirac",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Slack {
    Vacuous,
    Value(i64),
}

impl Slack {
    /// Vacuous conditions hold at every level.
    pub fn at_least(self, level: i64) -> bool {
        match self {
            Slack::Vacuous => true,
            Slack::Value(s) => s >= level,
        }
    }

    pub fn value(self) -> Option<i64> {
        match self {
            Slack::Vacuous => None,
            Slack::Value(s) => Some(s),
        }
    }
}

impl fmt::Display for Slack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slack::Vacuous => f.write_str("vacuous"),
            Slack::Value(s) => write!(f, "{s}"),
        }
    }
}

/// A member of the quantified set. Digraph pairs `(u, v)` stand for
/// `d⁺(u) + d⁻(v)`; bipartite pairs are `(w, b)` indices; undirected pairs
/// are unordered with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Witness {
    Pair(usize, usize),
    Vertex(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition: Condition,
    pub slack: Slack,
    /// All members attaining the minimum.
    pub witnesses: Vec<Witness>,
    /// Classical threshold for this input size.
    pub threshold: i64,
}

impl ConditionReport {
    fn collect(condition: Condition, threshold: i64, items: impl Iterator<Item = (Witness, i64)>) -> Self {
        let mut best: Option<i64> = None;
        let mut witnesses = Vec::new();
        for (w, sum) in items {
            let s = sum - threshold;
            match best {
                Some(b) if s > b => {}
                Some(b) if s == b => witnesses.push(w),
                _ => {
                    best = Some(s);
                    witnesses.clear();
                    witnesses.push(w);
                }
            }
        }
        ConditionReport {
            condition,
            slack: best.map_or(Slack::Vacuous, Slack::Value),
            witnesses,
            threshold,
        }
    }
}

fn ceil_half(n: usize) -> i64 {
    n.div_ceil(2) as i64
}

pub fn digraph_slack(d: &Digraph, condition: Condition) -> Result<ConditionReport> {
    let n = d.order();
    if n < 2 {
        return domain("degree conditions need at least 2 vertices");
    }
    let out = |v: usize| d.dout(v) as i64;
    let inn = |v: usize| d.din(v) as i64;
    // Woodall skips arcs and the diagonal; all-pairs keeps both.
    let pairs = move |skip_arcs: bool| {
        (0..n).flat_map(move |u| {
            (0..n)
                .filter(move |&v| !skip_arcs || (v != u && !d.has_arc(u, v)))
                .map(move |v| (Witness::Pair(u, v), out(u) + inn(v)))
        })
    };
    let report = match condition {
        Condition::Woodall => ConditionReport::collect(condition, n as i64, pairs(true)),
        Condition::AllPairs => ConditionReport::collect(condition, n as i64, pairs(false)),
        Condition::GhouilaHouri => ConditionReport::collect(
            condition,
            n as i64,
            (0..n).map(|v| (Witness::Vertex(v), out(v) + inn(v))),
        ),
        Condition::SemiDegree => ConditionReport::collect(
            condition,
            ceil_half(n),
            (0..n).map(|v| (Witness::Vertex(v), out(v).min(inn(v)))),
        ),
        other => return domain(format!("condition {other} does not apply to digraphs")),
    };
    Ok(report)
}

pub fn bipartite_slack(g: &BipartiteGraphWithMatching, condition: Condition) -> Result<ConditionReport> {
    if condition != Condition::LasVergnas {
        return domain(format!("condition {condition} does not apply to matched bipartite graphs"));
    }
    let h = g.half_order();
    let threshold = h as i64 + 2;
    let items = (0..h).flat_map(move |w| {
        Bits(!g.w_row(w) & low_mask(h)).map(move |b| {
            let sum = g.deg(BVertex::w(w)) + g.deg(BVertex::b(b));
            (Witness::Pair(w, b), sum as i64)
        })
    });
    Ok(ConditionReport::collect(condition, threshold, items))
}

pub fn undirected_slack(g: &UndirectedGraph, condition: Condition) -> Result<ConditionReport> {
    let n = g.order();
    let deg = |v: usize| g.deg(v) as i64;
    let report = match condition {
        Condition::Ore => {
            let items = (0..n).flat_map(move |u| {
                Bits(!g.row(u) & low_mask(n) & !low_mask(u + 1)).map(move |v| (Witness::Pair(u, v), deg(u) + deg(v)))
            });
            ConditionReport::collect(condition, n as i64, items)
        }
        Condition::Dirac => {
            ConditionReport::collect(condition, ceil_half(n), (0..n).map(|v| (Witness::Vertex(v), deg(v))))
        }
        other => return domain(format!("condition {other} does not apply to undirected graphs")),
    };
    Ok(report)
}

/// Woodall slack without witnesses, for enumeration loops.
pub fn woodall_slack(d: &Digraph) -> Slack {
    pair_slack(d, true)
}

/// All-pairs slack without witnesses.
pub fn all_pairs_slack(d: &Digraph) -> Slack {
    pair_slack(d, false)
}

fn pair_slack(d: &Digraph, skip_arcs: bool) -> Slack {
    let n = d.order();
    let mut best: Option<i64> = None;
    for u in 0..n {
        let candidates = if skip_arcs { !d.out_row(u) & !bit(u) } else { u64::MAX };
        let targets = candidates & low_mask(n);
        if targets == 0 {
            continue;
        }
        let min_in = Bits(targets).map(|v| d.din(v)).min().expect("non-empty") as i64;
        let s = d.dout(u) as i64 + min_in - n as i64;
        best = Some(best.map_or(s, |b: i64| b.min(s)));
    }
    best.map_or(Slack::Vacuous, Slack::Value)
}

/// Ore slack without witnesses.
pub fn ore_slack(g: &UndirectedGraph) -> Slack {
    let n = g.order();
    let mut best: Option<i64> = None;
    for u in 0..n {
        let others = !g.row(u) & low_mask(n) & !low_mask(u + 1);
        if let Some(m) = Bits(others).map(|v| g.deg(v)).min() {
            let s = (g.deg(u) + m) as i64 - n as i64;
            best = Some(best.map_or(s, |b: i64| b.min(s)));
        }
    }
    best.map_or(Slack::Vacuous, Slack::Value)
}

/// Las Vergnas slack through the contraction identity.
pub fn las_vergnas_slack(g: &BipartiteGraphWithMatching) -> Slack {
    woodall_slack(&contract(g))
}

/// Re-checks a witness against direct degree queries; returns its slack.
pub fn witness_slack(d: &Digraph, condition: Condition, w: Witness) -> Result<i64> {
    let n = d.order() as i64;
    match (condition, w) {
        (Condition::Woodall | Condition::AllPairs, Witness::Pair(u, v)) => {
            if condition == Condition::Woodall && (u == v || d.has_arc(u, v)) {
                return domain("pair is outside the quantified set");
            }
            Ok((d.out_degree(u)? + d.in_degree(v)?) as i64 - n)
        }
        (Condition::GhouilaHouri, Witness::Vertex(v)) => Ok((d.out_degree(v)? + d.in_degree(v)?) as i64 - n),
        (Condition::SemiDegree, Witness::Vertex(v)) => {
            Ok(d.out_degree(v)?.min(d.in_degree(v)?) as i64 - ceil_half(d.order()))
        }
        _ => domain("witness shape does not match condition"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_is_vacuous() {
        let r = digraph_slack(&Digraph::complete(3).unwrap(), Condition::Woodall).unwrap();
        assert_eq!(r.slack, Slack::Vacuous);
        assert!(r.witnesses.is_empty());
        assert!(r.slack.at_least(100));
    }

    #[test]
    fn three_cycle() {
        let c = Digraph::directed_cycle(3).unwrap();
        let r = digraph_slack(&c, Condition::Woodall).unwrap();
        assert_eq!(r.slack, Slack::Value(-1));
        // non-arcs u -> u-1
        let mut w = r.witnesses.clone();
        w.sort_by_key(|x| format!("{x:?}"));
        assert_eq!(w, vec![Witness::Pair(0, 2), Witness::Pair(1, 0), Witness::Pair(2, 1)]);
        assert_eq!(woodall_slack(&c), Slack::Value(-1));
        for x in r.witnesses {
            assert_eq!(witness_slack(&c, Condition::Woodall, x).unwrap(), -1);
        }
    }

    #[test]
    fn order_one_is_rejected() {
        assert!(digraph_slack(&Digraph::empty(1).unwrap(), Condition::Woodall).is_err());
    }

    #[test]
    fn vertex_conditions() {
        let c = Digraph::directed_cycle(4).unwrap();
        assert_eq!(digraph_slack(&c, Condition::GhouilaHouri).unwrap().slack, Slack::Value(-2));
        assert_eq!(digraph_slack(&c, Condition::SemiDegree).unwrap().slack, Slack::Value(-1));
        let k = Digraph::complete(5).unwrap();
        assert_eq!(digraph_slack(&k, Condition::SemiDegree).unwrap().slack, Slack::Value(1));
        assert_eq!(digraph_slack(&k, Condition::AllPairs).unwrap().slack, Slack::Value(3));
    }

    #[test]
    fn undirected() {
        let k4 = UndirectedGraph::complete(4).unwrap();
        assert_eq!(undirected_slack(&k4, Condition::Ore).unwrap().slack, Slack::Vacuous);
        let p3 = UndirectedGraph::path(3).unwrap();
        let r = undirected_slack(&p3, Condition::Ore).unwrap();
        assert_eq!(r.slack, Slack::Value(-1));
        assert_eq!(r.witnesses, vec![Witness::Pair(0, 2)]);
        assert_eq!(ore_slack(&p3), Slack::Value(-1));
        assert_eq!(undirected_slack(&p3, Condition::Dirac).unwrap().slack, Slack::Value(-1));
    }

    #[test]
    fn bipartite_matches_contraction() {
        let g = BipartiteGraphWithMatching::from_normalized(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(bipartite_slack(&g, Condition::LasVergnas).unwrap().slack, Slack::Vacuous);
        let d = Digraph::directed_cycle(3).unwrap();
        let e = crate::correspondence::expand(&d);
        assert_eq!(bipartite_slack(&e, Condition::LasVergnas).unwrap().slack, Slack::Value(-1));
        assert_eq!(las_vergnas_slack(&e), Slack::Value(-1));
    }
}
