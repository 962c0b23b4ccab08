//! Constructors for every exceptional family.

use super::tag::{FamilyTag, TagDomain};
use crate::codec::parse_digraph6;
use crate::correspondence::{contract, expand};
use crate::error::{domain, Result};
use crate::graph::{
    with_some_perfect_matching, BipartiteGraphWithMatching, Canonical, CanonicalCode, CodeKind, Digraph,
    UndirectedGraph,
};

/// The order-7 exceptional digraph, as found by the skeleton search in
/// `verifier::derive_g4` and frozen here.
pub const D4_DIGRAPH6: &str = "&FQeWXXTKw?";

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        domain(format!("parameter {name} must be at least 1"))
    } else {
        Ok(())
    }
}

/// Complete digraphs on `{0, 1..=n}` and `{0, n+1..=n+m}`.
pub fn d1(n: usize, m: usize) -> Result<Digraph> {
    positive("n", n)?;
    positive("m", m)?;
    let mut arcs = Vec::new();
    for block in [(0..=n).collect::<Vec<_>>(), std::iter::once(0).chain(n + 1..=n + m).collect()] {
        for &u in &block {
            for &v in &block {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
    }
    Digraph::from_arcs(n + m + 1, arcs)
}

/// Independent vertices `0..=n` joined both ways to `inner` on `n+1..=2n`.
pub fn d2(n: usize, inner: &Digraph) -> Result<Digraph> {
    positive("n", n)?;
    if inner.order() != n {
        return domain(format!("inner digraph must have order {n}"));
    }
    let mut arcs: Vec<(usize, usize)> = inner.arcs().map(|(u, v)| (u + n + 1, v + n + 1)).collect();
    for i in 0..=n {
        for j in n + 1..=2 * n {
            arcs.push((i, j));
            arcs.push((j, i));
        }
    }
    Digraph::from_arcs(2 * n + 1, arcs)
}

/// Base vertices `a = 0`, `c = 1`, `p = 2`, `q = 3` and a complete core on
/// `4..4+n`. `a` and `c` are joined both ways to the core, `p` and `q` both
/// ways to each other, plus `a -> p -> c -> q -> a`. `forward` adds `a -> c`,
/// `backward` adds `c -> a`.
pub fn d3(n: usize, forward: bool, backward: bool) -> Result<Digraph> {
    positive("n", n)?;
    let (a, c, p, q) = (0, 1, 2, 3);
    let core = 4..4 + n;
    let mut arcs = vec![(p, q), (q, p), (a, p), (p, c), (c, q), (q, a)];
    for k in core.clone() {
        for j in core.clone() {
            if j != k {
                arcs.push((k, j));
            }
        }
        for x in [a, c] {
            arcs.push((x, k));
            arcs.push((k, x));
        }
    }
    if forward {
        arcs.push((a, c));
    }
    if backward {
        arcs.push((c, a));
    }
    Digraph::from_arcs(n + 4, arcs)
}

pub fn d4() -> Digraph {
    parse_digraph6(D4_DIGRAPH6).expect("frozen constant parses")
}

pub fn g1(n: usize, m: usize) -> Result<BipartiteGraphWithMatching> {
    Ok(expand(&d1(n, m)?))
}

/// `n + 1` isolated matching edges joined to a matched inner graph: every
/// `b` of the isolated edges to every `W` vertex of the inner graph and every
/// `w` to every inner `B` vertex.
pub fn g2(n: usize, inner: &BipartiteGraphWithMatching) -> Result<BipartiteGraphWithMatching> {
    positive("n", n)?;
    if inner.half_order() != n {
        return domain(format!("inner graph must have {n} vertices per side"));
    }
    let mut edges: Vec<(usize, usize)> = inner.edges().map(|(w, b)| (w + n + 1, b + n + 1)).collect();
    for i in 0..=n {
        for j in n + 1..=2 * n {
            edges.push((j, i));
            edges.push((i, j));
        }
    }
    BipartiteGraphWithMatching::from_normalized(2 * n + 1, edges)
}

/// `g2` for an inner graph given by `(w, b)` edges; some perfect matching
/// of the inner graph is chosen.
pub fn g2_from_edges(n: usize, inner_edges: &[(usize, usize)]) -> Result<BipartiteGraphWithMatching> {
    g2(n, &with_some_perfect_matching(n, inner_edges)?)
}

/// Base pairs `(v0, v1)`, `(u0, u1)`, `(u2, u3)`, `(u4, u5)` as pairs 0..4
/// and `K_{n,n}` on pairs `4..4+n`. Base edges `u1u2, u3u4, u2v1, u3v0,
/// v0u5, v1u0`; `u0, u4` join every core `b`, `u1, u5` every core `w`.
/// `opt0` adds `u0u5`, `opt1` adds `u4u1`.
pub fn g3(n: usize, opt0: bool, opt1: bool) -> Result<BipartiteGraphWithMatching> {
    positive("n", n)?;
    // (w pair, b pair)
    let mut edges = vec![(2, 1), (3, 2), (2, 0), (0, 2), (0, 3), (1, 0)];
    let core = 4..4 + n;
    for k in core.clone() {
        for j in core.clone() {
            edges.push((k, j));
        }
        edges.extend([(1, k), (3, k), (k, 1), (k, 3)]);
    }
    if opt0 {
        edges.push((1, 3));
    }
    if opt1 {
        edges.push((3, 1));
    }
    BipartiteGraphWithMatching::from_normalized(n + 4, edges)
}

pub fn g4() -> BipartiteGraphWithMatching {
    expand(&d4())
}

/// `K_{n+1}` and `K_{m+1}` sharing vertex 0.
pub fn g5(n: usize, m: usize) -> Result<UndirectedGraph> {
    let d = d1(n, m)?;
    UndirectedGraph::from_edges(d.order(), d.arcs().filter(|(u, v)| u < v))
}

/// `I_{n+1}` on `0..=n` joined to `inner` on `n+1..=2n`.
pub fn g6(n: usize, inner: &UndirectedGraph) -> Result<UndirectedGraph> {
    positive("n", n)?;
    if inner.order() != n {
        return domain(format!("inner graph must have order {n}"));
    }
    let mut edges: Vec<(usize, usize)> = inner.edges().map(|(u, v)| (u + n + 1, v + n + 1)).collect();
    for i in 0..=n {
        for j in n + 1..=2 * n {
            edges.push((i, j));
        }
    }
    UndirectedGraph::from_edges(2 * n + 1, edges)
}

fn inner_of(code: &CanonicalCode, kind: CodeKind, n: usize) -> Result<()> {
    if code.kind() != kind {
        return domain(format!("inner code has kind {:?}, expected {kind:?}", code.kind()));
    }
    if code.order() != n {
        return domain(format!("inner code has order {}, expected {n}", code.order()));
    }
    Ok(())
}

pub fn build_directed(tag: &FamilyTag) -> Result<Digraph> {
    match tag {
        FamilyTag::D1 { n, m } => d1(*n, *m),
        FamilyTag::D1Prime { n } => d1(*n, *n),
        FamilyTag::D2 { n, inner } => {
            inner_of(inner, CodeKind::Digraph, *n)?;
            d2(*n, &inner.to_digraph()?)
        }
        FamilyTag::D3 { n, forward, backward } => d3(*n, *forward, *backward),
        FamilyTag::D3Prime { forward, backward } => d3(1, *forward, *backward),
        FamilyTag::D4 => Ok(d4()),
        other => domain(format!("{other} is not a digraph family")),
    }
}

pub fn build_bipartite(tag: &FamilyTag) -> Result<BipartiteGraphWithMatching> {
    match tag {
        FamilyTag::G1 { n, m } => g1(*n, *m),
        FamilyTag::G2 { n, inner } => {
            inner_of(inner, CodeKind::Bipartite, *n)?;
            g2(*n, &inner.to_bipartite()?)
        }
        FamilyTag::G3 { n, opt0, opt1 } => g3(*n, *opt0, *opt1),
        FamilyTag::G4 => Ok(g4()),
        other => domain(format!("{other} is not a bipartite family")),
    }
}

pub fn build_undirected(tag: &FamilyTag) -> Result<UndirectedGraph> {
    match tag {
        FamilyTag::G5 { n, m } => g5(*n, *m),
        FamilyTag::G6 { n, inner } => {
            inner_of(inner, CodeKind::Undirected, *n)?;
            g6(*n, &inner.to_undirected()?)
        }
        other => domain(format!("{other} is not an undirected family")),
    }
}

/// A constructed family member of any kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Built {
    Directed(Digraph),
    Bipartite(BipartiteGraphWithMatching),
    Undirected(UndirectedGraph),
}

impl Built {
    pub fn canonical_code(&self) -> Result<CanonicalCode> {
        match self {
            Built::Directed(d) => d.canonical_code_with_cap(16),
            Built::Bipartite(g) => g.canonical_code_with_cap(16),
            Built::Undirected(g) => g.canonical_code_with_cap(16),
        }
    }
}

pub fn build(tag: &FamilyTag) -> Result<Built> {
    Ok(match tag.domain() {
        TagDomain::Directed => Built::Directed(build_directed(tag)?),
        TagDomain::Bipartite => Built::Bipartite(build_bipartite(tag)?),
        TagDomain::Undirected => Built::Undirected(build_undirected(tag)?),
    })
}

/// The digraph side of a bipartite tag, under the correspondence.
pub fn directed_counterpart(tag: &FamilyTag) -> Result<Digraph> {
    Ok(contract(&build_bipartite(tag)?))
}
