//! Structural recognition. Overlaps resolve by the fixed precedence
//! D1 < D2 < D3 < D4 (and G5 < G6 on the undirected side).

use super::build::{d3, d4};
use super::tag::FamilyTag;
use crate::correspondence::{contract, double_undirected, expand};
use crate::error::{check_cap, Result};
use crate::graph::bits::{bit, low_mask, Bits};
use crate::graph::{BipartiteGraphWithMatching, Canonical, Digraph, UndirectedGraph};

/// Default largest order accepted by the recognizers.
pub const RECOGNITION_CAP: usize = 16;

pub fn recognize_directed(d: &Digraph) -> Result<Option<FamilyTag>> {
    recognize_directed_with_cap(d, RECOGNITION_CAP)
}

pub fn recognize_directed_with_cap(d: &Digraph, cap: usize) -> Result<Option<FamilyTag>> {
    check_cap("recognition order", d.order(), cap)?;
    if let Some(t) = recognize_infinite_families(d, cap)? {
        return Ok(Some(t));
    }
    if d.order() == 7 && d.canonical_code()? == d4().canonical_code()? {
        return Ok(Some(FamilyTag::D4));
    }
    Ok(None)
}

/// D1, D2 and D3 only; the search that derives D4 filters with this.
pub(crate) fn recognize_infinite_families(d: &Digraph, cap: usize) -> Result<Option<FamilyTag>> {
    if let Some(t) = as_d1(d) {
        return Ok(Some(t));
    }
    if let Some(t) = as_d2(d, cap)? {
        return Ok(Some(t));
    }
    Ok(as_d3(d))
}

/// Recognition through the contraction under the given matching.
pub fn recognize_bipartite(g: &BipartiteGraphWithMatching) -> Result<Option<FamilyTag>> {
    let tag = recognize_directed(&contract(g))?;
    Ok(match tag {
        None => None,
        Some(FamilyTag::D1 { n, m }) => Some(FamilyTag::G1 { n, m }),
        Some(FamilyTag::D2 { n, inner }) => {
            let inner = expand(&inner.to_digraph()?).canonical_code_with_cap(RECOGNITION_CAP)?;
            Some(FamilyTag::G2 { n, inner })
        }
        Some(FamilyTag::D3 { n, forward, backward }) => Some(FamilyTag::G3 {
            n,
            opt0: backward,
            opt1: forward,
        }),
        Some(FamilyTag::D4) => Some(FamilyTag::G4),
        Some(other) => unreachable!("directed recognizer returned {other}"),
    })
}

/// Recognition through the doubled digraph; only D1 and D2 shapes are symmetric.
pub fn recognize_undirected(g: &UndirectedGraph) -> Result<Option<FamilyTag>> {
    let tag = recognize_directed(&double_undirected(g))?;
    Ok(match tag {
        Some(FamilyTag::D1 { n, m }) => Some(FamilyTag::G5 { n, m }),
        Some(FamilyTag::D2 { n, inner }) => {
            let inner = UndirectedGraph::from_rows(inner.to_digraph()?.out_rows())?.canonical_code_with_cap(RECOGNITION_CAP)?;
            Some(FamilyTag::G6 { n, inner })
        }
        _ => None,
    })
}

/// Exceptions for the all-pairs condition: D1 with equal sides, D2, D3 with
/// a single core vertex, and D4.
pub fn recognize_all_pairs(d: &Digraph) -> Result<Option<FamilyTag>> {
    Ok(match recognize_directed(d)? {
        Some(FamilyTag::D1 { n, m }) if n == m => Some(FamilyTag::D1Prime { n }),
        Some(t @ FamilyTag::D2 { .. }) => Some(t),
        Some(FamilyTag::D3 { n: 1, forward, backward }) => Some(FamilyTag::D3Prime { forward, backward }),
        Some(FamilyTag::D4) => Some(FamilyTag::D4),
        _ => None,
    })
}

fn is_complete_on(d: &Digraph, mask: u64) -> bool {
    Bits(mask).all(|v| d.out_row(v) & mask == mask & !bit(v))
}

fn weak_component(d: &Digraph, start: usize, allowed: u64) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= d.adjacency_row(v);
        }
        next &= allowed & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

fn as_d1(d: &Digraph) -> Option<FamilyTag> {
    let all = d.vertex_mask();
    if d.order() < 3 {
        return None;
    }
    for c in 0..d.order() {
        let rest = all & !bit(c);
        let first = weak_component(d, rest.trailing_zeros() as usize, rest);
        let second = rest & !first;
        if second == 0 || weak_component(d, second.trailing_zeros() as usize, rest) != second {
            continue;
        }
        if is_complete_on(d, first | bit(c)) && is_complete_on(d, second | bit(c)) {
            let (a, b) = (first.count_ones() as usize, second.count_ones() as usize);
            return Some(FamilyTag::D1 { n: a.min(b), m: a.max(b) });
        }
    }
    None
}

fn as_d2(d: &Digraph, cap: usize) -> Result<Option<FamilyTag>> {
    let order = d.order();
    if order < 3 || order.is_multiple_of(2) {
        return Ok(None);
    }
    let n = (order - 1) / 2;
    let all = d.vertex_mask();
    for v in 0..order {
        let t = d.out_row(v);
        if t != d.in_row(v) || t.count_ones() as usize != n {
            continue;
        }
        let s = all & !t;
        if Bits(s).all(|u| d.out_row(u) == t && d.in_row(u) == t) {
            let (inner, _) = d.induced_mask(t);
            let inner = inner.canonical_code_with_cap(cap)?;
            return Ok(Some(FamilyTag::D2 { n, inner }));
        }
    }
    Ok(None)
}

/// Tries every placement of the four base vertices and compares against
/// the construction. The tag is normalized to `forward >= backward`, since
/// the two single-arc variants are isomorphic.
fn as_d3(d: &Digraph) -> Option<FamilyTag> {
    let order = d.order();
    if order < 5 {
        return None;
    }
    let n = order - 4;
    let all = low_mask(order);
    for p in 0..order {
        for q in Bits(d.out_row(p) & d.in_row(p)) {
            for a in Bits(d.out_row(q) & d.in_row(p) & !d.out_row(p)) {
                for c in Bits(d.out_row(p) & d.in_row(q) & !bit(a)) {
                    let core = all & !(bit(a) | bit(c) | bit(p) | bit(q));
                    let (f, b) = (d.has_arc(a, c), d.has_arc(c, a));
                    let mut perm = vec![0; order];
                    for (i, v) in [a, c, p, q].into_iter().chain(Bits(core)).enumerate() {
                        perm[i] = v;
                    }
                    let built = d3(n, f, b).ok()?.relabel(&perm).ok()?;
                    if &built == d {
                        return Some(FamilyTag::D3 { n, forward: f || b, backward: f && b });
                    }
                }
            }
        }
    }
    None
}
