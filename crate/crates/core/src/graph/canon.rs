//! Permutation-minimal codes used as isomorphism-class keys.
//!
//! The search places vertices one position at a time. Vertices are first
//! split into label-independent colour classes by iterated degree
//! refinement, and position `k` may only take a vertex of the `k`-th colour
//! in sorted order. Branches whose code prefix already exceeds the best one
//! are cut, and interchangeable twins are tried only once.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::bipartite::BipartiteGraphWithMatching;
use super::bits::{bit, Bits};
use super::digraph::Digraph;
use super::undirected::UndirectedGraph;
use crate::correspondence::{contract, expand};
use crate::error::{check_cap, domain, Error, Result};

/// Default order cap for exhaustive canonicalization.
pub const DEFAULT_CANON_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeKind {
    Digraph,
    /// Matched bipartite value, keyed by its contraction up to converse.
    Bipartite,
    Undirected,
}

impl CodeKind {
    fn tag(self) -> u8 {
        match self {
            CodeKind::Digraph => b'D',
            CodeKind::Bipartite => b'B',
            CodeKind::Undirected => b'U',
        }
    }

    fn from_tag(t: u8) -> Option<Self> {
        match t {
            b'D' => Some(CodeKind::Digraph),
            b'B' => Some(CodeKind::Bipartite),
            b'U' => Some(CodeKind::Undirected),
            _ => None,
        }
    }
}

/// `[kind, order, packed adjacency bits...]` under the canonical labeling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s).map_err(|e| Error::Domain(format!("bad code hex: {e}")))?;
        let code = CanonicalCode(bytes);
        code.check_shape()?;
        Ok(code)
    }

    pub fn kind(&self) -> CodeKind {
        CodeKind::from_tag(self.0[0]).expect("checked on construction")
    }

    pub fn order(&self) -> usize {
        self.0[1] as usize
    }

    fn check_shape(&self) -> Result<()> {
        if self.0.len() < 2 {
            return domain("code too short");
        }
        let kind = CodeKind::from_tag(self.0[0]).ok_or_else(|| Error::Domain("unknown code kind".into()))?;
        let n = self.0[1] as usize;
        let nbits = match kind {
            CodeKind::Undirected => n * n.saturating_sub(1) / 2,
            _ => n * n.saturating_sub(1),
        };
        if self.0.len() != 2 + nbits.div_ceil(8) {
            return domain("code length does not match its order");
        }
        Ok(())
    }

    /// The canonical representative digraph (for bipartite codes, the
    /// contraction of the representative).
    pub fn to_digraph(&self) -> Result<Digraph> {
        if self.kind() == CodeKind::Undirected {
            return domain("undirected code has no digraph representative");
        }
        let n = self.order();
        let bits = self.bits();
        let mut d = Digraph::empty(n)?;
        let mut idx = 0;
        for k in 1..n {
            for j in 0..k {
                if bits(idx) {
                    d.set_arc(k, j);
                }
                if bits(idx + 1) {
                    d.set_arc(j, k);
                }
                idx += 2;
            }
        }
        Ok(d)
    }

    pub fn to_bipartite(&self) -> Result<BipartiteGraphWithMatching> {
        if self.kind() != CodeKind::Bipartite {
            return domain("not a bipartite code");
        }
        Ok(expand(&self.to_digraph()?))
    }

    pub fn to_undirected(&self) -> Result<UndirectedGraph> {
        if self.kind() != CodeKind::Undirected {
            return domain("not an undirected code");
        }
        let n = self.order();
        let bits = self.bits();
        let mut g = UndirectedGraph::empty(n)?;
        let mut idx = 0;
        for k in 1..n {
            for j in 0..k {
                if bits(idx) {
                    g.set_edge(k, j);
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    fn bits(&self) -> impl Fn(usize) -> bool + '_ {
        move |i| self.0[2 + i / 8] & (0x80 >> (i % 8)) != 0
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Values with an isomorphism-class key.
pub trait Canonical {
    fn canonical_code_with_cap(&self, cap: usize) -> Result<CanonicalCode>;

    fn canonical_code(&self) -> Result<CanonicalCode> {
        self.canonical_code_with_cap(DEFAULT_CANON_CAP)
    }
}

impl Canonical for Digraph {
    fn canonical_code_with_cap(&self, cap: usize) -> Result<CanonicalCode> {
        check_cap("canonicalization order", self.order(), cap)?;
        let perm = canonical_order(self);
        Ok(pack(CodeKind::Digraph, self, &perm))
    }
}

impl Canonical for BipartiteGraphWithMatching {
    /// Isomorphisms must map the matching to itself and may swap sides; the
    /// latter turns the contraction into its converse.
    fn canonical_code_with_cap(&self, cap: usize) -> Result<CanonicalCode> {
        let d = contract(self);
        check_cap("canonicalization order", d.order(), cap)?;
        let a = pack(CodeKind::Bipartite, &d, &canonical_order(&d));
        let dc = d.converse();
        let b = pack(CodeKind::Bipartite, &dc, &canonical_order(&dc));
        Ok(a.min(b))
    }
}

impl Canonical for UndirectedGraph {
    fn canonical_code_with_cap(&self, cap: usize) -> Result<CanonicalCode> {
        check_cap("canonicalization order", self.order(), cap)?;
        let d = crate::correspondence::double_undirected(self);
        let perm = canonical_order(&d);
        Ok(pack(CodeKind::Undirected, &d, &perm))
    }
}

fn pack(kind: CodeKind, d: &Digraph, perm: &[usize]) -> CanonicalCode {
    let n = d.order();
    let mut out = vec![kind.tag(), n as u8];
    let mut acc = 0u8;
    let mut nb = 0;
    let mut push = |b: bool, out: &mut Vec<u8>| {
        acc = (acc << 1) | b as u8;
        nb += 1;
        if nb == 8 {
            out.push(acc);
            acc = 0;
            nb = 0;
        }
    };
    for k in 1..n {
        for j in 0..k {
            let (pk, pj) = (perm[k], perm[j]);
            push(d.has_arc(pk, pj), &mut out);
            if kind != CodeKind::Undirected {
                push(d.has_arc(pj, pk), &mut out);
            }
        }
    }
    if nb > 0 {
        out.push(acc << (8 - nb));
    }
    CanonicalCode(out)
}

/// Stable colour classes from iterated refinement; colour ids are ranks of
/// label-independent signatures.
fn refined_colors(d: &Digraph) -> Vec<usize> {
    let n = d.order();
    let mut colors: Vec<usize> = {
        let sigs: Vec<(usize, usize, usize)> = (0..n)
            .map(|v| (d.dout(v), d.din(v), (d.out_row(v) & d.in_row(v)).count_ones() as usize))
            .collect();
        rank(&sigs)
    };
    let mut classes = count_distinct(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut o: Vec<usize> = Bits(d.out_row(v)).map(|u| colors[u]).collect();
                let mut i: Vec<usize> = Bits(d.in_row(v)).map(|u| colors[u]).collect();
                o.sort_unstable();
                i.sort_unstable();
                (colors[v], o, i)
            })
            .collect();
        let next = rank(&sigs);
        let c = count_distinct(&next);
        colors = next;
        if c == classes {
            return colors;
        }
        classes = c;
    }
}

fn rank<T: Ord + Clone>(sigs: &[T]) -> Vec<usize> {
    let mut map = BTreeMap::new();
    for s in sigs {
        map.insert(s.clone(), 0usize);
    }
    for (i, v) in map.values_mut().enumerate() {
        *v = i;
    }
    sigs.iter().map(|s| map[s]).collect()
}

fn count_distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    d: &'a Digraph,
    colors: Vec<usize>,
    slot_color: Vec<usize>,
    twins: Vec<u64>,
    cur: Vec<u128>,
    perm: Vec<usize>,
    best: Option<Vec<u128>>,
    best_perm: Vec<usize>,
}

/// Returns `perm` with `perm[k]` = vertex placed at position `k` in the
/// canonical labeling.
pub(crate) fn canonical_order(d: &Digraph) -> Vec<usize> {
    let n = d.order();
    if n == 0 {
        return Vec::new();
    }
    let colors = refined_colors(d);
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();
    let mut s = Search {
        d,
        colors,
        slot_color,
        twins: twin_rows(d),
        cur: vec![0; n],
        perm: Vec::with_capacity(n),
        best: None,
        best_perm: Vec::new(),
    };
    s.descend(0, 0, true);
    s.best_perm
}

/// `twins[u]` has bit `v` when swapping `u` and `v` is an automorphism.
fn twin_rows(d: &Digraph) -> Vec<u64> {
    let n = d.order();
    let mut t = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            let mask = !(bit(u) | bit(v));
            if d.out_row(u) & mask == d.out_row(v) & mask
                && d.in_row(u) & mask == d.in_row(v) & mask
                && d.has_arc(u, v) == d.has_arc(v, u)
            {
                t[u] |= bit(v);
                t[v] |= bit(u);
            }
        }
    }
    t
}

impl Search<'_> {
    /// Returns true when the best code was replaced somewhere below.
    fn descend(&mut self, k: usize, used: u64, mut less: bool) -> bool {
        let n = self.d.order();
        if k == n {
            self.best = Some(self.cur.clone());
            self.best_perm = self.perm.clone();
            return true;
        }
        let mut improved = false;
        let mut tried = 0u64;
        for v in 0..n {
            if used & bit(v) != 0 || self.colors[v] != self.slot_color[k] {
                continue;
            }
            if self.twins[v] & tried != 0 {
                continue;
            }
            tried |= bit(v);
            let chunk = self.chunk(v);
            let mut child_less = less;
            if !less {
                let best = self.best.as_ref().expect("best set when not less")[k];
                match chunk.cmp(&best) {
                    Ordering::Greater => continue,
                    Ordering::Less => child_less = true,
                    Ordering::Equal => {}
                }
            }
            self.cur[k] = chunk;
            self.perm.push(v);
            if self.descend(k + 1, used | bit(v), child_less) {
                improved = true;
                less = false;
            }
            self.perm.pop();
        }
        improved
    }

    fn chunk(&self, v: usize) -> u128 {
        let mut c = 0u128;
        for &p in &self.perm {
            c = (c << 2) | ((self.d.has_arc(v, p) as u128) << 1) | self.d.has_arc(p, v) as u128;
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn all_digraphs(n: usize) -> Vec<Digraph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        (0u64..1 << pairs.len())
            .map(|mask| Digraph::from_arcs(n, Bits(mask).map(|i| pairs[i])).unwrap())
            .collect()
    }

    #[test]
    fn relabelings_of_cycle_agree() {
        let c = Digraph::directed_cycle(3).unwrap();
        let r = c.relabel(&[1, 0, 2]).unwrap();
        assert_ne!(c, r);
        assert_eq!(c.canonical_code().unwrap(), r.canonical_code().unwrap());
    }

    #[test]
    fn cycle_and_transitive_tournament_differ() {
        let c = Digraph::directed_cycle(3).unwrap();
        let t = Digraph::transitive_tournament(3).unwrap();
        assert_ne!(c.canonical_code().unwrap(), t.canonical_code().unwrap());
    }

    #[test]
    fn sixteen_classes_on_three_vertices() {
        let codes: HashSet<_> = all_digraphs(3)
            .iter()
            .map(|d| d.canonical_code().unwrap())
            .collect();
        assert_eq!(codes.len(), 16);
    }

    #[test]
    fn class_counts_match_known_values() {
        // unlabeled digraphs on 1..=4 vertices: 1, 3, 16, 218
        for (n, expected) in [(1, 1), (2, 3), (4, 218)] {
            let codes: HashSet<_> = all_digraphs(n)
                .iter()
                .map(|d| d.canonical_code().unwrap())
                .collect();
            assert_eq!(codes.len(), expected, "order {n}");
        }
    }

    #[test]
    fn code_decodes_to_isomorphic_graph() {
        for d in all_digraphs(3) {
            let code = d.canonical_code().unwrap();
            let back = code.to_digraph().unwrap();
            assert_eq!(back.canonical_code().unwrap(), code);
            assert_eq!(CanonicalCode::from_hex(&code.to_hex()).unwrap(), code);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let d = Digraph::empty(13).unwrap();
        assert!(matches!(d.canonical_code(), Err(Error::Capability { .. })));
        assert!(d.canonical_code_with_cap(13).is_ok());
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        // twins collapse the search on complete and empty digraphs
        let k = Digraph::complete(12).unwrap();
        let e = Digraph::empty(12).unwrap();
        assert_ne!(k.canonical_code().unwrap(), e.canonical_code().unwrap());
    }

    #[test]
    fn undirected_codes() {
        let p = UndirectedGraph::path(3).unwrap();
        let q = UndirectedGraph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
        assert_eq!(p.canonical_code().unwrap(), q.canonical_code().unwrap());
        let code = p.canonical_code().unwrap();
        assert_eq!(code.to_undirected().unwrap().edge_count(), 2);
        assert_ne!(code, UndirectedGraph::complete(3).unwrap().canonical_code().unwrap());
    }

    #[test]
    fn bipartite_codes_allow_side_swap() {
        let g = BipartiteGraphWithMatching::from_normalized(3, [(1, 0), (2, 0)]).unwrap();
        let s = g.swap_sides();
        assert_eq!(g.canonical_code().unwrap(), s.canonical_code().unwrap());
        // but not a change of matching-pair structure
        let h = BipartiteGraphWithMatching::from_normalized(3, [(1, 0), (2, 1)]).unwrap();
        assert_ne!(g.canonical_code().unwrap(), h.canonical_code().unwrap());
    }
}
