//! Extremal structure of non-Hamiltonian matched graphs at slack `-1`.
//!
//! Notation on the contraction `D`. `C` is a longest directed cycle
//! `y_0 .. y_{m-1}`, `G1` the pairs off `C`, `P1 = x_1 .. x_p` a longest path
//! in `D[G1]`. An anchor pair `(s, r)` has arcs `y_{s-1} -> x_1` and
//! `x_p -> y_r`; then `P2 = y_s .. y_{r-1}` (the opposite path, spanning
//! `G2`) and `R = y_r .. y_{s-1}` (the central path). Decompositions with the
//! globally shortest `P2` are evaluated.
//!
//! In bipartite terms `R` reads `u_0 u_1 .. u_{2r-1}` with
//! `u_{2i} = w_{R[i]}` and `u_{2i+1} = b_{R[i]}`, so its non-matching edges
//! are `u_{2i-1} u_{2i} = b_{R[i-1]} w_{R[i]}` for `1 <= i <= r-1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::cycles::{all_longest_cycles, longest_paths, LONGEST_CAP};
use super::exact::find_alternating_hamilton_cycle;
use crate::conditions::las_vergnas_slack;
use crate::correspondence::contract;
use crate::error::{check_cap, domain, Result};
use crate::graph::bits::{bit, mask_of, Bits};
use crate::graph::{AlternatingCycle, BipartiteGraphWithMatching, Digraph};

/// Largest contraction order the analyzer accepts (`ν <= 20`).
pub const ANALYZE_CAP: usize = LONGEST_CAP;

const CYCLE_LIMIT: usize = 64;
const PATH_LIMIT: usize = 64;
const EVAL_LIMIT: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureDecomposition {
    /// Pairs of the longest cycle `C`, in cycle order.
    pub longest_cycle: Vec<usize>,
    /// Pairs of `G1`.
    pub critical_pairs: Vec<usize>,
    /// `P1`, a longest path in `D[G1]`.
    pub critical_path: Vec<usize>,
    /// `P2`.
    pub opposite_path: Vec<usize>,
    /// `R`; its first pair is adjacent from `P1`'s end, its last to `P1`'s start.
    pub central_path: Vec<usize>,
}

impl StructureDecomposition {
    /// `r`, the number of matching pairs on `R`.
    pub fn r(&self) -> usize {
        self.central_path.len()
    }

    /// Anchor `u_{2s-1}`: the pair whose `b` is adjacent to `P1`'s `W` end.
    pub fn anchor_in(&self) -> usize {
        *self.central_path.last().expect("R is never empty")
    }

    /// Anchor `u_{2r}`: the pair whose `w` is adjacent to `P1`'s `B` end.
    pub fn anchor_out(&self) -> usize {
        self.central_path[0]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeType {
    /// `b` end dominates `W(G1)` and `W(G2)`.
    I,
    /// `b` end dominates `W(G1)`, `w` end dominates `B(G2)`.
    II,
    /// `w` end dominates `B(G1)`, `b` end dominates `W(G2)`.
    III,
    /// `w` end dominates `B(G1)` and `B(G2)`.
    IV,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EdgeTypeTally {
    /// Type of edge `u_{2i-1} u_{2i}` at position `i - 1`; `None` when the
    /// edge is in none of the four classes.
    pub per_edge: Vec<Option<EdgeType>>,
    pub t11: usize,
    pub t12: usize,
    pub t21: usize,
    pub t22: usize,
}

impl EdgeTypeTally {
    pub fn t0(&self) -> usize {
        self.t12
    }

    pub fn t1(&self) -> usize {
        self.t11
    }

    pub fn t2(&self) -> usize {
        self.t22
    }

    pub fn untyped(&self) -> usize {
        self.per_edge.iter().filter(|t| t.is_none()).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    /// `|C| >= ν/2 + 1`.
    LongCycleBound,
    /// `G1` is complete bipartite.
    CriticalComplete,
    /// No edges between `G1` and `G2`; the anchors dominate `G1`.
    CriticalOppositeSeparated,
    /// `G2` is complete bipartite; the anchors dominate `G2`.
    OppositeComplete,
    /// Each non-matching edge of `R` has exactly one end sending edges to
    /// `G_j`, and that end dominates the opposite side of `G_j`.
    CentralEdgeSplit,
    /// `|G1| = 2` when `|R| >= 4`.
    CriticalIsEdge,
    /// `t12 = t21` and either `t0 = 0` or `t1 = t2 = 0`.
    TypeBalance,
}

impl ClaimKind {
    pub const ALL: [ClaimKind; 7] = [
        ClaimKind::LongCycleBound,
        ClaimKind::CriticalComplete,
        ClaimKind::CriticalOppositeSeparated,
        ClaimKind::OppositeComplete,
        ClaimKind::CentralEdgeSplit,
        ClaimKind::CriticalIsEdge,
        ClaimKind::TypeBalance,
    ];
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim: ClaimKind,
    /// False when the claim's hypothesis (`|R| >= 4`) does not hold.
    pub applicable: bool,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Analysis {
    Hamiltonian(AlternatingCycle),
    Structure(Box<StructureReport>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureReport {
    pub decomposition: Option<StructureDecomposition>,
    pub tally: EdgeTypeTally,
    pub claims: Vec<ClaimCheck>,
    /// Longest cycle length `2m` in vertices.
    pub longest_cycle_len: usize,
    /// Decompositions attaining the shortest opposite path.
    pub minimizers: usize,
    pub evaluated: usize,
    pub passing: usize,
}

impl StructureReport {
    pub fn all_claims_pass(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn claim(&self, kind: ClaimKind) -> &ClaimCheck {
        self.claims.iter().find(|c| c.claim == kind).expect("every claim is evaluated")
    }
}

pub fn analyze_structure(g: &BipartiteGraphWithMatching) -> Result<Analysis> {
    let d = contract(g);
    check_cap("analyzer contraction order", d.order(), ANALYZE_CAP)?;
    if !las_vergnas_slack(g).at_least(-1) {
        return domain("the analyzer needs slack >= -1");
    }
    if let Some(c) = find_alternating_hamilton_cycle(g)? {
        return Ok(Analysis::Hamiltonian(c));
    }
    let half = d.order();
    let Some((m, cycles)) = all_longest_cycles(&d, CYCLE_LIMIT)? else {
        let claims = vec![fail(ClaimKind::LongCycleBound, "no alternating cycle")];
        return Ok(Analysis::Structure(Box::new(StructureReport {
            decomposition: None,
            tally: EdgeTypeTally::default(),
            claims: complete_claims(claims),
            longest_cycle_len: 0,
            minimizers: 0,
            evaluated: 0,
            passing: 0,
        })));
    };

    let mut best_len = usize::MAX;
    let mut minimizers: Vec<StructureDecomposition> = Vec::new();
    let mut minimizer_count = 0;
    for y in &cycles {
        let g1 = d.vertex_mask() & !mask_of(y);
        for p1 in longest_paths(&d, g1, PATH_LIMIT) {
            let (x1, xp) = (p1[0], *p1.last().expect("non-empty"));
            for a in 0..m {
                if !d.has_arc(y[a], x1) {
                    continue;
                }
                for b in 0..m {
                    if !d.has_arc(xp, y[b]) {
                        continue;
                    }
                    let p2_len = (b + m - a - 1) % m;
                    if p2_len == 0 {
                        continue;
                    }
                    if p2_len < best_len {
                        best_len = p2_len;
                        minimizers.clear();
                        minimizer_count = 0;
                    }
                    if p2_len == best_len {
                        minimizer_count += 1;
                        if minimizers.len() < EVAL_LIMIT {
                            minimizers.push(StructureDecomposition {
                                longest_cycle: y.clone(),
                                critical_pairs: Bits(g1).collect(),
                                critical_path: p1.clone(),
                                opposite_path: (0..p2_len).map(|t| y[(a + 1 + t) % m]).collect(),
                                central_path: (0..m - p2_len).map(|t| y[(b + t) % m]).collect(),
                            });
                        }
                    }
                }
            }
        }
    }

    let bound = bound_claim(2 * m, half);
    if minimizers.is_empty() {
        let claims = vec![bound, fail(ClaimKind::CriticalComplete, "no critical path attaches to C at both ends")];
        return Ok(Analysis::Structure(Box::new(StructureReport {
            decomposition: None,
            tally: EdgeTypeTally::default(),
            claims: complete_claims(claims),
            longest_cycle_len: 2 * m,
            minimizers: 0,
            evaluated: 0,
            passing: 0,
        })));
    }

    let evaluated: Vec<(StructureDecomposition, EdgeTypeTally, Vec<ClaimCheck>)> = minimizers
        .into_iter()
        .map(|dec| {
            let (tally, mut claims) = evaluate(&d, &dec);
            claims.insert(0, bound.clone());
            (dec, tally, claims)
        })
        .collect();
    let passing = evaluated.iter().filter(|(_, _, c)| c.iter().all(|x| x.passed)).count();
    let n_eval = evaluated.len();
    let pick = evaluated
        .iter()
        .position(|(_, _, c)| c.iter().all(|x| x.passed))
        .unwrap_or(0);
    let (dec, tally, claims) = evaluated.into_iter().nth(pick).expect("non-empty");
    Ok(Analysis::Structure(Box::new(StructureReport {
        decomposition: Some(dec),
        tally,
        claims,
        longest_cycle_len: 2 * m,
        minimizers: minimizer_count,
        evaluated: n_eval,
        passing,
    })))
}

fn check(claim: ClaimKind, applicable: bool, passed: bool, detail: impl Into<String>) -> ClaimCheck {
    ClaimCheck {
        claim,
        applicable,
        passed: !applicable || passed,
        detail: detail.into(),
    }
}

fn fail(claim: ClaimKind, detail: &str) -> ClaimCheck {
    check(claim, true, false, detail)
}

/// Pads a partial list with failures for every claim not yet present.
fn complete_claims(mut claims: Vec<ClaimCheck>) -> Vec<ClaimCheck> {
    for k in ClaimKind::ALL {
        if !claims.iter().any(|c| c.claim == k) {
            claims.push(fail(k, "no decomposition"));
        }
    }
    claims
}

fn bound_claim(cycle_len: usize, half: usize) -> ClaimCheck {
    check(
        ClaimKind::LongCycleBound,
        true,
        cycle_len > half,
        format!("|C| = {cycle_len}, ν/2 + 1 = {}", half + 1),
    )
}

/// Complete in the sense of `D[mask]` having every arc.
fn is_complete_on(d: &Digraph, mask: u64) -> bool {
    Bits(mask).all(|v| d.out_row(v) & mask == mask & !bit(v))
}

fn evaluate(d: &Digraph, dec: &StructureDecomposition) -> (EdgeTypeTally, Vec<ClaimCheck>) {
    let g1 = mask_of(&dec.critical_pairs);
    let g2 = mask_of(&dec.opposite_path);
    let r_pairs = &dec.central_path;
    let r = r_pairs.len();
    let (ain, aout) = (dec.anchor_in(), dec.anchor_out());
    let case2 = r >= 2;
    let mut claims = Vec::new();

    claims.push(check(
        ClaimKind::CriticalComplete,
        true,
        is_complete_on(d, g1),
        format!("|G1| = {}", 2 * g1.count_ones()),
    ));

    let crossing = Bits(g1).any(|x| d.adjacency_row(x) & g2 != 0);
    let anchors_g1 = d.out_row(ain) & g1 == g1 && Bits(g1).all(|x| d.has_arc(x, aout));
    claims.push(check(
        ClaimKind::CriticalOppositeSeparated,
        true,
        !crossing && anchors_g1,
        format!("crossing edges: {crossing}, anchors dominate G1: {anchors_g1}"),
    ));

    let anchors_g2 = d.out_row(ain) & g2 == g2 && Bits(g2).all(|x| d.has_arc(x, aout));
    claims.push(check(
        ClaimKind::OppositeComplete,
        true,
        is_complete_on(d, g2) && anchors_g2,
        format!("|G2| = {}, anchors dominate G2: {anchors_g2}", 2 * g2.count_ones()),
    ));

    // u_{2i-1} = b_{R[i-1]} sends to G_j iff arc R[i-1] -> G_j;
    // u_{2i} = w_{R[i]} sends to G_j iff arc G_j -> R[i].
    let mut split_ok = true;
    let mut per_edge = Vec::new();
    let mut tally = EdgeTypeTally::default();
    for i in 1..r {
        let (bp, wp) = (r_pairs[i - 1], r_pairs[i]);
        let mut e1 = [false; 2];
        let mut e2 = [false; 2];
        for (j, mask) in [g1, g2].into_iter().enumerate() {
            let b_to = d.out_row(bp) & mask;
            let w_to = d.in_row(wp) & mask;
            if (b_to != 0) == (w_to != 0) || (b_to != 0 && b_to != mask) || (w_to != 0 && w_to != mask) {
                split_ok = false;
            }
            e1[j] = b_to == mask;
            e2[j] = w_to == mask;
        }
        let t = match (e1[0], e2[0], e1[1], e2[1]) {
            (true, false, true, false) => Some(EdgeType::I),
            (true, false, false, true) => Some(EdgeType::II),
            (false, true, true, false) => Some(EdgeType::III),
            (false, true, false, true) => Some(EdgeType::IV),
            _ => None,
        };
        match t {
            Some(EdgeType::I) => tally.t11 += 1,
            Some(EdgeType::II) => tally.t12 += 1,
            Some(EdgeType::III) => tally.t21 += 1,
            Some(EdgeType::IV) => tally.t22 += 1,
            None => {}
        }
        per_edge.push(t);
    }
    tally.per_edge = per_edge;
    claims.push(check(ClaimKind::CentralEdgeSplit, case2, split_ok, format!("r = {r}")));
    claims.push(check(
        ClaimKind::CriticalIsEdge,
        case2,
        g1.count_ones() == 1,
        format!("|G1| = {}, |R| = {}", 2 * g1.count_ones(), 2 * r),
    ));
    let balanced = tally.untyped() == 0
        && tally.t12 == tally.t21
        && (tally.t0() == 0 || (tally.t1() == 0 && tally.t2() == 0));
    claims.push(check(
        ClaimKind::TypeBalance,
        case2,
        balanced,
        format!(
            "t11 = {}, t12 = {}, t21 = {}, t22 = {}, untyped = {}",
            tally.t11,
            tally.t12,
            tally.t21,
            tally.t22,
            tally.untyped()
        ),
    ));
    (tally, claims)
}
