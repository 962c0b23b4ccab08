//! Exact and constructive solvers, merges and the structure analyzer.

mod common;

use common::*;
use hamlab::correspondence::{contract, expand};
use hamlab::families::*;
use hamlab::graph::*;
use hamlab::hamilton::*;
use hamlab::verifier::{for_each_digraph, Shard};

fn digraph(n: usize, arcs: &[(usize, usize)]) -> Digraph {
    Digraph::from_arcs(n, arcs.iter().copied()).unwrap()
}

#[test]
fn exact_directed() {
    let k3 = Digraph::complete(3).unwrap();
    let c = find_hamilton_cycle(&k3).unwrap().unwrap();
    assert_eq!(c.len(), 3);
    validate_directed_cycle(&k3, &c).unwrap();
    assert!(find_hamilton_cycle(&Digraph::transitive_tournament(3).unwrap()).unwrap().is_none());
    assert!(!is_hamiltonian(&d3(1, false, false).unwrap()).unwrap());
}

#[test]
fn exact_agrees_with_dp_oracle() {
    let mut r = rng(21);
    for i in 0..400 {
        let d = random_digraph(&mut r, 2 + i % 8, 0.35);
        let found = find_hamilton_cycle(&d).unwrap();
        assert_eq!(found.is_some(), directed_ham(&d));
        if let Some(c) = found {
            validate_directed_cycle(&d, &c).unwrap();
        }
        let g = expand(&d);
        let alt = find_alternating_hamilton_cycle(&g).unwrap();
        assert_eq!(alt.is_some(), alternating_ham(&g));
        if let Some(c) = alt {
            c.validate(&g).unwrap();
            assert!(c.is_hamiltonian(&g));
        }
    }
}

#[test]
fn cancelled_search_stops() {
    let token = CancelToken::new();
    token.cancel();
    let hard = d2(9, &Digraph::empty(9).unwrap()).unwrap();
    assert!(matches!(find_hamilton_cycle_with(&hard, &token), Err(hamlab::Error::Cancelled)));
    assert!(find_hamilton_cycle_with(&Digraph::complete(1).unwrap(), &token).is_err());
}

#[test]
fn exact_alternating() {
    let four = expand(&Digraph::complete(2).unwrap());
    let c = find_alternating_hamilton_cycle(&four).unwrap().unwrap();
    assert_eq!(c.len(), 4);
    assert!(find_alternating_hamilton_cycle(&g1(1, 1).unwrap()).unwrap().is_none());
    let inner = BipartiteGraphWithMatching::from_normalized(1, std::iter::empty()).unwrap();
    assert!(find_alternating_hamilton_cycle(&g2(1, &inner).unwrap()).unwrap().is_none());
}

#[test]
fn longest_alternating_cycles() {
    let len = |g: &BipartiteGraphWithMatching| longest_alternating_cycle(g).unwrap().map_or(0, |c| c.len());
    assert_eq!(len(&expand(&Digraph::complete(2).unwrap())), 4);
    assert_eq!(len(&g1(1, 1).unwrap()), 4);
    assert_eq!(len(&expand(&Digraph::directed_cycle(3).unwrap())), 6);
    assert_eq!(len(&expand(&Digraph::empty(3).unwrap())), 0);
}

#[test]
fn path_merge() {
    let g = expand(&digraph(3, &[(0, 1), (1, 0), (1, 2), (2, 0)]));
    let c = AlternatingCycle::from_pairs(&g, vec![0, 1]).unwrap();
    let p = AlternatingPath::from_pairs(&g, vec![2]).unwrap();
    let PathMergeOutcome::Merged { cycle, .. } = merge_path_into_cycle(&g, &c, &p).unwrap() else {
        panic!("expected a merge");
    };
    assert_eq!(cycle.len(), 6);
    cycle.validate(&g).unwrap();

    let g = expand(&digraph(3, &[(0, 1), (1, 0)]));
    let c = AlternatingCycle::from_pairs(&g, vec![0, 1]).unwrap();
    let p = AlternatingPath::from_pairs(&g, vec![2]).unwrap();
    let PathMergeOutcome::Blocked(certs) = merge_path_into_cycle(&g, &c, &p).unwrap() else {
        panic!("expected a block");
    };
    assert_eq!(certs.len(), 2);
    assert!(certs.iter().all(|x| x.cycle_w_misses_b_end && x.cycle_b_misses_w_end && x.recheck(&g, &c, &p)));
}

#[test]
fn cycle_merge() {
    let g = expand(&Digraph::complete(4).unwrap());
    let c = AlternatingCycle::from_pairs(&g, vec![0, 1]).unwrap();
    let c1 = AlternatingCycle::from_pairs(&g, vec![2, 3]).unwrap();
    let CycleMergeOutcome::Merged { cycle, .. } = merge_cycle_into_cycle(&g, &c, &c1).unwrap() else {
        panic!("expected a merge");
    };
    assert_eq!(cycle.len(), c.len() + c1.len());
    cycle.validate(&g).unwrap();

    let g = expand(&digraph(4, &[(0, 1), (1, 0), (2, 3), (3, 2)]));
    let c = AlternatingCycle::from_pairs(&g, vec![0, 1]).unwrap();
    let c1 = AlternatingCycle::from_pairs(&g, vec![2, 3]).unwrap();
    let CycleMergeOutcome::Blocked(certs) = merge_cycle_into_cycle(&g, &c, &c1).unwrap() else {
        panic!("expected a block");
    };
    assert!(certs.iter().all(|x| x.recheck(&g, &c, &c1)));
}

#[test]
fn overlapping_inputs_are_rejected() {
    let g = expand(&Digraph::complete(3).unwrap());
    let c = AlternatingCycle::from_pairs(&g, vec![0, 1]).unwrap();
    let p = AlternatingPath::from_pairs(&g, vec![1, 2]).unwrap();
    assert!(merge_path_into_cycle(&g, &c, &p).is_err());
}

#[test]
fn constructive_examples() {
    let g = expand(&Digraph::complete(4).unwrap());
    let r = constructive_solve(&g).unwrap();
    assert!(r.cycle.unwrap().is_hamiltonian(&g));
    assert!(matches!(r.trace[0], TraceStep::Start { .. }));

    let g = g3(1, false, false).unwrap();
    let r = constructive_solve(&g).unwrap();
    assert!(r.cycle.is_none());
    assert!(r.trace.iter().any(|s| matches!(s, TraceStep::Stall { .. })));
    assert_eq!(r.trace.last(), Some(&TraceStep::ExactFallback { found: false }));
}

#[test]
fn constructive_finds_every_cycle_at_slack_minus_one() {
    for n in 2..=5 {
        for_each_digraph(n, Shard::FULL, Some(-1), |d| {
            let g = expand(&d);
            let r = constructive_solve(&g).unwrap();
            assert_eq!(r.cycle.is_some(), alternating_ham(&g), "{d:?}");
            if let Some(c) = r.cycle {
                c.validate(&g).unwrap();
                assert!(c.is_hamiltonian(&g));
            }
        })
        .unwrap();
    }
}

fn structure(g: &BipartiteGraphWithMatching) -> Box<StructureReport> {
    match analyze_structure(g).unwrap() {
        Analysis::Structure(r) => r,
        Analysis::Hamiltonian(_) => panic!("unexpected Hamilton cycle"),
    }
}

#[test]
fn analyzer_on_g1() {
    let r = structure(&g1(1, 1).unwrap());
    assert_eq!(r.longest_cycle_len, 4);
    assert!(r.all_claims_pass());
    let dec = r.decomposition.unwrap();
    // one matched edge in G1 and two vertices on R
    assert_eq!(dec.critical_pairs.len(), 1);
    assert_eq!(dec.r(), 1);
}

#[test]
fn analyzer_on_g3() {
    let r = structure(&g3(1, false, false).unwrap());
    assert_eq!(r.longest_cycle_len, 8);
    assert!(r.all_claims_pass());
    let dec = r.decomposition.as_ref().unwrap();
    assert_eq!((dec.critical_pairs.len(), dec.r()), (1, 3));
    assert_eq!((r.tally.t1(), r.tally.t2()), (0, 0));
    assert!(r.claim(ClaimKind::TypeBalance).passed);
}

#[test]
fn analyzer_type_counts_cover_the_central_path() {
    for tag in ["G1(2,2)", "G3(2,true,false)", "G4"] {
        let g = build_bipartite(&tag.parse().unwrap()).unwrap();
        let r = structure(&g);
        let dec = r.decomposition.as_ref().unwrap();
        let t = &r.tally;
        assert_eq!(t.t11 + t.t12 + t.t21 + t.t22 + t.untyped(), dec.r() - 1, "{tag}");
        assert!(2 * dec.longest_cycle.len() > g.order() / 2);
    }
}

#[test]
fn analyzer_short_circuits_on_hamiltonian_input() {
    let g = expand(&Digraph::complete(3).unwrap());
    assert!(matches!(analyze_structure(&g).unwrap(), Analysis::Hamiltonian(_)));
    // below the slack threshold the analyzer refuses
    assert!(analyze_structure(&expand(&Digraph::empty(3).unwrap())).is_err());
    assert_eq!(contract(&g), Digraph::complete(3).unwrap());
}
