//! Randomized invariants.

mod common;

use common::*;
use hamlab::codec::*;
use hamlab::conditions::*;
use hamlab::correspondence::*;
use hamlab::families::*;
use hamlab::graph::*;
use hamlab::hamilton::*;
use proptest::prelude::*;

fn digraph(max: usize) -> impl Strategy<Value = Digraph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<u64>(), n).prop_map(move |rows| {
            let full = (1u64 << n) - 1;
            let rows: Vec<u64> = rows.iter().enumerate().map(|(i, r)| r & full & !(1 << i)).collect();
            Digraph::from_out_rows(&rows).unwrap()
        })
    })
}

fn graph(max: usize) -> impl Strategy<Value = UndirectedGraph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            UndirectedGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn with_perm(max: usize) -> impl Strategy<Value = (Digraph, Vec<usize>)> {
    digraph(max).prop_flat_map(|d| {
        let n = d.order();
        (Just(d), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn contraction_inverts_expansion(d in digraph(16)) {
        let g = expand(&d);
        prop_assert_eq!(contract(&g), d.clone());
        prop_assert_eq!(expand(&contract(&g)), g);
    }

    #[test]
    fn slacks_agree_across_the_correspondence(d in digraph(12)) {
        let g = expand(&d);
        prop_assert_eq!(las_vergnas_slack(&g), woodall_slack(&d));
        prop_assert_eq!(woodall_slack(&d).value(), woodall_oracle(&d));
        prop_assert_eq!(las_vergnas_slack(&g).value(), las_vergnas_oracle(&g));
        prop_assert_eq!(all_pairs_slack(&d).value(), Some(all_pairs_oracle(&d)));
    }

    #[test]
    fn hamiltonicity_agrees_across_the_correspondence(d in digraph(8)) {
        prop_assume!(d.order() >= 2);
        let g = expand(&d);
        let direct = is_hamiltonian(&d).unwrap();
        prop_assert_eq!(direct, directed_ham(&d));
        prop_assert_eq!(find_alternating_hamilton_cycle(&g).unwrap().is_some(), direct);
    }

    #[test]
    fn canonical_code_is_a_relabeling_invariant((d, perm) in with_perm(9)) {
        let r = d.relabel(&perm).unwrap();
        prop_assert_eq!(r.canonical_code().unwrap(), d.canonical_code().unwrap());
        let back = d.canonical_code().unwrap().to_digraph().unwrap();
        prop_assert_eq!(back.canonical_code().unwrap(), d.canonical_code().unwrap());
    }

    #[test]
    fn bipartite_code_is_a_pair_relabeling_invariant((d, perm) in with_perm(8)) {
        let g = expand(&d);
        let h = g.relabel_pairs(&perm).unwrap();
        prop_assert_eq!(h.canonical_code().unwrap(), g.canonical_code().unwrap());
    }

    #[test]
    fn digraph6_round_trips(d in digraph(20)) {
        let text = emit_digraph6(&d);
        prop_assert!(text.bytes().skip(1).all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_digraph6(&text).unwrap(), d);
    }

    #[test]
    fn graph6_round_trips(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(ore_slack(&g), woodall_slack(&double_undirected(&g)));
        prop_assert_eq!(ore_slack(&g).value(), ore_oracle(&g));
    }

    #[test]
    fn recognized_digraphs_rebuild_isomorphically(d in digraph(7)) {
        if let Some(tag) = recognize_directed(&d).unwrap() {
            let rebuilt = build_directed(&tag).unwrap();
            prop_assert!(isomorphic(&rebuilt, &d));
        }
    }

    #[test]
    fn relabelled_family_members_are_recognized(n in 1usize..4, m in 1usize..4, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let d = d1(n, m).unwrap();
        let mut perm: Vec<usize> = (0..d.order()).collect();
        perm.shuffle(&mut rng(seed));
        let t = recognize_directed(&d.relabel(&perm).unwrap()).unwrap();
        prop_assert_eq!(t, Some(FamilyTag::D1 { n: n.min(m), m: n.max(m) }));
    }

    #[test]
    fn slack_zero_forces_a_hamilton_cycle(d in digraph(8)) {
        prop_assume!(d.order() >= 2);
        if woodall_slack(&d).at_least(0) {
            prop_assert!(directed_ham(&d));
        }
    }
}
