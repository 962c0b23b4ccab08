//! Enumeration, sharding and campaigns.

mod common;

use std::collections::BTreeSet;

use common::*;
use hamlab::codec::{emit_digraph6, emit_graph6, parse_line, write_report_record};
use hamlab::conditions::woodall_slack;
use hamlab::verifier::*;

fn opts() -> VerifyOptions {
    VerifyOptions::default()
}

#[test]
fn labeled_counts() {
    assert_eq!(enumerate_digraphs(2, Shard::FULL, None).unwrap().len(), 4);
    assert_eq!(enumerate_digraphs(3, Shard::FULL, None).unwrap().len(), 64);
    assert_eq!(enumerate_digraphs(4, Shard::FULL, None).unwrap().len(), 4096);
    assert_eq!(enumerate_graphs(4, Shard::FULL, None).unwrap().len(), 64);
}

#[test]
fn shards_partition_the_stream() {
    for count in [1, 2, 3, 5, 7] {
        let mut seen = BTreeSet::new();
        let mut total = 0;
        for i in 0..count {
            for d in enumerate_digraphs(3, Shard::new(i, count).unwrap(), None).unwrap() {
                total += 1;
                seen.insert(emit_digraph6(&d));
            }
        }
        assert_eq!((total, seen.len()), (64, 64), "{count} shards");
    }
    assert!(Shard::new(3, 3).is_err());
    assert!(Shard::new(0, 0).is_err());
}

#[test]
fn pruned_stream_equals_post_filter() {
    for n in 2..=4 {
        let pruned: BTreeSet<String> =
            enumerate_digraphs(n, Shard::FULL, Some(-1)).unwrap().iter().map(emit_digraph6).collect();
        let filtered: BTreeSet<String> = enumerate_digraphs(n, Shard::FULL, None)
            .unwrap()
            .iter()
            .filter(|d| woodall_slack(d).at_least(-1))
            .map(emit_digraph6)
            .collect();
        assert_eq!(pruned, filtered);
    }
}

#[test]
fn order_three_campaign() {
    let r = verify_main_theorem(3, Variant::Woodall, opts()).unwrap();
    assert_eq!(r.total_labeled, 64);
    assert_eq!(r.exception_count, 3);
    assert_eq!(r.exceptions.len(), 1);
    assert_eq!(r.exceptions[0].family_tag.as_deref(), Some("D1(1,1)"));
    assert_eq!(r.exceptions[0].labeled_count, 3);
    assert!(r.certified() && r.conservation_holds());
}

#[test]
fn classical_threshold_has_no_exceptions() {
    for n in 2..=5 {
        let r = verify_main_theorem(n, Variant::Woodall, opts()).unwrap();
        assert_eq!(r.classical_violations, 0);
        assert!(r.exceptions.iter().all(|x| x.condition_slack == Some(-1)));
    }
}

#[test]
fn ore_campaign_order_four() {
    let r = verify_main_theorem(4, Variant::Ore, opts()).unwrap();
    assert!(r.certified());
    assert!(!r.exceptions.is_empty());
    let tags: BTreeSet<_> = r.exceptions.iter().map(|x| x.family_tag.clone().unwrap()).collect();
    assert!(tags.iter().all(|t| t.starts_with("G5") || t.starts_with("G6")), "{tags:?}");
    assert!(tags.contains("G5(1,2)"));
    assert!(verify_main_theorem(2, Variant::Ore, opts()).is_err());
}

#[test]
fn exceptions_are_independently_non_hamiltonian() {
    let mut count = 0;
    for_each_digraph(4, Shard::FULL, Some(-1), |d| {
        if !directed_ham(&d) {
            count += 1;
        }
    })
    .unwrap();
    let r = verify_main_theorem(4, Variant::Woodall, opts()).unwrap();
    assert_eq!(r.exception_count, count);
}

#[test]
fn sharded_runs_merge_to_the_full_run() {
    let full = verify_main_theorem(4, Variant::Matched, opts()).unwrap();
    let parts: Vec<VerifyReport> = (0..3)
        .map(|i| {
            let shard = Shard::new(i, 3).unwrap();
            verify_main_theorem(4, Variant::Matched, VerifyOptions { shard, ..opts() }).unwrap()
        })
        .collect();
    let merged = merge_reports(&parts).unwrap();
    assert_eq!(merged.condition_satisfying, full.condition_satisfying);
    assert_eq!(merged.exception_count, full.exception_count);
    assert_eq!(merged.exceptions, full.exceptions);
    assert!(merge_reports(&[]).is_err());
}

#[test]
fn campaigns_are_reproducible() {
    let render = |parallel: bool| {
        let r = verify_main_theorem(4, Variant::AllPairs, VerifyOptions { parallel, ..opts() }).unwrap();
        r.records().iter().map(write_report_record).collect::<Vec<_>>().join("\n")
    };
    let a = render(true);
    assert_eq!(a, render(true));
    assert_eq!(a, render(false));
}

#[test]
fn pruning_does_not_change_results() {
    let a = verify_main_theorem(4, Variant::Woodall, opts()).unwrap();
    let b = verify_main_theorem(4, Variant::Woodall, VerifyOptions { prune: false, ..opts() }).unwrap();
    assert_eq!(a.exceptions, b.exceptions);
    assert_eq!(a.condition_satisfying, b.condition_satisfying);
    assert_eq!(b.total_labeled, 4096);
}

#[test]
fn external_input_matches_enumeration() {
    let lines: Vec<String> = enumerate_digraphs(3, Shard::FULL, None).unwrap().iter().map(emit_digraph6).collect();
    let r = verify_external(lines.iter().map(|l| parse_line(l)), Variant::Woodall, opts()).unwrap();
    let e = verify_main_theorem(3, Variant::Woodall, opts()).unwrap();
    assert_eq!((r.total_labeled, r.exception_count), (64, e.exception_count));
    assert_eq!(r.exceptions, e.exceptions);

    let graphs: Vec<String> = enumerate_graphs(4, Shard::FULL, None).unwrap().iter().map(emit_graph6).collect();
    let r = verify_external(graphs.iter().map(|l| parse_line(l)), Variant::Ore, opts()).unwrap();
    assert_eq!(r.exceptions, verify_main_theorem(4, Variant::Ore, opts()).unwrap().exceptions);

    // a digraph fed to the undirected campaign is an error
    assert!(verify_external([parse_line("&AW")], Variant::Ore, opts()).is_err());
}

#[test]
fn variants_parse() {
    for v in Variant::ALL {
        assert_eq!(v.to_string().parse::<Variant>().unwrap(), v);
    }
    assert_eq!("theorem11".parse::<Variant>().unwrap(), Variant::Woodall);
    assert!("13".parse::<Variant>().is_err());
}

#[test]
fn report_serializes_in_camel_case() {
    let r = verify_main_theorem(3, Variant::Woodall, opts()).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    for key in ["totalLabeled", "conditionSatisfying", "unrecognizedExceptions", "shardCount"] {
        assert!(json.contains(key), "{key}");
    }
    let back: VerifyReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
}
