use std::path::Path;

use hamlab::codec::{emit_digraph6, emit_graph6, parse_digraph6, parse_graph6, write_report_record, GraphText, ReportRecord};
use hamlab::conditions::{
    bipartite_slack, digraph_slack, las_vergnas_slack, ore_slack, undirected_slack, woodall_slack, Condition,
    ConditionReport, Witness,
};
use hamlab::correspondence::{contract, double_undirected, expand};
use hamlab::families::{
    build, recognize_all_pairs, recognize_bipartite, recognize_directed, recognize_undirected, Built, FamilyTag,
};
use hamlab::graph::{AlternatingCycle, Canonical, Digraph, UndirectedGraph};
use hamlab::hamilton::{
    analyze_structure, constructive_solve, find_alternating_hamilton_cycle, find_hamilton_cycle,
    find_undirected_hamilton_cycle, Analysis,
};
use hamlab::par;
use hamlab::verifier::{
    derive_g4_with, merge_reports, verify_external, verify_main_theorem, Shard, SkeletonPatterns, Variant,
    VerifyOptions, VerifyReport,
};
use serde_json::json;

use crate::input::{as_bipartite, at_line, graphs, lines, Output};
use crate::{Command, ConditionArg, Failure, Method, Target};

pub fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Check { condition, min_slack, json, input } => check(condition, min_slack, json, input.as_deref()),
        Command::Solve { method, bipartite, trace, json, input } => solve(method, bipartite, trace, json, input.as_deref()),
        Command::Analyze { input } => analyze(input.as_deref()),
        Command::Build { family, n, m, opts, inner, verbose } => {
            build_cmd(&family, n, m, opts.as_deref(), inner.as_deref(), verbose)
        }
        Command::Classify { bipartite, all_pairs, input } => classify(bipartite, all_pairs, input.as_deref()),
        Command::Convert { to, bipartite, input } => convert(to, bipartite, input.as_deref()),
        Command::Verify {
            theorem,
            order,
            input,
            shards,
            shard_index,
            threads,
            no_prune,
            timing,
            out,
        } => {
            let variant: Variant = theorem.parse().map_err(|e: hamlab::Error| Failure::usage(e.to_string()))?;
            if let Some(t) = threads {
                if t == 0 {
                    return Err(Failure::usage("--threads must be at least 1"));
                }
                par::configure_threads(t)?;
            }
            let opts = VerifyOptions {
                prune: !no_prune,
                timing,
                ..VerifyOptions::default()
            };
            verify(variant, order, input.as_deref(), shards, shard_index, opts, out.as_deref())
        }
        Command::DeriveG4 { all_patterns, out } => derive(all_patterns, out.as_deref()),
    }
}

fn condition_of(c: ConditionArg) -> Condition {
    match c {
        ConditionArg::Woodall => Condition::Woodall,
        ConditionArg::AllPairs => Condition::AllPairs,
        ConditionArg::LasVergnas => Condition::LasVergnas,
        ConditionArg::Ore => Condition::Ore,
        ConditionArg::Dirac => Condition::Dirac,
        ConditionArg::Ghouila => Condition::GhouilaHouri,
        ConditionArg::Semidegree => Condition::SemiDegree,
    }
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Pair(u, v) => format!("({u},{v})"),
        Witness::Vertex(v) => format!("{v}"),
    }
}

fn check(c: ConditionArg, min: Option<i64>, as_json: bool, input: Option<&Path>) -> Result<(), Failure> {
    let condition = condition_of(c);
    let mut out = Output::stdout();
    for (i, g) in graphs(input)?.iter().enumerate() {
        let report: ConditionReport = match (condition, g) {
            (Condition::LasVergnas, _) => bipartite_slack(&as_bipartite(i, g)?, condition),
            (Condition::Ore | Condition::Dirac, GraphText::Undirected(u)) => undirected_slack(u, condition),
            (Condition::Ore | Condition::Dirac, GraphText::Directed(_)) => {
                return Err(Failure::usage(format!("line {}: {condition} needs graph6 input", i + 1)))
            }
            (_, GraphText::Directed(d)) => digraph_slack(d, condition),
            (_, GraphText::Undirected(u)) => digraph_slack(&double_undirected(u), condition),
        }
        .map_err(|e| at_line(i, e))?;
        let meets = min.map(|m| report.slack.at_least(m));
        if as_json {
            let v = json!({
                "condition": condition.name(),
                "slack": report.slack.value(),
                "vacuous": report.slack.value().is_none(),
                "threshold": report.threshold,
                "witnesses": report.witnesses.iter().map(witness_text).collect::<Vec<_>>(),
                "meets": meets,
            });
            out.line(v.to_string())?;
        } else {
            let mut s = report.slack.to_string();
            if !report.witnesses.is_empty() {
                let ws: Vec<String> = report.witnesses.iter().map(witness_text).collect();
                s.push_str(&format!(" witnesses={}", ws.join(" ")));
            }
            if let (Some(m), Some(ok)) = (min, meets) {
                s.push_str(if ok { " meets" } else { " below" });
                s.push_str(&format!(" min-slack={m}"));
            }
            out.line(s)?;
        }
    }
    out.finish()
}

fn alternating_text(c: &AlternatingCycle) -> String {
    c.pairs().iter().map(|p| format!("w{p} b{p}")).collect::<Vec<_>>().join(" ")
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

const NO_CYCLE: &str = "no hamilton cycle";

fn solve(method: Method, bipartite: bool, trace: bool, as_json: bool, input: Option<&Path>) -> Result<(), Failure> {
    let mut out = Output::stdout();
    for (i, g) in graphs(input)?.iter().enumerate() {
        let (text, value) = match (method, bipartite, g) {
            (Method::Constructive, _, _) | (Method::Exact, true, _) => {
                let bg = as_bipartite(i, g)?;
                let (cycle, steps) = match method {
                    Method::Constructive => {
                        let r = constructive_solve(&bg).map_err(|e| at_line(i, e))?;
                        (r.cycle, Some(r.trace))
                    }
                    Method::Exact => (find_alternating_hamilton_cycle(&bg).map_err(|e| at_line(i, e))?, None),
                };
                let mut text = match (&cycle, bipartite) {
                    (None, _) => NO_CYCLE.to_string(),
                    (Some(c), true) => alternating_text(c),
                    (Some(c), false) => join(c.pairs()),
                };
                if trace {
                    for step in steps.iter().flatten() {
                        text.push('\n');
                        text.push_str(&serde_json::to_string(step).expect("trace serializes"));
                    }
                }
                let mut v = json!({ "hamiltonian": cycle.is_some(), "cycle": cycle.as_ref().map(|c| c.pairs().to_vec()) });
                if trace {
                    v["trace"] = serde_json::to_value(steps).expect("trace serializes");
                }
                (text, v)
            }
            (Method::Exact, false, GraphText::Directed(d)) => cycle_output(find_hamilton_cycle(d).map_err(|e| at_line(i, e))?),
            (Method::Exact, false, GraphText::Undirected(u)) => {
                cycle_output(find_undirected_hamilton_cycle(u).map_err(|e| at_line(i, e))?)
            }
        };
        out.line(if as_json { value.to_string() } else { text })?;
    }
    out.finish()
}

fn cycle_output(c: Option<Vec<usize>>) -> (String, serde_json::Value) {
    let text = c.as_deref().map_or_else(|| NO_CYCLE.to_string(), join);
    (text, json!({ "hamiltonian": c.is_some(), "cycle": c }))
}

fn analyze(input: Option<&Path>) -> Result<(), Failure> {
    let mut out = Output::stdout();
    for (i, g) in graphs(input)?.iter().enumerate() {
        let bg = as_bipartite(i, g)?;
        match analyze_structure(&bg).map_err(|e| at_line(i, e))? {
            Analysis::Hamiltonian(c) => {
                eprintln!("line {}: alternating Hamilton cycle found", i + 1);
                out.line(json!({ "hamiltonian": true, "cycle": c.pairs() }).to_string())?;
            }
            Analysis::Structure(r) => {
                let failed: Vec<String> =
                    r.claims.iter().filter(|c| !c.passed).map(|c| c.claim.to_string()).collect();
                if failed.is_empty() {
                    eprintln!("line {}: longest cycle {}, all claims pass", i + 1, r.longest_cycle_len);
                } else {
                    eprintln!("line {}: failing claims: {}", i + 1, failed.join(", "));
                }
                out.line(json!({ "hamiltonian": false, "report": *r }).to_string())?;
            }
        }
    }
    out.finish()
}

fn parse_flags(s: &str) -> Result<(bool, bool), Failure> {
    let flag = |t: &str| match t.trim() {
        "1" | "true" | "t" | "yes" => Ok(true),
        "0" | "false" | "f" | "no" => Ok(false),
        other => Err(Failure::usage(format!("bad flag `{other}` in --opts"))),
    };
    let parts: Vec<&str> = if s.contains(',') {
        s.split(',').collect()
    } else {
        s.split_inclusive(|_| true).collect()
    };
    match parts.as_slice() {
        [a, b] => Ok((flag(a)?, flag(b)?)),
        _ => Err(Failure::usage("--opts takes two flags, e.g. `true,false` or `10`")),
    }
}

fn build_cmd(
    family: &str,
    n: Option<usize>,
    m: Option<usize>,
    opts: Option<&str>,
    inner: Option<&str>,
    verbose: bool,
) -> Result<(), Failure> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| Failure::usage(format!("--{name} is required for {family}")));
    let flags = || opts.map_or(Ok((false, false)), parse_flags);
    let inner_text = || inner.ok_or_else(|| Failure::usage(format!("--inner is required for {family}")));
    let tag = match family.to_ascii_lowercase().as_str() {
        "d1" => FamilyTag::D1 { n: need(n, "n")?, m: need(m, "m")? },
        "g1" => FamilyTag::G1 { n: need(n, "n")?, m: need(m, "m")? },
        "g5" => FamilyTag::G5 { n: need(n, "n")?, m: need(m, "m")? },
        "d1'" | "d1prime" => FamilyTag::D1Prime { n: need(n, "n")? },
        "d2" => FamilyTag::D2 { n: need(n, "n")?, inner: parse_digraph6(inner_text()?)?.canonical_code_with_cap(16)? },
        "g2" => FamilyTag::G2 {
            n: need(n, "n")?,
            inner: expand(&parse_digraph6(inner_text()?)?).canonical_code_with_cap(16)?,
        },
        "g6" => FamilyTag::G6 { n: need(n, "n")?, inner: parse_graph6(inner_text()?)?.canonical_code_with_cap(16)? },
        "d3" => {
            let (forward, backward) = flags()?;
            FamilyTag::D3 { n: need(n, "n")?, forward, backward }
        }
        "g3" => {
            let (opt0, opt1) = flags()?;
            FamilyTag::G3 { n: need(n, "n")?, opt0, opt1 }
        }
        "d3'" | "d3prime" => {
            let (forward, backward) = flags()?;
            FamilyTag::D3Prime { forward, backward }
        }
        "d4" => FamilyTag::D4,
        "g4" => FamilyTag::G4,
        other => return Err(Failure::usage(format!("unknown family `{other}`"))),
    };
    let built = build(&tag)?;
    let text = match &built {
        Built::Directed(d) => emit_digraph6(d),
        Built::Bipartite(g) => emit_digraph6(&contract(g)),
        Built::Undirected(g) => emit_graph6(g),
    };
    if verbose {
        eprintln!("{tag} canonical {}", built.canonical_code()?);
    }
    let mut out = Output::stdout();
    out.line(text)?;
    out.finish()
}

fn tag_text(t: Option<FamilyTag>) -> String {
    t.map_or_else(|| "none".to_string(), |t| t.to_string())
}

fn classify(bipartite: bool, all_pairs: bool, input: Option<&Path>) -> Result<(), Failure> {
    let mut out = Output::stdout();
    for (i, g) in graphs(input)?.iter().enumerate() {
        let tag = match g {
            _ if bipartite => recognize_bipartite(&as_bipartite(i, g)?),
            GraphText::Directed(d) if all_pairs => recognize_all_pairs(d),
            GraphText::Directed(d) => recognize_directed(d),
            GraphText::Undirected(u) => recognize_undirected(u),
        }
        .map_err(|e| at_line(i, e))?;
        out.line(tag_text(tag))?;
    }
    out.finish()
}

fn symmetric(d: &Digraph) -> Option<UndirectedGraph> {
    UndirectedGraph::from_rows(d.out_rows()).ok()
}

fn convert(to: Target, bipartite: bool, input: Option<&Path>) -> Result<(), Failure> {
    let mut out = Output::stdout();
    for (i, g) in graphs(input)?.iter().enumerate() {
        let err = |e| at_line(i, e);
        let line = match (to, g) {
            (Target::Digraph6, GraphText::Directed(d)) => emit_digraph6(d),
            (Target::Digraph6, GraphText::Undirected(u)) => emit_digraph6(&double_undirected(u)),
            (Target::Graph6, GraphText::Undirected(u)) => emit_graph6(u),
            (Target::Graph6, GraphText::Directed(d)) => emit_graph6(
                &symmetric(d).ok_or_else(|| Failure::from(hamlab::Error::Domain(format!("line {}: digraph is not symmetric", i + 1))))?,
            ),
            (Target::Canonical, _) if bipartite => as_bipartite(i, g)?.canonical_code_with_cap(16).map_err(err)?.to_hex(),
            (Target::Canonical, GraphText::Directed(d)) => d.canonical_code_with_cap(16).map_err(err)?.to_hex(),
            (Target::Canonical, GraphText::Undirected(u)) => u.canonical_code_with_cap(16).map_err(err)?.to_hex(),
            (Target::Record, _) => write_report_record(&record(i, g, bipartite)?),
            (Target::Arcs, GraphText::Directed(d)) => {
                let arcs: Vec<String> = d.arcs().map(|(u, v)| format!("{u}>{v}")).collect();
                format!("{} {}", d.order(), arcs.join(" ")).trim_end().to_string()
            }
            (Target::Arcs, GraphText::Undirected(u)) => {
                let edges: Vec<String> = u.edges().map(|(a, b)| format!("{a}-{b}")).collect();
                format!("{} {}", u.order(), edges.join(" ")).trim_end().to_string()
            }
        };
        out.line(line)?;
    }
    out.finish()
}

fn record(i: usize, g: &GraphText, bipartite: bool) -> Result<ReportRecord, Failure> {
    let err = |e| at_line(i, e);
    let (code, order, slack, ham, tag) = if bipartite {
        let bg = as_bipartite(i, g)?;
        (
            bg.canonical_code_with_cap(16).map_err(err)?,
            bg.order(),
            las_vergnas_slack(&bg),
            find_alternating_hamilton_cycle(&bg).map_err(err)?.is_some(),
            recognize_bipartite(&bg).map_err(err)?,
        )
    } else {
        match g {
            GraphText::Directed(d) => (
                d.canonical_code_with_cap(16).map_err(err)?,
                d.order(),
                woodall_slack(d),
                find_hamilton_cycle(d).map_err(err)?.is_some(),
                recognize_directed(d).map_err(err)?,
            ),
            GraphText::Undirected(u) => (
                u.canonical_code_with_cap(16).map_err(err)?,
                u.order(),
                ore_slack(u),
                find_undirected_hamilton_cycle(u).map_err(err)?.is_some(),
                recognize_undirected(u).map_err(err)?,
            ),
        }
    };
    Ok(ReportRecord {
        code: code.to_hex(),
        order,
        condition_slack: slack.value(),
        hamiltonian: ham,
        family_tag: tag.map(|t| t.to_string()),
        shard_id: 0,
        elapsed_micros: 0,
    })
}

fn verify(
    variant: Variant,
    order: Option<usize>,
    input: Option<&Path>,
    shards: usize,
    shard_index: Option<usize>,
    opts: VerifyOptions,
    out: Option<&Path>,
) -> Result<(), Failure> {
    if shards == 0 || shard_index.is_some_and(|i| i >= shards) {
        return Err(Failure::usage("--shard-index must be below --shards, and --shards at least 1"));
    }
    let indices: Vec<usize> = shard_index.map_or_else(|| (0..shards).collect(), |i| vec![i]);
    let external = match input {
        Some(p) => Some(lines(Some(p))?),
        None => None,
    };
    let mut reports = Vec::new();
    for idx in indices {
        let o = VerifyOptions { shard: Shard::new(idx, shards)?, ..opts };
        let r = match (&external, order) {
            (Some(ls), _) => verify_external(ls.iter().map(|l| hamlab::codec::parse_line(l)), variant, o)?,
            (None, Some(n)) => verify_main_theorem(n, variant, o)?,
            (None, None) => return Err(Failure::usage("either --order or --input is required")),
        };
        reports.push(r);
    }
    let report: VerifyReport = if reports.len() == 1 {
        reports.pop().expect("one report")
    } else {
        merge_reports(&reports)?
    };
    if let Some(path) = out {
        let mut f = Output::file(path)?;
        for r in report.records() {
            f.line(write_report_record(&r))?;
        }
        f.finish()?;
    }
    eprintln!(
        "theorem {variant}, order {}: {} labeled, {} satisfy, {} exception class(es), {} unrecognized, {}",
        report.order,
        report.total_labeled,
        report.condition_satisfying,
        report.exceptions.len(),
        report.unrecognized_exceptions.len(),
        if report.certified() { "certified" } else { "NOT certified" }
    );
    let mut stdout = Output::stdout();
    stdout.line(serde_json::to_string(&report).expect("report serializes"))?;
    stdout.finish()?;
    if report.certified() {
        Ok(())
    } else {
        Err(hamlab::Error::Domain("campaign not certified".into()).into())
    }
}

fn derive(all_patterns: bool, out: Option<&Path>) -> Result<(), Failure> {
    let patterns = if all_patterns { SkeletonPatterns::All } else { SkeletonPatterns::Alternating };
    let r = derive_g4_with(patterns)?;
    let d6: Vec<String> = r.classes.iter().map(emit_digraph6).collect();
    if let Some(path) = out {
        let mut f = Output::file(path)?;
        for l in &d6 {
            f.line(l)?;
        }
        f.finish()?;
    }
    let mut stdout = Output::stdout();
    stdout.line(
        json!({
            "candidatesExamined": r.candidates_examined,
            "survivors": r.survivors,
            "classes": r.classes.len(),
            "codes": r.codes.iter().map(|c| c.to_hex()).collect::<Vec<_>>(),
            "digraph6": d6,
        })
        .to_string(),
    )?;
    stdout.finish()?;
    if r.classes.len() != 1 {
        return Err(Failure::from(hamlab::Error::Domain(format!(
            "derivation produced {} classes, expected exactly 1",
            r.classes.len()
        ))));
    }
    eprintln!("one class of order 7 (bipartite order 14)");
    Ok(())
}
