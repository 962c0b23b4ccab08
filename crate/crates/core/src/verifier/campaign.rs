//! Certification campaigns over labeled enumeration or external graph streams.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::enumerate::{passes_directed, passes_undirected, rows_to_digraph, rows_to_graph, Shard, Space};
use crate::codec::{GraphText, ReportRecord};
use crate::conditions::{all_pairs_slack, ore_slack, woodall_slack, Slack};
use crate::correspondence::expand;
use crate::error::{domain, Error, Result};
use crate::families::{recognize_all_pairs, recognize_bipartite, recognize_directed, recognize_undirected};
use crate::graph::{Canonical, Digraph, UndirectedGraph};
use crate::hamilton::{find_alternating_hamilton_cycle, find_undirected_hamilton_cycle, is_hamiltonian};
use crate::par;

/// Which statement a campaign certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Woodall slack `>= -1` on digraphs.
    #[serde(rename = "theorem11")]
    Woodall,
    /// Las Vergnas slack `>= -1` on matched bipartite graphs, run through
    /// `expand` over digraph enumeration.
    #[serde(rename = "theorem12")]
    Matched,
    /// All-pairs slack `>= -1` on digraphs.
    #[serde(rename = "theorem14")]
    AllPairs,
    /// Ore slack `>= -1` on undirected graphs.
    #[serde(rename = "corollary")]
    Ore,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Woodall, Variant::Matched, Variant::AllPairs, Variant::Ore];

    pub fn is_undirected(self) -> bool {
        self == Variant::Ore
    }

    /// Smallest order the campaign accepts.
    pub fn min_order(self) -> usize {
        if self.is_undirected() {
            3
        } else {
            2
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Woodall => "11",
            Variant::Matched => "12",
            Variant::AllPairs => "14",
            Variant::Ore => "cor",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "11" | "theorem11" => Ok(Variant::Woodall),
            "12" | "theorem12" => Ok(Variant::Matched),
            "14" | "theorem14" => Ok(Variant::AllPairs),
            "cor" | "corollary" => Ok(Variant::Ore),
            _ => domain(format!("unknown campaign variant `{s}`")),
        }
    }
}

/// One isomorphism class of non-Hamiltonian graphs meeting the condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ExceptionClass {
    /// Canonical code, hex.
    pub code: String,
    pub family_tag: Option<String>,
    pub condition_slack: Option<i64>,
    pub labeled_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub variant: Variant,
    pub order: usize,
    pub total_labeled: u64,
    /// Graphs with slack `>= -1`.
    pub condition_satisfying: u64,
    pub hamiltonian_count: u64,
    /// Labeled non-Hamiltonian graphs; the sum of `labeledCount` over `exceptions`.
    pub exception_count: u64,
    pub exceptions: Vec<ExceptionClass>,
    pub unrecognized_exceptions: Vec<ExceptionClass>,
    /// Graphs with slack `>= 0`.
    pub classical_satisfying: u64,
    /// Non-Hamiltonian graphs with slack `>= 0`.
    pub classical_violations: u64,
    pub shard_id: usize,
    pub shard_count: usize,
    pub elapsed_micros: u64,
}

impl VerifyReport {
    pub fn certified(&self) -> bool {
        self.unrecognized_exceptions.is_empty() && self.classical_violations == 0
    }

    pub fn conservation_holds(&self) -> bool {
        self.condition_satisfying == self.hamiltonian_count + self.exception_count
            && self.exceptions.iter().map(|e| e.labeled_count).sum::<u64>() == self.exception_count
    }

    /// One record per exception class, in code order.
    pub fn records(&self) -> Vec<ReportRecord> {
        self.exceptions
            .iter()
            .map(|e| ReportRecord {
                code: e.code.clone(),
                order: self.order,
                condition_slack: e.condition_slack,
                hamiltonian: false,
                family_tag: e.family_tag.clone(),
                shard_id: self.shard_id,
                elapsed_micros: self.elapsed_micros,
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub shard: Shard,
    /// Skip subtrees that cannot reach slack `-1`.
    pub prune: bool,
    /// Record wall-clock time; otherwise `elapsedMicros` is 0 and reports are
    /// byte-reproducible.
    pub timing: bool,
    /// Use the data-parallel map (when compiled in).
    pub parallel: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            shard: Shard::FULL,
            prune: true,
            timing: false,
            parallel: true,
        }
    }
}

#[derive(Default)]
struct Partial {
    total: u64,
    satisfying: u64,
    hamiltonian: u64,
    classical: u64,
    classical_violations: u64,
    classes: BTreeMap<String, ExceptionClass>,
}

impl Partial {
    fn absorb(&mut self, other: Partial) {
        self.total += other.total;
        self.satisfying += other.satisfying;
        self.hamiltonian += other.hamiltonian;
        self.classical += other.classical;
        self.classical_violations += other.classical_violations;
        for (code, class) in other.classes {
            self.classes
                .entry(code)
                .and_modify(|c| c.labeled_count += class.labeled_count)
                .or_insert(class);
        }
    }
}

/// Per-graph outcome of a variant.
struct Judgement {
    slack: Slack,
    hamiltonian: bool,
}

fn judge_directed(variant: Variant, d: &Digraph) -> Result<Judgement> {
    Ok(match variant {
        Variant::Woodall => Judgement {
            slack: woodall_slack(d),
            hamiltonian: is_hamiltonian(d)?,
        },
        Variant::AllPairs => Judgement {
            slack: all_pairs_slack(d),
            hamiltonian: is_hamiltonian(d)?,
        },
        Variant::Matched => {
            let g = expand(d);
            Judgement {
                slack: crate::conditions::las_vergnas_slack(&g),
                hamiltonian: find_alternating_hamilton_cycle(&g)?.is_some(),
            }
        }
        Variant::Ore => unreachable!("the Ore campaign runs on undirected graphs"),
    })
}

fn classify_directed(variant: Variant, d: &Digraph) -> Result<(String, Option<String>)> {
    Ok(match variant {
        Variant::Woodall => (d.canonical_code()?.to_hex(), recognize_directed(d)?.map(|t| t.to_string())),
        Variant::AllPairs => (d.canonical_code()?.to_hex(), recognize_all_pairs(d)?.map(|t| t.to_string())),
        Variant::Matched => {
            let g = expand(d);
            (g.canonical_code()?.to_hex(), recognize_bipartite(&g)?.map(|t| t.to_string()))
        }
        Variant::Ore => unreachable!("the Ore campaign runs on undirected graphs"),
    })
}

impl Partial {
    fn record(&mut self, j: Judgement, classify: impl FnOnce() -> Result<(String, Option<String>)>) -> Result<()> {
        if !j.slack.at_least(-1) {
            return Ok(());
        }
        self.satisfying += 1;
        let classical = j.slack.at_least(0);
        if classical {
            self.classical += 1;
        }
        if j.hamiltonian {
            self.hamiltonian += 1;
            return Ok(());
        }
        if classical {
            self.classical_violations += 1;
        }
        let (code, tag) = classify()?;
        self.classes
            .entry(code.clone())
            .and_modify(|c| c.labeled_count += 1)
            .or_insert(ExceptionClass {
                code,
                family_tag: tag,
                condition_slack: j.slack.value(),
                labeled_count: 1,
            });
        Ok(())
    }

    fn directed(&mut self, variant: Variant, d: &Digraph) -> Result<()> {
        let j = judge_directed(variant, d)?;
        self.record(j, || classify_directed(variant, d))
    }

    fn undirected(&mut self, g: &UndirectedGraph) -> Result<()> {
        let j = Judgement {
            slack: ore_slack(g),
            hamiltonian: find_undirected_hamilton_cycle(g)?.is_some(),
        };
        self.record(j, || {
            Ok((g.canonical_code()?.to_hex(), recognize_undirected(g)?.map(|t| t.to_string())))
        })
    }
}

fn run_prefix(space: Space, variant: Variant, p: usize, level: Option<i64>) -> Result<Partial> {
    let mut part = Partial::default();
    let mut failure = None;
    space.visit_prefix(p, level, &mut |rows| {
        if failure.is_some() {
            return;
        }
        let r = if variant.is_undirected() {
            let g = rows_to_graph(rows);
            if passes_undirected(&g, level) {
                part.undirected(&g)
            } else {
                Ok(())
            }
        } else {
            let d = rows_to_digraph(rows);
            if passes_directed(&d, level) {
                part.directed(variant, &d)
            } else {
                Ok(())
            }
        };
        if let Err(e) = r {
            failure = Some(e);
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(part),
    }
}

fn finish(variant: Variant, order: usize, shard: Shard, part: Partial, started: Option<Instant>) -> VerifyReport {
    let exceptions: Vec<ExceptionClass> = part.classes.into_values().collect();
    let unrecognized = exceptions.iter().filter(|e| e.family_tag.is_none()).cloned().collect();
    VerifyReport {
        variant,
        order,
        total_labeled: part.total,
        condition_satisfying: part.satisfying,
        hamiltonian_count: part.hamiltonian,
        exception_count: exceptions.iter().map(|e| e.labeled_count).sum(),
        exceptions,
        unrecognized_exceptions: unrecognized,
        classical_satisfying: part.classical,
        classical_violations: part.classical_violations,
        shard_id: shard.index,
        shard_count: shard.count,
        elapsed_micros: started.map_or(0, |t| t.elapsed().as_micros() as u64),
    }
}

/// Exhaustive campaign over every labeled graph of `order` in the shard.
pub fn verify_main_theorem(order: usize, variant: Variant, options: VerifyOptions) -> Result<VerifyReport> {
    if order < variant.min_order() {
        return domain(format!("variant {variant} needs order at least {}", variant.min_order()));
    }
    let started = options.timing.then(Instant::now);
    let space = if variant.is_undirected() {
        Space::undirected(order)?
    } else {
        Space::directed(order)?
    };
    // Every variant's condition at -1 implies the Woodall (or Ore) bound at -1.
    let level = options.prune.then_some(-1);
    let prefixes: Vec<usize> = (0..space.prefix_count()).filter(|&p| options.shard.owns(p)).collect();
    let job = |p: usize| run_prefix(space, variant, p, level);
    let parts = if options.parallel {
        par::map_ordered(prefixes, job)
    } else {
        par::map_sequential(prefixes, job)
    };
    let mut total = Partial::default();
    for part in parts {
        total.absorb(part?);
    }
    total.total = space.labeled_in_shard(options.shard);
    Ok(finish(variant, order, options.shard, total, started))
}

/// Campaign over an external stream (digraph6 for the directed variants,
/// graph6 for the Ore campaign). Line `i` belongs to shard `i mod count`. All
/// graphs must share one order.
pub fn verify_external<I>(graphs: I, variant: Variant, options: VerifyOptions) -> Result<VerifyReport>
where
    I: IntoIterator<Item = Result<GraphText>>,
{
    let started = options.timing.then(Instant::now);
    let mut part = Partial::default();
    let mut order = None;
    for (i, item) in graphs.into_iter().enumerate() {
        let item = item?;
        if !options.shard.owns(i) {
            continue;
        }
        let n = match &item {
            GraphText::Directed(d) => d.order(),
            GraphText::Undirected(g) => g.order(),
        };
        if *order.get_or_insert(n) != n {
            return domain(format!("input line {} has order {n}, expected {}", i + 1, order.unwrap_or(n)));
        }
        if n < variant.min_order() {
            return domain(format!("variant {variant} needs order at least {}", variant.min_order()));
        }
        part.total += 1;
        match (variant.is_undirected(), item) {
            (true, GraphText::Undirected(g)) => part.undirected(&g)?,
            (false, GraphText::Directed(d)) => part.directed(variant, &d)?,
            (true, _) => return domain(format!("line {}: Ore campaign input must be graph6", i + 1)),
            (false, _) => return domain(format!("line {}: campaign {variant} input must be digraph6", i + 1)),
        }
    }
    Ok(finish(variant, order.unwrap_or(0), options.shard, part, started))
}

/// Merges shard reports of one campaign into a single report.
pub fn merge_reports(reports: &[VerifyReport]) -> Result<VerifyReport> {
    let first = reports.first().ok_or_else(|| Error::Domain("no reports to merge".into()))?;
    let mut part = Partial::default();
    let mut elapsed = 0;
    for r in reports {
        if r.variant != first.variant || r.order != first.order || r.shard_count != first.shard_count {
            return domain("reports come from different campaigns");
        }
        elapsed += r.elapsed_micros;
        part.absorb(Partial {
            total: r.total_labeled,
            satisfying: r.condition_satisfying,
            hamiltonian: r.hamiltonian_count,
            classical: r.classical_satisfying,
            classical_violations: r.classical_violations,
            classes: r.exceptions.iter().map(|e| (e.code.clone(), e.clone())).collect(),
        });
    }
    let mut merged = finish(first.variant, first.order, Shard::FULL, part, None);
    merged.elapsed_micros = elapsed;
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_three_has_one_class() {
        let r = verify_main_theorem(3, Variant::Woodall, VerifyOptions::default()).unwrap();
        assert_eq!(r.total_labeled, 64);
        assert_eq!(r.exceptions.len(), 1);
        assert_eq!(r.exception_count, 3);
        assert_eq!(r.exceptions[0].family_tag.as_deref(), Some("D1(1,1)"));
        assert!(r.certified() && r.conservation_holds());
    }

    #[test]
    fn shards_merge_to_whole() {
        let whole = verify_main_theorem(4, Variant::Woodall, VerifyOptions::default()).unwrap();
        let parts: Vec<_> = (0..3)
            .map(|i| {
                let o = VerifyOptions {
                    shard: Shard::new(i, 3).unwrap(),
                    ..VerifyOptions::default()
                };
                verify_main_theorem(4, Variant::Woodall, o).unwrap()
            })
            .collect();
        assert_eq!(merge_reports(&parts).unwrap(), whole);
    }

    #[test]
    fn variant_names() {
        for v in Variant::ALL {
            assert_eq!(v.to_string().parse::<Variant>().unwrap(), v);
        }
    }
}
