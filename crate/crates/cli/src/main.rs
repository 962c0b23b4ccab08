//! `hamlab` command-line front end.
//!
//! Graphs travel one per line: digraph6 (`&...`) for digraphs and graph6 for
//! undirected graphs. A matched bipartite graph is written as the digraph6
//! of its contraction and read back with `--bipartite`.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hamlab::Error;

#[derive(Parser)]
#[command(name = "hamlab", version, about = "Degree-sum Hamiltonicity laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConditionArg {
    Woodall,
    AllPairs,
    LasVergnas,
    Ore,
    Dirac,
    Ghouila,
    Semidegree,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    /// Backtracking search.
    Exact,
    /// Merge-based augmentation with exact fallback (bipartite view).
    Constructive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Digraph6,
    Graph6,
    /// Canonical code, hex.
    Canonical,
    /// One report record per graph.
    Record,
    /// Plain arc or edge list.
    Arcs,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a degree condition and print its slack.
    Check {
        #[arg(long, value_enum)]
        condition: ConditionArg,
        /// Report whether each graph reaches this slack.
        #[arg(long, allow_hyphen_values = true)]
        min_slack: Option<i64>,
        /// Emit JSON lines instead of text.
        #[arg(long)]
        json: bool,
        /// Input file; stdin when absent.
        input: Option<PathBuf>,
    },
    /// Find a Hamilton cycle or report that none exists.
    Solve {
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
        /// Read digraph6 lines as matched bipartite graphs.
        #[arg(long)]
        bipartite: bool,
        /// Include the constructive trace (JSON output only).
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
        input: Option<PathBuf>,
    },
    /// Longest-cycle decomposition and claim checks of a matched bipartite graph.
    Analyze { input: Option<PathBuf> },
    /// Construct a family member and print it.
    Build {
        /// d1, d2, d3, d4, g1, g2, g3, g4, d1', d3', g5, g6.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Two flags, e.g. `true,false` or `10`: (forward, backward) for D3,
        /// (opt0, opt1) for G3.
        #[arg(long)]
        opts: Option<String>,
        /// Inner graph for d2/g2 (digraph6) or g6 (graph6).
        #[arg(long)]
        inner: Option<String>,
        /// Print the tag and canonical code to stderr.
        #[arg(long)]
        verbose: bool,
    },
    /// Print the exceptional family of each graph, or `none`.
    Classify {
        #[arg(long)]
        bipartite: bool,
        /// Use the all-pairs family list (D1', D2, D3', D4).
        #[arg(long)]
        all_pairs: bool,
        input: Option<PathBuf>,
    },
    /// Translate between formats.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long)]
        bipartite: bool,
        input: Option<PathBuf>,
    },
    /// Exhaustive certification campaign.
    Verify {
        /// 11, 12, 14 or cor.
        #[arg(long)]
        theorem: String,
        /// Enumerate all labeled graphs of this order.
        #[arg(long, required_unless_present = "input")]
        order: Option<usize>,
        /// Read graphs from this digraph6/graph6 file instead of enumerating.
        #[arg(long, conflicts_with = "order")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Run only this shard; all shards merged when absent.
        #[arg(long)]
        shard_index: Option<usize>,
        /// Worker threads for the parallel map.
        #[arg(long)]
        threads: Option<usize>,
        /// Enumerate without slack pruning.
        #[arg(long)]
        no_prune: bool,
        /// Record wall-clock time in the report.
        #[arg(long)]
        timing: bool,
        /// Per-class JSONL records.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search the skeleton for the order-7 exception.
    DeriveG4 {
        /// Search all 16 type patterns instead of the alternating one.
        #[arg(long)]
        all_patterns: bool,
        /// Write the contraction(s) as digraph6.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure with its exit status.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Serialization(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("hamlab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
