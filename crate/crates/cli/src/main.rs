//! `dflow`: command-line front end for densest temporal flow queries.

mod commands;
mod error;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use densest_flow::bench::Algorithm;

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "dflow", version, about = "Densest flow queries over temporal transaction networks")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Edge list CSV with header `src,dst,capacity,timestamp`.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Keep only transactions with timestamps in `START:END`.
    #[arg(long, global = true, value_parser = parse_window)]
    pub window: Option<(u64, u64)>,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Deadline for exact enumeration; it then returns its best answer so far.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub time_limit_ms: Option<u64>,
    /// Leave wall-clock timings out of reports so reruns are byte-identical.
    #[arg(long, global = true)]
    pub no_timings: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the time-expanded network as a static edge CSV plus a JSON copy index.
    Transform(TransformArgs),
    /// Maximum flow between two vertices.
    Maxflow(MaxflowArgs),
    /// Answer a densest flow query.
    Stdf(StdfArgs),
    /// Run all algorithms on random queries and write a CSV of results.
    Bench(BenchArgs),
    /// Brute-force reference answer for small queries.
    #[command(hide = true)]
    Oracle(QueryArgs),
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    /// Apply flow-preserving compression.
    #[arg(long)]
    pub compress: bool,
    /// Vertices whose earliest copy must survive compression.
    #[arg(long = "source", value_delimiter = ',')]
    pub sources: Vec<String>,
    /// Vertices whose latest copy must survive compression.
    #[arg(long = "sink", value_delimiter = ',')]
    pub sinks: Vec<String>,
    /// Copy index JSON path; defaults to the `--out` path with a `.json`
    /// extension and is skipped when writing to standard output.
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MaxflowArgs {
    #[arg(long)]
    pub source: String,
    #[arg(long)]
    pub sink: String,
    /// Respect timestamps via the time-expanded network; otherwise timestamps
    /// are ignored.
    #[arg(long)]
    pub temporal: bool,
    /// Greedy temporal augmentation without regret (a lower bound).
    #[arg(long, conflicts_with = "temporal")]
    pub naive: bool,
}

#[derive(Args, Debug)]
pub struct QueryArgs {
    /// Query JSON `{"sources": [...], "sinks": [...], "k": int}`.
    #[arg(long)]
    pub query: Option<PathBuf>,
    /// Sources, overriding the query file.
    #[arg(long, value_delimiter = ',')]
    pub sources: Vec<String>,
    /// Sinks, overriding the query file.
    #[arg(long, value_delimiter = ',')]
    pub sinks: Vec<String>,
    /// Minimum `|S'| + |T'|`, overriding the query file.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: Option<u64>,
}

#[derive(Args, Debug)]
pub struct StdfArgs {
    #[command(flatten)]
    pub query: QueryArgs,
    #[arg(long, default_value = "dc", value_parser = parse_algorithm)]
    pub algo: Algorithm,
    /// Largest number of subset pairs exact enumeration may visit per component.
    #[arg(long, default_value_t = densest_flow::densest::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Components with at most this many terminals are solved exactly by the
    /// peel-dc variants.
    #[arg(long, default_value_t = densest_flow::peeling::DEFAULT_EXACT_WCC_THRESHOLD)]
    pub exact_wcc_threshold: usize,
    /// Write the peeling trace(s) as JSON.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[arg(long)]
    pub no_reduce: bool,
    #[arg(long)]
    pub no_compress: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 10)]
    pub queries: usize,
    /// `|S| + |T|` per generated query.
    #[arg(long, default_value_t = 8)]
    pub terminals: usize,
    /// Defaults to half the terminals.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = densest_flow::densest::DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, default_value_t = densest_flow::peeling::DEFAULT_EXACT_WCC_THRESHOLD)]
    pub exact_wcc_threshold: usize,
    /// Synthetic network shape, used when no `--input` is given.
    #[arg(long, default_value_t = 5)]
    pub layers: usize,
    #[arg(long, default_value_t = 10)]
    pub width: usize,
    #[arg(long, default_value_t = 2)]
    pub fanout: usize,
    #[arg(long, default_value_t = 2)]
    pub motifs: usize,
}

fn parse_window(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once(':').ok_or("expected START:END")?;
    let a: u64 = a.trim().parse().map_err(|e| format!("bad window start: {e}"))?;
    let b: u64 = b.trim().parse().map_err(|e| format!("bad window end: {e}"))?;
    if a > b {
        return Err(format!("window start {a} exceeds end {b}"));
    }
    Ok((a, b))
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: densest_flow::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => report_error(&e),
    }
}

fn report_error(e: &CliError) -> ExitCode {
    let body = serde_json::json!({ "error": e });
    eprintln!("{body}");
    ExitCode::from(e.exit as u8)
}
