//! Runs the five query algorithms side by side on generated queries.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::densest::{stdf_exact, ExactOptions, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::network::TemporalFlowNetwork;
use crate::peeling::{peel_dc, stdf_peel, PeelDcOptions, DEFAULT_EXACT_WCC_THRESHOLD};
use crate::pipeline::Stages;
use crate::query::{Query, StdfAnswer};
use crate::synth::random_query;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Dc,
    Peel,
    PeelPrune,
    PeelDc,
    PeelDcPrune,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [Algorithm::Dc, Algorithm::Peel, Algorithm::PeelPrune, Algorithm::PeelDc, Algorithm::PeelDcPrune];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Dc => "dc",
            Algorithm::Peel => "peel",
            Algorithm::PeelPrune => "peel-prune",
            Algorithm::PeelDc => "peel-dc",
            Algorithm::PeelDcPrune => "peel-dc-prune",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown algorithm {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub budget: u64,
    pub exact_wcc_threshold: usize,
    pub time_limit: Option<Duration>,
    pub stages: Stages,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { budget: DEFAULT_BUDGET, exact_wcc_threshold: DEFAULT_EXACT_WCC_THRESHOLD, time_limit: None, stages: Stages::default() }
    }
}

/// Answers `q` with `algo`. Only `dc` honours the time limit.
pub fn run_query(tfn: &TemporalFlowNetwork, q: &Query, algo: Algorithm, opts: RunOptions) -> Result<StdfAnswer> {
    let dc = |prune| PeelDcOptions { prune, exact_wcc_threshold: opts.exact_wcc_threshold, budget: opts.budget, stages: opts.stages };
    Ok(match algo {
        Algorithm::Dc => {
            let deadline = opts.time_limit.map(|d| Instant::now() + d);
            stdf_exact(tfn, q, ExactOptions { budget: opts.budget, deadline, stages: opts.stages, decompose: true })?.answer
        }
        Algorithm::Peel => stdf_peel(tfn, q, false, opts.stages)?.answer,
        Algorithm::PeelPrune => stdf_peel(tfn, q, true, opts.stages)?.answer,
        Algorithm::PeelDc => peel_dc(tfn, q, dc(false))?.answer,
        Algorithm::PeelDcPrune => peel_dc(tfn, q, dc(true))?.answer,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct BenchConfig {
    pub queries: usize,
    /// `|S| + |T|`; split evenly, with the extra terminal on the sink side.
    pub terminals: usize,
    pub k: usize,
    pub seed: u64,
    pub run: RunOptions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub query: usize,
    pub algorithm: Algorithm,
    pub elapsed_us: u128,
    pub value: u64,
    pub size: usize,
    pub density_num: u64,
    pub density_den: u64,
    pub timed_out: bool,
    /// Set when the run failed (e.g. the exact budget was exceeded).
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// Broken ordering invariants: an exact answer below a peeling answer,
    /// or a peeling answer below a third of the exact one.
    pub violations: Vec<String>,
}

/// Generates `queries` random queries over `tfn` (sources with out-degree at
/// least 1, sinks with in-degree at least 1) and runs every algorithm on
/// each.
pub fn run_bench(tfn: &TemporalFlowNetwork, cfg: BenchConfig) -> Result<BenchReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ns = cfg.terminals / 2;
    let nt = cfg.terminals - ns;
    if ns == 0 {
        return Err(Error::Argument("a benchmark query needs at least two terminals".into()));
    }
    let mut report = BenchReport::default();
    for qi in 0..cfg.queries {
        let q = random_query(&mut rng, tfn, ns, nt, cfg.k.clamp(1, cfg.terminals))?;
        let mut answers = Vec::new();
        for algo in Algorithm::ALL {
            let start = Instant::now();
            let res = run_query(tfn, &q, algo, cfg.run);
            let elapsed_us = start.elapsed().as_micros();
            let row = match res {
                Ok(a) => {
                    let row = BenchRow {
                        query: qi,
                        algorithm: algo,
                        elapsed_us,
                        value: a.value,
                        size: a.size(),
                        density_num: a.density.num,
                        density_den: a.density.den,
                        timed_out: a.timed_out,
                        error: None,
                    };
                    answers.push((algo, a));
                    row
                }
                Err(e) => BenchRow {
                    query: qi,
                    algorithm: algo,
                    elapsed_us,
                    value: 0,
                    size: 0,
                    density_num: 0,
                    density_den: 1,
                    timed_out: false,
                    error: Some(e.to_string()),
                },
            };
            report.rows.push(row);
        }
        if let Some((_, exact)) = answers.iter().find(|(a, ans)| *a == Algorithm::Dc && !ans.timed_out) {
            for (algo, ans) in answers.iter().filter(|(a, _)| *a != Algorithm::Dc) {
                if ans.density > exact.density {
                    report.violations.push(format!("query {qi}: {algo} density {} exceeds exact {}", ans.density, exact.density));
                }
                if !ans.density.within_factor_of(3, &exact.density) {
                    report.violations.push(format!("query {qi}: {algo} density {} below a third of exact {}", ans.density, exact.density));
                }
            }
        }
    }
    Ok(report)
}
