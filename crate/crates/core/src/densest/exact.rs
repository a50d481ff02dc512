use std::time::Instant;

use super::array::{answer, merge, DensestFlowArray, DfEntry};
use super::decompose::{decompose, WccPair, WccPartition};
use crate::error::{Error, Result};
use crate::network::{TemporalFlowNetwork, VertexId};
use crate::pipeline::{FlowEvaluator, PreparedQuery, StageSizes, Stages};
use crate::query::{Query, StdfAnswer};

/// Default cap on enumerated subset pairs per component.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Result of [`df_exact`].
#[derive(Clone, Debug)]
pub struct DfOutcome {
    pub array: DensestFlowArray,
    /// Subset pairs enumerated, including those with an empty side (which
    /// need no max-flow run).
    pub evaluations: u64,
    pub timed_out: bool,
}

/// Densest-flow array of one component by enumerating all `2^n` subset
/// pairs.
///
/// The full pair is evaluated first so that even a computation cut short by
/// `deadline` has an entry for the largest size. Fails with
/// [`Error::ExactInfeasible`] when `2^n` exceeds `budget`.
pub fn df_exact(eval: &FlowEvaluator<'_>, pair: &WccPair, budget: u64, deadline: Option<Instant>) -> Result<DfOutcome> {
    let n = pair.size();
    check_budget(n, budget)?;
    let ns = pair.sources.len();
    let full: u64 = (1u64 << n) - 1;
    let mut entries: Vec<Option<DfEntry>> = vec![None; n + 1];
    let mut evaluations = 0u64;
    let mut timed_out = false;
    for mask in std::iter::once(full).chain(0..full) {
        if evaluations > 0 && deadline.is_some_and(|d| Instant::now() >= d) {
            timed_out = true;
            break;
        }
        evaluations += 1;
        let sources: Vec<VertexId> = (0..ns).filter(|i| mask >> i & 1 == 1).map(|i| pair.sources[i]).collect();
        let sinks: Vec<VertexId> = (ns..n).filter(|i| mask >> i & 1 == 1).map(|i| pair.sinks[i - ns]).collect();
        let size = sources.len() + sinks.len();
        let one_sided = sources.is_empty() || sinks.is_empty();
        if one_sided && size >= 2 {
            continue;
        }
        let value = if one_sided { 0 } else { eval.flow(&sources, &sinks)? };
        let cand = DfEntry { value, sources, sinks };
        let slot = &mut entries[size];
        if slot.as_ref().is_none_or(|cur| cand.better_than(cur)) {
            *slot = Some(cand);
        }
    }
    Ok(DfOutcome { array: DensestFlowArray::from_entries(entries), evaluations, timed_out })
}

fn check_budget(n: usize, budget: u64) -> Result<()> {
    if n >= 64 || (1u64 << n) > budget {
        return Err(Error::ExactInfeasible { terminals: n, budget });
    }
    Ok(())
}

/// Options for [`stdf_exact`].
#[derive(Clone, Copy, Debug)]
pub struct ExactOptions {
    pub budget: u64,
    pub deadline: Option<Instant>,
    pub stages: Stages,
    /// Enumerate per reachability component. When off, all terminals form a
    /// single component.
    pub decompose: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { budget: DEFAULT_BUDGET, deadline: None, stages: Stages::default(), decompose: true }
    }
}

#[derive(Clone, Debug)]
pub struct ExactOutcome {
    pub answer: StdfAnswer,
    pub partition: WccPartition,
    /// One array per entry of `partition.pairs`.
    pub arrays: Vec<DensestFlowArray>,
    pub merged: DensestFlowArray,
    /// Subset pairs enumerated over all components.
    pub evaluations: u64,
    /// Max-flow runs actually performed.
    pub flow_runs: u64,
    pub timed_out: bool,
    pub sizes: StageSizes,
}

/// Exact STDF answer: prepare, decompose, enumerate each component, merge,
/// and pick the densest size class `>= k`.
///
/// With a deadline the computation is anytime: it stops enumerating once the
/// deadline passes and answers from the entries found so far, flagging
/// `timed_out`.
pub fn stdf_exact(tfn: &TemporalFlowNetwork, q: &Query, opts: ExactOptions) -> Result<ExactOutcome> {
    let prepared = PreparedQuery::new(tfn, q, opts.stages)?;
    let partition = if opts.decompose {
        decompose(&prepared.rtfn, q)
    } else {
        WccPartition { pairs: vec![WccPair { sources: q.sources.clone(), sinks: q.sinks.clone() }], ..Default::default() }
    };
    for pair in &partition.pairs {
        check_budget(pair.size(), opts.budget)?;
    }
    let eval = prepared.evaluator();
    let mut arrays = Vec::with_capacity(partition.pairs.len());
    let mut evaluations = 0;
    let mut timed_out = false;
    for pair in &partition.pairs {
        let out = df_exact(&eval, pair, opts.budget, opts.deadline)?;
        evaluations += out.evaluations;
        timed_out |= out.timed_out;
        arrays.push(out.array);
    }
    let mut operands = vec![DensestFlowArray::zeros(&partition.isolated_sources, &partition.isolated_sinks)];
    operands.extend(arrays.iter().cloned());
    let merged = merge(&operands);
    let mut ans = answer(&merged, q.k)?;
    ans.timed_out = timed_out;
    Ok(ExactOutcome { answer: ans, partition, arrays, merged, evaluations, flow_runs: eval.runs(), timed_out, sizes: prepared.sizes })
}
