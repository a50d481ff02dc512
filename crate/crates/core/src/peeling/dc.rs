use serde::{Deserialize, Serialize};

use super::{peel_sets, PeelingTrace};
use crate::densest::{answer, decompose, df_exact, merge, DensestFlowArray, DfEntry, WccPartition, DEFAULT_BUDGET};
use crate::error::Result;
use crate::network::TemporalFlowNetwork;
use crate::pipeline::{PreparedQuery, StageSizes, Stages};
use crate::query::{Query, StdfAnswer};

/// Components of at most this many terminals are enumerated exactly by
/// default.
pub const DEFAULT_EXACT_WCC_THRESHOLD: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelDcOptions {
    pub prune: bool,
    /// Components with at most this many terminals use exact enumeration
    /// instead of peeling; 0 peels every component.
    pub exact_wcc_threshold: usize,
    pub budget: u64,
    pub stages: Stages,
}

impl Default for PeelDcOptions {
    fn default() -> Self {
        PeelDcOptions { prune: true, exact_wcc_threshold: DEFAULT_EXACT_WCC_THRESHOLD, budget: DEFAULT_BUDGET, stages: Stages::default() }
    }
}

#[derive(Clone, Debug)]
pub struct PeelDcOutcome {
    pub answer: StdfAnswer,
    pub partition: WccPartition,
    pub arrays: Vec<DensestFlowArray>,
    /// Peeling trace per component; `None` where exact enumeration was used.
    pub traces: Vec<Option<PeelingTrace>>,
    pub merged: DensestFlowArray,
    pub flow_runs: u64,
    pub sizes: StageSizes,
}

/// Array of a peeling trace: entry `j` is the flow of the surviving sets of
/// size `j`, with those sets as witness.
pub fn trace_array(trace: &PeelingTrace) -> DensestFlowArray {
    let n = trace.steps.first().map_or(0, |s| s.size);
    let mut entries = vec![None; n + 1];
    entries[0] = Some(DfEntry { value: 0, sources: Vec::new(), sinks: Vec::new() });
    for s in &trace.steps {
        entries[s.size] = Some(DfEntry { value: s.flow, sources: s.sources.clone(), sinks: s.sinks.clone() });
    }
    DensestFlowArray::from_entries(entries)
}

/// Decomposes the query, peels each component (or enumerates it when small),
/// merges the per-component arrays and extracts the answer.
pub fn peel_dc(tfn: &TemporalFlowNetwork, q: &Query, opts: PeelDcOptions) -> Result<PeelDcOutcome> {
    let prepared = PreparedQuery::new(tfn, q, opts.stages)?;
    let partition = decompose(&prepared.rtfn, q);
    let eval = prepared.evaluator();
    let mut arrays = Vec::with_capacity(partition.pairs.len());
    let mut traces = Vec::with_capacity(partition.pairs.len());
    for pair in &partition.pairs {
        if pair.size() <= opts.exact_wcc_threshold {
            arrays.push(df_exact(&eval, pair, opts.budget, None)?.array);
            traces.push(None);
        } else {
            let trace = peel_sets(&eval, &pair.sources, &pair.sinks, opts.prune)?;
            arrays.push(trace_array(&trace));
            traces.push(Some(trace));
        }
    }
    let mut operands = vec![DensestFlowArray::zeros(&partition.isolated_sources, &partition.isolated_sinks)];
    operands.extend(arrays.iter().cloned());
    let merged = merge(&operands);
    let answer = answer(&merged, q.k)?;
    Ok(PeelDcOutcome { answer, partition, arrays, traces, merged, flow_runs: eval.runs(), sizes: prepared.sizes })
}
