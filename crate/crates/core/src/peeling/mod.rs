//! Approximate STDF evaluation by repeatedly peeling the terminal whose
//! removal costs the least flow.

mod dc;
mod trace;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use dc::{peel_dc, trace_array, PeelDcOptions, PeelDcOutcome, DEFAULT_EXACT_WCC_THRESHOLD};
pub use trace::{PeelStep, PeelingTrace};

use crate::error::{Error, Result};
use crate::network::{TemporalFlowNetwork, VertexId};
use crate::pipeline::{FlowEvaluator, PreparedQuery, StageSizes, Stages};
use crate::preprocess::Rtfn;
use crate::query::{Query, StdfAnswer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Source,
    Sink,
}

/// Peeling flow `PF(u, S, T)`: how much `MFlow(S, T)` drops when `u` leaves
/// its side.
pub fn peeling_flow(eval: &FlowEvaluator<'_>, sources: &[VertexId], sinks: &[VertexId], u: VertexId) -> Result<u64> {
    let full = eval.flow(sources, sinks)?;
    pf_given(eval, sources, sinks, u, full)
}

fn pf_given(eval: &FlowEvaluator<'_>, sources: &[VertexId], sinks: &[VertexId], u: VertexId, full: u64) -> Result<u64> {
    let without = |set: &[VertexId]| -> Vec<VertexId> { set.iter().copied().filter(|&v| v != u).collect() };
    let rest = if sources.contains(&u) {
        eval.flow(&without(sources), sinks)?
    } else if sinks.contains(&u) {
        eval.flow(sources, &without(sinks))?
    } else {
        return Err(Error::Argument(format!("vertex {u} is not a terminal")));
    };
    debug_assert!(rest <= full, "flow is monotone in the terminal sets");
    Ok(full.saturating_sub(rest))
}

/// Flow peeling on the whole query.
pub fn peel(rtfn: &Rtfn, q: &Query) -> Result<(StdfAnswer, PeelingTrace)> {
    let trace = peel_sets(&FlowEvaluator::new(rtfn), &q.sources, &q.sinks, false)?;
    Ok((trace.answer(q.k)?, trace))
}

/// Flow peeling with peeling-flow lower bounds to skip candidates.
pub fn peel_pruned(rtfn: &Rtfn, q: &Query) -> Result<(StdfAnswer, PeelingTrace)> {
    let trace = peel_sets(&FlowEvaluator::new(rtfn), &q.sources, &q.sinks, true)?;
    Ok((trace.answer(q.k)?, trace))
}

/// Result of [`stdf_peel`].
#[derive(Clone, Debug)]
pub struct PeelOutcome {
    pub answer: StdfAnswer,
    pub trace: PeelingTrace,
    pub flow_runs: u64,
    pub sizes: StageSizes,
}

/// Prepares the network for `q` and runs (pruned) peeling on it.
pub fn stdf_peel(tfn: &TemporalFlowNetwork, q: &Query, prune: bool, stages: Stages) -> Result<PeelOutcome> {
    let prepared = PreparedQuery::new(tfn, q, stages)?;
    let eval = prepared.evaluator();
    let trace = peel_sets(&eval, &q.sources, &q.sinks, prune)?;
    Ok(PeelOutcome { answer: trace.answer(q.k)?, trace, flow_runs: eval.runs(), sizes: prepared.sizes })
}

/// Peels `sources ∪ sinks` down to nothing, removing at each step a terminal
/// of minimum peeling flow (smallest id on ties).
///
/// With `prune`, candidates are scanned in ascending order of a lower bound
/// on their peeling flow and the scan stops once the best value found does
/// not exceed the next bound. Evaluating a candidate tightens its bound to
/// the exact value; peeling a vertex lowers the bounds of the opposite side
/// by its peeling flow (clamped at zero) and leaves its own side's bounds
/// unchanged.
pub fn peel_sets(eval: &FlowEvaluator<'_>, sources: &[VertexId], sinks: &[VertexId], prune: bool) -> Result<PeelingTrace> {
    let mut s: Vec<VertexId> = sources.to_vec();
    let mut t: Vec<VertexId> = sinks.to_vec();
    s.sort();
    t.sort();
    let mut lpf: BTreeMap<VertexId, u64> = s.iter().chain(&t).map(|&v| (v, 0)).collect();
    let mut flow = eval.flow(&s, &t)?;
    let mut steps = Vec::with_capacity(s.len() + t.len());
    while !s.is_empty() || !t.is_empty() {
        let mut order: Vec<VertexId> = s.iter().chain(&t).copied().collect();
        let snapshot: Vec<(VertexId, u64)> = if prune {
            order.sort_by_key(|v| (lpf[v], *v));
            order.iter().map(|v| (*v, lpf[v])).collect()
        } else {
            order.sort();
            Vec::new()
        };
        let mut best: Option<(VertexId, u64)> = None;
        let mut evaluations = 0;
        for &u in &order {
            if prune {
                if let Some((_, d)) = best {
                    if d <= lpf[&u] {
                        break;
                    }
                }
            }
            let pf = pf_given(eval, &s, &t, u, flow)?;
            evaluations += 1;
            lpf.insert(u, pf);
            if best.is_none_or(|(bu, d)| pf < d || (pf == d && u < bu)) {
                best = Some((u, pf));
            }
        }
        let (u, delta) = best.expect("at least one candidate");
        let side = if s.contains(&u) { Side::Source } else { Side::Sink };
        steps.push(PeelStep {
            size: s.len() + t.len(),
            sources: s.clone(),
            sinks: t.clone(),
            flow,
            peeled: u,
            side,
            delta,
            evaluations,
            lower_bounds: snapshot,
        });
        lpf.remove(&u);
        let opposite = match side {
            Side::Source => {
                s.retain(|&v| v != u);
                &t
            }
            Side::Sink => {
                t.retain(|&v| v != u);
                &s
            }
        };
        for v in opposite {
            let b = lpf.get_mut(v).expect("tracked");
            *b = b.saturating_sub(delta);
        }
        flow -= delta;
    }
    Ok(PeelingTrace { steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::transform;

    #[test]
    fn last_member_of_a_side_costs_everything() {
        let tfn = TemporalFlowNetwork::from_edges(2, &[(0, 1, 4, 1)]).unwrap();
        let r = transform(&tfn);
        let eval = FlowEvaluator::new(&r);
        assert_eq!(peeling_flow(&eval, &[VertexId(0)], &[VertexId(1)], VertexId(1)).unwrap(), 4);
        assert!(peeling_flow(&eval, &[VertexId(0)], &[], VertexId(1)).is_err());
    }

    #[test]
    fn trace_telescopes() {
        let tfn = TemporalFlowNetwork::from_edges(4, &[(0, 2, 4, 1), (1, 2, 2, 2), (1, 3, 3, 1)]).unwrap();
        let r = transform(&tfn);
        let q = Query::new(vec![VertexId(0), VertexId(1)], vec![VertexId(2), VertexId(3)], 1).unwrap();
        let (_, trace) = peel(&r, &q).unwrap();
        assert_eq!(trace.steps.len(), 4);
        assert_eq!(trace.delta_sum(), 9);
        assert_eq!(trace.total_flow(), 9);
    }

    #[test]
    fn zero_pf_stops_pruned_scan_after_one_evaluation() {
        // Source 0 has no edges, so it is scanned first and has PF 0.
        let tfn = TemporalFlowNetwork::from_edges(4, &[(1, 2, 4, 1), (1, 3, 2, 2)]).unwrap();
        let r = transform(&tfn);
        let q = Query::new(vec![VertexId(0), VertexId(1)], vec![VertexId(2), VertexId(3)], 1).unwrap();
        let (_, trace) = peel_pruned(&r, &q).unwrap();
        assert_eq!(trace.steps[0].peeled, VertexId(0));
        assert_eq!(trace.steps[0].evaluations, 1);
    }
}
