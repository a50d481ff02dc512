use serde::{Deserialize, Serialize};

use super::Side;
use crate::density::Density;
use crate::error::{Error, Result};
use crate::network::VertexId;
use crate::query::StdfAnswer;

/// One peeling step: the sets before the peel, their flow, and the peeled
/// terminal with its peeling flow `delta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelStep {
    /// `|S_i| + |T_i|` before the peel.
    pub size: usize,
    pub sources: Vec<VertexId>,
    pub sinks: Vec<VertexId>,
    /// `MFlow(S_i, T_i)`.
    pub flow: u64,
    pub peeled: VertexId,
    pub side: Side,
    pub delta: u64,
    /// Peeling-flow evaluations spent choosing `peeled`.
    pub evaluations: usize,
    /// Lower bounds held before the scan, in scan order (pruned runs only).
    pub lower_bounds: Vec<(VertexId, u64)>,
}

/// Steps from the full terminal sets down to the empty ones.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelingTrace {
    pub steps: Vec<PeelStep>,
}

impl PeelingTrace {
    /// Flow of the full sets.
    pub fn total_flow(&self) -> u64 {
        self.steps.first().map_or(0, |s| s.flow)
    }

    pub fn delta_sum(&self) -> u64 {
        self.steps.iter().map(|s| s.delta).sum()
    }

    pub fn pf_evaluations(&self) -> usize {
        self.steps.iter().map(|s| s.evaluations).sum()
    }

    pub fn deltas(&self) -> Vec<u64> {
        self.steps.iter().map(|s| s.delta).collect()
    }

    pub fn peel_order(&self) -> Vec<VertexId> {
        self.steps.iter().map(|s| s.peeled).collect()
    }

    /// The step whose sets have total size `size`.
    pub fn step_of_size(&self, size: usize) -> Option<&PeelStep> {
        self.steps.iter().find(|s| s.size == size)
    }

    /// Densest surviving sets of size `>= k`; ties go to the smaller size.
    pub fn answer(&self, k: usize) -> Result<StdfAnswer> {
        let n = self.steps.first().map_or(0, |s| s.size);
        if k == 0 {
            return Err(Error::Query("k must be at least 1".into()));
        }
        if k > n {
            return Err(Error::Infeasible { k, available: n });
        }
        let best = self
            .steps
            .iter()
            .filter(|s| s.size >= k)
            .rev()
            .fold(None::<&PeelStep>, |best, s| match best {
                Some(b) if Density::new(s.flow, s.size as u64) <= Density::new(b.flow, b.size as u64) => Some(b),
                _ => Some(s),
            })
            .expect("k <= n leaves the first step");
        Ok(StdfAnswer::new(best.sources.clone(), best.sinks.clone(), best.flow))
    }
}
