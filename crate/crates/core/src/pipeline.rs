//! Shared query preparation: reduce, expand, compress, then evaluate
//! terminal-set flows on the result.

use std::cell::Cell;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::maxflow::max_flow;
use crate::network::{TemporalFlowNetwork, VertexId};
use crate::preprocess::{compress, reduce, transform, Rtfn};
use crate::query::Query;

/// Which preprocessing stages run before evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stages {
    pub reduce: bool,
    pub compress: bool,
}

impl Default for Stages {
    fn default() -> Self {
        Stages { reduce: true, compress: true }
    }
}

/// Network sizes after each preprocessing stage.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageSizes {
    pub input_vertices: usize,
    pub input_edges: usize,
    pub reduced_vertices: usize,
    pub reduced_edges: usize,
    pub expanded_vertices: usize,
    pub expanded_edges: usize,
    pub compressed_vertices: usize,
    pub compressed_edges: usize,
}

/// A query with the time-expanded network it will be evaluated on.
#[derive(Clone, Debug)]
pub struct PreparedQuery {
    pub query: Query,
    pub rtfn: Rtfn,
    pub sizes: StageSizes,
}

impl PreparedQuery {
    /// Runs the enabled stages. Compression never merges the earliest copy of
    /// a source or the latest copy of a sink.
    pub fn new(tfn: &TemporalFlowNetwork, query: &Query, stages: Stages) -> Result<Self> {
        query.check_against(tfn)?;
        let mut sizes = StageSizes { input_vertices: tfn.num_touched_vertices(), input_edges: tfn.num_edges(), ..Default::default() };
        let reduced;
        let base = if stages.reduce {
            reduced = reduce(tfn, &query.sources, &query.sinks)?;
            &reduced
        } else {
            tfn
        };
        sizes.reduced_vertices = base.num_touched_vertices();
        sizes.reduced_edges = base.num_edges();
        let raw = transform(base);
        sizes.expanded_vertices = raw.num_vertices();
        sizes.expanded_edges = raw.num_edges();
        let rtfn = if stages.compress {
            let (s, t) = raw.terminal_copies(&query.sources, &query.sinks);
            compress(&raw, &[s, t].concat())
        } else {
            raw
        };
        sizes.compressed_vertices = rtfn.num_vertices();
        sizes.compressed_edges = rtfn.num_edges();
        Ok(PreparedQuery { query: query.clone(), rtfn, sizes })
    }

    pub fn evaluator(&self) -> FlowEvaluator<'_> {
        FlowEvaluator::new(&self.rtfn)
    }
}

/// Computes `MFlow(S', T')` for terminal subsets (original vertex ids) on a
/// time-expanded network, counting the max-flow runs it performs.
pub struct FlowEvaluator<'a> {
    rtfn: &'a Rtfn,
    runs: Cell<u64>,
}

impl<'a> FlowEvaluator<'a> {
    pub fn new(rtfn: &'a Rtfn) -> Self {
        FlowEvaluator { rtfn, runs: Cell::new(0) }
    }

    pub fn rtfn(&self) -> &'a Rtfn {
        self.rtfn
    }

    /// Zero without running a solver when either side is empty or has no
    /// copies in the network.
    pub fn flow(&self, sources: &[VertexId], sinks: &[VertexId]) -> Result<u64> {
        if sources.is_empty() || sinks.is_empty() {
            return Ok(0);
        }
        match self.rtfn.terminal_network(sources, sinks)? {
            None => Ok(0),
            Some((net, s, t)) => {
                self.runs.set(self.runs.get() + 1);
                Ok(max_flow(&net, s, t)?.value)
            }
        }
    }

    /// Number of max-flow runs so far.
    pub fn runs(&self) -> u64 {
        self.runs.get()
    }
}
