//! Temporal and static flow networks, flows, and edge-list ingestion.

mod flow;
mod ingest;
mod static_net;
mod temporal;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use flow::Flow;
pub use ingest::{ingest_edge_list, CsvFormat};
pub use static_net::{StaticEdge, StaticFlowNetwork};
pub(crate) use static_net::validate_terminals;
pub use temporal::{TemporalEdge, TemporalFlowNetwork, TfnBuilder};

/// Dense vertex index within one network.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
