//! Maximum temporal flows and S-T densest flow (STDF) queries over temporal
//! transaction flow networks.
//!
//! The crate is organised as a pipeline:
//!
//! * [`network`] ingests edge lists into a [`TemporalFlowNetwork`] and models
//!   static flow networks and flows.
//! * [`preprocess`] reduces a temporal network relative to a query, expands it
//!   into a regret-enabled static network ([`Rtfn`]) and compresses it.
//! * [`maxflow`] computes static and temporal maximum flows.
//! * [`densest`] answers STDF queries exactly by decomposition, subset
//!   enumeration and densest-flow-array merging.
//! * [`peeling`] answers them approximately with flow peeling.
//! * [`oracle`] holds independent reference implementations used by tests.

pub mod bench;
pub mod capacity;
pub mod density;
pub mod densest;
pub mod error;
pub mod fixtures;
pub mod maxflow;
pub mod network;
pub mod oracle;
pub mod peeling;
pub mod pipeline;
pub mod preprocess;
pub mod query;
pub mod synth;
mod union_find;

pub use capacity::Capacity;
pub use density::Density;
pub use error::{Error, Result};
pub use network::{Flow, StaticFlowNetwork, TemporalEdge, TemporalFlowNetwork, VertexId};
pub use preprocess::Rtfn;
pub use query::{Query, StdfAnswer};
