//! Static maximum flow, reachability and temporal maximum flow.

mod dinic;
mod naive;
mod reach;
mod temporal;

pub use dinic::{max_flow, max_flow_multi, ResidualNetwork};
pub use naive::naive_temporal_max_flow;
pub use reach::{reach, Reachability};
pub use temporal::{max_temporal_flow, TemporalMaxFlow};
