//! Query-relative reduction, time expansion into a static DAG, and
//! flow-preserving compression.

mod classify;
mod compress;
mod reduce;
mod rtfn;

pub use classify::{classify, is_flow_crossing, is_flow_in, is_flow_out, VertexClass};
pub use compress::{compress, compress_case, vcp, CompressionCase};
pub use reduce::reduce;
pub use rtfn::{transform, Rtfn, RtfnVertex};
