//! Exact STDF evaluation: reachability decomposition, per-component
//! densest-flow arrays by subset enumeration, and array merging.

mod array;
mod decompose;
mod exact;

pub use array::{answer, arr_mrg, merge, DensestFlowArray, DfEntry};
pub use decompose::{decompose, WccPair, WccPartition};
pub use exact::{df_exact, stdf_exact, DfOutcome, ExactOptions, ExactOutcome, DEFAULT_BUDGET};
