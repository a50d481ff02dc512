use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {message}")]
    Validation { line: usize, message: String },

    #[error("ingestion failed: {0}")]
    Ingest(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("invalid query: {0}")]
    Query(String),

    #[error("query is infeasible: k = {k} exceeds the {available} available terminals")]
    Infeasible { k: usize, available: usize },

    /// Exact enumeration would exceed the configured subset budget; use the
    /// peeling algorithms instead.
    #[error(
        "exact enumeration infeasible: 2^{terminals} subset pairs exceed the budget of {budget}; \
         use a peeling algorithm instead"
    )]
    ExactInfeasible { terminals: usize, budget: u64 },

    #[error("oracle refused: {terminals} terminals exceed the cap of {cap}")]
    OracleCap { terminals: usize, cap: usize },

    #[error("maximum flow is unbounded: an infinite-capacity path joins source and sink")]
    UnboundedFlow,

    #[error("flow value overflows 64 bits")]
    FlowOverflow,

    #[error("assignment is not temporally feasible: {0}")]
    Infeasibility(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
