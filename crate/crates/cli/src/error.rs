use std::fmt;

use densest_flow::Error;
use serde::Serialize;

/// Exit status: 0 success, 1 internal failure, 2 infeasible or invalid
/// query, 3 budget or timeout, 4 I/O or unreadable input.
#[derive(Debug, Serialize)]
pub struct CliError {
    pub code: &'static str,
    #[serde(skip)]
    pub exit: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: &'static str, exit: i32, message: impl Into<String>) -> Self {
        CliError { code, exit, message: message.into() }
    }

    pub fn arg(message: impl Into<String>) -> Self {
        Self::new("EARG", 2, message)
    }

    pub fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        Self::new("EIO", 4, format!("{}: {e}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        let (code, exit) = match e {
            Error::Io(_) => ("EIO", 4),
            Error::Parse { .. } | Error::Validation { .. } | Error::Ingest(_) | Error::Json(_) => ("EPARSE", 4),
            Error::Argument(_) => ("EARG", 2),
            Error::Query(_) | Error::Infeasible { .. } => ("EINFEASIBLE", 2),
            Error::ExactInfeasible { .. } | Error::OracleCap { .. } => ("EBUDGET", 3),
            Error::UnboundedFlow | Error::FlowOverflow | Error::Infeasibility(_) => ("EFLOW", 1),
        };
        CliError::new(code, exit, message)
    }
}

pub type CliResult<T> = Result<T, CliError>;
