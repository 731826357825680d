use thiserror::Error;

/// Every failure the engine can report. The CLI maps these onto exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the input was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured resource cap (crossing count for state sums) was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// A search ran out of parameter room before meeting its bound.
    #[error("budget exceeded: {message}; best gap {best_gap:.15} at k = {best_k}")]
    BudgetExceeded {
        message: String,
        best_k: usize,
        best_gap: f64,
    },

    /// Two independent computations disagreed. Always a bug.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
