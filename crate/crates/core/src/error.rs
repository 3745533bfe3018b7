use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("{what} needs {required} but the budget allows {limit}")]
    BudgetExceeded {
        what: &'static str,
        required: String,
        limit: String,
    },

    #[error("count overflowed 128-bit accumulator")]
    Overflow,

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("graph has a cycle")]
    Cyclic,

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
