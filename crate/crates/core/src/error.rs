use thiserror::Error;

/// Errors surfaced by the library. Each variant maps onto one CLI exit code
/// class: argument and parse problems, resource limits, or oracle mismatch.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("resource limit exceeded: {what} = {value} (limit {limit})")]
    Resource {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("spectral comparison could not be decided at the requested precision")]
    Undecided,

    #[error("oracle disagreement: {0}")]
    OracleMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
