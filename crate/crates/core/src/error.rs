use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An operation was applied outside its mathematical domain (e.g. inverting zero).
    #[error("domain error: {0}")]
    Domain(String),

    /// A result or input left the chart domain (real part ≤ 0 or ‖x‖ ≥ 1).
    #[error("range error: {0}")]
    Range(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// The first offending cell of a table that is not a valid loop.
    #[error("validation error at row {row}, column {column}: {message}")]
    Validation {
        row: usize,
        column: usize,
        message: String,
    },

    #[error("auxiliary matrix is ill-conditioned (cond = {cond:e})")]
    Conditioning { cond: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("index {index} out of range for size {size}")]
    OutOfRange { index: usize, size: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
