use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid PASEP state: {0}")]
    InvalidState(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} = {value} is out of range ({allowed})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        allowed: &'static str,
    },

    #[error("unsupported basis pair {from} -> {to}")]
    UnsupportedBasisPair { from: String, to: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("singular linear system")]
    SingularSystem,

    /// An internal cross-check failed. Always a bug.
    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
