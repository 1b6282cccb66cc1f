use thiserror::Error;

/// Errors produced by the library.
///
/// The CLI groups these into exit codes through [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: Vec<usize>, right: Vec<usize> },

    #[error("content mismatch: {left:?} vs {right:?}")]
    ContentMismatch { left: Vec<usize>, right: Vec<usize> },

    #[error("size mismatch: shape has {shape} cells but content sums to {content}")]
    SizeMismatch { shape: usize, content: usize },

    #[error("filling has a repeated value in some column")]
    NotCardinal,

    #[error("{what} index {index} out of range (valid: {range})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        range: String,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{what} exceeded the cap of {limit}")]
    CapExceeded { what: &'static str, limit: usize },

    #[error("relation oracle is inconsistent: {0}")]
    OracleInconsistent(String),

    #[error("methods disagree: {0}")]
    Disagreement(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            Error::OracleInconsistent(_) | Error::Disagreement(_) => 4,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
