use thiserror::Error;

/// Malformed text input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {msg}")]
pub struct ParseError {
    pub msg: String,
}

impl ParseError {
    pub fn new(msg: impl Into<String>) -> Self {
        ParseError { msg: msg.into() }
    }
}

/// Structural errors raised by constructors and transforms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("degree {0} exceeds truncation {1}")]
    OutOfTruncation(usize, usize),
    #[error("invalid index sets: {0}")]
    InvalidIndices(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("map is not equivariant at degree {0}")]
    NotEquivariant(usize),
    #[error("operation is not symmetric")]
    NotSymmetric,
    #[error("bound exceeded: {0}")]
    Bound(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
