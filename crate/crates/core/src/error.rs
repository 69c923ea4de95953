use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("partition {0:?} does not have distinct parts")]
    NotDistinct(Vec<usize>),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("n must be positive")]
    ZeroSize,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("unsupported argument: {0}")]
    Unsupported(String),
    #[error("non-integral value where an integer is required: {0}")]
    NonIntegral(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("bound exceeded: {what} = {value} > {max}")]
    BoundExceeded { what: &'static str, value: usize, max: usize },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
