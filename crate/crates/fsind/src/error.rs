use thiserror::Error;

/// Errors raised by constructors, parsers and checks in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("subset is not a subgroup")]
    NotASubgroup,

    #[error("invalid matched pair: {0}")]
    InvalidMatchedPair(String),

    #[error("cocycle condition fails at ({0}, {1}, {2}, {3})")]
    CocycleViolation(usize, usize, usize, usize),

    #[error("cocycle is not normalized at ({0}, {1}, {2})")]
    NotNormalized(usize, usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("closed form and brute force disagree: {0}")]
    Mismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
