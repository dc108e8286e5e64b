use thiserror::Error;

/// Errors raised by the calculators.
///
/// `Inconsistent` is never expected in normal use: it means two hard-coded
/// facts disagree, which points at a transcription bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported range: {0}")]
    UnsupportedRange(String),
    #[error("internal consistency violation: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
