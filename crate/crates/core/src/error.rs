use thiserror::Error;

/// Errors raised by the library. Every variant maps onto one of the CLI exit
/// classes (usage, resource limit, identity failure).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{what}: n = {n} exceeds the limit {limit}")]
    LimitExceeded { what: String, n: usize, limit: usize },
    #[error("series error: {0}")]
    Series(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("identity {identity} failed at n = {n}")]
    IdentityFailed { identity: String, n: usize },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn limit(what: impl Into<String>, n: usize, limit: usize) -> Self {
        Error::LimitExceeded {
            what: what.into(),
            n,
            limit,
        }
    }

    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
