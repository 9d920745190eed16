use thiserror::Error;

/// Errors raised by the library.
///
/// `Domain` is a violated precondition on well-formed input (wrong size,
/// element outside the Lie algebra, pattern invalid for its block vector).
/// `Malformed` means the input could not be interpreted at all.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Domain(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("search space of {size} candidates exceeds the limit of {limit}")]
    SearchSpace { size: u128, limit: u128 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}
