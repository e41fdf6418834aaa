use thiserror::Error;

/// Errors surfaced by this crate.
///
/// `InvalidInput` reports arguments that violate a documented precondition
/// (malformed data, dimension mismatches, out-of-contract node sets).
/// `InvariantViolation` reports the failure of an internal consistency check
/// that is unreachable on valid inputs; if it ever fires it indicates a bug,
/// and callers should treat it as such rather than retry.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}
