use thiserror::Error;

/// Errors shared by every module in this crate.
///
/// The three variants map onto the CLI exit codes: invalid input (2),
/// resource cap exceeded (3), internal inconsistency (4).
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract input (bad graph6, invalid vertex index,
    /// parameter out of range, violated precondition).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configured resource cap would be exceeded (enumeration ceiling,
    /// coloring-space cap, LP size cap).
    #[error("resource cap exceeded: {0}")]
    ResourceLimit(String),

    /// A certificate failed re-validation or an internal invariant broke.
    /// These indicate a bug, never a user error.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn limit(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
