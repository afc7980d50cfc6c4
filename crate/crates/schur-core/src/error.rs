use thiserror::Error;

/// Errors raised by the engine.
///
/// `Schema` covers malformed input records, `Precondition` covers inputs that
/// are well formed but violate a mathematical requirement of an operation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no table row matches rank triple {0:?}")]
    Unclassified((usize, usize, usize)),
}

pub type Result<T> = std::result::Result<T, SchurError>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(SchurError::Precondition(msg.into()))
}
