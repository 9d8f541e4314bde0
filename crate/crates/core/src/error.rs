use thiserror::Error;

/// Errors raised by the kernel.
///
/// Check operations report identity failures through [`crate::CheckReport`];
/// this type is for malformed inputs and unmet preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("{what} {value} out of range 1..={max}")]
    OutOfRange { what: &'static str, value: usize, max: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency error: {0}")]
    Inconsistent(String),

    #[error("{path}: {message}")]
    Format { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape(msg: impl Into<String>) -> Error {
    Error::Shape(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
