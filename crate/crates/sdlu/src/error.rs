use thiserror::Error;

/// Errors produced by validation, precondition checks, and internal
/// consistency assertions.
#[derive(Debug, Error)]
pub enum Error {
    /// A field failed domain validation at construction or a precondition
    /// failed at an operation boundary.
    #[error("invalid {field}: {reason}")]
    Invalid { field: &'static str, reason: String },

    /// Paired inputs whose lengths must agree did not.
    #[error("dimension mismatch: {left} has length {left_len} but {right} has length {right_len}")]
    DimensionMismatch {
        left: &'static str,
        left_len: usize,
        right: &'static str,
        right_len: usize,
    },

    /// Inputs are individually valid but the operation has no meaningful
    /// answer for them (boundary cases called out per operation).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// An invariant the library itself guarantees failed to hold.
    #[error("internal assertion failed: {0}")]
    Assertion(String),
}

impl Error {
    pub fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            field,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
