//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by any belldrift module.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input, violated precondition, or malformed file.
    #[error("{0}")]
    Invalid(String),

    /// Assignment matrix is numerically singular.
    #[error("assignment matrix is not invertible (smallest singular value {smallest_sv:.3e})")]
    SingularMatrix { smallest_sv: f64 },

    /// Assignment matrix fails the conditioning gate.
    #[error("assignment matrix condition number {kappa:.3} exceeds limit {limit}")]
    IllConditioned { kappa: f64, limit: f64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// Process exit code convention: 1 for validation errors, 2 for
    /// numerical/conditioning errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invalid(_) | Error::Io(_) => 1,
            Error::SingularMatrix { .. } | Error::IllConditioned { .. } => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
