//! Crate-wide error type with a stable mapping to CLI exit codes.

use thiserror::Error;

use crate::azimuth::AzimuthError;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: bad JSON, schema violations, duplicate or invalid
    /// ids, dangling references, inconsistent oracle flags. Exit code 2.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// The oracle lacks entries the requested classification needs.
    /// Exit code 3.
    #[error("incomplete oracle; missing keys: {}", .0.join(", "))]
    IncompleteOracle(Vec<String>),

    /// The curve fails a structural precondition: disconnected, unstable,
    /// or of too small genus for the requested analysis. Exit code 4.
    #[error("unsuitable curve: {0}")]
    UnsuitableCurve(String),

    /// A structural invariant failed at runtime. Always a bug. Exit code 1.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("azimuth arithmetic: {0}")]
    Azimuth(#[from] AzimuthError),
}

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub fn unsuitable(msg: impl Into<String>) -> Self {
        Error::UnsuitableCurve(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code the CLI reports for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Malformed(_) => 2,
            Error::IncompleteOracle(_) => 3,
            Error::UnsuitableCurve(_) => 4,
            Error::Internal(_) => 1,
            // Azimuth errors surface from bad input data.
            Error::Azimuth(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
