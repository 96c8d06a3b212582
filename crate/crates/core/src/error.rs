use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid dimensions {height}x{width} (each side must be in 1..=30)")]
    InvalidDimension { height: usize, width: usize },

    #[error("invalid color code {0} (must be in 0..=9)")]
    InvalidColor(i64),

    #[error("unknown color name `{0}`")]
    UnknownColor(String),

    #[error("invalid range: lo {lo} > hi {hi}")]
    InvalidRange { lo: i64, hi: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("task `{0}` is not registered")]
    NotFound(String),

    #[error("task `{0}` is already registered")]
    Conflict(String),

    #[error("task {task}: generation failed after {attempts} attempts")]
    GenerationFailure { task: String, attempts: usize },

    #[error("input outside verifier domain: {0}")]
    Domain(String),

    #[error("task {task}: example {index} does not match its verifier")]
    VerifierMismatch { task: String, index: usize },

    #[error("{path}: {message}")]
    Format { path: String, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// Prefix the error with the task it came from, unless it already names one.
    pub(crate) fn in_task(self, task: &str) -> Self {
        match self {
            e @ (Error::GenerationFailure { .. } | Error::VerifierMismatch { .. }) => e,
            Error::InvalidArgument(m) => Error::InvalidArgument(format!("task {task}: {m}")),
            Error::Domain(m) => Error::Domain(format!("task {task}: {m}")),
            other => other,
        }
    }
}
