use thiserror::Error;

/// Errors produced by the library and the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("instance has {n} vectors, exceeding the exhaustive-search limit of {max}")]
    SizeLimit { n: usize, max: usize },

    /// A mathematically guaranteed property failed to hold. Always a bug.
    #[error("internal assertion failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
