//! Crate-wide error type. Variants map onto the CLI's exit-code policy:
//! config and contract problems are caller mistakes, the rest are runtime
//! failures.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Tensor dimensions do not line up for the requested operation.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// A documented precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),
    /// A file did not conform to its on-disk format. `offset` is the byte
    /// position of the first invalid or missing byte.
    #[error("format error at byte {offset}: {message}")]
    Format { offset: u64, message: String },
    /// Training produced a non-finite loss or otherwise diverged.
    #[error("training failed: {0}")]
    Training(String),
    /// Invalid run configuration (bad key, unparsable value, bad flag combo).
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn format(offset: u64, msg: impl Into<String>) -> Self {
        Error::Format { offset, message: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
