use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller violated an operation's precondition (index range, order mismatch, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// A series or scalar is outside the domain of the requested function.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("precision error: {what} requires at least {required} digits (got {available})")]
    Precision {
        what: String,
        required: u32,
        available: u32,
    },

    #[error("cache error: {0}")]
    Cache(String),

    #[error("cache checksum mismatch in {}", path.display())]
    CacheChecksum { path: PathBuf },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
