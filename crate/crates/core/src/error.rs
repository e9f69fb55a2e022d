use thiserror::Error;

/// Errors reported by the library.
///
/// Every operation that can fail on malformed input returns one of these;
/// the slope computations themselves are total.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input could not be read. `position` is the zero-based token index.
    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },
    /// Input is well formed but outside the domain of the operation.
    #[error("{0}")]
    Domain(String),
    /// The operation was called in a way it does not support (e.g. no input).
    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
