use thiserror::Error;

/// Errors raised by graph construction, codecs and the search routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input violates a precondition of the operation (vertex out of range,
    /// loop, non-perfect matching, illegal family parameter, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input is valid but larger than what the exact routine accepts.
    #[error("capability error: {what} of size {size} exceeds cap {cap}")]
    Capability {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// Malformed graph6 / digraph6 text.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Malformed or incomplete JSONL record.
    #[error("serialization error: {0}")]
    Serialization(String),

    /// A long search observed its cancellation token.
    #[error("search cancelled")]
    Cancelled,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(message: impl Into<String>) -> Result<T> {
    Err(Error::Domain(message.into()))
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::Capability { what, size, cap })
    } else {
        Ok(())
    }
}
