use thiserror::Error;

/// Errors raised by field, group and subgroup computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller misuse: mismatched fields, unknown identifiers, malformed input.
    #[error("usage error: {0}")]
    Usage(String),
    /// A value outside the domain of an operation, e.g. inverting zero.
    #[error("domain error: {0}")]
    Domain(String),
    /// Unsupported parameters: q out of range, reducible modulus, bad signs.
    #[error("configuration error: {0}")]
    Config(String),
    /// An enumeration or search cap was exceeded.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
