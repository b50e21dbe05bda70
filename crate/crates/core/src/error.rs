use thiserror::Error;

/// Errors raised by algebra, code and certificate operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands from different algebras, zero divisors, ambient mismatches.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate construction: {0}")]
    Degenerate(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// A supplied Cayley table breaks a required law; the message names the witness.
    #[error("axiom violation: {0}")]
    AxiomViolation(String),

    /// A decoding oracle produced output incompatible with a perfect code.
    #[error("inconsistent code oracle: {0}")]
    Inconsistency(String),

    #[error("invalid isometry: {0}")]
    InvalidIsometry(String),

    #[error("invalid basis change: {0}")]
    InvalidBasisChange(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
