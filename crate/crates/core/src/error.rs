use thiserror::Error;

use crate::Scheme;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid modulus: modulus must be at least 1")]
    InvalidModulus,

    #[error("unknown scheme `{0}` (expected one of: cantor, f, g)")]
    UnknownScheme(String),

    #[error("scheme {0} is not symmetric and cannot key unordered pairs")]
    NotSymmetric(Scheme),

    /// The enumeration oracle walks diagonals one by one and only accepts ranks that fit in 64 bits.
    #[error("rank {0} is beyond the range of the enumeration oracle")]
    OracleRange(String),

    #[error("line {line}: {message}")]
    Line { line: usize, message: String },

    /// A closed-form inverse produced a pair that does not map back to the input code.
    #[error("inverse check failed: {0}")]
    InverseMismatch(String),

    #[error("invalid table: {0}")]
    Table(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by argument values rather than by usage or I/O.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::InvalidModulus
                | Error::NotSymmetric(_)
                | Error::OracleRange(_)
                | Error::Line { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
