use thiserror::Error;

/// Everything that can go wrong in the kernel.
///
/// The variants are grouped so the command line front end can map them onto
/// its exit statuses: parse problems, violated invariants, exhausted caps and
/// refusals for lack of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded { what: String, needed: usize, cap: usize },

    #[error("uncertified: {0}")]
    Uncertified(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub(crate) fn uncertified(msg: impl Into<String>) -> Self {
        Error::Uncertified(msg.into())
    }

    pub(crate) fn cap(what: impl Into<String>, needed: usize, cap: usize) -> Self {
        Error::CapExceeded { what: what.into(), needed, cap }
    }
}
