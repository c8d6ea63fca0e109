use thiserror::Error;

/// Errors raised by the library. The CLI maps [`Error::Invariant`] to exit
/// code 3 and everything else to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate substitution: denominator factor {0} becomes 1 - 1")]
    DegenerateSubstitution(String),
    #[error("not expandable: denominator factor {0} has zero weight")]
    NotExpandable(String),
    #[error("parity extraction impossible: factor {0} has odd exponent in {1}")]
    Parity(String, String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::error::Error::Domain(format!($($arg)*)) };
}
macro_rules! usage {
    ($($arg:tt)*) => { $crate::error::Error::Usage(format!($($arg)*)) };
}
macro_rules! invariant {
    ($($arg:tt)*) => { $crate::error::Error::Invariant(format!($($arg)*)) };
}
pub(crate) use {domain, invariant, usage};
