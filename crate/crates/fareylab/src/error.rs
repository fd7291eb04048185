//! Crate-wide error type.

/// Errors reported by the library operations.
///
/// `Domain` covers inputs that violate an operation's preconditions
/// (unreduced fractions, out-of-range orders, divisibility hypotheses that
/// do not hold). `Resource` covers inputs that are valid but exceed a cost
/// guard; callers can lift the guard explicitly where an operation supports
/// it. `Overflow` means an exact integer accumulation would have wrapped —
/// results are never silently truncated.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Resource(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
