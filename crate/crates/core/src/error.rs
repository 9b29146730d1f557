use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QfracError {
    /// Caller violated an operation's contract (mismatched orders, bad index,
    /// unknown catalog key, cap exceeded).
    #[error("usage error: {0}")]
    Usage(String),
    /// Mathematically undefined request (non-unit inverse, negative exponent
    /// under a zero assignment, non-terminating product).
    #[error("domain error: {0}")]
    Domain(String),
    /// A continued fraction did not stabilise within its depth guard.
    #[error("convergence error: {0}")]
    Convergence(String),
}

pub type Result<T, E = QfracError> = std::result::Result<T, E>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(QfracError::Usage(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(QfracError::Domain(msg.into()))
}
