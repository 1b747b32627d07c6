use thiserror::Error;

/// Errors surfaced by fallible library operations.
///
/// Violations of documented preconditions (sizes that must match, statistics
/// that are undefined) panic instead; `Error` is reserved for conditions a
/// caller is expected to handle: bad input it supplied, or work that exceeds
/// a configured resource budget.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input: malformed permutation string, out-of-range parameter,
    /// or a family/statistic combination that does not exist.
    #[error("invalid input: {0}")]
    Domain(String),

    /// The request needs more enumeration than the configured budget allows.
    #[error("resource limit: {0}")]
    Resource(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
