use thiserror::Error;

/// Errors raised by the invariant calculators.
///
/// `Domain` covers inputs outside an operation's precondition. `Consistency`
/// is raised when two independent routes to the same quantity disagree; it
/// signals a bug (or a transcription error in a closed form), never bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HrhError {
    #[error("{0}")]
    Domain(String),
    #[error("consistency error: {0}")]
    Consistency(String),
}

impl HrhError {
    pub fn domain(msg: impl Into<String>) -> Self {
        HrhError::Domain(msg.into())
    }

    pub fn consistency(msg: impl Into<String>) -> Self {
        HrhError::Consistency(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, HrhError>;
