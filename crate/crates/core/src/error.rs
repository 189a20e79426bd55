use thiserror::Error;

/// Errors raised by ring, group and oracle operations.
///
/// Mathematical outcomes (a ring that is not a principal ideal ring, a group
/// that fails a structure test) are never errors; they come back as values.
/// Errors are reserved for malformed input, violated preconditions, refusals
/// and internal inconsistencies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid ring spec at `{node}`: {reason}")]
    RingSpec { node: String, reason: String },

    #[error("invalid group spec at `{node}`: {reason}")]
    GroupSpec { node: String, reason: String },

    #[error("group table violates {law} at ({a}, {b}, {c})")]
    GroupAxiom {
        law: &'static str,
        a: usize,
        b: usize,
        c: usize,
    },

    #[error("refused: carrier of {size} elements exceeds the cap of {cap}")]
    CapExceeded { size: u64, cap: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("element {element} is not in the carrier of {ring} (size {size})")]
    ElementOutOfRange {
        element: u64,
        ring: String,
        size: u64,
    },

    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }

    /// True for the refusal raised when a scan would exceed a size cap.
    pub fn is_cap_refusal(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
