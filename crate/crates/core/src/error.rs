use thiserror::Error;

/// Errors produced by the algebra kernel and the checkers built on it.
///
/// The variants split into three families that the CLI maps to exit codes:
/// malformed input (parse errors, unknown fields, bad JSON), violated
/// preconditions of a theorem-backed operation, and internal invariant
/// violations. The last family can only be reached through a bug, since each
/// such check restates a proven theorem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("invalid field element {text:?}: {reason}")]
    InvalidElement { text: String, reason: String },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid multiset: {0}")]
    InvalidMultiset(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }

    /// True for errors caused by malformed or inconsistent input, as opposed
    /// to a well-formed instance that violates a mathematical precondition.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::Precondition(_) | Error::InvariantViolation(_) | Error::ZeroPolynomial
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
