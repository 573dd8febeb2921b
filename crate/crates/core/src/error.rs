use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    /// Malformed input; `field` names the offending field.
    #[error("parse error in `{field}`: {message}")]
    Parse { field: String, message: String },

    #[error("algebra failed validation: {0}")]
    Invalid(String),

    #[error("span is not closed under multiplication: {0}")]
    NotClosed(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("linear map is not an algebra homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("separating element search exhausted after {attempts} attempts: {detail}")]
    RetryLimit { attempts: usize, detail: String },

    /// A post-condition that must hold by construction failed. Indicates a bug.
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Re-labels a parse error with the field it came from.
    pub fn in_field(self, field: impl Into<String>) -> Self {
        match self {
            Error::Parse { message, .. } => Error::Parse {
                field: field.into(),
                message,
            },
            other => other,
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Error::Internal(message.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
