use thiserror::Error;

use crate::report::CheckReport;
use crate::scalar::Field;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: cannot combine {left} with {right}")]
    DimensionMismatch { left: String, right: String },

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },

    #[error("unsupported field: {0}")]
    Field(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition `{check}` failed")]
    Precondition {
        check: String,
        report: Box<CheckReport>,
    },

    #[error("braiding is singular; the Yetter-Drinfeld input is corrupted")]
    SingularBraiding,

    #[error("linear system has no solution: {0}")]
    NoSolution(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation of {what} failed")]
    Validation {
        what: String,
        report: Box<CheckReport>,
    },

    #[error("unknown {kind} {name:?}; available: {available}")]
    Unknown {
        kind: &'static str,
        name: String,
        available: String,
    },

    #[error("missing input {missing:?} for suite {suite:?} (required: {required})")]
    MissingInput {
        suite: String,
        missing: String,
        required: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn dims(left: impl Into<String>, right: impl Into<String>) -> Self {
        Error::DimensionMismatch {
            left: left.into(),
            right: right.into(),
        }
    }
}
