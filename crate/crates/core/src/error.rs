use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unknown variable '{0}'")]
    UnknownVariable(String),

    #[error("variable lists differ: [{0}] vs [{1}]")]
    VariableMismatch(String, String),

    #[error("duplicate variable '{0}'")]
    DuplicateVariable(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("empty input list")]
    EmptyInput,

    #[error("input is not symmetric in the requested variables")]
    NotSymmetric,

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("polynomial does not depend on the main variable '{0}'")]
    ConstantInMainVariable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("decomposition exceeded the cell limit of {0}")]
    TooManyCells(usize),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
