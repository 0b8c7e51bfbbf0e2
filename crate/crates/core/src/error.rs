use thiserror::Error;

/// Errors raised by configuration handling, constructions and counting.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("scalar field mismatch: {0}")]
    FieldMismatch(String),
    #[error("points {0} and {1} coincide")]
    CoincidentPoints(usize, usize),
    #[error("weight {0} is not positive")]
    NonPositiveWeight(usize),
    #[error("point {0} does not lie on the common sphere")]
    NotOnSphere(usize),
    #[error("no open hemisphere contains the configuration")]
    NotInHemisphere,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("ties present in ordering")]
    TiesPresent,
    #[error("retry budget of {0} attempts exhausted")]
    BudgetExhausted(usize),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
