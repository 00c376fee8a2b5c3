use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a precondition (bad axis, invalid permutation, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Operands have incompatible shapes or subsystem structure.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A quantity left its mathematically guaranteed range by more than the
    /// allowed tolerance (non-Hermitian input, negative eigenvalue, ...).
    #[error("numerical violation: {0}")]
    NumericalViolation(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Errors produced while reading state files or structured-text documents.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("expected 8 amplitude lines, found {0}")]
    AmplitudeLineCount(usize),

    #[error("line {line}: malformed amplitude entry {text:?}")]
    MalformedAmplitude { line: usize, text: String },

    #[error("state norm {0} is outside tolerance of 1")]
    BadNorm(f64),

    #[error("invalid basis label {0:?}")]
    BadBasisLabel(String),

    #[error("document line {line}: {message}")]
    Document { line: usize, message: String },

    #[error("document is missing key {0:?}")]
    MissingKey(String),

    #[error("document key {key:?}: expected {expected}")]
    BadShape { key: String, expected: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
