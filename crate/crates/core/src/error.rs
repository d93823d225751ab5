use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },
    #[error("scalar error: {0}")]
    Scalar(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a group algebra: {0}")]
    NonGroupHopf(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("closure violation: {0}")]
    ClosureViolation(String),
    #[error("idempotent is not central: {0}")]
    NotCentral(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("coinvariants differ from the image of A: {0}")]
    CoinvariantsMismatch(String),
    #[error("Hopf algebra is not cocommutative")]
    NonCocommutative,
    #[error("element is not in the centralizer of A")]
    NotInCentralizer,
    #[error("t is not a nonzero left integral")]
    NotIntegral,
    #[error("normalization failed: no central c with t.c = 1_A")]
    NormalizationFailed,
    #[error("composite gauge is not weakly invertible")]
    CompositeNotGauge,
    #[error("missing object {0:?} in spec file")]
    MissingObject(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("shape error at {path}: {message}")]
    Shape { path: String, message: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether the error is caused by the input file rather than by the
    /// mathematics of a well-formed input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidField(_)
                | Error::FieldMismatch { .. }
                | Error::Scalar(_)
                | Error::DimensionMismatch(_)
                | Error::MissingObject(_)
                | Error::Parse { .. }
                | Error::Shape { .. }
        )
    }
}
