use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(crate::Field, crate::Field),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("subspace is not closed under the bracket: {0}")]
    NotClosed(String),

    #[error("algebra is not semiprime: {0}")]
    NotSemiprime(String),

    #[error("algebra is not symmetric Leibniz; pass an override to continue outside the hypotheses")]
    NotSymmetric,

    #[error("enumeration oracle unavailable over {0}")]
    OracleUnavailable(crate::Field),

    #[error("enumeration too large: {count} subspaces exceed the cap of {cap}")]
    TooLarge { count: u128, cap: u128 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("invalid filter: {0}")]
    InvalidFilter(String),

    #[error("could not compute the minimal essential ideal: {0}")]
    SocleFailure(String),

    #[error("internal consistency check failed: {0}")]
    InternalFault(String),
}
