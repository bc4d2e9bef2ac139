use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Invalid action or prime parameters.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// Arithmetic outside the domain of an operation, e.g. inverting zero mod p.
    #[error("domain error: {0}")]
    Domain(String),
    /// A closed-form construction was requested for a class it does not apply to.
    #[error("classification error: {0}")]
    Classification(String),
    /// Two objects live in different rings.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("ideal is not homogeneous: {0}")]
    Inhomogeneous(String),
    /// Matrix or module shape does not fit the operation.
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A computed object contradicts a proven structural statement.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    /// An internal invariant failed (e.g. a Schreyer syzygy did not reduce to zero).
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
