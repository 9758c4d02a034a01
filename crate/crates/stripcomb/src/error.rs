//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by exact-arithmetic and combinatorial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Series extraction at 0 requires a denominator with nonzero constant term.
    #[error("denominator vanishes at zero")]
    DenominatorVanishesAtZero,
    /// A rational function must be proper to be read as a linear recurrence.
    #[error("numerator degree exceeds denominator degree")]
    NotProper,
    /// Backward extension of a sequence is blocked.
    #[error("sequence is not extendable at the requested index: {0}")]
    NonExtendable(String),
    /// Division by zero in exact arithmetic.
    #[error("division by zero")]
    DivisionByZero,
    /// An index substitution would produce an index below 1.
    #[error("variable index out of range")]
    IndexOutOfRange,
    /// Inversion requested for a polynomial that is not a single monomial.
    #[error("factor is not an invertible monomial")]
    NonUnitFactor,
    /// A height bound was violated.
    #[error("bound violation: {0}")]
    BoundViolation(String),
    /// A bound parameter is invalid.
    #[error("bad bound: {0}")]
    BadBound(String),
    /// A bijection input does not satisfy its structural constraints.
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),
    /// The heap does not encode a parallelogram polyomino.
    #[error("heap does not encode a polyomino: {0}")]
    NotPolyomino(String),
    /// A matrix operation requires a square matrix.
    #[error("matrix is not square")]
    NonSquare,
    /// A path family is not vertex-disjoint.
    #[error("path family is not non-intersecting")]
    NotNonintersecting,
    /// Start/end anchors do not match the declared shape.
    #[error("anchor mismatch: {0}")]
    AnchorMismatch(String),
    /// Parameters fall outside an identity's domain of validity.
    #[error("domain violation: {0}")]
    DomainViolation(String),
}

/// Convenience result alias.
pub type Result<T> = std::result::Result<T, Error>;
