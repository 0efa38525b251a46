//! Error type shared by all modules.
//!
//! Most operations in this crate are partial: the three number algebras have
//! zero divisors, the group factorizations only cover a chart, and the exact
//! rational backend cannot evaluate transcendental functions. Every such
//! failure is reported through [`Error`] rather than panicking or silently
//! coercing.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum Error {
    /// Arithmetic attempted between numbers living in different algebras.
    #[error("sigma mismatch: operands belong to different algebras")]
    SigmaMismatch,

    /// Arithmetic attempted between points of different parabolic flavors.
    #[error("flavor mismatch: operands belong to different parabolic models")]
    FlavorMismatch,

    /// Inversion (or division) of a zero divisor.
    #[error("zero divisor: element has vanishing square modulus")]
    ZeroDivisor,

    /// The argument function is not defined at this point.
    #[error("argument undefined at this point")]
    ArgUndefined,

    /// The norm of this point is not defined (degenerate denominator).
    #[error("norm undefined at this point")]
    NormUndefined,

    /// The affine product formula degenerates; use the homogeneous chart.
    #[error("product undefined in the affine chart")]
    ProductUndefined,

    /// Scaling by zero has no affine image; use the homogeneous chart.
    #[error("division by zero in the affine chart")]
    DivisionByZero,

    /// The requested value exists but is not exactly representable in the
    /// current scalar backend (e.g. trigonometric values over rationals).
    #[error("not exactly representable in this scalar backend")]
    NotExactlyRepresentable,

    /// An input lies outside the documented domain of the operation.
    #[error("domain error: {0}")]
    DomainError(&'static str),

    /// A projective point left the affine chart (denominator not invertible).
    #[error("ideal point: result has no affine form")]
    IdealPoint,

    /// A projective pair that does not describe a valid point.
    #[error("degenerate projective pair")]
    DegeneratePoint,

    /// The group element does not factor through the requested subgroup chart.
    #[error("factorization fails: {0}")]
    FactorizationFails(&'static str),

    /// A matrix that was expected to be a nonzero Lie algebra element is zero.
    #[error("zero Lie algebra element")]
    ZeroElement,

    /// The group element does not belong to the subgroup of the character.
    #[error("element not in the character's subgroup")]
    NotInSubgroup,

    /// A transported support rectangle left the quadrature grid.
    #[error("transported support escaped the quadrature grid")]
    SupportEscaped,

    /// No nonzero ladder operator exists for any admissible eigenvalue.
    #[error("no nontrivial ladder solution in this algebra")]
    NoNontrivialSolution,

    /// A claimed structural property failed its exact verification.
    #[error("property violation: {0}")]
    PropertyViolation(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
