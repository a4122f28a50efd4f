use thiserror::Error;

/// Errors raised by the algebraic layers of the crate.
///
/// Spec-file parsing has its own error type in [`crate::spec_file`]; everything
/// here is a mathematical failure on otherwise well-formed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("extension degree {0} requires an explicit modulus")]
    MissingModulus(u32),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus {0:?} is reducible over F_{1}")]
    ReducibleModulus(Vec<u32>, u32),
    #[error("field of order {0} is too large")]
    FieldTooLarge(u64),
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("degenerate points: {0}")]
    DegeneratePoints(String),
    #[error("duplicate points: {0}")]
    DuplicatePoints(String),
    #[error("invalid divisor data: {0}")]
    InvalidDivisor(String),
    #[error("dual code is empty (n - r + s - 1 = 0)")]
    EmptyDual,
    #[error("curve is singular (discriminant is zero)")]
    SmoothnessFailure,
    #[error("point not on curve: {0}")]
    PointNotOnCurve(String),
    #[error("invalid degree r = {0}, expected r >= 1")]
    InvalidDegree(i64),
    #[error("invalid monomial subspace: {0}")]
    InvalidGamma(String),
    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("encoder is catastrophic: zero-weight cycle through a nonzero state")]
    CatastrophicEncoder,
    #[error("encoder is not minimal-basic")]
    NotMinimalBasic,
    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),
    #[error("simulation needs at least {needed} steps, got {given}")]
    TooFewSteps { needed: usize, given: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
