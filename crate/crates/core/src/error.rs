use thiserror::Error;

/// Errors surfaced by the library's checked operations.
///
/// Precondition violations that callers can trigger with ordinary inputs are
/// reported through these variants; internal invariant violations panic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("{0} is outside the supported factorization range")]
    InputTooLarge(i64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("discriminant {0} must be negative")]
    NotNegativeDiscriminant(i64),
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: i64, b: i64 },
    #[error("argument must be positive, got {0}")]
    NotPositive(i64),
    #[error("weight must be at least 3, got {0}")]
    WeightTooSmall(i64),
    #[error("leading coefficient is zero, series is not invertible")]
    NonInvertibleSeries,
    #[error("closed-form coefficient at n = {index} is not a non-negative integer: {value}")]
    NonIntegralCoefficient { index: u64, value: String },
    #[error("raw lattice count {count} at n = {n} is not divisible by |D| = {abs_disc}")]
    IndivisibleRawCount { count: u64, n: u64, abs_disc: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
