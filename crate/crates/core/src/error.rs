use thiserror::Error;

/// Errors raised by set construction, the bounds calculators and the search engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus {n} exceeds the ceiling {max}")]
    ModulusTooLarge { n: u64, max: u64 },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    #[error("noise set must be nonempty")]
    EmptyNoise,
    #[error("{0} must be nonempty")]
    EmptySet(&'static str),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{g} is not a unit modulo {n}")]
    NotAUnit { g: i64, n: usize },
    #[error("{e} does not divide {n}")]
    NotADivisor { e: usize, n: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid set literal {literal:?}: {reason}")]
    InvalidLiteral { literal: String, reason: String },
    #[error("modulus {n} exceeds the search ceiling {ceiling}")]
    SearchCeiling { n: usize, ceiling: usize },
    #[error("sandwich violated: {0}")]
    SandwichViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
