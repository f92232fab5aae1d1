//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("denominator {den} is not invertible mod {p}")]
    DenominatorNotInvertible { den: u64, p: u64 },
    #[error("{0} is not prime")]
    InvalidPrime(u64),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("negative exponent")]
    NegativeExponent,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("zero divisor in colon ideal")]
    ZeroColonDivisor,
    #[error("input is not homogeneous for the ring weighting")]
    NotHomogeneous,
    #[error("quotient is not finite dimensional")]
    InfiniteLength,
    #[error("ring has Krull dimension {found}, expected {expected}")]
    WrongDimension { expected: usize, found: usize },
    #[error("no stabilization within bound {0}")]
    BoundExhausted(usize),
    #[error("ideal inclusion violated: {0}")]
    InclusionViolated(String),
    #[error("primary decomposition rejected: {0}")]
    BadDecomposition(String),
    #[error("spec file error: {0}")]
    SpecFile(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
