use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u32),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{op} requires a negative first entry, got n = {n}")]
    NonNegativeEntry { op: &'static str, n: i64 },
    #[error("method {method} does not apply to n = {n}")]
    MethodDomain { method: &'static str, n: i64 },
    #[error("series expanded at different points cannot be combined")]
    MismatchedPoints,
    #[error("leading coefficient {0} is not a unit")]
    NonUnitLead(String),
    #[error("series order must be at least 1")]
    InvalidOrder,
    #[error("tuple length must be at least 1")]
    InvalidLength,
    #[error("digits must be nonnegative, got value {0}")]
    NegativeDigits(i64),
    #[error("exponent {exponent} is past the truncation window (known up to {last_known})")]
    OutOfWindow { exponent: i64, last_known: i64 },
    #[error("integer overflow computing {0}")]
    Overflow(&'static str),
}
