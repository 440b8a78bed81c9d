use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("unsupported prime {p}: {reason}")]
    UnsupportedPrime { p: u64, reason: &'static str },

    #[error("negative input to {0}")]
    NegativeInput(&'static str),

    #[error("{what} = {value} outside supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("mismatched cyclotomic index: {left} vs {right}")]
    MismatchedPrime { left: u64, right: u64 },

    #[error("flat coefficients are not constant on the {class} class (exponent {exponent})")]
    ConstancyViolation { class: &'static str, exponent: u64 },

    #[error("non-integral value where an algebraic integer was required: {0}")]
    IntegralityViolation(String),

    #[error("{0} is a perfect square")]
    NotIrrational(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget exhausted: {0}")]
    BudgetExceeded(String),

    #[error("no representation found for p = {0}")]
    NotFound(u64),

    #[error("internal identity check failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
