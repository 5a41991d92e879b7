//! Error type shared across the crate.

use num_rational::BigRational;
use thiserror::Error;

/// Errors from exact-arithmetic operations and falsified integrality checks.
///
/// `NotAnInteger` and `UnexpectedlyIntegral` are the "theorem violation"
/// variants: they carry the offending rational exactly and are never turned
/// into a rounded result.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("the p-adic valuation of 0 is undefined")]
    ZeroValuation,

    #[error("cannot divide by the zero series")]
    ZeroSeriesDivisor,

    #[error("numerator valuation {num_val} is below denominator valuation {den_val}")]
    ValuationTooSmall { num_val: usize, den_val: usize },

    #[error("series order {order} too small to divide by a series of valuation {den_val}")]
    OrderTooSmall { order: usize, den_val: usize },

    #[error("constant term must be zero, found {0}")]
    ConstantTermNotZero(BigRational),

    #[error("constant term must be nonzero")]
    ConstantTermZero,

    #[error("{label} = {value} is not an integer")]
    NotAnInteger { label: String, value: BigRational },

    #[error("{label} = {value} has nonnegative {p}-adic valuation, expected negative")]
    UnexpectedlyIntegral {
        label: String,
        value: BigRational,
        p: u64,
    },

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
