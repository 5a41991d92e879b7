//! Integrality of scaled Euler polynomial values: s^n E_n(r/s) for even s,
//! and (1/2) s^n (E_n(r/s) - (-1)^r E_n(0)) for odd s, by direct polynomial
//! evaluation and by the matching generating functions.

use num_bigint::BigInt;

use crate::arith::{int_pow, neg_one_pow, require_integer, Rational};
use crate::bernoulli::{euler_at_zero, euler_poly};
use crate::egf::EgfSeries;
use crate::error::{Error, Result};

/// Index triple (n, r, s) with s != 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoxQuery {
    pub n: usize,
    pub r: i64,
    pub s: i64,
}

impl FoxQuery {
    pub fn new(n: usize, r: i64, s: i64) -> Self {
        assert!(s != 0, "s must be nonzero");
        FoxQuery { n, r, s }
    }
}

/// The integer certified by the parity-split statement: s^n E_n(r/s) for
/// even s, (1/2) s^n (E_n(r/s) - (-1)^r E_n(0)) for odd s. Negative s uses
/// the same formulas verbatim. A non-integer value is surfaced as a
/// distinguished error, never rounded.
pub fn fox_number(q: &FoxQuery) -> Result<BigInt> {
    let FoxQuery { n, r, s } = *q;
    assert!(s != 0, "s must be nonzero");
    let u = Rational::new(BigInt::from(r), BigInt::from(s));
    let s_pow = Rational::from_integer(int_pow(&BigInt::from(s), n as u32));
    let value = if s % 2 == 0 {
        euler_poly(n, &u) * s_pow
    } else {
        let signed_e0 = euler_at_zero(n) * Rational::from_integer(BigInt::from(neg_one_pow(r)));
        (euler_poly(n, &u) - signed_e0) * s_pow / Rational::from_integer(BigInt::from(2))
    };
    require_integer(|| format!("scaled Euler value at (n={n}, r={r}, s={s})"), value)
}

/// 2 e^{rx} / (e^{sx} + 1) for even s; coefficient n is s^n E_n(r/s).
/// Integer-coefficient because its reciprocal factor (e^{sx}+1)/2 is an
/// integer series with constant term 1 when s is even.
pub fn fox_series_even(r: i64, s: i64, order: usize) -> Result<EgfSeries> {
    if s == 0 || s % 2 != 0 {
        return Err(Error::Precondition(format!("s must be even and nonzero, got {s}")));
    }
    let num = EgfSeries::exp_linear(r, order).scale(&Rational::from_integer(BigInt::from(2)));
    let den = EgfSeries::exp_linear(s, order).add(&EgfSeries::one(order));
    num.div(&den)
}

/// (e^{rx} - (-1)^r) / (e^{sx} + 1) for odd s; coefficient n is
/// (1/2) s^n (E_n(r/s) - (-1)^r E_n(0)).
pub fn fox_series_odd(r: i64, s: i64, order: usize) -> Result<EgfSeries> {
    if s % 2 == 0 {
        return Err(Error::Precondition(format!("s must be odd, got {s}")));
    }
    let sign = Rational::from_integer(BigInt::from(neg_one_pow(r)));
    let num = EgfSeries::exp_linear(r, order).sub(&EgfSeries::constant(sign, order));
    let den = EgfSeries::exp_linear(s, order).add(&EgfSeries::one(order));
    num.div(&den)
}
