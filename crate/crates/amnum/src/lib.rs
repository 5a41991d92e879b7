//! Exact arithmetic for the integer families attached to Bernoulli and
//! Euler polynomials: the numbers M_n(h,k) = k^n (B_n(h/k) - B_n) and
//! A_n(k) = M_n(1,k), their bivariate polynomial forms, the
//! Bernoulli-Stirling coefficient family ((e^{hx}-1)^j/j!) (kx/(e^{kx}-1)),
//! and scaled Euler polynomial values, together with sweep drivers that
//! mechanically verify the integrality, decomposition, sign, and
//! divisibility facts these families satisfy.
//!
//! Everything is exact: arbitrary-precision rationals throughout, no
//! floating point, and no silent rounding. Wherever a value is asserted to
//! be an integer, a non-integer result surfaces as an error carrying the
//! exact offending rational.

pub mod am;
pub mod arith;
pub mod bernoulli;
pub mod egf;
pub mod error;
pub mod fox;
pub mod gy;
pub mod poly;
pub mod render;
pub mod verify;

pub use arith::Rational;
pub use egf::{EgfSeries, HurwitzCheck};
pub use error::{Error, Result};
