//! Coefficients of ((e^{hx}-1)^j / j!) * (kx/(e^{kx}-1)): the finite
//! Bernoulli-Stirling sum, the series route, the prime-divisor condition
//! under which all coefficients are integers, and the explicit
//! non-integrality witness at n = j + p - 1 when the condition fails.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{
    binomial, is_prime, lucas_binomial_mod, p_adic_valuation, prime_factors, Rational,
};
use crate::bernoulli::{bernoulli_numbers, stirling2};
use crate::egf::EgfSeries;
use crate::error::{Error, Result};

/// Index triple (j, h, k) with j >= 1 and k != 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GyQuery {
    pub j: usize,
    pub h: i64,
    pub k: i64,
}

impl GyQuery {
    pub fn new(j: usize, h: i64, k: i64) -> Self {
        assert!(j >= 1, "j must be positive");
        assert!(k != 0, "k must be nonzero");
        GyQuery { j, h, k }
    }
}

/// The nth coefficient, sum_{i <= n-j} C(n,i) h^{n-i} S(n-i,j) k^i B_i;
/// zero when n < j. For j = 1 this is M_n(h,k).
pub fn gy_coefficient(n: usize, q: &GyQuery) -> Rational {
    let GyQuery { j, h, k } = *q;
    if n < j {
        return Rational::zero();
    }
    let b = bernoulli_numbers(n - j);
    let (h, k) = (BigInt::from(h), BigInt::from(k));
    let mut h_pow = vec![BigInt::one()];
    let mut k_pow = vec![BigInt::one()];
    for t in 1..=n {
        h_pow.push(&h_pow[t - 1] * &h);
        k_pow.push(&k_pow[t - 1] * &k);
    }
    let mut sum = Rational::zero();
    for (i, bi) in b.iter().enumerate() {
        if bi.is_zero() {
            continue;
        }
        let s = stirling2(n - i, j);
        if s.is_zero() {
            continue;
        }
        sum += bi * (binomial(n as u64, i as i64) * &h_pow[n - i] * s * &k_pow[i]);
    }
    sum
}

/// The generating function ((e^{hx}-1)^j / j!) * (kx/(e^{kx}-1)); its nth
/// coefficient equals `gy_coefficient(n, q)`.
pub fn gy_series(q: &GyQuery, order: usize) -> EgfSeries {
    let GyQuery { j, h, k } = *q;
    assert!(j >= 1 && k != 0);
    let one = EgfSeries::one(order + 1);
    let bk = EgfSeries::x(order + 1)
        .scale(&Rational::from_integer(BigInt::from(k)))
        .div(&EgfSeries::exp_linear(k, order + 1).sub(&one))
        .expect("denominator has valuation 1 for nonzero k");
    let dp = EgfSeries::exp_linear(h, order)
        .sub(&EgfSeries::one(order))
        .divided_power(j)
        .expect("e^{hx} - 1 has zero constant term");
    dp.mul(&bk)
}

/// True iff every prime divisor of j divides h or k; under this condition
/// the whole series is integer-coefficient, and the condition is also
/// necessary.
pub fn gam_condition(q: &GyQuery) -> bool {
    prime_factors(q.j as u64)
        .into_iter()
        .all(|p| q.h.unsigned_abs() % p == 0 || q.k.unsigned_abs() % p == 0)
}

/// Witness that one coefficient fails p-integrality: the index
/// n* = j + p - 1, the exact coefficient, its negative p-adic valuation, and
/// the nonzero Lucas residue C(j+p-1, j) mod p that drives the proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecWitness {
    pub j: usize,
    pub h: i64,
    pub k: i64,
    pub p: u64,
    pub n_star: usize,
    pub coefficient: Rational,
    pub valuation: i64,
    pub lucas_residue: u64,
}

#[derive(Serialize)]
struct NecWitnessJson<'a> {
    j: usize,
    h: i64,
    k: i64,
    p: u64,
    n_star: usize,
    coefficient: &'a str,
    valuation: i64,
}

impl NecWitness {
    /// Serialize as `{j, h, k, p, n_star, coefficient, valuation}` with the
    /// coefficient as an exact "num/den" string.
    pub fn to_json(&self) -> String {
        let coefficient = self.coefficient.to_string();
        serde_json::to_string(&NecWitnessJson {
            j: self.j,
            h: self.h,
            k: self.k,
            p: self.p,
            n_star: self.n_star,
            coefficient: &coefficient,
            valuation: self.valuation,
        })
        .expect("witness serializes")
    }
}

/// Produce the non-integrality witness for a prime p | j with p dividing
/// neither h nor k. Errors if the preconditions fail. If the coefficient
/// at j + p - 1 turns out p-integral, that falsifies the necessity claim
/// and is surfaced as a distinguished error.
pub fn nec_witness(j: usize, h: i64, k: i64, p: u64) -> Result<NecWitness> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if j == 0 || j as u64 % p != 0 {
        return Err(Error::Precondition(format!("p = {p} must divide j = {j}")));
    }
    if h.unsigned_abs() % p == 0 || k == 0 || k.unsigned_abs() % p == 0 {
        return Err(Error::Precondition(format!(
            "p = {p} must divide neither h = {h} nor k = {k}"
        )));
    }
    let q = GyQuery::new(j, h, k);
    let n_star = j + p as usize - 1;
    let coefficient = gy_coefficient(n_star, &q);
    let integral = Err(Error::UnexpectedlyIntegral {
        label: format!("coefficient {n_star} of the (j={j}, h={h}, k={k}) series"),
        value: coefficient.clone(),
        p,
    });
    if coefficient.is_zero() {
        return integral;
    }
    let valuation = p_adic_valuation(&coefficient, p)?;
    if valuation >= 0 {
        return integral;
    }
    let lucas_residue = lucas_binomial_mod(n_star as u64, j as u64, p)?;
    Ok(NecWitness {
        j,
        h,
        k,
        p,
        n_star,
        coefficient,
        valuation,
        lucas_residue,
    })
}
