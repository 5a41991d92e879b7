//! Bernoulli numbers and polynomials, Euler polynomials, Stirling numbers of
//! the second kind, and the von Staudt-Clausen decomposition.
//!
//! Bernoulli numbers come from the defining recurrence
//! sum_{i<=n} C(n+1,i) B_i = [n = 0] and are memoized; the EGF-division
//! route x/(e^x - 1) exists in `egf` as an independent cross-check.
//! Polynomial evaluation is Horner-style over coefficient rows built once
//! per degree.

use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, int_pow, primes_upto, Rational};
use crate::error::{Error, Result};

static BERNOULLI: LazyLock<Mutex<Vec<Rational>>> =
    LazyLock::new(|| Mutex::new(vec![Rational::one()]));

/// B_n, exact. B_0 = 1, B_1 = -1/2, and B_n = 0 for odd n > 1.
pub fn bernoulli_number(n: usize) -> Rational {
    let mut cache = BERNOULLI.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        let mut sum = Rational::zero();
        for (i, b) in cache.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            sum += b * binomial(m as u64 + 1, i as i64);
        }
        let b = -sum / Rational::from_integer(BigInt::from(m + 1));
        cache.push(b);
    }
    cache[n].clone()
}

/// B_0..B_n as a vector.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    bernoulli_number(n);
    BERNOULLI.lock().unwrap()[..=n].to_vec()
}

/// B_n(u) = sum_j C(n,j) B_{n-j} u^j, evaluated exactly (Horner).
pub fn bernoulli_poly(n: usize, u: &Rational) -> Rational {
    let b = bernoulli_numbers(n);
    let mut acc = Rational::zero();
    for j in (0..=n).rev() {
        acc *= u;
        let bv = &b[n - j];
        if !bv.is_zero() {
            acc += bv * binomial(n as u64, j as i64);
        }
    }
    acc
}

/// B_n(u) - B_n.
pub fn bernoulli_tilde(n: usize, u: &Rational) -> Rational {
    bernoulli_poly(n, u) - bernoulli_number(n)
}

// Euler polynomial coefficient rows. Row n holds the coefficient of u^j in
// E_n(u) for j = 0..=n, namely (2/(n+1)) C(n+1,j) B_{n+1-j} (1 - 2^{n+1-j}).
static EULER_ROWS: LazyLock<Mutex<Vec<Vec<Rational>>>> = LazyLock::new(|| Mutex::new(Vec::new()));

fn euler_row(n: usize) -> Vec<Rational> {
    let mut rows = EULER_ROWS.lock().unwrap();
    while rows.len() <= n {
        let m = rows.len();
        let b = bernoulli_numbers(m + 1);
        let two = BigInt::from(2);
        let scale = Rational::new(BigInt::from(2), BigInt::from(m + 1));
        let row = (0..=m)
            .map(|j| {
                let bv = &b[m + 1 - j];
                if bv.is_zero() {
                    return Rational::zero();
                }
                let gap = Rational::from_integer(BigInt::one() - int_pow(&two, (m + 1 - j) as u32));
                &scale * binomial(m as u64 + 1, j as i64) * bv * gap
            })
            .collect();
        rows.push(row);
    }
    rows[n].clone()
}

/// E_n(u), exact (Horner over the cached coefficient row).
pub fn euler_poly(n: usize, u: &Rational) -> Rational {
    let row = euler_row(n);
    let mut acc = Rational::zero();
    for j in (0..=n).rev() {
        acc = acc * u + &row[j];
    }
    acc
}

/// E_n(0), via the cached coefficient rows.
pub fn euler_at_zero(n: usize) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    euler_row(n)[0].clone()
}

static STIRLING: LazyLock<Mutex<Vec<Vec<BigInt>>>> =
    LazyLock::new(|| Mutex::new(vec![vec![BigInt::one()]]));

/// Stirling number of the second kind S(n, j); 0 for j > n, S(0,0) = 1.
pub fn stirling2(n: usize, j: usize) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    let mut rows = STIRLING.lock().unwrap();
    while rows.len() <= n {
        let m = rows.len();
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        row.push(BigInt::zero());
        for k in 1..m {
            row.push(&prev[k] * BigInt::from(k) + &prev[k - 1]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows[n][j].clone()
}

/// The integer G and prime set of the von Staudt-Clausen theorem:
/// B_n = G - sum 1/p over primes with p-1 | n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VscDecomposition {
    pub n: usize,
    pub integer_part: BigInt,
    pub primes: Vec<u64>,
}

/// Decompose B_n for even n >= 2. The prime set {p : p-1 | n} is complete
/// up to n+1 since p-1 <= n for every contributing prime.
pub fn von_staudt_clausen(n: usize) -> Result<VscDecomposition> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::Precondition(format!(
            "von Staudt-Clausen decomposition needs even n >= 2, got {n}"
        )));
    }
    let primes: Vec<u64> = primes_upto(n as u64 + 1)
        .into_iter()
        .filter(|&p| n as u64 % (p - 1) == 0)
        .collect();
    let mut g = bernoulli_number(n);
    for &p in &primes {
        g += Rational::new(BigInt::one(), BigInt::from(p));
    }
    if !g.is_integer() {
        return Err(Error::NotAnInteger {
            label: format!("B_{n} + sum of prime reciprocals"),
            value: g,
        });
    }
    Ok(VscDecomposition {
        n,
        integer_part: g.to_integer(),
        primes,
    })
}
