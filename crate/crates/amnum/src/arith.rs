//! Arbitrary-precision integer and rational groundwork: binomial
//! coefficients, prime sieving, the Lucas congruence, and p-integrality.
//!
//! `Rational` values are always reduced with a positive denominator
//! (`num_rational` normalizes at construction), so "is an integer" is a
//! `denominator == 1` field check everywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The universal exact scalar.
pub type Rational = BigRational;

/// Reduced fraction `n/d`. Panics when `d == 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a `Rational`.
pub fn integer(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Binomial coefficient C(n, i); zero outside `0 <= i <= n`.
pub fn binomial(n: u64, i: i64) -> BigInt {
    if i < 0 || i as u64 > n {
        return BigInt::zero();
    }
    let i = (i as u64).min(n - i as u64);
    let mut acc = BigInt::one();
    // Each partial product of t consecutive factors is divisible by t!,
    // so the running division is exact.
    for t in 0..i {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// All primes `<= limit` in increasing order (sieve of Eratosthenes).
pub fn primes_upto(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    primes
}

/// Deterministic trial-division primality test; inputs are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factors of `|n|`, ascending, without multiplicity.
pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// C(n, i) mod p, computed digit-wise in base p via the Lucas congruence.
pub fn lucas_binomial_mod(n: u64, i: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let (mut n, mut i) = (n, i);
    let mut acc: u64 = 1;
    while n > 0 || i > 0 {
        let (nd, id) = (n % p, i % p);
        if id > nd {
            return Ok(0);
        }
        let digit = binomial(nd, id as i64) % p;
        let digit = u64::try_from(digit).expect("residue below p fits in u64");
        acc = ((acc as u128 * digit as u128) % p as u128) as u64;
        n /= p;
        i /= p;
    }
    Ok(acc)
}

fn int_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Exponent of p in q, i.e. the v with q = p^v * a/b and p dividing neither
/// a nor b. Errors on q = 0 and on non-prime p.
pub fn p_adic_valuation(q: &Rational, p: u64) -> Result<i64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if q.is_zero() {
        return Err(Error::ZeroValuation);
    }
    Ok(int_valuation(q.numer(), p) - int_valuation(q.denom(), p))
}

/// True iff the denominator of q is not divisible by p; 0 is p-integral.
pub fn is_p_integral(q: &Rational, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(!(q.denom() % BigInt::from(p)).is_zero())
}

/// Fractional part q - floor(q), always in [0, 1).
pub fn fractional_part(q: &Rational) -> Rational {
    q - q.floor()
}

/// `base^exp` for a signed big integer base.
pub fn int_pow(base: &BigInt, exp: u32) -> BigInt {
    num_traits::Pow::pow(base, exp)
}

/// Require `q` to be an integer, returning it as `BigInt`; otherwise the
/// distinguished non-integrality error carrying the exact offending value.
pub fn require_integer(label: impl FnOnce() -> String, q: Rational) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NotAnInteger {
            label: label(),
            value: q,
        })
    }
}

/// Sign of (-1)^e for a signed exponent.
pub fn neg_one_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
