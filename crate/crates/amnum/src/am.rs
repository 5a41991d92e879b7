//! Almkvist-Meurman numbers M_n(h,k) = k^n (B_n(h/k) - B_n) by three
//! independent routes, the Vandiver decomposition of k^n B_n(h/k), table
//! generation, and the sign checks behind the table's alternating pattern.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, fractional_part, int_pow, primes_upto, Rational};
use crate::bernoulli::{bernoulli_number, bernoulli_numbers, bernoulli_poly};
use crate::egf::EgfSeries;
use crate::error::Result;

/// Index triple for M_n(h,k); k must be nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AmQuery {
    pub n: usize,
    pub h: i64,
    pub k: i64,
}

impl AmQuery {
    pub fn new(n: usize, h: i64, k: i64) -> Self {
        assert!(k != 0, "k must be nonzero");
        AmQuery { n, h, k }
    }
}

/// M_n(h,k) by the finite sum over C(n,i) B_i h^{n-i} k^i for i < n.
///
/// The result is asserted integral; a non-integer sum is surfaced as a
/// distinguished error (it would falsify the integrality theorem), never
/// rounded.
pub fn m_number(q: &AmQuery) -> Result<BigInt> {
    let AmQuery { n, h, k } = *q;
    assert!(k != 0, "k must be nonzero");
    if n == 0 {
        return Ok(BigInt::zero());
    }
    let b = bernoulli_numbers(n);
    let (h, k) = (BigInt::from(h), BigInt::from(k));
    let mut h_pow = vec![BigInt::one()];
    let mut k_pow = vec![BigInt::one()];
    for t in 1..=n {
        h_pow.push(&h_pow[t - 1] * &h);
        k_pow.push(&k_pow[t - 1] * &k);
    }
    let mut sum = Rational::zero();
    for (i, bi) in b.iter().enumerate().take(n) {
        if bi.is_zero() {
            continue;
        }
        sum += bi * (binomial(n as u64, i as i64) * &h_pow[n - i] * &k_pow[i]);
    }
    crate::arith::require_integer(|| format!("M_{n}({h},{k})"), sum)
}

/// The generating function k x (e^{hx}-1) / (e^{kx}-1), whose nth
/// coefficient is M_n(h,k).
pub fn m_series(h: i64, k: i64, order: usize) -> EgfSeries {
    assert!(k != 0, "k must be nonzero");
    let one = EgfSeries::one(order + 1);
    let num = EgfSeries::x(order + 1)
        .mul(&EgfSeries::exp_linear(h, order + 1).sub(&one))
        .scale(&Rational::from_integer(BigInt::from(k)));
    let den = EgfSeries::exp_linear(k, order + 1).sub(&one);
    num.div(&den)
        .expect("denominator has valuation 1 for nonzero k")
}

/// (e^{hx}-1)/(e^x-1): the geometric sum 1 + e^x + ... + e^{(h-1)x} for
/// h >= 0, and an integer-coefficient series for every integer h.
pub fn exp_geometric(h: i64, order: usize) -> EgfSeries {
    let one = EgfSeries::one(order + 1);
    let num = EgfSeries::exp_linear(h, order + 1).sub(&one);
    let den = EgfSeries::exp_linear(1, order + 1).sub(&one);
    num.div(&den)
        .expect("numerator valuation is at least the denominator's")
}

/// k x (e^x-1)/(e^{kx}-1) through the logarithmic expansion: with q
/// standing for (e^{kx}-1)/(e^x-1),
///
///   k x (e^x-1)/(e^{kx}-1) = sum_{j>=1} (-1)^{j-1} (j-1)! ((e^x-1)^j/j!) q^{j-1},
///
/// truncated at j = order; higher terms have valuation beyond the order,
/// so the cutoff is exact. Each summand is an integer-coefficient series,
/// which is what makes the route interesting as a cross-check.
pub fn m_log_base(k: i64, order: usize) -> EgfSeries {
    assert!(k != 0, "k must be nonzero");
    let work = order + 1;
    let one = EgfSeries::one(work);
    let em1 = EgfSeries::exp_linear(1, work).sub(&one);
    let ekm1 = EgfSeries::exp_linear(k, work).sub(&one);

    let q = ekm1.div(&em1).expect("equal valuations"); // order work-1
    let base_order = q.order();
    let em1 = em1.truncate(base_order);

    let mut acc = EgfSeries::zero(base_order);
    let mut dp = em1.clone(); // (e^x-1)^j / j!
    let mut qpow = EgfSeries::one(base_order); // q^{j-1}
    let mut factor = Rational::one(); // (-1)^{j-1} (j-1)!
    for j in 1..=base_order {
        acc = acc.add(&dp.mul(&qpow).scale(&factor));
        if j < base_order {
            dp = dp
                .mul(&em1)
                .scale(&Rational::new(BigInt::one(), BigInt::from(j + 1)));
            qpow = qpow.mul(&q);
            factor = -factor * Rational::from_integer(BigInt::from(j));
        }
    }
    acc
}

/// The logarithmic route to the full M series: `m_log_base` times
/// (e^{hx}-1)/(e^x-1). Equals `m_series(h, k, order)` coefficient by
/// coefficient.
pub fn m_log_route(h: i64, k: i64, order: usize) -> EgfSeries {
    m_log_base(k, order).mul(&exp_geometric(h, order))
}

/// A_n(k) = M_n(1,k). The k = 2 column is the Genocchi sequence.
pub fn a_number(n: usize, k: i64) -> Result<BigInt> {
    m_number(&AmQuery::new(n, 1, k))
}

/// k^n B_n(h/k) split into an integer and the prime-reciprocal correction:
/// for even n the primes are those with p-1 | n and p not dividing k; for
/// odd n the value is an integer except for the n = 1, odd k case, which
/// carries an extra 1/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VandiverDecomposition {
    pub query: AmQuery,
    pub g: BigInt,
    pub primes: Vec<u64>,
    pub half_flag: bool,
}

impl VandiverDecomposition {
    /// Reassemble k^n B_n(h/k) from the parts.
    pub fn reconstruct(&self) -> Rational {
        let mut v = Rational::from_integer(self.g.clone());
        for &p in &self.primes {
            v -= Rational::new(BigInt::one(), BigInt::from(p));
        }
        if self.half_flag {
            v += Rational::new(BigInt::one(), BigInt::from(2));
        }
        v
    }
}

/// Decompose k^n B_n(h/k) for n >= 1. Fails with a distinguished error if
/// the residual integer part is not integral (which would falsify the
/// decomposition theorem).
pub fn vandiver_decompose(q: &AmQuery) -> Result<VandiverDecomposition> {
    let AmQuery { n, h, k } = *q;
    assert!(n >= 1, "decomposition defined for n >= 1");
    assert!(k != 0, "k must be nonzero");
    let value = bernoulli_poly(n, &Rational::new(BigInt::from(h), BigInt::from(k)))
        * Rational::from_integer(int_pow(&BigInt::from(k), n as u32));

    let mut primes = Vec::new();
    let mut half_flag = false;
    let mut g = value;
    if n % 2 == 0 {
        // only primes p <= n+1 can satisfy p-1 | n
        primes = primes_upto(n as u64 + 1)
            .into_iter()
            .filter(|&p| n as u64 % (p - 1) == 0 && k % p as i64 != 0)
            .collect();
        for &p in &primes {
            g += Rational::new(BigInt::one(), BigInt::from(p));
        }
    } else if n == 1 && k % 2 != 0 {
        half_flag = true;
        g -= Rational::new(BigInt::one(), BigInt::from(2));
    }
    let g = crate::arith::require_integer(
        || format!("integer part of {k}^{n} B_{n}({h}/{k})"),
        g,
    )?;
    Ok(VandiverDecomposition {
        query: *q,
        g,
        primes,
        half_flag,
    })
}

/// Rows (k, [A_n(k) for n in n_range]) of the A-number table.
pub fn a_table(
    k_range: impl IntoIterator<Item = i64>,
    n_range: impl IntoIterator<Item = usize> + Clone,
) -> Result<Vec<(i64, Vec<BigInt>)>> {
    let mut rows = Vec::new();
    for k in k_range {
        let mut row = Vec::new();
        for n in n_range.clone() {
            row.push(a_number(n, k)?);
        }
        rows.push((k, row));
    }
    Ok(rows)
}

/// The sign facts predicted for M_n(h,k) with k > 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignClaim {
    /// (-1)^{ceil(n/2)} M_n(h,k) > 0.
    SignedPositive,
    /// M_n(h,k) >= 0.
    Nonnegative,
}

/// Prediction and observed outcome for one (n,h,k) cell. `claims` is empty
/// when the hypotheses put the cell outside every claim ("no claim"), in
/// which case `satisfied` is vacuously true.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCheck {
    pub claims: Vec<SignClaim>,
    pub value: BigInt,
    pub satisfied: bool,
}

fn ceil_half(n: usize) -> usize {
    n.div_ceil(2)
}

/// Evaluate the sign claims at one cell: signed positivity for odd n > 1
/// with 0 < h < k/2, signed positivity for even n >= 2 with 0 < h < k, and
/// nonnegativity whenever 4 | n.
pub fn sign_class(n: usize, h: i64, k: i64) -> Result<SignCheck> {
    assert!(k > 0, "sign claims assume k > 0");
    let mut claims = Vec::new();
    if n > 1 && n % 2 == 1 && h > 0 && 2 * h < k {
        claims.push(SignClaim::SignedPositive);
    }
    if n >= 2 && n % 2 == 0 && h > 0 && h < k {
        claims.push(SignClaim::SignedPositive);
    }
    if n % 4 == 0 {
        claims.push(SignClaim::Nonnegative);
    }
    let value = m_number(&AmQuery::new(n, h, k))?;
    let signed = if ceil_half(n) % 2 == 1 {
        -value.clone()
    } else {
        value.clone()
    };
    let satisfied = claims.iter().all(|c| match c {
        SignClaim::SignedPositive => signed.is_positive(),
        SignClaim::Nonnegative => !value.is_negative(),
    });
    Ok(SignCheck {
        claims,
        value,
        satisfied,
    })
}

/// frac(k^n B_n(h/k)); by the decomposition this does not depend on h.
pub fn scaled_bernoulli_frac(n: usize, h: i64, k: i64) -> Rational {
    assert!(k != 0);
    let value = bernoulli_poly(n, &Rational::new(BigInt::from(h), BigInt::from(k)))
        * Rational::from_integer(int_pow(&BigInt::from(k), n as u32));
    fractional_part(&value)
}

/// frac(k^n B_n), the h-independent baseline.
pub fn scaled_bernoulli_frac_baseline(n: usize, k: i64) -> Rational {
    let value = bernoulli_number(n) * Rational::from_integer(int_pow(&BigInt::from(k), n as u32));
    fractional_part(&value)
}
