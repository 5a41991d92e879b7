//! Truncated exponential generating functions over exact rationals.
//!
//! A series of order N stores the n!-scaled coefficients r_0..r_N of
//! f(x) = sum_n r_n x^n / n!. With that scaling a Hurwitz series (the EGF of
//! an integer sequence) is exactly a series whose stored coefficients all
//! have denominator 1, and multiplication becomes binomial convolution.
//!
//! Binary operations truncate to the shorter operand rather than erroring,
//! so pipelines of different natural orders compose.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{int_pow, Rational};
use crate::error::{Error, Result};

/// A truncated EGF; `coeffs[n]` is the n!-scaled coefficient r_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<Rational>,
}

/// Outcome of scanning a series for integrality of its coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HurwitzCheck {
    AllInteger,
    NonInteger { index: usize, value: Rational },
}

impl HurwitzCheck {
    pub fn is_all_integer(&self) -> bool {
        matches!(self, HurwitzCheck::AllInteger)
    }
}

fn pascal_next(row: &[BigInt]) -> Vec<BigInt> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(BigInt::one());
    for i in 1..row.len() {
        next.push(&row[i - 1] + &row[i]);
    }
    next.push(BigInt::one());
    next
}

impl EgfSeries {
    /// Wrap explicit r_n coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least r_0");
        EgfSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        EgfSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series of x itself (r_1 = 1).
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// e^{ax}: r_n = a^n.
    pub fn exp_linear(a: i64, order: usize) -> Self {
        let a = BigInt::from(a);
        let coeffs = (0..=order)
            .map(|n| Rational::from_integer(int_pow(&a, n as u32)))
            .collect();
        EgfSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drop coefficients above `order` (which must not exceed the current one).
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        EgfSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, g: &EgfSeries) -> Self {
        let order = self.order().min(g.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] + &g.coeffs[n])
            .collect();
        EgfSeries { coeffs }
    }

    pub fn sub(&self, g: &EgfSeries) -> Self {
        let order = self.order().min(g.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] - &g.coeffs[n])
            .collect();
        EgfSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|r| r * c).collect();
        EgfSeries { coeffs }
    }

    /// Binomial convolution: (f g)_n = sum_i C(n,i) f_i g_{n-i}.
    pub fn mul(&self, g: &EgfSeries) -> Self {
        let order = self.order().min(g.order());
        let mut out = Vec::with_capacity(order + 1);
        let mut row = vec![BigInt::one()];
        for n in 0..=order {
            let mut acc = Rational::zero();
            for i in 0..=n {
                let a = &self.coeffs[i];
                let b = &g.coeffs[n - i];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc += a * b * row[i].clone();
            }
            out.push(acc);
            row = pascal_next(&row);
        }
        EgfSeries { coeffs: out }
    }

    /// Divide out x^m, rescaling factorials: r'_n = r_{n+m} * n!/(n+m)!.
    /// The first m coefficients must vanish.
    fn shift_down(&self, m: usize) -> Self {
        debug_assert!(self.coeffs[..m].iter().all(|c| c.is_zero()));
        let order = self.order() - m;
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            // n!/(n+m)! = 1/((n+1)(n+2)...(n+m))
            let mut den = BigInt::one();
            for t in 1..=m {
                den *= BigInt::from(n + t);
            }
            coeffs.push(&self.coeffs[n + m] / Rational::from_integer(den));
        }
        EgfSeries { coeffs }
    }

    /// Exact quotient q with q*g = f, to the achievable truncation order
    /// (common order minus the valuation of g). Requires val(g) <= val(f).
    pub fn div(&self, g: &EgfSeries) -> Result<Self> {
        let den_val = g.valuation().ok_or(Error::ZeroSeriesDivisor)?;
        if let Some(num_val) = self.valuation() {
            if num_val < den_val {
                return Err(Error::ValuationTooSmall {
                    num_val,
                    den_val,
                });
            }
        }
        let order = self.order().min(g.order());
        if order < den_val {
            return Err(Error::OrderTooSmall {
                order,
                den_val,
            });
        }
        let f = self.truncate(order).shift_down(den_val);
        let g = g.truncate(order).shift_down(den_val);
        let order = f.order();
        let g0 = g.coeffs[0].clone();
        debug_assert!(!g0.is_zero());
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        let mut row = vec![BigInt::one()];
        for n in 0..=order {
            let mut acc = f.coeffs[n].clone();
            for i in 0..n {
                if q[i].is_zero() || g.coeffs[n - i].is_zero() {
                    continue;
                }
                acc -= &q[i] * &g.coeffs[n - i] * row[i].clone();
            }
            q.push(acc / &g0);
            row = pascal_next(&row);
        }
        Ok(EgfSeries { coeffs: q })
    }

    /// f^j / j! for j >= 1; requires f_0 = 0, under which divided powers of
    /// integer-coefficient series keep integer coefficients.
    pub fn divided_power(&self, j: usize) -> Result<Self> {
        assert!(j >= 1, "divided power needs a positive exponent");
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNotZero(self.coeffs[0].clone()));
        }
        let mut acc = self.clone();
        for i in 2..=j {
            acc = acc
                .mul(self)
                .scale(&Rational::new(BigInt::one(), BigInt::from(i)));
        }
        Ok(acc)
    }

    /// log(1 + f) = sum_{j>=1} (-1)^{j-1} f^j / j, for f_0 = 0.
    ///
    /// f^j has valuation >= j, so stopping at j = order loses nothing below
    /// the truncation order; the cutoff is exact, not an approximation.
    pub fn log1p(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNotZero(self.coeffs[0].clone()));
        }
        let order = self.order();
        let mut acc = Self::zero(order);
        let mut pow = self.clone();
        for j in 1..=order {
            let c = Rational::new(
                BigInt::from(if j % 2 == 1 { 1 } else { -1 }),
                BigInt::from(j),
            );
            acc = acc.add(&pow.scale(&c));
            if j < order {
                pow = pow.mul(self);
            }
        }
        Ok(acc)
    }

    /// Multiplicative inverse to the truncation order; requires f_0 != 0.
    /// For f_0 = 1 an integer-coefficient series has an integer-coefficient
    /// reciprocal.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermZero);
        }
        Self::one(self.order()).div(self)
    }

    /// Certify all coefficients integral, or report the first that is not.
    pub fn hurwitz_check(&self) -> HurwitzCheck {
        for (index, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() {
                return HurwitzCheck::NonInteger {
                    index,
                    value: c.clone(),
                };
            }
        }
        HurwitzCheck::AllInteger
    }

    pub fn is_hurwitz(&self) -> bool {
        self.hurwitz_check().is_all_integer()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{integer, rational};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| integer(n)).collect()
    }

    #[test]
    fn exp_linear_fixtures() {
        assert_eq!(EgfSeries::exp_linear(0, 3).coeffs(), &ints(&[1, 0, 0, 0]));
        assert_eq!(EgfSeries::exp_linear(1, 3).coeffs(), &ints(&[1, 1, 1, 1]));
        assert_eq!(
            EgfSeries::exp_linear(-2, 3).coeffs(),
            &ints(&[1, -2, 4, -8])
        );
    }

    #[test]
    fn add_sub_scale_fixtures() {
        let e = EgfSeries::exp_linear(1, 5);
        let minus_e = e.scale(&integer(-1));
        assert!(e.add(&minus_e).is_zero());
        assert_eq!(e.scale(&integer(2)).coeffs(), &ints(&[2, 2, 2, 2, 2, 2]));
        let diff = EgfSeries::exp_linear(2, 4).sub(&EgfSeries::one(4));
        assert_eq!(diff.coeffs(), &ints(&[0, 2, 4, 8, 16]));
    }

    #[test]
    fn min_order_truncation() {
        let long = EgfSeries::exp_linear(1, 9);
        let short = EgfSeries::exp_linear(1, 4);
        assert_eq!(long.add(&short).order(), 4);
        assert_eq!(long.mul(&short).order(), 4);
    }

    #[test]
    fn mul_exponent_addition() {
        let e = EgfSeries::exp_linear(1, 8);
        assert_eq!(e.mul(&e), EgfSeries::exp_linear(2, 8));
        let f = EgfSeries::exp_linear(3, 8);
        assert_eq!(f.mul(&EgfSeries::one(8)), f);
    }

    // Oracle: unscale to ordinary coefficients, convolve, rescale.
    fn ordinary_mul(f: &EgfSeries, g: &EgfSeries) -> EgfSeries {
        let order = f.order().min(g.order());
        let fact = |n: usize| {
            let mut a = BigInt::one();
            for t in 2..=n {
                a *= BigInt::from(t);
            }
            Rational::from_integer(a)
        };
        let fo: Vec<Rational> = (0..=order).map(|n| f.coeff(n) / fact(n)).collect();
        let go: Vec<Rational> = (0..=order).map(|n| g.coeff(n) / fact(n)).collect();
        let mut coeffs = Vec::new();
        for n in 0..=order {
            let mut acc = Rational::zero();
            for i in 0..=n {
                acc += &fo[i] * &go[n - i];
            }
            coeffs.push(acc * fact(n));
        }
        EgfSeries::from_coeffs(coeffs)
    }

    #[test]
    fn mul_matches_ordinary_convolution() {
        let f = EgfSeries::from_coeffs(ints(&[3, -1, 4, 1, -5, 9, 2, 6]));
        let g = EgfSeries::from_coeffs(ints(&[2, 7, -1, 8, 2, -8, 1, 8]));
        assert_eq!(f.mul(&g), ordinary_mul(&f, &g));
        assert!(f.mul(&g).is_hurwitz());
    }

    #[test]
    fn div_by_x_unshifts() {
        // x * e^x has r_n = n; dividing by x recovers e^x.
        let xex = EgfSeries::x(9).mul(&EgfSeries::exp_linear(1, 9));
        assert_eq!(xex.coeffs()[..4], ints(&[0, 1, 2, 3])[..]);
        let q = xex.div(&EgfSeries::x(9)).unwrap();
        assert_eq!(q, EgfSeries::exp_linear(1, 8));
    }

    #[test]
    fn div_genocchi_generating_function() {
        // 2x/(e^x + 1): r_8 = 17.
        let num = EgfSeries::x(9).scale(&integer(2));
        let den = EgfSeries::exp_linear(1, 9).add(&EgfSeries::one(9));
        let g = num.div(&den).unwrap();
        assert_eq!(g.coeff(8), &integer(17));
        assert!(g.is_hurwitz());
    }

    #[test]
    fn div_geometric_exponential_sum() {
        // (e^{3x}-1)/(e^x-1) = 1 + e^x + e^{2x}.
        let one = EgfSeries::one(8);
        let num = EgfSeries::exp_linear(3, 8).sub(&one);
        let den = EgfSeries::exp_linear(1, 8).sub(&one);
        let q = num.div(&den).unwrap();
        let expected = EgfSeries::exp_linear(0, 7)
            .add(&EgfSeries::exp_linear(1, 7))
            .add(&EgfSeries::exp_linear(2, 7));
        assert_eq!(q, expected);
        assert_eq!(q.coeffs()[..5], ints(&[3, 3, 5, 9, 17])[..]);
    }

    #[test]
    fn div_errors() {
        let one = EgfSeries::one(5);
        let x = EgfSeries::x(5);
        assert!(matches!(
            one.div(&EgfSeries::zero(5)),
            Err(Error::ZeroSeriesDivisor)
        ));
        assert!(matches!(
            one.div(&x),
            Err(Error::ValuationTooSmall { num_val: 0, den_val: 1 })
        ));
        assert!(matches!(
            EgfSeries::zero(0).div(&x),
            Err(Error::OrderTooSmall { order: 0, den_val: 1 })
        ));
    }

    #[test]
    fn div_is_right_inverse_of_mul() {
        let f = EgfSeries::from_coeffs(ints(&[0, 2, -3, 5, 7, -1, 4]));
        let g = EgfSeries::from_coeffs(ints(&[0, 1, 4, -2, 8, 3, -6]));
        let q = f.div(&g).unwrap();
        let back = q.mul(&g.truncate(q.order()));
        assert_eq!(back.coeffs()[..], f.coeffs()[..=back.order()]);
    }

    // Oracle: Stirling recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
    fn stirling_table(n_max: usize) -> Vec<Vec<BigInt>> {
        let mut t = vec![vec![BigInt::zero(); n_max + 1]; n_max + 1];
        t[0][0] = BigInt::one();
        for n in 1..=n_max {
            for k in 1..=n {
                t[n][k] = &t[n - 1][k] * BigInt::from(k) + &t[n - 1][k - 1];
            }
        }
        t
    }

    #[test]
    fn divided_power_is_stirling_generating_function() {
        let em1 = EgfSeries::exp_linear(1, 12).sub(&EgfSeries::one(12));
        let table = stirling_table(12);
        for j in 1..=6usize {
            let s = em1.divided_power(j).unwrap();
            for n in 0..=12 {
                assert_eq!(s.coeff(n), &Rational::from_integer(table[n][j].clone()));
            }
        }
    }

    #[test]
    fn divided_power_of_x() {
        let s = EgfSeries::x(5).divided_power(2).unwrap();
        assert_eq!(s.coeffs(), &ints(&[0, 0, 1, 0, 0, 0]));
        // valuation grows at least linearly in the exponent
        let f = EgfSeries::from_coeffs(ints(&[0, 3, 1, 4, 1, 5, 9, 2]));
        for j in 1..=5 {
            assert!(f.divided_power(j).unwrap().valuation().unwrap_or(usize::MAX) >= j);
        }
    }

    #[test]
    fn divided_power_requires_zero_constant() {
        let e = EgfSeries::exp_linear(1, 4);
        assert!(matches!(
            e.divided_power(2),
            Err(Error::ConstantTermNotZero(_))
        ));
    }

    #[test]
    fn log1p_inverts_exponential() {
        for a in [-10i64, -3, 1, 2, 10] {
            let f = EgfSeries::exp_linear(a, 25).sub(&EgfSeries::one(25));
            let log = f.log1p().unwrap();
            assert_eq!(log, EgfSeries::x(25).scale(&integer(a)), "a = {a}");
        }
    }

    #[test]
    fn log1p_of_x_is_rescaled_mercator() {
        // log(1+x) has ordinary coefficients (-1)^{n-1}/n, so r_n = (-1)^{n-1}(n-1)!.
        let log = EgfSeries::x(8).log1p().unwrap();
        let mut fact = BigInt::one();
        assert_eq!(log.coeff(0), &integer(0));
        for n in 1..=8usize {
            if n >= 2 {
                fact *= BigInt::from(n - 1);
            }
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let expected = Rational::from_integer(&fact * BigInt::from(sign));
            assert_eq!(log.coeff(n), &expected, "n = {n}");
        }
    }

    #[test]
    fn reciprocal_fixtures() {
        let e = EgfSeries::exp_linear(1, 10);
        assert_eq!(e.reciprocal().unwrap(), EgfSeries::exp_linear(-1, 10));

        // (e^{2x}+1)/2 has integer coefficients and constant term 1, so its
        // reciprocal 2/(e^{2x}+1) does too, and matches direct division.
        let half = rational(1, 2);
        let den = EgfSeries::exp_linear(2, 10)
            .add(&EgfSeries::one(10))
            .scale(&half);
        let rec = den.reciprocal().unwrap();
        assert!(rec.is_hurwitz());
        let direct = EgfSeries::constant(integer(2), 10)
            .div(&EgfSeries::exp_linear(2, 10).add(&EgfSeries::one(10)))
            .unwrap();
        assert_eq!(rec, direct);

        // 1/(1+x): ordinary coefficients (-1)^n, so r_n = (-1)^n n!.
        let rec = EgfSeries::one(7).add(&EgfSeries::x(7)).reciprocal().unwrap();
        let mut fact = BigInt::one();
        for n in 0..=7usize {
            if n >= 1 {
                fact *= BigInt::from(n);
            }
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                rec.coeff(n),
                &Rational::from_integer(&fact * BigInt::from(sign))
            );
        }

        assert!(matches!(
            EgfSeries::x(4).reciprocal(),
            Err(Error::ConstantTermZero)
        ));
    }

    #[test]
    fn hurwitz_check_reports_first_failure() {
        assert!(EgfSeries::exp_linear(2, 10).is_hurwitz());
        let mut coeffs = ints(&[1, 2, 3, 0, 4]);
        coeffs[3] = rational(3, 2);
        let s = EgfSeries::from_coeffs(coeffs);
        assert_eq!(
            s.hurwitz_check(),
            HurwitzCheck::NonInteger {
                index: 3,
                value: rational(3, 2)
            }
        );
    }
}
