//! M_n(h,k) as an exact bivariate polynomial in the symbols h and k, with
//! the homogeneity, substitution, and divisibility machinery needed to check
//! its factorization properties symbolically.
//!
//! Terms are kept sparse, keyed by (deg_h, deg_k); division runs along the
//! lexicographic order with h > k, under which every required factor has an
//! invertible leading coefficient and exact division is remainder-testable.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, Rational};
use crate::bernoulli::bernoulli_numbers;

/// Sparse exact polynomial in h and k. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// c * h^a * k^b.
    pub fn monomial(a: u32, b: u32, c: Rational) -> Self {
        let mut p = BivarPoly::zero();
        if !c.is_zero() {
            p.terms.insert((a, b), c);
        }
        p
    }

    pub fn var_h() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn var_k() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &BivarPoly) -> Self {
        let mut out = self.clone();
        for (&key, c) in &other.terms {
            out.insert_add(key, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BivarPoly) -> Self {
        let mut out = self.clone();
        for (&key, c) in &other.terms {
            out.insert_add(key, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &BivarPoly) -> Self {
        let mut out = BivarPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.insert_add((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    /// Exact substitution of both symbols.
    pub fn eval(&self, h: &Rational, k: &Rational) -> Rational {
        let max_a = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0);
        let max_b = self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0);
        let pow_table = |base: &Rational, top: u32| {
            let mut t = vec![Rational::one()];
            for i in 1..=top as usize {
                t.push(&t[i - 1] * base);
            }
            t
        };
        let hp = pow_table(h, max_a);
        let kp = pow_table(k, max_b);
        let mut acc = Rational::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * &hp[a as usize] * &kp[b as usize];
        }
        acc
    }

    /// Replace h by an arbitrary polynomial.
    pub fn substitute_h(&self, replacement: &BivarPoly) -> Self {
        let max_a = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0);
        let mut powers = vec![BivarPoly::monomial(0, 0, Rational::one())];
        for i in 1..=max_a as usize {
            powers.push(powers[i - 1].mul(replacement));
        }
        let mut out = BivarPoly::zero();
        for (&(a, b), c) in &self.terms {
            let term = powers[a as usize]
                .mul(&BivarPoly::monomial(0, b, Rational::one()))
                .scale(c);
            out = out.add(&term);
        }
        out
    }

    /// True iff every term has total degree `degree` (the zero polynomial
    /// is homogeneous of every degree).
    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|&(a, b)| a + b == degree)
    }

    /// Largest (deg_h, deg_k) in lex order with h > k.
    fn leading(&self) -> Option<(&(u32, u32), &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact divisibility test with quotient witness. The single-divisor
    /// division along the term order leaves remainder zero precisely when
    /// `self` is a polynomial multiple of `factor`.
    pub fn divides_into(&self, factor: &BivarPoly) -> Option<BivarPoly> {
        assert!(!factor.is_zero(), "zero factor");
        let (&(fa, fb), fc) = factor.leading().expect("nonzero factor");
        let mut rem = self.clone();
        let mut quot = BivarPoly::zero();
        while let Some((&(ra, rb), rc)) = rem.leading() {
            if ra < fa || rb < fb {
                return None;
            }
            let t = BivarPoly::monomial(ra - fa, rb - fb, rc / fc);
            rem = rem.sub(&t.mul(factor));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Human-readable monomial list in degree-lexicographic order, e.g.
    /// "h^5 - 5/2 h^4 k + 5/3 h^3 k^2 - 1/6 h k^4".
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by(|&(a1, b1), &(a2, b2)| {
            (a2 + b2, a2).cmp(&(a1 + b1, a1)) // total degree desc, then deg_h desc
        });
        let mut out = String::new();
        for (idx, key) in keys.iter().enumerate() {
            let c = &self.terms[key];
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let (a, b) = *key;
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                pieces.push(mag.to_string());
            }
            for (sym, e) in [("h", a), ("k", b)] {
                match e {
                    0 => {}
                    1 => pieces.push(sym.to_string()),
                    _ => pieces.push(format!("{sym}^{e}")),
                }
            }
            out.push_str(&pieces.join(" "));
        }
        out
    }
}

/// The polynomial sum_{i<n} C(n,i) B_i h^{n-i} k^i, i.e. M_n(h,k) with h
/// and k left symbolic. Evaluating at integers matches `m_number`.
pub fn m_polynomial(n: usize) -> BivarPoly {
    let b = bernoulli_numbers(n.saturating_sub(1));
    let mut p = BivarPoly::zero();
    for (i, bi) in b.iter().enumerate().take(n) {
        if bi.is_zero() {
            continue;
        }
        let c = bi * binomial(n as u64, i as i64);
        p.insert_add(((n - i) as u32, i as u32), c);
    }
    p
}

/// True iff hk divides M_n(h,k) - h^n, which also certifies M_n(h,0) = h^n
/// for n > 0.
pub fn m_minus_hn_divisible(n: usize) -> bool {
    assert!(n >= 1);
    let residual = m_polynomial(n).sub(&BivarPoly::monomial(n as u32, 0, Rational::one()));
    let hk = BivarPoly::monomial(1, 1, Rational::one());
    residual.divides_into(&hk).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::am::{m_number, AmQuery};
    use crate::arith::{integer, rational};

    fn poly(terms: &[(u32, u32, i64, i64)]) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for &(a, b, num, den) in terms {
            p = p.add(&BivarPoly::monomial(a, b, rational(num, den)));
        }
        p
    }

    #[test]
    fn m_polynomial_fixtures() {
        assert!(m_polynomial(0).is_zero());
        assert_eq!(m_polynomial(1), poly(&[(1, 0, 1, 1)]));
        assert_eq!(m_polynomial(2), poly(&[(2, 0, 1, 1), (1, 1, -1, 1)]));
        assert_eq!(
            m_polynomial(3),
            poly(&[(3, 0, 1, 1), (2, 1, -3, 2), (1, 2, 1, 2)])
        );
        assert_eq!(
            m_polynomial(4),
            poly(&[(4, 0, 1, 1), (3, 1, -2, 1), (2, 2, 1, 1)])
        );
        assert_eq!(
            m_polynomial(5),
            poly(&[(5, 0, 1, 1), (4, 1, -5, 2), (3, 2, 5, 3), (1, 4, -1, 6)])
        );
        assert_eq!(
            m_polynomial(6),
            poly(&[(6, 0, 1, 1), (5, 1, -3, 1), (4, 2, 5, 2), (2, 4, -1, 2)])
        );
    }

    #[test]
    fn render_fixtures() {
        assert_eq!(m_polynomial(0).render(), "0");
        assert_eq!(m_polynomial(1).render(), "h");
        assert_eq!(m_polynomial(2).render(), "h^2 - h k");
        assert_eq!(m_polynomial(3).render(), "h^3 - 3/2 h^2 k + 1/2 h k^2");
        assert_eq!(m_polynomial(4).render(), "h^4 - 2 h^3 k + h^2 k^2");
        assert_eq!(
            m_polynomial(5).render(),
            "h^5 - 5/2 h^4 k + 5/3 h^3 k^2 - 1/6 h k^4"
        );
        assert_eq!(
            m_polynomial(6).render(),
            "h^6 - 3 h^5 k + 5/2 h^4 k^2 - 1/2 h^2 k^4"
        );
        assert_eq!(poly(&[(0, 0, -3, 4)]).render(), "-3/4");
        assert_eq!(poly(&[(1, 0, -1, 1), (0, 1, 1, 1)]).render(), "-h + k");
    }

    #[test]
    fn eval_fixtures() {
        assert_eq!(m_polynomial(8).eval(&integer(1), &integer(2)), integer(17));
        let p = poly(&[(0, 0, 7, 2), (2, 1, 3, 1)]);
        assert_eq!(p.eval(&integer(0), &integer(0)), rational(7, 2));
        // M_2 = -h(k-h)
        let hkmh = BivarPoly::var_h().mul(&BivarPoly::var_k().sub(&BivarPoly::var_h()));
        assert!(m_polynomial(2).neg().sub(&hkmh).is_zero());
    }

    #[test]
    fn eval_matches_m_number_on_grid() {
        for n in 0..=14usize {
            let p = m_polynomial(n);
            for h in -4..=4i64 {
                for k in 1..=4i64 {
                    assert_eq!(
                        p.eval(&integer(h), &integer(k)),
                        Rational::from_integer(m_number(&AmQuery::new(n, h, k)).unwrap()),
                        "n={n} h={h} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn homogeneity() {
        assert!(m_polynomial(6).is_homogeneous(6));
        assert!(!poly(&[(2, 0, 1, 1), (0, 1, 1, 1)]).is_homogeneous(2));
        assert!(BivarPoly::zero().is_homogeneous(5));
    }

    #[test]
    fn divisibility_fixtures() {
        let h = BivarPoly::var_h();
        for n in 1..=12 {
            assert!(m_polynomial(n).divides_into(&h).is_some(), "h | M_{n}");
        }

        // M_6 = h^2 (k-h)^2 (h^2 - hk - k^2/2); at (h,k) = (1,2) this gives
        // 1 * 1 * (1 - 2 - 2) = -3, matching A_6(2).
        let kmh = BivarPoly::var_k().sub(&h);
        let factor = h.mul(&h).mul(&kmh).mul(&kmh);
        let witness = m_polynomial(6).divides_into(&factor).unwrap();
        assert_eq!(
            witness,
            poly(&[(2, 0, 1, 1), (1, 1, -1, 1), (0, 2, -1, 2)])
        );
        assert_eq!(witness.mul(&factor), m_polynomial(6));

        // k - 2h divides M_5
        let km2h = BivarPoly::var_k().sub(&h.scale(&integer(2)));
        assert!(m_polynomial(5).divides_into(&km2h).is_some());

        // non-divisibility is detected
        assert!(m_polynomial(4).divides_into(&km2h).is_none());
        assert!(BivarPoly::zero().divides_into(&h).is_some());
    }

    #[test]
    #[should_panic(expected = "zero factor")]
    fn division_by_zero_factor_panics() {
        let _ = m_polynomial(2).divides_into(&BivarPoly::zero());
    }

    #[test]
    fn m_minus_hn_fixtures() {
        // M_3 - h^3 = hk(-(3/2)h + (1/2)k)
        assert!(m_minus_hn_divisible(3));
        // M_1 - h = 0
        assert!(m_minus_hn_divisible(1));
        assert!(m_minus_hn_divisible(6));
    }

    #[test]
    fn reflection_at_polynomial_level() {
        let reflection = BivarPoly::var_k().sub(&BivarPoly::var_h());
        for n in (0..=16).filter(|&n| n != 1) {
            let p = m_polynomial(n);
            let reflected = p.substitute_h(&reflection);
            let expected = if n % 2 == 0 { p.clone() } else { p.neg() };
            assert_eq!(reflected, expected, "n={n}");
        }
    }
}
