//! Property tests: exactness of rational arithmetic, ring axioms for the
//! truncated EGF algebra, and the closure facts for integer-coefficient
//! series.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use amnum::arith::{fractional_part, integer, is_p_integral, p_adic_valuation, Rational};
use amnum::EgfSeries;

fn big_rational() -> impl Strategy<Value = Rational> {
    (any::<i128>(), 1u64..u64::MAX)
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn int_series(order: usize, bound: i64) -> impl Strategy<Value = EgfSeries> {
    prop::collection::vec(-bound..=bound, order + 1..=order + 1)
        .prop_map(|v| EgfSeries::from_coeffs(v.into_iter().map(integer).collect()))
}

proptest! {
    #[test]
    fn rational_addition_is_exact(a in big_rational(), b in big_rational()) {
        prop_assert_eq!((&a + &b) - &b, a);
    }

    #[test]
    fn rational_field_inverses(a in big_rational()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * a.recip(), integer(1));
    }

    #[test]
    fn fractional_part_is_canonical(a in big_rational()) {
        let f = fractional_part(&a);
        prop_assert!(f >= integer(0));
        prop_assert!(f < integer(1));
        prop_assert!((&a - &f).is_integer());
    }

    #[test]
    fn valuation_extracts_the_unit(a in big_rational(), p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        prop_assume!(!a.is_zero());
        let v = p_adic_valuation(&a, p).unwrap();
        let unit = &a * Rational::new(BigInt::from(1), BigInt::from(p)).pow(v as i32);
        prop_assert!(is_p_integral(&unit, p).unwrap());
        prop_assert!(is_p_integral(&unit.recip(), p).unwrap());
        prop_assert!(v >= 0 || !is_p_integral(&a, p).unwrap());
    }

    #[test]
    fn series_ring_axioms(f in int_series(12, 9), g in int_series(12, 9), e in int_series(12, 9)) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&e), f.mul(&g.mul(&e)));
        prop_assert_eq!(f.mul(&g.add(&e)), f.mul(&g).add(&f.mul(&e)));
    }

    #[test]
    fn division_inverts_multiplication(f in int_series(10, 9), g in int_series(10, 9)) {
        prop_assume!(!g.is_zero());
        prop_assume!(g.valuation().unwrap() <= f.valuation().unwrap_or(usize::MAX));
        let q = f.div(&g).unwrap();
        let back = q.mul(&g.truncate(q.order()));
        prop_assert_eq!(back.coeffs(), &f.coeffs()[..=q.order()]);
    }

    #[test]
    fn hurwitz_closure_under_ring_operations(f in int_series(20, 9), g in int_series(20, 9)) {
        prop_assert!(f.add(&g).is_hurwitz());
        prop_assert!(f.sub(&g).is_hurwitz());
        prop_assert!(f.mul(&g).is_hurwitz());
    }

    #[test]
    fn hurwitz_closure_under_divided_powers(f in int_series(20, 9), j in 1usize..=6) {
        let mut coeffs = f.coeffs().to_vec();
        coeffs[0] = integer(0);
        let f = EgfSeries::from_coeffs(coeffs);
        let dp = f.divided_power(j).unwrap();
        prop_assert!(dp.is_hurwitz());
        if let (Some(vf), Some(vdp)) = (f.valuation(), dp.valuation()) {
            prop_assert!(vdp >= j.min(20) || vf * j > 20, "val {} under j={}", vdp, j);
        }
    }

    #[test]
    fn hurwitz_closure_under_reciprocal(g in int_series(20, 9)) {
        let mut coeffs = g.coeffs().to_vec();
        coeffs[0] = integer(1);
        let g = EgfSeries::from_coeffs(coeffs);
        let rec = g.reciprocal().unwrap();
        prop_assert!(rec.is_hurwitz());
        prop_assert_eq!(rec.mul(&g), EgfSeries::one(20));
    }

    #[test]
    fn log_of_shifted_exponential_is_linear(a in -10i64..=10, order in 1usize..=25) {
        let f = EgfSeries::exp_linear(a, order).sub(&EgfSeries::one(order));
        let log = f.log1p().unwrap();
        prop_assert_eq!(log, EgfSeries::x(order).scale(&integer(a)));
    }
}
