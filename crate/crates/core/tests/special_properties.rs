use num_bigint::BigInt;
use proptest::prelude::*;

use unirank::series::ExactRational;
use unirank::special::{
    bernoulli_poly, bessel_i, digamma, euler_poly, logistic_cdf, RationalPolynomial,
};

fn rational(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

proptest! {
    #[test]
    fn bernoulli_difference_and_reflection(l in 1usize..16, n in -30i64..30, d in 1i64..12) {
        let x = rational(n, d);
        let b = bernoulli_poly(l);
        let diff = b.eval(&(&x + rational(1, 1))) - b.eval(&x);
        let expect = rational(l as i64, 1) * num_traits::pow(x.clone(), l - 1);
        prop_assert_eq!(diff, expect);
        let sign = if l % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(b.eval(&(rational(1, 1) - &x)), rational(sign, 1) * b.eval(&x));
    }

    #[test]
    fn euler_sum_identity(l in 0usize..14, n in -20i64..20, d in 1i64..9) {
        // E_l(x+1) + E_l(x) = 2x^l
        let x = rational(n, d);
        let e = euler_poly(l);
        let lhs = e.eval(&(&x + rational(1, 1))) + e.eval(&x);
        prop_assert_eq!(lhs, rational(2, 1) * num_traits::pow(x, l));
    }

    #[test]
    fn polynomial_derivative_of_integral(c in prop::collection::vec(-9i64..9, 0..7)) {
        let p = RationalPolynomial::from_i64s(&c);
        prop_assert_eq!(p.integral().derivative(), p);
    }

    #[test]
    fn digamma_recurrence(x in 0.05f64..40.0) {
        let lhs = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
        prop_assert!((lhs - 1.0 / x).abs() < 1e-11 * (1.0 / x).max(1.0));
    }

    #[test]
    fn bessel_recurrence(j in 1u32..6, x in 0.5f64..60.0) {
        // I_{j−1} − I_{j+1} = (2j/x) I_j
        let lhs = bessel_i(j - 1, x) - bessel_i(j + 1, x);
        let rhs = 2.0 * j as f64 / x * bessel_i(j, x);
        prop_assert!((lhs / rhs - 1.0).abs() < 1e-10, "j={} x={}: {} vs {}", j, x, lhs, rhs);
    }

    #[test]
    fn logistic_is_a_symmetric_cdf(x in -20.0f64..20.0) {
        prop_assert!((logistic_cdf(x) + logistic_cdf(-x) - 1.0).abs() < 1e-15);
        prop_assert!(logistic_cdf(x) <= logistic_cdf(x + 0.01));
    }
}
