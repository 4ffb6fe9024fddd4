use num_bigint::BigInt;
use proptest::prelude::*;

use unirank::series::{pochhammer_infinite, Binomial, BivariateSeries, PochhammerFactor, ZetaLaurent};

const ORDER: usize = 8;

fn laurent() -> impl Strategy<Value = ZetaLaurent> {
    (-4i64..4, prop::collection::vec(-20i64..20, 0..6)).prop_map(|(lo, c)| ZetaLaurent::from_i64s(lo, &c))
}

fn series() -> impl Strategy<Value = BivariateSeries> {
    prop::collection::vec(laurent(), ORDER + 1).prop_map(|c| BivariateSeries::from_coeffs(ORDER, c))
}

/// Series with constant term 1, hence invertible.
fn unit_series() -> impl Strategy<Value = BivariateSeries> {
    series().prop_map(|s| {
        let mut c = s.into_coeffs();
        c[0] = ZetaLaurent::one();
        BivariateSeries::from_coeffs(ORDER, c)
    })
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.reflect().reflect(), a.clone());
        prop_assert_eq!((&a * &b).reflect(), &a.reflect() * &b.reflect());
    }

    #[test]
    fn laurent_evaluation_at_one_is_a_ring_map(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).sum(), a.sum() * b.sum());
        prop_assert_eq!((&a + &b).sum(), a.sum() + b.sum());
    }

    #[test]
    fn series_ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.sub(&b).unwrap().add(&b).unwrap(), a.clone());
    }

    #[test]
    fn invert_is_two_sided(a in unit_series()) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), BivariateSeries::one(ORDER));
        prop_assert_eq!(inv.invert().unwrap(), a);
    }

    #[test]
    fn non_unit_constant_term_is_rejected(a in series(), c in 2i64..5) {
        let mut coeffs = a.into_coeffs();
        coeffs[0] = ZetaLaurent::constant(BigInt::from(c));
        prop_assert!(BivariateSeries::from_coeffs(ORDER, coeffs).invert().is_err());
    }

    #[test]
    fn binomial_division_undoes_multiplication(a in series(), z in -3i64..3, k in 1usize..4, plus in any::<bool>()) {
        let b = if plus { Binomial::plus(z, k) } else { Binomial::minus(z, k) };
        let mut s = a.clone();
        s.mul_binomial(b);
        s.div_binomial(b).unwrap();
        prop_assert_eq!(s, a);
    }

    #[test]
    fn reflect_commutes_with_product(a in series(), b in series()) {
        prop_assert_eq!(a.mul(&b).unwrap().reflect(), a.reflect().mul(&b.reflect()).unwrap());
    }
}

/// Euler's pentagonal recurrence, independent of the series code.
fn partitions_pentagonal(n_max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(0); n_max + 1];
    p[0] = BigInt::from(1);
    for n in 1..=n_max {
        let mut acc = BigInt::from(0);
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * &p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                acc += sign * &p[n - g2];
            }
        }
        p[n] = acc;
    }
    p
}

#[test]
fn inverted_euler_product_gives_partition_numbers_to_200() {
    let product = pochhammer_infinite(&[PochhammerFactor::plus(0, 1)], 200).unwrap();
    let p = product.invert().unwrap().at_zeta_one();
    assert_eq!(p, partitions_pentagonal(200));
    assert_eq!(p[200].to_string(), "3972999029388");
}
