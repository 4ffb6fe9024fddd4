//! Exact-coefficient evaluations of `q`-series on the ray `q = e^{−w}`, used
//! as oracles for the product and crank-moment main terms.

use std::f64::consts::PI;

use num_bigint::BigInt;

use super::euler_maclaurin::NeumaierSum;
use crate::bigfloat::ln_abs_big;
use crate::enumerate::crank_moment_series;
use crate::series::{pochhammer_infinite, PochhammerFactor};

/// Smallest order at which `n^extra · e^{π√(2n/3) − wn}` has dropped `drop`
/// nats below its maximum, a safe truncation for `Σ n^extra p(n) e^{−wn}`.
pub fn truncation_order(w: f64, extra: f64, drop: f64) -> usize {
    let g = |n: f64| extra * n.max(1.0).ln() + PI * (2.0 * n / 3.0).sqrt() - w * n;
    let peak = (PI * PI / (6.0 * w * w)).max(1.0);
    let target = g(peak) - drop;
    let mut n = peak;
    while g(n) > target {
        n *= 1.05;
    }
    n.ceil() as usize
}

fn sum_on_ray(coeffs: &[BigInt], w: f64) -> f64 {
    let mut acc = NeumaierSum::default();
    for (n, c) in coeffs.iter().enumerate() {
        if c.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        let sign = if c.sign() == num_bigint::Sign::Minus { -1.0 } else { 1.0 };
        acc.add(sign * (ln_abs_big(c) - w * n as f64).exp());
    }
    acc.value()
}

/// `(e^{−w}; e^{−w})_∞` as `1/Σ p(n) e^{−wn}`, with `p(n)` obtained by
/// inverting the truncated product exactly. Summing the positive series
/// avoids the cancellation in the alternating pentagonal expansion.
pub fn euler_product_numeric(w: f64) -> f64 {
    let order = truncation_order(w, 0.0, 40.0);
    let product = pochhammer_infinite(&[PochhammerFactor::plus(0, 1)], order)
        .expect("q-valuation 1");
    let p = product.invert().expect("unit constant term").at_zeta_one();
    1.0 / sum_on_ray(&p, w)
}

/// `C_{2j}(e^{−w}) = Σ_n Σ_m m^{2j} M(m,n) e^{−wn}` from exact coefficients.
pub fn crank_moment_numeric(j: u32, w: f64) -> f64 {
    let order = truncation_order(w, f64::from(j) + 1.0, 40.0);
    sum_on_ray(&crank_moment_series(2 * j, order), w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_product_matches_log_sum() {
        for w in [0.5, 0.2, 0.1] {
            let direct: f64 = (1..4000).map(|n| (-(-w * n as f64).exp()).ln_1p()).sum::<f64>().exp();
            let exact = euler_product_numeric(w);
            assert!((exact / direct - 1.0).abs() < 1e-12, "w={w}");
        }
    }

    #[test]
    fn crank_zeroth_moment_is_partition_sum() {
        let w = 0.3;
        let c0 = crank_moment_numeric(0, w);
        assert!((c0 * euler_product_numeric(w) - 1.0).abs() < 1e-12);
    }
}
