//! Double-precision special functions: `ζ(k)`, digamma, `I_j(x)` and the
//! logistic distribution function.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_traits::{Signed, ToPrimitive};

use super::polynomial::bernoulli_polys;
use crate::error::{Error, Result};
use crate::series::ExactRational;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const SERIES_LIMIT: f64 = 30.0;

/// `B_0, B_1, …, B_40` as floats.
fn bernoulli_f64() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        bernoulli_polys(40)
            .iter()
            .map(|b| b.coeffs().first().and_then(ToPrimitive::to_f64).unwrap_or(0.0))
            .collect()
    })
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Riemann `ζ(k)` for integer `k ≥ 2`.
pub fn zeta_value(k: u32) -> Result<f64> {
    if k < 2 {
        return Err(Error::Domain(format!("zeta({k}) is not finite")));
    }
    let b = bernoulli_f64();
    if k % 2 == 0 && (k as usize) < b.len() {
        let half = (k / 2) as i32;
        let sign = if half % 2 == 1 { 1.0 } else { -1.0 };
        return Ok(sign * b[k as usize] * (2.0 * PI).powi(k as i32) / (2.0 * factorial(k)));
    }
    // Partial sum to M − 1 plus the Euler–Maclaurin tail at M.
    const M: u32 = 20;
    let kf = f64::from(k);
    let m = f64::from(M);
    let head: f64 = (1..M).rev().map(|n| f64::from(n).powf(-kf)).sum();
    let mut tail = m.powf(1.0 - kf) / (kf - 1.0) + 0.5 * m.powf(-kf);
    let mut rising = kf;
    for j in 1..=8u32 {
        let term = b[2 * j as usize] / factorial(2 * j) * rising * m.powf(-kf - f64::from(2 * j) + 1.0);
        tail += term;
        rising *= (kf + f64::from(2 * j) - 1.0) * (kf + f64::from(2 * j));
    }
    Ok(head + tail)
}

/// `ψ(x) = Γ'(x)/Γ(x)`.
pub fn digamma(x: f64) -> Result<f64> {
    if x <= 0.0 && x.fract() == 0.0 {
        return Err(Error::Domain(format!("digamma has a pole at {x}")));
    }
    let mut x = x;
    let mut acc = 0.0;
    while x < 10.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let b = bernoulli_f64();
    let x2 = x * x;
    let mut pow = x2;
    let mut series = 0.0;
    for j in 1..=8usize {
        series += b[2 * j] / (2.0 * j as f64 * pow);
        pow *= x2;
    }
    Ok(acc + x.ln() - 0.5 / x - series)
}

/// `C_a = −γ − ψ(a)` for rational `a` outside `−ℕ₀`.
pub fn digamma_const(a: &ExactRational) -> Result<f64> {
    if a.is_integer() && !a.is_positive() {
        return Err(Error::Domain(format!("C_a is undefined at a = {a}")));
    }
    let af = a
        .to_f64()
        .ok_or_else(|| Error::Domain(format!("a = {a} is not representable")))?;
    Ok(-EULER_GAMMA - digamma(af)?)
}

fn bessel_series(j: u32, x: f64) -> f64 {
    let h = 0.5 * x;
    let h2 = h * h;
    let mut term = h.powi(j as i32) / factorial(j);
    let mut sum = term;
    for k in 1.. {
        term *= h2 / (f64::from(k) * f64::from(k + j));
        sum += term;
        if term <= 1e-17 * sum {
            break;
        }
    }
    sum
}

/// `√(2πx) e^{−x} I_j(x)` from the large-argument expansion, summed until
/// the terms stop decreasing.
fn bessel_asymptotic_core(j: u32, x: f64) -> f64 {
    let mu = 4.0 * f64::from(j) * f64::from(j);
    let mut term = 1.0_f64;
    let mut sum = 1.0;
    for k in 1..200u32 {
        let odd = f64::from(2 * k - 1);
        let next = -term * (mu - odd * odd) / (8.0 * f64::from(k) * x);
        if next.abs() >= term.abs() || next == 0.0 {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// Modified Bessel function `I_j(x)`; `I_{−j} = I_j` for integer order.
pub fn bessel_i(j: u32, x: f64) -> f64 {
    if x < 0.0 {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        return sign * bessel_i(j, -x);
    }
    if x <= SERIES_LIMIT {
        bessel_series(j, x)
    } else {
        bessel_asymptotic_core(j, x) * x.exp() / (2.0 * PI * x).sqrt()
    }
}

/// `e^{−x} I_j(x)`, finite for arguments where `I_j` itself overflows.
pub fn bessel_i_scaled(j: u32, x: f64) -> f64 {
    if x < 0.0 {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        return sign * bessel_i(j, -x) * x.exp();
    }
    if x <= SERIES_LIMIT {
        bessel_series(j, x) * (-x).exp()
    } else {
        bessel_asymptotic_core(j, x) / (2.0 * PI * x).sqrt()
    }
}

/// `ln I_j(x)` for `x > 0`.
pub fn ln_bessel_i(j: u32, x: f64) -> f64 {
    bessel_i_scaled(j, x).ln() + x
}

/// Distribution function of the logistic law with mean 0 and scale `1/π`.
pub fn logistic_cdf(x: f64) -> f64 {
    if x.is_infinite() {
        return if x > 0.0 { 1.0 } else { 0.0 };
    }
    1.0 / (1.0 + (-PI * x).exp())
}

/// Density of the same law.
pub fn logistic_pdf(x: f64) -> f64 {
    let e = (-PI * x.abs()).exp();
    PI * e / ((1.0 + e) * (1.0 + e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn zeta_values() {
        assert!(rel(zeta_value(2).unwrap(), PI * PI / 6.0) < 1e-14);
        assert!(rel(zeta_value(4).unwrap(), PI.powi(4) / 90.0) < 1e-14);
        assert!(rel(zeta_value(3).unwrap(), 1.202_056_903_159_594_3) < 1e-14);
        assert!(rel(zeta_value(5).unwrap(), 1.036_927_755_143_369_9) < 1e-14);
        assert!(zeta_value(1).is_err());
        assert!(zeta_value(0).is_err());
    }

    #[test]
    fn zeta_odd_against_brute_sum() {
        // Σ n^{-3} to 10^6 plus the integral tail 1/(2·10^12)
        let mut s = 0.0;
        for n in (1..=1_000_000u64).rev() {
            s += (n as f64).powi(-3);
        }
        s += 0.5e-12;
        assert!(rel(zeta_value(3).unwrap(), s) < 1e-12);
    }

    #[test]
    fn digamma_constants() {
        assert!(digamma_const(&q(1, 1)).unwrap().abs() < 1e-14);
        assert!((digamma_const(&q(1, 2)).unwrap() - 2.0 * 2f64.ln()).abs() < 1e-13);
        assert!((digamma_const(&q(2, 1)).unwrap() + 1.0).abs() < 1e-13);
        assert!(digamma_const(&q(0, 1)).is_err());
        assert!(digamma_const(&q(-3, 1)).is_err());
        // reflection ψ(1−x) − ψ(x) = π cot(πx)
        let x = 0.3;
        let lhs = digamma(1.0 - x).unwrap() - digamma(x).unwrap();
        assert!((lhs - PI / (PI * x).tan()).abs() < 1e-12);
    }

    #[test]
    fn bessel_values() {
        assert!((bessel_i(0, 1e-300) - 1.0).abs() < 1e-15);
        assert!(rel(bessel_i(1, 1.0), 0.565_159_103_992_485_1) < 1e-14);
        let lead = bessel_i_scaled(3, 50.0) * (2.0 * PI * 50.0).sqrt();
        assert!((lead - 1.0).abs() < 0.12);
    }

    #[test]
    fn bessel_recurrence() {
        for &x in &[1.0, 10.0, 100.0] {
            for j in 1..=6u32 {
                let lhs = bessel_i_scaled(j - 1, x) - bessel_i_scaled(j + 1, x);
                let rhs = 2.0 * f64::from(j) / x * bessel_i_scaled(j, x);
                assert!(rel(lhs, rhs) < 1e-10, "j={j} x={x}");
            }
        }
    }

    #[test]
    fn bessel_branches_agree_at_seam() {
        for j in 0..=6u32 {
            let x = SERIES_LIMIT;
            let s = bessel_series(j, x) * (-x).exp();
            let a = bessel_asymptotic_core(j, x) / (2.0 * PI * x).sqrt();
            assert!(rel(s, a) < 1e-12, "j={j}");
        }
    }

    #[test]
    fn logistic() {
        assert_eq!(logistic_cdf(0.0), 0.5);
        assert_eq!(logistic_cdf(f64::INFINITY), 1.0);
        assert!((logistic_cdf(1.0) - 0.958_576_167_8).abs() < 1e-10);
    }
}
