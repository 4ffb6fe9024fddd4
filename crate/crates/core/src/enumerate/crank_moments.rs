//! Crank moment generating functions `C_{2k}(q) = Σ_n Σ_m m^{2k} M(m,n) qⁿ`
//! without building the bivariate crank table.
//!
//! With `ζ = e^z`,
//!
//! ```text
//! C(e^z; q) / P(q) = exp( Σ_{i≥1} z^{2i}/(2i)! · A_{2i}(q) ),   A_{2i} = 2 Σ_n σ_{2i−1}(n) qⁿ
//! ```
//!
//! so the exponential-generating coefficients `e_m` of the left side satisfy
//! `e_m = Σ_{l=1}^{m} C(m−1, l−1) A_l e_{m−l}` and `C_{2k} = P·e_{2k}`. Every
//! quantity is an integer series.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::brute::partition_counts_dp;

fn mul_truncated(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let len = a.len().min(b.len());
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Divisor power sums `2σ_{p}(n)` for `1 ≤ n ≤ order`.
fn twice_sigma(p: u32, order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for d in 1..=order {
        let dp = BigInt::from(d).pow(p) * 2;
        for n in (d..=order).step_by(d) {
            out[n] += &dp;
        }
    }
    out
}

/// Coefficients of `C_{2k}(q)` for `n = 0..=order`. At `n = 1` this follows
/// the product convention `M(±1,1) = 1, M(0,1) = −1`.
pub fn crank_moment_series(two_k: u32, order: usize) -> Vec<BigInt> {
    assert!(two_k % 2 == 0, "odd crank moments vanish identically");
    let m_max = two_k as usize;
    let a: Vec<Vec<BigInt>> = (0..=m_max)
        .map(|l| {
            if l == 0 || l % 2 == 1 {
                vec![BigInt::zero(); order + 1]
            } else {
                twice_sigma(l as u32 - 1, order)
            }
        })
        .collect();
    let mut e: Vec<Vec<BigInt>> = Vec::with_capacity(m_max + 1);
    let mut unit = vec![BigInt::zero(); order + 1];
    unit[0] = BigInt::one();
    e.push(unit);
    for m in 1..=m_max {
        let mut em = vec![BigInt::zero(); order + 1];
        for l in (2..=m).step_by(2) {
            let c = binomial(m - 1, l - 1);
            for (slot, v) in em.iter_mut().zip(mul_truncated(&a[l], &e[m - l])) {
                *slot += &c * v;
            }
        }
        e.push(em);
    }
    mul_truncated(&partition_counts_dp(order), &e[m_max])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::build_crank_table;

    #[test]
    fn matches_crank_table() {
        let t = build_crank_table(40);
        for two_k in [0u32, 2, 4, 6] {
            let s = crank_moment_series(two_k, 40);
            for (n, c) in s.iter().enumerate() {
                assert_eq!(c, &t.rows()[n].moment(two_k), "2k={two_k} n={n}");
            }
        }
    }

    #[test]
    fn second_moment_is_twice_n_p_n() {
        // Dyson: Σ m² M(m,n) = 2n p(n) for n > 1
        let s = crank_moment_series(2, 30);
        let p = partition_counts_dp(30);
        for n in 2..=30 {
            assert_eq!(s[n], BigInt::from(2 * n) * &p[n]);
        }
    }
}
