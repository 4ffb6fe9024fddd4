//! Coefficientwise checks of the three decompositions
//!
//! ```text
//! U(ζ;q) = C(ζ;q)·G₁(ζ;q) + H₁(ζ;q)
//! V(ζ;q) = C(ζ;q)·G₂(ζ;q) + H₂(ζ;q)
//! D(ζ;q) = D*(ζ;q) + q(1 − ζ⁻¹)/(1 + ζ⁻²q)
//! ```
//!
//! The left sides come from the table builders; the right sides are built
//! independently from theta-type sums and infinite products.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::builders::{crank_series, durfee_series, semistrict_series, unimodal_series};
use crate::error::Result;
use crate::series::{
    divide_by_pochhammer, pochhammer_infinite, Binomial, BivariateSeries, PochhammerFactor,
    ZetaLaurent,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Identity {
    U,
    V,
    D,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Identity::U => "U = C*G1 + H1",
            Identity::V => "V = C*G2 + H2",
            Identity::D => "D = D* + q(1-1/z)/(1+q/z^2)",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Identity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "U" | "u" => Ok(Identity::U),
            "V" | "v" => Ok(Identity::V),
            "D" | "d" => Ok(Identity::D),
            other => Err(format!("unknown identity `{other}` (expected U, V or D)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub order: usize,
    /// `q`-power at which the right side was perturbed, if any.
    pub perturbed_at: Option<usize>,
    pub first_mismatch: Option<Mismatch>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Builds both sides to `order` and reports the first differing
/// `q`-coefficient. `perturb_at = Some(k)` adds 1 to the `q^k` coefficient of
/// the G-part (G₁, G₂ or D*) before assembling the right side, to exercise
/// the detector.
pub fn verify_identity(
    identity: Identity,
    order: usize,
    perturb_at: Option<usize>,
) -> Result<IdentityReport> {
    let perturb = |s: &mut BivariateSeries| {
        if let Some(k) = perturb_at.filter(|&k| k <= order) {
            *s.coeff_mut(k) += &ZetaLaurent::one();
        }
    };
    let (lhs, rhs) = match identity {
        Identity::U => {
            let mut g = g1(order)?;
            perturb(&mut g);
            let rhs = crank_series(order, &mut |_, _| {}).mul(&g)?.add(&h1(order))?;
            (unimodal_series(order, &mut |_, _| {}), rhs)
        }
        Identity::V => {
            let mut g = g2(order)?;
            perturb(&mut g);
            let rhs = crank_series(order, &mut |_, _| {}).mul(&g)?.add(&h2(order))?;
            (durfee_series(order, &mut |_, _| {}), rhs)
        }
        Identity::D => {
            let mut star = d_star(order)?;
            perturb(&mut star);
            let rhs = star.add(&d_correction(order)?)?;
            (semistrict_series(order, &mut |_, _| {}), rhs)
        }
    };
    let first_mismatch = lhs.first_difference(&rhs)?.map(|n| Mismatch {
        n,
        lhs: lhs.coeff(n).to_string(),
        rhs: rhs.coeff(n).to_string(),
    });
    Ok(IdentityReport {
        identity,
        order,
        perturbed_at: perturb_at,
        first_mismatch,
    })
}

fn reciprocal_euler(order: usize) -> Result<BivariateSeries> {
    let mut s = BivariateSeries::one(order);
    divide_by_pochhammer(&mut s, &[PochhammerFactor::plus(0, 1)], None)?;
    Ok(s)
}

fn add_term(s: &mut BivariateSeries, c: i64, zeta_exp: i64, q_exp: usize) {
    if q_exp <= s.order() {
        *s.coeff_mut(q_exp) += &ZetaLaurent::monomial(BigInt::from(c), zeta_exp);
    }
}

/// `G₁ = (1/(q)_∞) Σ_{n≥0} (−1)ⁿ ζ^{2n+1} q^{n(n+1)/2}`.
fn g1(order: usize) -> Result<BivariateSeries> {
    let mut theta = BivariateSeries::zero(order);
    for n in (0..).take_while(|n| n * (n + 1) / 2 <= order) {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        add_term(&mut theta, sign, 2 * n as i64 + 1, n * (n + 1) / 2);
    }
    theta.mul(&reciprocal_euler(order)?)
}

/// `H₁ = (1 − ζ) Σ_{n≥0} (−1)ⁿ ζ^{3n} q^{n(3n+1)/2} (1 − ζ² q^{2n+1})`.
fn h1(order: usize) -> BivariateSeries {
    let mut sum = BivariateSeries::zero(order);
    for n in (0..).take_while(|n| n * (3 * n + 1) / 2 <= order) {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let e = n * (3 * n + 1) / 2;
        let z = 3 * n as i64;
        add_term(&mut sum, sign, z, e);
        add_term(&mut sum, -sign, z + 2, e + 2 * n + 1);
    }
    sum.mul_binomial(Binomial::minus(1, 0));
    sum
}

/// `G₂ = (1/(q)_∞) Σ_{n≥0} ζ^{3n+1} q^{3n²+2n} (1 − ζ q^{2n+1})`.
fn g2(order: usize) -> Result<BivariateSeries> {
    let mut theta = BivariateSeries::zero(order);
    for n in (0..).take_while(|n| 3 * n * n + 2 * n <= order) {
        let e = 3 * n * n + 2 * n;
        add_term(&mut theta, 1, 3 * n as i64 + 1, e);
        add_term(&mut theta, -1, 3 * n as i64 + 2, e + 2 * n + 1);
    }
    theta.mul(&reciprocal_euler(order)?)
}

/// `H₂ = (1 − ζ) Σ_{n≥0} ζⁿ q^{n²+n}`.
fn h2(order: usize) -> BivariateSeries {
    let mut sum = BivariateSeries::zero(order);
    for n in (0..).take_while(|n| n * n + n <= order) {
        add_term(&mut sum, 1, n as i64, n * n + n);
    }
    sum.mul_binomial(Binomial::minus(1, 0));
    sum
}

/// `D* = q (−ζ⁻¹q)_∞ / (ζ (1 + ζ⁻²q) (ζq)_∞)`.
fn d_star(order: usize) -> Result<BivariateSeries> {
    let mut s = pochhammer_infinite(&[PochhammerFactor::minus(-1, 1)], order)?;
    divide_by_pochhammer(&mut s, &[PochhammerFactor::plus(1, 1)], None)?;
    s.div_binomial(Binomial::plus(-2, 1))?;
    s.shift_q(1);
    s.shift_zeta(-1);
    Ok(s)
}

/// `q (1 − ζ⁻¹) / (1 + ζ⁻²q)`.
fn d_correction(order: usize) -> Result<BivariateSeries> {
    let mut s = BivariateSeries::zero(order);
    add_term(&mut s, 1, 0, 1);
    add_term(&mut s, -1, -1, 1);
    s.div_binomial(Binomial::plus(-2, 1))?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold_at_small_order() {
        for id in [Identity::U, Identity::V, Identity::D] {
            let r = verify_identity(id, 20, None).unwrap();
            assert!(r.holds(), "{id}: {:?}", r.first_mismatch);
        }
    }

    #[test]
    fn order_zero_and_one() {
        for id in [Identity::U, Identity::V] {
            assert!(verify_identity(id, 0, None).unwrap().holds());
        }
        assert!(verify_identity(Identity::D, 1, None).unwrap().holds());
        let q = BivariateSeries::monomial(BigInt::from(1), 0, 1, 1);
        let rhs = d_star(1).unwrap().add(&d_correction(1).unwrap()).unwrap();
        assert_eq!(rhs, q);
    }

    #[test]
    fn perturbation_located() {
        for id in [Identity::U, Identity::V, Identity::D] {
            let r = verify_identity(id, 12, Some(7)).unwrap();
            assert_eq!(r.first_mismatch.map(|m| m.n), Some(7), "{id}");
        }
    }
}
