//! Ingham-type translation of `B(e^{−t}) ~ λ log(1/t)^α t^β e^{γ/t}` into
//! `b_n ~ λ γ^{β/2+1/4} / (2^{α+1}√π) · log(n)^α n^{−β/2−3/4} e^{2√(γn)}`.
//!
//! The translation is only valid for weakly increasing nonnegative `b_n`
//! and an angular growth bound that is assumed, not checked.

use std::f64::consts::PI;

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use super::main_terms::{bernoulli_half, AsymptoticEstimate, EstimateParams, FormulaTag};
use super::symbolic::{ClosedForm, SymbolicConstant};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TauberianInput {
    pub lambda: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// The same data with exact constants and rational exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicTauberianInput {
    pub lambda: SymbolicConstant,
    pub alpha: Rational64,
    pub beta: Rational64,
    pub gamma: SymbolicConstant,
}

fn rf(e: Rational64) -> f64 {
    *e.numer() as f64 / *e.denom() as f64
}

impl SymbolicTauberianInput {
    pub fn numeric(&self) -> TauberianInput {
        TauberianInput {
            lambda: self.lambda.to_f64(),
            alpha: rf(self.alpha),
            beta: rf(self.beta),
            gamma: self.gamma.to_f64(),
        }
    }
}

pub fn ingham_translate(t: &TauberianInput, n: f64) -> Result<AsymptoticEstimate> {
    if !(t.gamma > 0.0) {
        return Err(Error::Domain(format!("gamma = {} must be positive", t.gamma)));
    }
    if !(t.lambda > 0.0) {
        return Err(Error::Domain(format!("lambda = {} must be positive", t.lambda)));
    }
    if t.alpha != 0.0 && n <= 1.0 {
        return Err(Error::Domain(format!("log(n)^alpha needs n > 1, got {n}")));
    }
    if !(n > 0.0) {
        return Err(Error::Domain(format!("n = {n} must be positive")));
    }
    let log_part = if t.alpha == 0.0 { 0.0 } else { t.alpha * n.ln().ln() };
    let ln_value = t.lambda.ln() + (t.beta / 2.0 + 0.25) * t.gamma.ln()
        - (t.alpha + 1.0) * 2f64.ln()
        - 0.5 * PI.ln()
        + log_part
        - (t.beta / 2.0 + 0.75) * n.ln()
        + 2.0 * (t.gamma * n).sqrt();
    let params = EstimateParams {
        n: Some(n),
        ..Default::default()
    };
    Ok(AsymptoticEstimate {
        value: ln_value.exp(),
        ln_value,
        tag: FormulaTag::Ingham,
        params,
    })
}

/// The translated main term as an exact closed form in `n`.
pub fn ingham_closed_form(t: &SymbolicTauberianInput) -> Result<ClosedForm> {
    if t.gamma.sign() <= 0 {
        return Err(Error::Domain(format!("gamma = {} must be positive", t.gamma)));
    }
    if t.lambda.sign() <= 0 {
        return Err(Error::Domain(format!("lambda = {} must be positive", t.lambda)));
    }
    let quarter = Rational64::new(1, 4);
    let half = Rational64::new(1, 2);
    let coeff = &t.lambda * &t.gamma.pow(t.beta * half + quarter);
    let coeff = coeff
        * SymbolicConstant::int_pow(2, -(t.alpha + Rational64::from(1)))
        * SymbolicConstant::pi_pow(-half);
    Ok(ClosedForm {
        coeff,
        log_power: t.alpha,
        n_power: -(t.beta * half) - Rational64::new(3, 4),
        exp_sqrt: SymbolicConstant::from_i64(2) * t.gamma.pow(half),
    })
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn moment_lambda(k: u32, scale: i64) -> SymbolicConstant {
    // (1/scale)(−1)^k B_{2k}(1/2)(2π)^{2k−1}
    let sign = SymbolicConstant::from_i64(if k % 2 == 0 { 1 } else { -1 });
    let two_pi = SymbolicConstant::from_i64(2) * SymbolicConstant::pi();
    sign * bernoulli_half(k) * two_pi.pow(r(2 * k as i64 - 1, 1)) * SymbolicConstant::from_i64(scale).recip()
}

/// `U_{2k}(e^{−w}) ~ ½(−1)^k B_{2k}(1/2) (w/2π)^{1−2k} e^{π²/(3w)}`.
pub fn unimodal_moment_input(k: u32) -> SymbolicTauberianInput {
    SymbolicTauberianInput {
        lambda: moment_lambda(k, 2),
        alpha: Rational64::zero(),
        beta: r(1 - 2 * k as i64, 1),
        gamma: SymbolicConstant::pi_pow(r(2, 1)) * SymbolicConstant::from_i64(3).recip(),
    }
}

/// `V_{2k}(e^{−w}) ~ ⅓(−1)^k B_{2k}(1/2) (w/2π)^{1−2k} e^{π²/(3w)}`.
pub fn durfee_moment_input(k: u32) -> SymbolicTauberianInput {
    SymbolicTauberianInput {
        lambda: moment_lambda(k, 3),
        ..unimodal_moment_input(k)
    }
}

/// `D_k(e^{−w}) ~ (1/(4√π)) Log(1/w)^k w^{1/2−k} e^{π²/(4w)}`.
pub fn semistrict_moment_input(k: u32) -> SymbolicTauberianInput {
    SymbolicTauberianInput {
        lambda: SymbolicConstant::from_i64(4).recip() * SymbolicConstant::pi_pow(r(-1, 2)),
        alpha: r(k as i64, 1),
        beta: r(1 - 2 * k as i64, 2),
        gamma: SymbolicConstant::pi_pow(r(2, 1)) * SymbolicConstant::from_i64(4).recip(),
    }
}

/// `1/(e^{−w}; e^{−w})_∞ ~ (2π)^{−1/2} w^{1/2} e^{π²/(6w)}`, the reciprocal of
/// the Euler-product main term.
pub fn partition_input() -> SymbolicTauberianInput {
    SymbolicTauberianInput {
        lambda: SymbolicConstant::from_i64(2).pow(r(-1, 2)) * SymbolicConstant::pi_pow(r(-1, 2)),
        alpha: Rational64::zero(),
        beta: r(1, 2),
        gamma: SymbolicConstant::pi_pow(r(2, 1)) * SymbolicConstant::from_i64(6).recip(),
    }
}
