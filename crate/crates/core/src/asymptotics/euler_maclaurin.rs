//! Numerical Euler–Maclaurin instrument: accumulates `Σ_{m≥0} f(w(m+a))`
//! (or its alternating version) directly, assembles the asymptotic expansion
//! from supplied Taylor or Laurent data, and reports the difference.
//!
//! The direct sums stop once a tail bound derived from the caller's decay
//! certificate falls below double-precision resolution, so the engine never
//! relies on the expansion it is measuring.

use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::quadrature::integrate_half_line;
use crate::error::{Error, Result};
use crate::series::ExactRational;
use crate::special::{bernoulli_polys, digamma_const, euler_polys};

const MAX_TERMS: u64 = 200_000_000;
const QUAD_TOL: f64 = 1e-14;

/// A majorant `|f(x)| ≤ bound(x)` valid for `x ≥ from`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Decay {
    /// `c·e^{−rate·x}`.
    Exponential { c: f64, rate: f64, from: f64 },
    /// `c·e^{−rate·x²}`.
    Gaussian { c: f64, rate: f64, from: f64 },
    /// `c·x^{−1−eps}`.
    Power { c: f64, eps: f64, from: f64 },
}

impl Decay {
    fn from(&self) -> f64 {
        match *self {
            Decay::Exponential { from, .. } | Decay::Gaussian { from, .. } | Decay::Power { from, .. } => from,
        }
    }

    fn bound(&self, x: f64) -> f64 {
        match *self {
            Decay::Exponential { c, rate, .. } => c * (-rate * x).exp(),
            Decay::Gaussian { c, rate, .. } => c * (-rate * x * x).exp(),
            Decay::Power { c, eps, .. } => c * x.powf(-1.0 - eps),
        }
    }

    /// Bound on `Σ_{j≥0} |f(x + j·w)|` for `x ≥ from`.
    fn tail(&self, x: f64, w: f64) -> f64 {
        match *self {
            Decay::Exponential { rate, .. } => self.bound(x) / -(-rate * w).exp_m1(),
            Decay::Gaussian { rate, .. } => {
                // consecutive ratios are at most e^{−rate·w·(2x + w)} ≤ e^{−2·rate·w·x}
                let q = (-2.0 * rate * w * x).exp();
                if q >= 1.0 {
                    f64::INFINITY
                } else {
                    self.bound(x) / (1.0 - q)
                }
            }
            Decay::Power { c, eps, .. } => self.bound(x) + c * x.powf(-eps) / (eps * w),
        }
    }
}

/// Test function for the engine.
#[derive(Clone)]
pub struct ExpansionInput {
    pub label: String,
    pub f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    /// `f^{(n)}(0)` for `n = 0, 1, …`; for a pole, the Laurent coefficients
    /// `b_0, b_1, …` of `f(x) = b_{−1}/x + Σ b_n xⁿ`.
    pub taylor: Vec<f64>,
    /// `b_{−1}` when `f` has a simple pole at 0.
    pub residue: Option<f64>,
    pub shift: ExactRational,
    /// Number of expansion terms `N`.
    pub order: usize,
    pub decay: Decay,
}

impl fmt::Debug for ExpansionInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExpansionInput")
            .field("label", &self.label)
            .field("taylor", &self.taylor)
            .field("residue", &self.residue)
            .field("shift", &self.shift.to_string())
            .field("order", &self.order)
            .field("decay", &self.decay)
            .finish()
    }
}

impl ExpansionInput {
    pub fn new(
        label: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        taylor: Vec<f64>,
        shift: ExactRational,
        order: usize,
        decay: Decay,
    ) -> Self {
        Self {
            label: label.into(),
            f: Arc::new(f),
            taylor,
            residue: None,
            shift,
            order,
            decay,
        }
    }

    pub fn with_pole(mut self, residue: f64) -> Self {
        self.residue = Some(residue);
        self
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = order;
        self
    }

    fn shift_f64(&self) -> f64 {
        self.shift.to_f64().unwrap_or(f64::NAN)
    }

    /// Compares `f(h)` with the truncated local expansion at a few small `h`.
    fn check_local_data(&self) -> Result<()> {
        if self.taylor.len() < self.order {
            return Err(Error::Domain(format!(
                "{}: {} Taylor coefficients supplied, {} needed",
                self.label,
                self.taylor.len(),
                self.order
            )));
        }
        for h in [1e-3, 2e-3] {
            let mut fact = 1.0;
            let mut pow = 1.0;
            let mut approx = self.residue.map_or(0.0, |b| b / h);
            for (n, c) in self.taylor.iter().enumerate() {
                if n > 0 {
                    pow *= h;
                    if self.residue.is_none() {
                        fact *= n as f64;
                    }
                }
                approx += c * pow / fact;
            }
            let exact = (self.f)(h);
            let scale = exact.abs().max(1.0);
            if (exact - approx).abs() > 1e-6 * scale {
                return Err(Error::Domain(format!(
                    "{}: local data disagrees with f at {h}: {approx} vs {exact}",
                    self.label
                )));
            }
        }
        Ok(())
    }
}

/// Outcome of one engine evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EmResult {
    pub w: f64,
    pub sum: f64,
    pub expansion: f64,
    pub remainder: f64,
    /// Floating-point resolution of `remainder`: differences below this are
    /// rounding noise.
    pub resolution: f64,
    pub terms: u64,
}

impl EmResult {
    pub fn resolved(&self) -> bool {
        self.remainder.abs() > 4.0 * self.resolution
    }
}

/// Compensated (Neumaier) summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
    abs: f64,
}

impl NeumaierSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += x.abs();
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// `Σ |x|`, the scale of the accumulated rounding error.
    pub fn abs_total(&self) -> f64 {
        self.abs
    }
}

fn direct_sum(inp: &ExpansionInput, w: f64, alternating: bool) -> Result<(f64, f64, u64)> {
    let a = inp.shift_f64();
    let mut acc = NeumaierSum::default();
    let from = inp.decay.from();
    for m in 0..MAX_TERMS {
        let x = w * (m as f64 + a);
        let v = (inp.f)(x);
        if x >= from && v.abs() > inp.decay.bound(x) * (1.0 + 1e-9) + f64::MIN_POSITIVE {
            return Err(Error::DecayViolation(format!(
                "{}: |f({x})| = {} exceeds the certified bound {}",
                inp.label,
                v.abs(),
                inp.decay.bound(x)
            )));
        }
        let sign = if alternating && m % 2 == 1 { -1.0 } else { 1.0 };
        acc.add(sign * v);
        let next = x + w;
        if next >= from {
            let tail = inp.decay.tail(next, w);
            if tail <= 1e-17 * acc.value().abs() || tail < 1e-300 {
                return Ok((acc.value(), acc.abs_total(), m + 1));
            }
        }
    }
    Err(Error::DecayViolation(format!(
        "{}: tail bound still above resolution after {MAX_TERMS} terms at w = {w}",
        inp.label
    )))
}

fn check_w(w: f64) -> Result<()> {
    if w > 0.0 && w.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("w = {w} must be positive")))
    }
}

const EPS_FACTOR: f64 = 32.0 * f64::EPSILON;

/// `Σ f(w(m+a)) = (1/w)∫₀^∞ f − Σ_{n<N} B_{n+1}(a) f^{(n)}(0) wⁿ/(n+1)! + O(w^N)`.
pub fn em_expand(inp: &ExpansionInput, w: f64) -> Result<EmResult> {
    check_w(w)?;
    if inp.residue.is_some() {
        return Err(Error::Domain(format!("{}: use the pole variant", inp.label)));
    }
    if inp.shift.is_negative() {
        return Err(Error::Domain(format!("{}: shift must be ≥ 0", inp.label)));
    }
    inp.check_local_data()?;
    let (sum, abs_sum, terms) = direct_sum(inp, w, false)?;
    let f = inp.f.clone();
    let integral = integrate_half_line(move |x| f(x), QUAD_TOL);
    let bern = bernoulli_polys(inp.order + 1);
    let mut exp = NeumaierSum::default();
    exp.add(integral.value / w);
    let mut fact = 1.0;
    let mut wn = 1.0;
    for n in 0..inp.order {
        fact *= (n + 1) as f64;
        let b = bern[n + 1].eval(&inp.shift).to_f64().unwrap_or(f64::NAN);
        exp.add(-b * inp.taylor[n] * wn / fact);
        wn *= w;
    }
    let expansion = exp.value();
    Ok(EmResult {
        w,
        sum,
        expansion,
        remainder: sum - expansion,
        resolution: EPS_FACTOR * (abs_sum + exp.abs_total()) + integral.error / w,
        terms,
    })
}

/// `Σ (−1)^m f(w(m+a)) = ½ Σ_{n<N} E_n(a) f^{(n)}(0) wⁿ/n! + O(w^N)`.
pub fn em_expand_alternating(inp: &ExpansionInput, w: f64) -> Result<EmResult> {
    check_w(w)?;
    if inp.residue.is_some() {
        return Err(Error::Domain(format!("{}: use the pole variant", inp.label)));
    }
    if inp.shift.is_negative() {
        return Err(Error::Domain(format!("{}: shift must be ≥ 0", inp.label)));
    }
    inp.check_local_data()?;
    let (sum, abs_sum, terms) = direct_sum(inp, w, true)?;
    let euler = euler_polys(inp.order);
    let mut exp = NeumaierSum::default();
    let mut fact = 1.0;
    let mut wn = 1.0;
    for n in 0..inp.order {
        if n > 0 {
            fact *= n as f64;
        }
        let e = euler[n].eval(&inp.shift).to_f64().unwrap_or(f64::NAN);
        exp.add(0.5 * e * inp.taylor[n] * wn / fact);
        wn *= w;
    }
    let expansion = exp.value();
    Ok(EmResult {
        w,
        sum,
        expansion,
        remainder: sum - expansion,
        resolution: EPS_FACTOR * (abs_sum + exp.abs_total()),
        terms,
    })
}

/// For `f(x) = b_{−1}/x + Σ b_n xⁿ`:
/// `Σ f(w(m+a)) = −b_{−1} Log(w)/w + b_{−1} C_a/w + (1/w)∫₀^∞(f − b_{−1}e^{−x}/x)
///  − Σ_{n<N} B_{n+1}(a) b_n wⁿ/(n+1) + O(w^N)`, with `C_a = −γ − ψ(a)`.
pub fn em_expand_pole(inp: &ExpansionInput, w: f64) -> Result<EmResult> {
    check_w(w)?;
    let b_1 = inp
        .residue
        .ok_or_else(|| Error::Domain(format!("{}: no residue supplied", inp.label)))?;
    let c_a = digamma_const(&inp.shift)?;
    if !inp.shift.is_positive() {
        return Err(Error::Domain(format!(
            "{}: shift {} puts a term on the pole or the negative axis",
            inp.label, inp.shift
        )));
    }
    inp.check_local_data()?;
    let (sum, abs_sum, terms) = direct_sum(inp, w, false)?;
    let f = inp.f.clone();
    let integral = integrate_half_line(move |x| f(x) - b_1 * (-x).exp() / x, QUAD_TOL);
    let bern = bernoulli_polys(inp.order + 1);
    let mut exp = NeumaierSum::default();
    exp.add(-b_1 * w.ln() / w);
    exp.add(b_1 * c_a / w);
    exp.add(integral.value / w);
    let mut wn = 1.0;
    for n in 0..inp.order {
        let b = bern[n + 1].eval(&inp.shift).to_f64().unwrap_or(f64::NAN);
        exp.add(-b * inp.taylor[n] * wn / (n + 1) as f64);
        wn *= w;
    }
    let expansion = exp.value();
    Ok(EmResult {
        w,
        sum,
        expansion,
        remainder: sum - expansion,
        resolution: EPS_FACTOR * (abs_sum + exp.abs_total()) + integral.error / w,
        terms,
    })
}

/// Least-squares slope of `ln|remainder|` against `ln w`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RemainderFit {
    /// `f64::INFINITY` when no remainder rises above rounding noise, i.e.
    /// the truncated expansion is exact to double precision on the grid.
    pub slope: f64,
    pub resolved_points: usize,
}

pub fn fit_remainder_order(results: &[EmResult]) -> RemainderFit {
    let pts: Vec<(f64, f64)> = results
        .iter()
        .filter(|r| r.resolved())
        .map(|r| (r.w.ln(), r.remainder.abs().ln()))
        .collect();
    if pts.len() < 2 {
        return RemainderFit {
            slope: f64::INFINITY,
            resolved_points: pts.len(),
        };
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    RemainderFit {
        slope: sxy / sxx,
        resolved_points: pts.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn exponential(order: usize) -> ExpansionInput {
        ExpansionInput::new(
            "exp",
            |x: f64| (-x).exp(),
            vec![1.0, -1.0, 1.0, -1.0, 1.0],
            q(1, 1),
            order,
            Decay::Exponential { c: 1.0, rate: 1.0, from: 0.0 },
        )
    }

    #[test]
    fn geometric_closed_form() {
        let w: f64 = 0.1;
        let r = em_expand(&exponential(3), w).unwrap();
        assert!((r.sum - (-w).exp() / -(-w).exp_m1()).abs() < 1e-12);
        // 1/(e^w − 1) = 1/w − 1/2 + w/12 − w³/720 + …
        assert!((r.remainder + w.powi(3) / 720.0).abs() < 1e-8);
    }

    #[test]
    fn alternating_geometric() {
        let w: f64 = 0.1;
        let inp = exponential(4).with_order(4);
        let inp = ExpansionInput { shift: q(0, 1), ..inp };
        let r = em_expand_alternating(&inp, w).unwrap();
        assert!((r.sum - 1.0 / (1.0 + (-w).exp())).abs() < 1e-14);
        assert!(r.remainder.abs() < 1e-6);
    }

    #[test]
    fn decay_violation_detected() {
        let bad = ExpansionInput::new(
            "liar",
            |x: f64| (-x).exp(),
            vec![1.0, -1.0, 1.0, -1.0],
            q(1, 1),
            2,
            Decay::Exponential { c: 1.0, rate: 2.0, from: 0.0 },
        );
        assert!(matches!(em_expand(&bad, 0.1), Err(Error::DecayViolation(_))));
    }

    #[test]
    fn wrong_local_data_rejected() {
        let bad = ExpansionInput {
            taylor: vec![2.0, -1.0],
            ..exponential(2)
        };
        assert!(matches!(em_expand(&bad, 0.1), Err(Error::Domain(_))));
    }

    #[test]
    fn pole_requires_admissible_shift() {
        let f = |x: f64| 1.0 / (2.0 * x).exp_m1();
        let inp = ExpansionInput::new(
            "pole",
            f,
            vec![-0.5, 1.0 / 6.0],
            q(0, 1),
            2,
            Decay::Exponential { c: 1.0, rate: 2.0, from: 1.0 },
        )
        .with_pole(0.5);
        assert!(em_expand_pole(&inp, 0.1).is_err());
        let inp = ExpansionInput { shift: q(-2, 1), ..inp };
        assert!(em_expand_pole(&inp, 0.1).is_err());
    }

    #[test]
    fn neumaier_recovers_small_terms() {
        let mut s = NeumaierSum::default();
        s.add(1.0);
        s.add(1e100);
        s.add(1.0);
        s.add(-1e100);
        assert_eq!(s.value(), 2.0);
    }
}
