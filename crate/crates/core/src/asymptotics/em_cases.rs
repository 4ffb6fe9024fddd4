//! The documented test integrands for the Euler–Maclaurin engine.

use std::f64::consts::E;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::euler_maclaurin::{
    em_expand, em_expand_alternating, em_expand_pole, fit_remainder_order, Decay, EmResult,
    ExpansionInput, RemainderFit,
};
use crate::error::Result;
use crate::series::ExactRational;

/// Step sizes of the remainder-order fits.
pub const EM_GRID: [f64; 5] = [0.1, 0.05, 0.025, 0.0125, 0.00625];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmCase {
    /// `e^{−x}`, shift 1.
    Exponential,
    /// `x² e^{−x²/2}`, shift 1/2. Every expansion coefficient vanishes.
    Gaussian,
    /// `x² e^{−3x²}` summed at shift 1/3 minus shift 2/3.
    DifferencedGaussian,
    /// `(−1)^m e^{−x}`, shift 0.
    AlternatingExponential,
    /// `(−1)^m e^{−x²/2}`, shift 1/2.
    AlternatingGaussian,
    /// `e^{−2x}/(1 − e^{−2x})`, shift 1, simple pole with residue 1/2.
    Pole,
}

impl EmCase {
    pub const ALL: [EmCase; 6] = [
        EmCase::Exponential,
        EmCase::Gaussian,
        EmCase::DifferencedGaussian,
        EmCase::AlternatingExponential,
        EmCase::AlternatingGaussian,
        EmCase::Pole,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EmCase::Exponential => "exponential",
            EmCase::Gaussian => "gaussian",
            EmCase::DifferencedGaussian => "differenced-gaussian",
            EmCase::AlternatingExponential => "alternating-exponential",
            EmCase::AlternatingGaussian => "alternating-gaussian",
            EmCase::Pole => "pole",
        }
    }

    /// Engine input at `order` terms (the differenced case returns the
    /// shift-1/3 half; see [`run`](Self::run)).
    pub fn input(self, order: usize) -> ExpansionInput {
        let q = |n: i64, d: i64| ExactRational::new(BigInt::from(n), BigInt::from(d));
        match self {
            EmCase::Exponential => ExpansionInput::new(
                self.as_str(),
                |x: f64| (-x).exp(),
                vec![1.0, -1.0, 1.0, -1.0, 1.0, -1.0],
                q(1, 1),
                order,
                Decay::Exponential { c: 1.0, rate: 1.0, from: 0.0 },
            ),
            EmCase::Gaussian => ExpansionInput::new(
                self.as_str(),
                |x: f64| x * x * (-0.5 * x * x).exp(),
                vec![0.0, 0.0, 2.0, 0.0, -12.0, 0.0],
                q(1, 2),
                order,
                // max x² e^{−x²/4} = 4/e
                Decay::Gaussian { c: 4.0 / E, rate: 0.25, from: 0.0 },
            ),
            EmCase::DifferencedGaussian => ExpansionInput::new(
                self.as_str(),
                |x: f64| x * x * (-3.0 * x * x).exp(),
                vec![0.0, 0.0, 2.0, 0.0, -72.0, 0.0, 3240.0],
                q(1, 3),
                order,
                // max x² e^{−3x²/2} = 2/(3e)
                Decay::Gaussian { c: 2.0 / (3.0 * E), rate: 1.5, from: 0.0 },
            ),
            EmCase::AlternatingExponential => ExpansionInput {
                shift: q(0, 1),
                ..EmCase::Exponential.input(order)
            },
            EmCase::AlternatingGaussian => ExpansionInput::new(
                self.as_str(),
                |x: f64| (-0.5 * x * x).exp(),
                vec![1.0, 0.0, -1.0, 0.0, 3.0, 0.0, -15.0],
                q(1, 2),
                order,
                Decay::Gaussian { c: 1.0, rate: 0.5, from: 0.0 },
            ),
            EmCase::Pole => ExpansionInput::new(
                self.as_str(),
                |x: f64| 1.0 / (2.0 * x).exp_m1(),
                // b_{n−1} = 2^{n−1} B_n / n!
                vec![-0.5, 1.0 / 6.0, 0.0, -1.0 / 90.0, 0.0, 1.0 / 945.0],
                q(1, 1),
                order,
                Decay::Exponential { c: 1.0 / -(-2f64).exp_m1(), rate: 2.0, from: 1.0 },
            )
            .with_pole(0.5),
        }
    }

    pub fn run(self, order: usize, w: f64) -> Result<EmResult> {
        let inp = self.input(order);
        match self {
            EmCase::Exponential | EmCase::Gaussian => em_expand(&inp, w),
            EmCase::AlternatingExponential | EmCase::AlternatingGaussian => {
                em_expand_alternating(&inp, w)
            }
            EmCase::Pole => em_expand_pole(&inp, w),
            EmCase::DifferencedGaussian => {
                let third = em_expand(&inp, w)?;
                let two_thirds = em_expand(
                    &ExpansionInput {
                        shift: ExactRational::new(BigInt::from(2), BigInt::from(3)),
                        ..inp
                    },
                    w,
                )?;
                Ok(EmResult {
                    w,
                    sum: third.sum - two_thirds.sum,
                    expansion: third.expansion - two_thirds.expansion,
                    remainder: third.remainder - two_thirds.remainder,
                    resolution: third.resolution + two_thirds.resolution,
                    terms: third.terms + two_thirds.terms,
                })
            }
        }
    }

    /// Engine results on [`EM_GRID`] and the fitted remainder order.
    pub fn remainder_order(self, order: usize) -> Result<(Vec<EmResult>, RemainderFit)> {
        let results = EM_GRID
            .iter()
            .map(|&w| self.run(order, w))
            .collect::<Result<Vec<_>>>()?;
        let fit = fit_remainder_order(&results);
        Ok((results, fit))
    }
}

impl fmt::Display for EmCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EmCase {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        EmCase::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<_> = EmCase::ALL.iter().map(|c| c.as_str()).collect();
                format!("unknown case `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// `L(1; e^{−w}) = −1 + 2q/(1+q) − Σ qⁿ/(1+qⁿ) + Σ qⁿ/(1−qⁿ)` summed
/// directly, and its ratio to `−Log(w)/w`.
pub fn pole_leading_ratio(w: f64) -> (f64, f64) {
    let q = (-w).exp();
    let mut acc = super::euler_maclaurin::NeumaierSum::default();
    acc.add(-1.0);
    acc.add(2.0 * q / (1.0 + q));
    for n in 1.. {
        let qn = (-w * n as f64).exp();
        let t = qn / -(-w * n as f64).exp_m1() - qn / (1.0 + qn);
        acc.add(t);
        if t < 1e-18 * acc.value().abs() {
            break;
        }
    }
    let l = acc.value();
    (l, l / (-w.ln() / w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_orders() {
        for n in [2, 3] {
            let (_, fit) = EmCase::Exponential.remainder_order(n).unwrap();
            assert!(fit.slope >= n as f64 - 0.2, "N={n}: {fit:?}");
        }
    }

    #[test]
    fn gaussian_expansion_is_exact() {
        let r = EmCase::Gaussian.run(3, 0.1).unwrap();
        assert!(!r.resolved(), "{r:?}");
        let (_, fit) = EmCase::Gaussian.remainder_order(3).unwrap();
        assert!(fit.slope.is_infinite());
    }

    #[test]
    fn differenced_gaussian_leading_term() {
        // −2 B₃(1/3)/3 · w², with B₃(1/3) = 1/27
        let w = 0.05;
        let r = EmCase::DifferencedGaussian.run(3, w).unwrap();
        let lead = -2.0 / 27.0 / 3.0 * w * w;
        assert!((r.expansion - lead).abs() < 1e-15);
        assert!((r.sum / lead - 1.0).abs() < 0.05);
    }

    #[test]
    fn alternating_gaussian_leading_half() {
        let r = EmCase::AlternatingGaussian.run(1, 0.1).unwrap();
        assert_eq!(r.expansion, 0.5);
        assert!((r.sum - 0.5).abs() < 1e-3);
    }

    #[test]
    fn pole_case_tracks_log_over_w() {
        let (_, a) = pole_leading_ratio(0.1);
        let (_, b) = pole_leading_ratio(0.01);
        assert!((b - 1.0).abs() < (a - 1.0).abs());
        let r = EmCase::Pole.run(2, 0.05).unwrap();
        assert!(r.remainder.abs() < 1e-4);
    }

    #[test]
    fn names_round_trip() {
        for c in EmCase::ALL {
            assert_eq!(c.as_str().parse::<EmCase>().unwrap(), c);
        }
    }
}
