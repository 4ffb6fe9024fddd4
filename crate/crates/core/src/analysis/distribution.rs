//! Empirical rank distributions and their Kolmogorov–Smirnov distance to
//! the limit laws.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::convergence::ln_scale;
use crate::enumerate::{Family, RankTable};
use crate::error::{Error, Result};
use crate::series::ExactRational;
use crate::special::logistic_cdf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// `rank / √(3n)`.
    SqrtThreeN,
    /// `rank / (√n log n / π)`.
    SqrtNLogN,
}

impl Normalization {
    pub fn for_family(family: Family) -> Result<Self> {
        match family {
            Family::Unimodal | Family::Durfee => Ok(Normalization::SqrtThreeN),
            Family::Semistrict => Ok(Normalization::SqrtNLogN),
            f => Err(Error::NoMainTerm(f)),
        }
    }

    pub fn scale(self, n: usize) -> Result<f64> {
        let family = match self {
            Normalization::SqrtThreeN => Family::Unimodal,
            Normalization::SqrtNLogN => Family::Semistrict,
        };
        ln_scale(family, n).map(f64::exp)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    /// `1/(1 + e^{−πx})`.
    Logistic,
    PointMassAtOne,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::Logistic => "logistic",
            Target::PointMassAtOne => "point-mass-at-1",
        }
    }

    pub fn for_family(family: Family) -> Result<Self> {
        match family {
            Family::Unimodal | Family::Durfee => Ok(Target::Logistic),
            Family::Semistrict => Ok(Target::PointMassAtOne),
            f => Err(Error::NoMainTerm(f)),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Target {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "logistic" => Ok(Target::Logistic),
            "point-mass-at-1" | "point-mass" => Ok(Target::PointMassAtOne),
            _ => Err(format!("unknown target `{s}` (expected logistic or point-mass-at-1)")),
        }
    }
}

/// Right-continuous step CDF of `rank/scale` for one row. The jump points
/// `m/scale` are stored with exact cumulative counts.
#[derive(Clone, Debug, PartialEq)]
pub struct EmpiricalCdf {
    pub n: usize,
    pub scale: f64,
    /// `(m, Σ_{m' ≤ m} f(m',n))` over the nonzero support, increasing in `m`.
    steps: Vec<(i64, BigInt)>,
    total: BigInt,
}

impl EmpiricalCdf {
    pub fn total(&self) -> &BigInt {
        &self.total
    }

    /// Jump locations `m/scale`.
    pub fn jump_points(&self) -> impl Iterator<Item = f64> + '_ {
        self.steps.iter().map(|(m, _)| *m as f64 / self.scale)
    }

    fn cumulative_at(&self, x: f64) -> BigInt {
        let idx = self.steps.partition_point(|(m, _)| (*m as f64 / self.scale) <= x);
        idx.checked_sub(1).map_or_else(BigInt::zero, |i| self.steps[i].1.clone())
    }

    /// `P(X ≤ x)` as an exact fraction.
    pub fn eval_exact(&self, x: f64) -> ExactRational {
        ExactRational::new(self.cumulative_at(x), self.total.clone())
    }

    pub fn eval(&self, x: f64) -> f64 {
        fraction(&self.cumulative_at(x), &self.total)
    }

    /// `(x_i, F(x_i⁻), F(x_i))` at every jump.
    pub fn jumps(&self) -> Vec<(f64, f64, f64)> {
        let mut prev = 0.0;
        self.steps
            .iter()
            .map(|(m, c)| {
                let v = fraction(c, &self.total);
                let out = (*m as f64 / self.scale, prev, v);
                prev = v;
                out
            })
            .collect()
    }
}

fn fraction(a: &BigInt, b: &BigInt) -> f64 {
    ExactRational::new(a.clone(), b.clone()).to_f64().unwrap_or(f64::NAN)
}

pub fn empirical_cdf(table: &RankTable, n: usize, normalization: Normalization) -> Result<EmpiricalCdf> {
    let row = table.row(n)?;
    let total = row.sum();
    if total.sign() != num_bigint::Sign::Plus {
        return Err(Error::Domain(format!("row {n} has no mass")));
    }
    let scale = normalization.scale(n)?;
    let mut acc = BigInt::zero();
    let mut steps = Vec::new();
    for (m, c) in row.iter() {
        if c.is_zero() {
            continue;
        }
        acc += c;
        steps.push((m, acc.clone()));
    }
    Ok(EmpiricalCdf { n, scale, steps, total })
}

/// Sup-norm distance between an empirical CDF and the target, evaluated at
/// both one-sided limits of every jump.
pub fn ks_distance_cdf(cdf: &EmpiricalCdf, target: Target) -> f64 {
    match target {
        Target::Logistic => cdf
            .jumps()
            .into_iter()
            .map(|(x, left, right)| {
                let g = logistic_cdf(x);
                (left - g).abs().max((right - g).abs())
            })
            .fold(0.0, f64::max),
        Target::PointMassAtOne => {
            // sup over x < 1 of F, and sup over x ≥ 1 of 1 − F
            let below = cdf
                .jumps()
                .into_iter()
                .filter(|&(x, _, _)| x < 1.0)
                .map(|(_, _, right)| right)
                .fold(0.0, f64::max);
            below.max(1.0 - cdf.eval(1.0))
        }
    }
}

pub fn ks_distance(table: &RankTable, n: usize, target: Target) -> Result<f64> {
    let norm = Normalization::for_family(table.family())?;
    Ok(ks_distance_cdf(&empirical_cdf(table, n, norm)?, target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::build_unimodal_table;
    use crate::series::ZetaLaurent;

    #[test]
    fn unimodal_three_at_zero() {
        let t = build_unimodal_table(3);
        let cdf = empirical_cdf(&t, 3, Normalization::SqrtThreeN).unwrap();
        assert_eq!(cdf.eval_exact(0.0), ExactRational::new(4.into(), 6.into()));
        assert_eq!(cdf.eval(-10.0), 0.0);
        assert_eq!(cdf.eval(10.0), 1.0);
    }

    #[test]
    fn symmetric_reflection() {
        let t = build_unimodal_table(30);
        let cdf = empirical_cdf(&t, 30, Normalization::SqrtThreeN).unwrap();
        for x in cdf.jump_points().filter(|&x| x > 0.0).collect::<Vec<_>>() {
            let below = cdf.eval(-x);
            let above = 1.0 - cdf.eval(x - 1e-9);
            assert!((below - above).abs() < 1e-14, "x={x}");
        }
    }

    #[test]
    fn degenerate_row_is_half_from_logistic() {
        let t = RankTable::new(Family::Unimodal, vec![ZetaLaurent::one(), ZetaLaurent::one()]);
        assert_eq!(ks_distance(&t, 1, Target::Logistic).unwrap(), 0.5);
    }

    #[test]
    fn point_mass_distance() {
        let rows = vec![ZetaLaurent::one(), ZetaLaurent::from_i64s(0, &[1, 0, 3])];
        let t = RankTable::new(Family::Semistrict, rows);
        let cdf = empirical_cdf(&t, 1, Normalization::SqrtThreeN).unwrap();
        // atoms at 0 (mass 1/4) and 2/√3 > 1 (mass 3/4)
        assert_eq!(ks_distance_cdf(&cdf, Target::PointMassAtOne), 0.75);
    }
}
