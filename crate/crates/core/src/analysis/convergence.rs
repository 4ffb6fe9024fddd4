//! Ratios of exact values to main terms, with the two-part verdict: final
//! deviation within tolerance and `|ratio − 1|` non-increasing over the last
//! three grid points.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::moments::moments;
use crate::asymptotics::{bessel_discriminant_main_term, main_term, MomentKind};
use crate::bigfloat::ln_abs_big;
use crate::enumerate::{Family, RankTable};
use crate::error::{Error, Result};
use crate::special::bernoulli_number;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Within tolerance and monotone toward 1.
    Pass,
    /// Within tolerance, but the deviation grew somewhere in the last three
    /// points.
    WithinToleranceOnly,
    /// Monotone toward 1, final deviation above tolerance.
    MonotoneOnly,
    Fail,
}

impl Verdict {
    fn from_parts(within: bool, monotone: bool) -> Self {
        match (within, monotone) {
            (true, true) => Verdict::Pass,
            (true, false) => Verdict::WithinToleranceOnly,
            (false, true) => Verdict::MonotoneOnly,
            (false, false) => Verdict::Fail,
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    /// Exact value in decimal.
    pub exact: String,
    pub main_term: f64,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub label: String,
    pub tolerance: f64,
    pub rows: Vec<ConvergenceRow>,
    pub final_deviation: f64,
    pub monotone: bool,
    pub verdict: Verdict,
}

impl ConvergenceReport {
    pub fn ratios(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.ratio).collect()
    }
}

/// `|x_i − 1|` non-increasing over the last three entries.
pub fn deviation_non_increasing(ratios: &[f64]) -> bool {
    let tail = &ratios[ratios.len().saturating_sub(3)..];
    tail.windows(2)
        .all(|w| (w[1] - 1.0).abs() <= (w[0] - 1.0).abs())
}

/// Builds a report from exact values and `ln` of the main term. A ratio of
/// `0/0` counts as 1.
pub fn ratio_report(
    label: impl Into<String>,
    grid: &[usize],
    tolerance: f64,
    exact: impl Fn(usize) -> BigInt,
    ln_main: impl Fn(usize) -> Result<(f64, f64)>,
) -> Result<ConvergenceReport> {
    let mut rows = Vec::with_capacity(grid.len());
    for &n in grid {
        let e = exact(n);
        let (ln_m, sign) = ln_main(n)?;
        let ratio = if e.is_zero() {
            if sign == 0.0 {
                1.0
            } else {
                0.0
            }
        } else {
            let s = if (e.sign() == num_bigint::Sign::Minus) == (sign < 0.0) { 1.0 } else { -1.0 };
            s * (ln_abs_big(&e) - ln_m).exp()
        };
        rows.push(ConvergenceRow {
            n,
            exact: e.to_string(),
            main_term: sign * ln_m.exp(),
            ratio,
        });
    }
    let ratios: Vec<f64> = rows.iter().map(|r| r.ratio).collect();
    let final_deviation = ratios.last().map_or(f64::NAN, |r| (r - 1.0).abs());
    let monotone = deviation_non_increasing(&ratios);
    let within = final_deviation <= tolerance;
    Ok(ConvergenceReport {
        label: label.into(),
        tolerance,
        rows,
        final_deviation,
        monotone,
        verdict: Verdict::from_parts(within, monotone),
    })
}

fn check_grid(table: &RankTable, grid: &[usize]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Domain("empty n grid".into()));
    }
    grid.iter().try_for_each(|&n| table.ensure_covers(n))
}

/// Exact moment over its main term. For the symmetric families `k` is the
/// moment order itself (odd signed orders have no main term).
pub fn convergence_ratio(
    table: &RankTable,
    k: u32,
    kind: MomentKind,
    grid: &[usize],
    tolerance: f64,
) -> Result<ConvergenceReport> {
    check_grid(table, grid)?;
    let family = table.family();
    main_term(family, k, kind, grid[0].max(2) as f64)?;
    let mv = moments(table, k, kind);
    ratio_report(
        format!("{family} {kind} k={k}"),
        grid,
        tolerance,
        |n| mv.values[n].clone(),
        |n| main_term(family, k, kind, n as f64).map(|e| (e.ln_value, e.value.signum())),
    )
}

/// The limit of `f_k(n) / (s(n)^k f_0(n))` for the normalizing scale `s`:
/// `(2^k − 2)|B_k|` for the symmetric families (`1` at `k = 0`), `1` for
/// the semistrict family.
pub fn normalized_moment_constant(family: Family, k: u32) -> Result<f64> {
    use num_traits::{Signed, ToPrimitive};
    match family {
        Family::Unimodal | Family::Durfee if k == 0 => Ok(1.0),
        Family::Unimodal | Family::Durfee => {
            let b = bernoulli_number(k as usize).abs().to_f64().unwrap_or(f64::NAN);
            Ok((2f64.powi(k as i32) - 2.0) * b)
        }
        Family::Semistrict => Ok(1.0),
        f => Err(Error::NoMainTerm(f)),
    }
}

/// `ln s(n)` for the limit-law normalization of `family`.
pub fn ln_scale(family: Family, n: usize) -> Result<f64> {
    let nf = n as f64;
    match family {
        Family::Unimodal | Family::Durfee => Ok(0.5 * (3.0 * nf).ln()),
        Family::Semistrict if n >= 2 => Ok(0.5 * nf.ln() + nf.ln().ln() - std::f64::consts::PI.ln()),
        Family::Semistrict => Err(Error::Domain("the semistrict scale needs n ≥ 2".into())),
        f => Err(Error::NoMainTerm(f)),
    }
}

/// Ratio of the normalized signed moment to its limiting constant. When
/// the constant is 0 (odd `k`, symmetric family) the exact moments vanish
/// too and the ratio is reported as 1.
pub fn normalized_moment_limit(
    table: &RankTable,
    k: u32,
    grid: &[usize],
    tolerance: f64,
) -> Result<ConvergenceReport> {
    check_grid(table, grid)?;
    let family = table.family();
    let constant = normalized_moment_constant(family, k)?;
    let mk = moments(table, k, MomentKind::Signed);
    for &n in grid {
        ln_scale(family, n)?;
    }
    ratio_report(
        format!("{family} normalized k={k}"),
        grid,
        tolerance,
        |n| mk.values[n].clone(),
        |n| {
            if constant == 0.0 {
                return Ok((f64::NEG_INFINITY, 0.0));
            }
            let ln = k as f64 * ln_scale(family, n)? + ln_abs_big(&table.count(n)) + constant.abs().ln();
            Ok((ln, constant.signum()))
        },
    )
}

/// `u(m,n)² − u(m−1,n)u(m+1,n)` against `(π⁶/2) X₃(n) X₅(n)`.
pub fn lemma42_discriminant_check(
    table: &RankTable,
    m: i64,
    grid: &[usize],
    tolerance: f64,
) -> Result<ConvergenceReport> {
    check_grid(table, grid)?;
    let disc = |n: usize| {
        let c = table.value(m, n);
        &c * &c - table.value(m - 1, n) * table.value(m + 1, n)
    };
    ratio_report(
        format!("{} discriminant m={m}", table.family()),
        grid,
        tolerance,
        disc,
        |n| bessel_discriminant_main_term(n as u64).map(|e| (e.ln_value, 1.0)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{build_semistrict_table, build_unimodal_table};

    #[test]
    fn fake_main_term_gives_unit_ratios() {
        let t = build_unimodal_table(40);
        let r = ratio_report("sanity", &[10, 20, 40], 0.0, |n| t.count(n), |n| {
            Ok((ln_abs_big(&t.count(n)), 1.0))
        })
        .unwrap();
        assert!(r.rows.iter().all(|row| (row.ratio - 1.0).abs() < 1e-12));
        assert!(r.verdict.passed() || r.final_deviation < 1e-12);
    }

    #[test]
    fn grid_beyond_table_is_an_error() {
        let t = build_unimodal_table(10);
        let e = convergence_ratio(&t, 0, MomentKind::Signed, &[5, 11], 0.1).unwrap_err();
        assert!(e.to_string().contains("unirank table --family unimodal --order 11"));
    }

    #[test]
    fn odd_symmetric_normalized_moment_is_one() {
        let t = build_unimodal_table(30);
        let r = normalized_moment_limit(&t, 3, &[10, 20, 30], 0.0).unwrap();
        assert!(r.verdict.passed());
        assert_eq!(normalized_moment_constant(Family::Unimodal, 2).unwrap(), 1.0 / 3.0);
    }

    #[test]
    fn verdict_rules() {
        assert!(deviation_non_increasing(&[0.5, 0.8, 0.9, 0.95]));
        assert!(!deviation_non_increasing(&[0.9, 0.95, 0.9]));
        assert!(deviation_non_increasing(&[1.2, 0.9, 1.05]));
        let t = build_semistrict_table(50);
        assert!(convergence_ratio(&t, 1, MomentKind::Absolute, &[20, 50], 10.0).is_ok());
    }
}
