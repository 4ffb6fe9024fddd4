//! Exact scans of `f(m,n)² > f(m−1,n) f(m+1,n)` over a region of the table.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{Family, RankTable};
use crate::error::{Error, Result};

/// Which `(n, m)` pairs to scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum RegionRule {
    /// Unimodal ranks, `n ≥ 37`, `|m| ≤ n − 23`.
    Conjecture41,
    /// Partition ranks, `n ≥ 123`, `|m| ≤ n − 72`.
    ConjectureN,
    /// Partition cranks, `n ≥ 125`, `|m| ≤ n − 71`.
    ConjectureM,
    /// `n_min ≤ n`, `|m| ≤ n − margin` (clamped at 0).
    Custom { n_min: usize, margin: i64 },
}

impl RegionRule {
    pub fn as_str(self) -> &'static str {
        match self {
            RegionRule::Conjecture41 => "conjecture-4.1",
            RegionRule::ConjectureN => "conjecture-N",
            RegionRule::ConjectureM => "conjecture-M",
            RegionRule::Custom { .. } => "custom",
        }
    }

    /// The family a named rule is stated for.
    pub fn family(self) -> Option<Family> {
        match self {
            RegionRule::Conjecture41 => Some(Family::Unimodal),
            RegionRule::ConjectureN => Some(Family::PartitionRank),
            RegionRule::ConjectureM => Some(Family::PartitionCrank),
            RegionRule::Custom { .. } => None,
        }
    }

    pub fn n_min(self) -> usize {
        match self {
            RegionRule::Conjecture41 => 37,
            RegionRule::ConjectureN => 123,
            RegionRule::ConjectureM => 125,
            RegionRule::Custom { n_min, .. } => n_min,
        }
    }

    fn margin(self) -> i64 {
        match self {
            RegionRule::Conjecture41 => 23,
            RegionRule::ConjectureN => 72,
            RegionRule::ConjectureM => 71,
            RegionRule::Custom { margin, .. } => margin,
        }
    }

    /// Largest `|m|` scanned at `n`, or `None` when the row is outside the
    /// region.
    pub fn m_bound(self, n: usize) -> Option<i64> {
        let b = n as i64 - self.margin();
        (n >= self.n_min() && b >= 0).then_some(b)
    }
}

impl fmt::Display for RegionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionRule::Custom { n_min, margin } => write!(f, "custom(n>={n_min},|m|<=n-{margin})"),
            r => f.write_str(r.as_str()),
        }
    }
}

impl FromStr for RegionRule {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "conjecture-4.1" => Ok(RegionRule::Conjecture41),
            "conjecture-N" | "conjecture-n" => Ok(RegionRule::ConjectureN),
            "conjecture-M" | "conjecture-m" => Ok(RegionRule::ConjectureM),
            _ => Err(format!(
                "unknown rule `{s}` (expected conjecture-4.1, conjecture-N or conjecture-M)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: usize,
    pub m: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogConcavityReport {
    pub family: Family,
    pub rule: RegionRule,
    pub n_min: usize,
    pub n_max: usize,
    /// Number of `(n, m)` pairs checked.
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub certified: bool,
}

impl LogConcavityReport {
    pub fn csv_rows(&self) -> Vec<String> {
        self.violations
            .iter()
            .map(|v| format!("{},{},{}", self.family, v.n, v.m))
            .collect()
    }
}

/// Pairs `(n, m)` in one row where the strict inequality fails.
pub fn row_violations(table: &RankTable, n: usize, m_bound: i64) -> Vec<Violation> {
    (-m_bound..=m_bound)
        .filter(|&m| {
            let c = table.value(m, n);
            &c * &c <= table.value(m - 1, n) * table.value(m + 1, n)
        })
        .map(|m| Violation { n, m })
        .collect()
}

/// Scans rows `max(rule.n_min, 0)..=n_max` in parallel. Violations come out
/// sorted by `(n, m)` regardless of scheduling.
pub fn logconcavity_scan(table: &RankTable, rule: RegionRule, n_max: usize) -> Result<LogConcavityReport> {
    if let Some(f) = rule.family() {
        if f != table.family() {
            return Err(Error::Domain(format!(
                "rule {rule} is stated for the {f} family, got a {} table",
                table.family()
            )));
        }
    }
    table.ensure_covers(n_max)?;
    let per_row: Vec<(u64, Vec<Violation>)> = (rule.n_min()..=n_max)
        .into_par_iter()
        .map(|n| match rule.m_bound(n) {
            Some(b) => ((2 * b + 1) as u64, row_violations(table, n, b)),
            None => (0, Vec::new()),
        })
        .collect();
    let checked = per_row.iter().map(|(c, _)| c).sum();
    let violations: Vec<Violation> = per_row.into_iter().flat_map(|(_, v)| v).collect();
    Ok(LogConcavityReport {
        family: table.family(),
        rule,
        n_min: rule.n_min(),
        n_max,
        checked,
        certified: violations.is_empty(),
        violations,
    })
}
