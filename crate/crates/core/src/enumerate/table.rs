use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{BivariateSeries, ZetaLaurent};

/// The five rank statistics tabulated by this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `u(m,n)`: unimodal sequences with a marked peak.
    Unimodal,
    /// `v(m,n)`: Durfee unimodal sequences.
    Durfee,
    /// `dm(m,n)`: semi-strict unimodal sequences.
    Semistrict,
    /// `N(m,n)`: Dyson rank of partitions.
    PartitionRank,
    /// `M(m,n)`: Andrews–Garvan crank of partitions.
    PartitionCrank,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Unimodal,
        Family::Durfee,
        Family::Semistrict,
        Family::PartitionRank,
        Family::PartitionCrank,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Unimodal => "unimodal",
            Family::Durfee => "durfee",
            Family::Semistrict => "semistrict",
            Family::PartitionRank => "partition-rank",
            Family::PartitionCrank => "partition-crank",
        }
    }

    /// Whether `f(−m,n) = f(m,n)` holds for every row.
    pub fn is_symmetric(self) -> bool {
        !matches!(self, Family::Semistrict)
    }

    /// One-byte code used by the binary cache format.
    pub fn code(self) -> u8 {
        match self {
            Family::Unimodal => 1,
            Family::Durfee => 2,
            Family::Semistrict => 3,
            Family::PartitionRank => 4,
            Family::PartitionCrank => 5,
        }
    }

    pub fn from_code(code: u8) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.code() == code)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unimodal" | "u" => Ok(Family::Unimodal),
            "durfee" | "v" => Ok(Family::Durfee),
            "semistrict" | "semi-strict" | "dm" => Ok(Family::Semistrict),
            "partition-rank" | "rank" | "N" => Ok(Family::PartitionRank),
            "partition-crank" | "crank" | "M" => Ok(Family::PartitionCrank),
            other => Err(format!(
                "unknown family `{other}` (expected unimodal, durfee, semistrict, partition-rank or partition-crank)"
            )),
        }
    }
}

/// `f(m,n)` for `0 ≤ n ≤ order`, one Laurent polynomial in `ζ` per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    family: Family,
    rows: Vec<ZetaLaurent>,
}

impl RankTable {
    pub fn new(family: Family, rows: Vec<ZetaLaurent>) -> Self {
        assert!(!rows.is_empty(), "a rank table has at least the n = 0 row");
        Self { family, rows }
    }

    pub fn from_series(family: Family, series: BivariateSeries) -> Self {
        Self::new(family, series.into_coeffs())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[ZetaLaurent] {
        &self.rows
    }

    /// Row `n`, or an error naming the `table` command that would cover it.
    pub fn row(&self, n: usize) -> Result<&ZetaLaurent> {
        self.rows.get(n).ok_or(Error::GridExceedsOrder {
            family: self.family,
            n,
            order: self.order(),
        })
    }

    /// `f(m,n)`; zero outside the stored support.
    pub fn value(&self, m: i64, n: usize) -> BigInt {
        self.rows.get(n).map(|r| r.coeff(m)).unwrap_or_default()
    }

    /// `Σ_m f(m,n)`.
    pub fn count(&self, n: usize) -> BigInt {
        self.rows.get(n).map(ZetaLaurent::sum).unwrap_or_default()
    }

    /// The first `order + 1` rows, for reusing a larger cached table.
    pub fn truncated(&self, order: usize) -> Result<RankTable> {
        self.row(order)?;
        Ok(RankTable::new(self.family, self.rows[..=order].to_vec()))
    }

    /// Observed `(min m, max m)` per row.
    pub fn support_by_n(&self) -> Vec<Option<(i64, i64)>> {
        self.rows.iter().map(ZetaLaurent::support).collect()
    }

    pub fn ensure_covers(&self, n: usize) -> Result<()> {
        self.row(n).map(|_| ())
    }
}
