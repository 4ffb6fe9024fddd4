use std::path::PathBuf;

use crate::enumerate::Family;

/// Errors raised anywhere in the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series is not invertible: constant term is not the unit 1")]
    NotInvertible,

    #[error("division by a factor with zero q-valuation")]
    ZeroValuationDivisor,

    #[error("infinite product diverges: factor has q-valuation {0}")]
    DivergentProduct(i64),

    #[error("negative Pochhammer length {0}")]
    NegativeLength(i64),

    #[error("factor produces negative q-power {0}")]
    NegativeQPower(i64),

    #[error("enumeration at size {n} exceeds the cap {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported moment order k = {0}")]
    UnsupportedOrder(u32),

    #[error("decay certificate violated: {0}")]
    DecayViolation(String),

    #[error("n = {n} exceeds the table order {order}; run `unirank table --family {family} --order {n}` first")]
    GridExceedsOrder { family: Family, n: usize, order: usize },

    #[error("no asymptotic main term is available for the {0} family")]
    NoMainTerm(Family),

    #[error("corrupt table cache {path}: {reason}")]
    CorruptCache { path: PathBuf, reason: String },

    #[error("tolerance file: {0}")]
    Tolerances(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
