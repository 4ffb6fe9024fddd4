//! Exact moments and distributions read off rank tables, compared with the
//! asymptotic main terms and limit laws, plus the log-concavity scanner.

mod convergence;
mod distribution;
mod logconcavity;
mod moments;

pub use convergence::{
    convergence_ratio, deviation_non_increasing, lemma42_discriminant_check, ln_scale,
    normalized_moment_constant, normalized_moment_limit, ratio_report, ConvergenceReport,
    ConvergenceRow, Verdict,
};
pub use distribution::{
    empirical_cdf, ks_distance, ks_distance_cdf, EmpiricalCdf, Normalization, Target,
};
pub use logconcavity::{logconcavity_scan, row_violations, LogConcavityReport, RegionRule, Violation};
pub use moments::{moments, MomentVector};
