//! Exact rank and crank tables for unimodal, Durfee unimodal, semi-strict
//! unimodal sequences and ordinary partitions, together with brute-force
//! oracles and coefficientwise checks of the decomposition identities.

mod brute;
mod builders;
mod crank_moments;
mod identities;
mod table;

pub use brute::{
    brute_force_durfee, brute_force_partition_count, brute_force_partition_crank,
    brute_force_partition_rank, brute_force_semistrict, brute_force_unimodal, crank,
    durfee_square, dyson_rank, partition_counts_dp, partitions, BruteForce,
    DEFAULT_ENUMERATION_CAP,
};
pub use builders::{
    build_crank_table, build_durfee_table, build_partition_rank_table, build_semistrict_table,
    build_table, build_table_with_progress, build_unimodal_table, crank_series, durfee_series,
    partition_rank_series, semistrict_series, series_for, unimodal_series,
};
pub use crank_moments::crank_moment_series;
pub use identities::{verify_identity, Identity, IdentityReport, Mismatch};
pub use table::{Family, RankTable};
