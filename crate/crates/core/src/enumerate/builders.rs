//! Generating-function builders.
//!
//! Each sum-type generating function `Σ_n term_n` is accumulated with
//! `term_n` obtained from `term_{n−1}` by a `q`-shift and a handful of
//! in-place binomial multiplications/divisions, so no Pochhammer product is
//! ever recomputed from scratch.

use num_bigint::BigInt;

use super::{Family, RankTable};
use crate::series::{
    divide_by_pochhammer, pochhammer_infinite, Binomial, BivariateSeries, PochhammerFactor,
};

/// Callback receiving `(step, total)` while a builder runs.
pub type Progress<'a> = &'a mut dyn FnMut(usize, usize);

fn accumulate(
    order: usize,
    mut term: BivariateSeries,
    steps: usize,
    progress: Progress<'_>,
    mut update: impl FnMut(&mut BivariateSeries, usize),
) -> BivariateSeries {
    let mut acc = term.clone();
    for n in 1..=steps {
        update(&mut term, n);
        if term.valuation().is_none() {
            break;
        }
        acc.add_assign(&term).expect("same order");
        progress(n, steps);
    }
    debug_assert_eq!(acc.order(), order);
    acc
}

fn divide(term: &mut BivariateSeries, b: Binomial) {
    term.div_binomial(b).expect("q-exponent is positive");
}

/// `U(ζ;q) = Σ_{n≥0} qⁿ / (ζq, ζ⁻¹q)_n`.
pub fn unimodal_series(order: usize, progress: Progress<'_>) -> BivariateSeries {
    accumulate(order, BivariateSeries::one(order), order, progress, |t, n| {
        t.shift_q(1);
        divide(t, Binomial::minus(1, n));
        divide(t, Binomial::minus(-1, n));
    })
}

/// `V(ζ;q) = Σ_{n≥0} (q^{n+1})_n qⁿ / (ζq, ζ⁻¹q)_n`.
pub fn durfee_series(order: usize, progress: Progress<'_>) -> BivariateSeries {
    accumulate(order, BivariateSeries::one(order), order, progress, |t, n| {
        // (q^n;q)_{n-1} → (q^{n+1};q)_n
        t.shift_q(1);
        t.mul_binomial(Binomial::minus(0, 2 * n - 1));
        t.mul_binomial(Binomial::minus(0, 2 * n));
        divide(t, Binomial::minus(0, n));
        divide(t, Binomial::minus(1, n));
        divide(t, Binomial::minus(-1, n));
    })
}

/// `D(ζ;q) = Σ_{n≥0} (−ζ⁻¹q)_n / (ζq)_n · q^{n+1}`.
pub fn semistrict_series(order: usize, progress: Progress<'_>) -> BivariateSeries {
    let first = BivariateSeries::monomial(BigInt::from(1), 0, 1, order);
    accumulate(order, first, order, progress, |t, n| {
        t.shift_q(1);
        t.mul_binomial(Binomial::plus(-1, n));
        divide(t, Binomial::minus(1, n));
    })
}

/// `Σ_{n≥0} q^{n²} / (ζq, ζ⁻¹q)_n`, the two-variable generating function of
/// the Dyson rank.
pub fn partition_rank_series(order: usize, progress: Progress<'_>) -> BivariateSeries {
    let steps = (order as f64).sqrt() as usize + 1;
    accumulate(order, BivariateSeries::one(order), steps, progress, |t, n| {
        t.shift_q(2 * n - 1);
        divide(t, Binomial::minus(1, n));
        divide(t, Binomial::minus(-1, n));
    })
}

/// `C(ζ;q) = (q)_∞ / (ζq, ζ⁻¹q)_∞`.
pub fn crank_series(order: usize, progress: Progress<'_>) -> BivariateSeries {
    let mut out = pochhammer_infinite(&[PochhammerFactor::plus(0, 1)], order)
        .expect("q-valuation 1");
    divide_by_pochhammer(
        &mut out,
        &[PochhammerFactor::plus(1, 1), PochhammerFactor::plus(-1, 1)],
        None,
    )
    .expect("q-valuation 1");
    progress(order, order);
    out
}

pub fn series_for(family: Family, order: usize, progress: Progress<'_>) -> BivariateSeries {
    match family {
        Family::Unimodal => unimodal_series(order, progress),
        Family::Durfee => durfee_series(order, progress),
        Family::Semistrict => semistrict_series(order, progress),
        Family::PartitionRank => partition_rank_series(order, progress),
        Family::PartitionCrank => crank_series(order, progress),
    }
}

pub fn build_table_with_progress(family: Family, order: usize, progress: Progress<'_>) -> RankTable {
    RankTable::from_series(family, series_for(family, order, progress))
}

pub fn build_table(family: Family, order: usize) -> RankTable {
    build_table_with_progress(family, order, &mut |_, _| {})
}

pub fn build_unimodal_table(order: usize) -> RankTable {
    build_table(Family::Unimodal, order)
}

pub fn build_durfee_table(order: usize) -> RankTable {
    build_table(Family::Durfee, order)
}

pub fn build_semistrict_table(order: usize) -> RankTable {
    build_table(Family::Semistrict, order)
}

/// Raw product coefficients; the `n = 1` row is `ζ⁻¹ − 1 + ζ`.
pub fn build_crank_table(order: usize) -> RankTable {
    build_table(Family::PartitionCrank, order)
}

pub fn build_partition_rank_table(order: usize) -> RankTable {
    build_table(Family::PartitionRank, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ZetaLaurent;

    #[test]
    fn unimodal_row_three() {
        let t = build_unimodal_table(3);
        assert_eq!(t.row(3).unwrap(), &ZetaLaurent::from_i64s(-2, &[1, 1, 2, 1, 1]));
        assert_eq!(t.count(3), BigInt::from(6));
        assert!(t.row(0).unwrap().is_one());
    }

    #[test]
    fn semistrict_rows() {
        let t = build_semistrict_table(4);
        assert!(t.row(0).unwrap().is_zero());
        assert!(t.row(1).unwrap().is_one());
        // {4}, {1,3}, {3,1}, {1,2,1}, {2,1,1}
        assert_eq!(t.row(4).unwrap(), &ZetaLaurent::from_i64s(-1, &[1, 2, 1, 1]));
        assert_eq!(t.count(4), BigInt::from(5));
    }

    #[test]
    fn crank_row_one_follows_product() {
        let t = build_crank_table(3);
        assert_eq!(t.row(1).unwrap(), &ZetaLaurent::from_i64s(-1, &[1, -1, 1]));
    }

    #[test]
    fn durfee_and_rank_base_rows() {
        assert!(build_durfee_table(2).row(0).unwrap().is_one());
        let r = build_partition_rank_table(4);
        assert!(r.row(1).unwrap().is_one());
        assert_eq!(r.count(4), BigInt::from(5));
    }

    #[test]
    fn order_zero_tables() {
        for f in Family::ALL {
            let t = build_table(f, 0);
            assert_eq!(t.order(), 0);
        }
    }
}
