//! Direct enumeration oracles. These never touch the series machinery: every
//! object is listed explicitly and its statistic computed from the
//! combinatorial definition.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::ZetaLaurent;

/// Default refusal threshold for exponential-cost enumerations.
pub const DEFAULT_ENUMERATION_CAP: usize = 30;

/// Enumerator with a configurable size cap.
#[derive(Clone, Copy, Debug)]
pub struct BruteForce {
    pub cap: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

/// All partitions of `n` into parts `≤ max_part`, each listed in weakly
/// decreasing order.
pub fn partitions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into distinct parts `≤ max_part`, decreasing.
fn distinct_partitions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// Size of the Durfee square of a partition given in decreasing order.
pub fn durfee_square(parts: &[usize]) -> usize {
    parts
        .iter()
        .enumerate()
        .take_while(|&(i, &p)| p > i)
        .count()
}

/// Dyson rank: largest part minus number of parts.
pub fn dyson_rank(parts: &[usize]) -> i64 {
    parts.first().copied().unwrap_or(0) as i64 - parts.len() as i64
}

/// Andrews–Garvan crank of a partition (no `n = 1` adjustment).
pub fn crank(parts: &[usize]) -> i64 {
    let ones = parts.iter().filter(|&&p| p == 1).count();
    if ones == 0 {
        parts.first().copied().unwrap_or(0) as i64
    } else {
        let above = parts.iter().filter(|&&p| p > ones).count();
        above as i64 - ones as i64
    }
}

fn histogram(counts: BTreeMap<i64, u64>) -> ZetaLaurent {
    let Some((&lo, _)) = counts.first_key_value() else {
        return ZetaLaurent::zero();
    };
    let hi = *counts.last_key_value().map(|(k, _)| k).unwrap_or(&lo);
    let coeffs = (lo..=hi)
        .map(|m| BigInt::from(counts.get(&m).copied().unwrap_or(0)))
        .collect();
    ZetaLaurent::new(lo, coeffs)
}

impl BruteForce {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::EnumerationCap { n, cap: self.cap });
        }
        Ok(())
    }

    /// Rank histogram of the unimodal sequences of size `n`: a rising run,
    /// a marked peak `c`, a falling run, all parts `≤ c`.
    pub fn unimodal(&self, n: usize) -> Result<ZetaLaurent> {
        self.peaked(n, |_, _, _| true)
    }

    /// Same as [`unimodal`](Self::unimodal) restricted to falling runs whose
    /// largest part is at most `c − k`, `k` the Durfee square of the rising
    /// run. Bounding the number of falling parts instead already miscounts
    /// at `n = 3`.
    pub fn durfee(&self, n: usize) -> Result<ZetaLaurent> {
        self.peaked(n, |c, rising, falling| {
            falling.first().copied().unwrap_or(0) + durfee_square(rising) <= c
        })
    }

    fn peaked(
        &self,
        n: usize,
        keep: impl Fn(usize, &[usize], &[usize]) -> bool,
    ) -> Result<ZetaLaurent> {
        self.check(n)?;
        let mut counts = BTreeMap::new();
        if n == 0 {
            counts.insert(0, 1);
        }
        for c in 1..=n {
            let rest = n - c;
            let by_size: Vec<Vec<Vec<usize>>> = (0..=rest).map(|s| partitions(s, c)).collect();
            for a in 0..=rest {
                for rising in &by_size[a] {
                    for falling in &by_size[rest - a] {
                        if keep(c, rising, falling) {
                            let rank = falling.len() as i64 - rising.len() as i64;
                            *counts.entry(rank).or_insert(0) += 1;
                        }
                    }
                }
            }
        }
        Ok(histogram(counts))
    }

    /// Semi-strict sequences: strictly rising run below the peak, weakly
    /// falling run of parts strictly smaller than the peak.
    pub fn semistrict(&self, n: usize) -> Result<ZetaLaurent> {
        self.check(n)?;
        let mut counts = BTreeMap::new();
        for c in 1..=n {
            let rest = n - c;
            for a in 0..=rest {
                let rising = distinct_partitions(a, c - 1);
                let falling = partitions(rest - a, c - 1);
                for r in &rising {
                    for f in &falling {
                        *counts.entry(f.len() as i64 - r.len() as i64).or_insert(0) += 1;
                    }
                }
            }
        }
        Ok(histogram(counts))
    }

    pub fn partition_count(&self, n: usize) -> Result<BigInt> {
        self.check(n)?;
        Ok(BigInt::from(partitions(n, n).len()))
    }

    pub fn partition_rank(&self, n: usize) -> Result<ZetaLaurent> {
        self.check(n)?;
        let mut counts = BTreeMap::new();
        for p in partitions(n, n) {
            *counts.entry(dyson_rank(&p)).or_insert(0) += 1;
        }
        Ok(histogram(counts))
    }

    /// Crank histogram using the convention `M(±1,1) = 1, M(0,1) = −1` at
    /// `n = 1`, where the combinatorial crank alone would give `M(−1,1) = 1`.
    pub fn partition_crank(&self, n: usize) -> Result<ZetaLaurent> {
        self.check(n)?;
        if n == 1 {
            return Ok(ZetaLaurent::from_i64s(-1, &[1, -1, 1]));
        }
        let mut counts = BTreeMap::new();
        for p in partitions(n, n) {
            *counts.entry(crank(&p)).or_insert(0) += 1;
        }
        Ok(histogram(counts))
    }
}

pub fn brute_force_unimodal(n: usize) -> Result<ZetaLaurent> {
    BruteForce::default().unimodal(n)
}

pub fn brute_force_durfee(n: usize) -> Result<ZetaLaurent> {
    BruteForce::default().durfee(n)
}

pub fn brute_force_semistrict(n: usize) -> Result<ZetaLaurent> {
    BruteForce::default().semistrict(n)
}

pub fn brute_force_partition_count(n: usize) -> Result<BigInt> {
    BruteForce::default().partition_count(n)
}

pub fn brute_force_partition_rank(n: usize) -> Result<ZetaLaurent> {
    BruteForce::default().partition_rank(n)
}

pub fn brute_force_partition_crank(n: usize) -> Result<ZetaLaurent> {
    BruteForce::default().partition_crank(n)
}

/// `p(0..=n_max)` by the coin-change recurrence over part sizes.
pub fn partition_counts_dp(n_max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(0); n_max + 1];
    p[0] = BigInt::from(1);
    for part in 1..=n_max {
        for n in part..=n_max {
            let (lo, hi) = p.split_at_mut(n);
            hi[0] += &lo[n - part];
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodal_three() {
        let h = brute_force_unimodal(3).unwrap();
        assert_eq!(h, ZetaLaurent::from_i64s(-2, &[1, 1, 2, 1, 1]));
        assert!(brute_force_unimodal(0).unwrap().is_one());
    }

    #[test]
    fn semistrict_four_lists_five_sequences() {
        let h = brute_force_semistrict(4).unwrap();
        assert_eq!(h.sum(), BigInt::from(5));
        assert_eq!(h, ZetaLaurent::from_i64s(-1, &[1, 2, 1, 1]));
        assert!(brute_force_semistrict(1).unwrap().is_one());
        assert!(brute_force_semistrict(0).unwrap().is_zero());
    }

    #[test]
    fn durfee_three_drops_only_the_flat_sequence() {
        // of the six unimodal sequences of 3, only 1 ·1̄· 1 (c = 1, k = 1,
        // falling part 1 > c − k) is excluded
        let h = brute_force_durfee(3).unwrap();
        assert_eq!(h, ZetaLaurent::from_i64s(-2, &[1, 1, 1, 1, 1]));
    }

    #[test]
    fn durfee_zero_and_cap() {
        assert!(brute_force_durfee(0).unwrap().is_one());
        assert!(matches!(
            brute_force_durfee(31),
            Err(Error::EnumerationCap { n: 31, cap: 30 })
        ));
        assert!(BruteForce::with_cap(2).unimodal(3).is_err());
    }

    #[test]
    fn partition_statistics() {
        assert_eq!(brute_force_partition_count(5).unwrap(), BigInt::from(7));
        assert_eq!(durfee_square(&[4, 3, 3, 1]), 3);
        assert_eq!(durfee_square(&[]), 0);
        assert_eq!(dyson_rank(&[1]), 0);
        assert_eq!(crank(&[3, 1, 1]), -1);
        assert_eq!(crank(&[3, 2]), 3);
        assert_eq!(crank(&[4, 1]), 0);
        assert_eq!(brute_force_partition_rank(1).unwrap(), ZetaLaurent::one());
    }

    #[test]
    fn dp_counts() {
        let p = partition_counts_dp(10);
        let expect = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (a, b) in p.iter().zip(expect) {
            assert_eq!(a, &BigInt::from(b));
        }
    }
}
