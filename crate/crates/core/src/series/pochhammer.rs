use super::{Binomial, BivariateSeries, Sign};
use crate::error::{Error, Result};

/// Base `a = sign · ζ^zeta_exp · q^q_shift` of a q-Pochhammer symbol
/// `(a;q)_n = ∏_{j<n} (1 − a q^j)`.
///
/// Products of several such symbols express the composite forms used by the
/// generating functions, e.g. `(ζq, ζ⁻¹q)_n` is `[(+,1,1), (+,−1,1)]` and
/// `(−ζ⁻¹q)_n` is `[(−,−1,1)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PochhammerFactor {
    pub zeta_exp: i64,
    pub q_shift: i64,
    pub sign: Sign,
}

impl PochhammerFactor {
    pub fn new(sign: Sign, zeta_exp: i64, q_shift: i64) -> Self {
        Self {
            zeta_exp,
            q_shift,
            sign,
        }
    }

    /// Base `ζ^e q^s`.
    pub fn plus(zeta_exp: i64, q_shift: i64) -> Self {
        Self::new(Sign::Plus, zeta_exp, q_shift)
    }

    /// Base `−ζ^e q^s`.
    pub fn minus(zeta_exp: i64, q_shift: i64) -> Self {
        Self::new(Sign::Minus, zeta_exp, q_shift)
    }

    fn binomial(&self, j: usize) -> Result<Binomial> {
        let q = self.q_shift + j as i64;
        if q < 0 {
            return Err(Error::NegativeQPower(q));
        }
        Ok(Binomial::new(self.sign, self.zeta_exp, q as usize))
    }
}

/// Truncated `∏_factors (a;q)_n`.
pub fn pochhammer_finite(
    factors: &[PochhammerFactor],
    n: i64,
    order: usize,
) -> Result<BivariateSeries> {
    let n = usize::try_from(n).map_err(|_| Error::NegativeLength(n))?;
    let mut out = BivariateSeries::one(order);
    for f in factors {
        for j in 0..n {
            let b = f.binomial(j)?;
            if b.q_exp > order {
                break;
            }
            out.mul_binomial(b);
        }
    }
    Ok(out)
}

/// Truncated `∏_factors (a;q)_∞`. Factors beyond the truncation order are
/// identically 1 modulo `q^{order+1}`, so the product is exact.
pub fn pochhammer_infinite(factors: &[PochhammerFactor], order: usize) -> Result<BivariateSeries> {
    check_convergent(factors)?;
    let mut out = BivariateSeries::one(order);
    for f in factors {
        for j in 0.. {
            let b = f.binomial(j)?;
            if b.q_exp > order {
                break;
            }
            out.mul_binomial(b);
        }
    }
    Ok(out)
}

/// Divides `series` in place by `∏_factors (a;q)_len`, with `None` meaning
/// the infinite product.
pub fn divide_by_pochhammer(
    series: &mut BivariateSeries,
    factors: &[PochhammerFactor],
    len: Option<usize>,
) -> Result<()> {
    check_convergent(factors)?;
    let order = series.order();
    for f in factors {
        for j in 0..len.unwrap_or(usize::MAX) {
            let b = f.binomial(j)?;
            if b.q_exp > order {
                break;
            }
            series.div_binomial(b)?;
        }
    }
    Ok(())
}

fn check_convergent(factors: &[PochhammerFactor]) -> Result<()> {
    match factors.iter().find(|f| f.q_shift < 1) {
        Some(f) => Err(Error::DivergentProduct(f.q_shift)),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ZetaLaurent;
    use num_bigint::BigInt;

    #[test]
    fn empty_product_is_one() {
        let p = pochhammer_finite(&[PochhammerFactor::plus(0, 1)], 0, 6).unwrap();
        assert_eq!(p, BivariateSeries::one(6));
    }

    #[test]
    fn single_factor() {
        let p = pochhammer_finite(&[PochhammerFactor::plus(1, 1)], 1, 4).unwrap();
        assert!(p.coeff(0).is_one());
        assert_eq!(p.coeff(1), &ZetaLaurent::from_i64s(1, &[-1]));
        assert!(p.coeff(2).is_zero());
    }

    #[test]
    fn negative_length_rejected() {
        assert!(matches!(
            pochhammer_finite(&[PochhammerFactor::plus(0, 1)], -1, 3),
            Err(Error::NegativeLength(-1))
        ));
    }

    #[test]
    fn euler_product_truncated_at_five() {
        let p = pochhammer_infinite(&[PochhammerFactor::plus(0, 1)], 5).unwrap();
        let one_var: Vec<i64> = p
            .at_zeta_one()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(one_var, vec![1, -1, -1, 0, 0, 1]);
    }

    #[test]
    fn divergent_product_rejected() {
        assert!(matches!(
            pochhammer_infinite(&[PochhammerFactor::plus(1, 0)], 5),
            Err(Error::DivergentProduct(0))
        ));
    }

    #[test]
    fn finite_times_tail_is_infinite() {
        let base = PochhammerFactor::plus(1, 1);
        let order = 14;
        for n in 0..6 {
            let head = pochhammer_finite(&[base], n, order).unwrap();
            let tail = pochhammer_infinite(&[PochhammerFactor::plus(1, 1 + n)], order).unwrap();
            let full = pochhammer_infinite(&[base], order).unwrap();
            assert_eq!(head.mul(&tail).unwrap(), full);
        }
    }

    #[test]
    fn partitions_of_four_and_five() {
        let euler = pochhammer_infinite(&[PochhammerFactor::plus(0, 1)], 8).unwrap();
        let p = euler.invert().unwrap();
        assert_eq!(p.coeff(4), &ZetaLaurent::constant(BigInt::from(5)));
        assert_eq!(p.coeff(5), &ZetaLaurent::constant(BigInt::from(7)));
        let mut divided = BivariateSeries::one(8);
        divide_by_pochhammer(&mut divided, &[PochhammerFactor::plus(0, 1)], None).unwrap();
        assert_eq!(divided, p);
    }
}
