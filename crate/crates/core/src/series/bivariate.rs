use num_bigint::BigInt;

use super::ZetaLaurent;
use crate::error::{Error, Result};

/// Sign of a Pochhammer base or binomial term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn is_minus(self) -> bool {
        matches!(self, Sign::Minus)
    }
}

/// The binomial `1 − s·ζ^e·q^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub sign: Sign,
    pub zeta_exp: i64,
    pub q_exp: usize,
}

impl Binomial {
    pub fn new(sign: Sign, zeta_exp: i64, q_exp: usize) -> Self {
        Self {
            sign,
            zeta_exp,
            q_exp,
        }
    }

    /// `1 − ζ^e q^d`.
    pub fn minus(zeta_exp: i64, q_exp: usize) -> Self {
        Self::new(Sign::Plus, zeta_exp, q_exp)
    }

    /// `1 + ζ^e q^d`.
    pub fn plus(zeta_exp: i64, q_exp: usize) -> Self {
        Self::new(Sign::Minus, zeta_exp, q_exp)
    }
}

/// A power series `Σ_{n=0}^{N} c_n(ζ) qⁿ + O(q^{N+1})`.
///
/// Coefficients at or below `order` are exact; everything above is
/// discarded. All binary operations require equal orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    order: usize,
    coeffs: Vec<ZetaLaurent>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![ZetaLaurent::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::from(1), 0, 0, order)
    }

    /// `c · ζ^zeta_exp · q^q_exp`, which is zero when `q_exp > order`.
    pub fn monomial(c: BigInt, zeta_exp: i64, q_exp: usize, order: usize) -> Self {
        let mut out = Self::zero(order);
        if q_exp <= order {
            out.coeffs[q_exp] = ZetaLaurent::monomial(c, zeta_exp);
        }
        out
    }

    /// Builds a series from its first coefficients; missing ones are zero and
    /// coefficients beyond `order` are dropped.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<ZetaLaurent>) -> Self {
        coeffs.resize_with(order + 1, ZetaLaurent::zero);
        Self { order, coeffs }
    }

    /// A series free of `ζ`.
    pub fn from_q_coeffs(order: usize, coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(
            order,
            coeffs.iter().map(|c| ZetaLaurent::constant(c.clone())).collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `qⁿ`; panics if `n > order`.
    pub fn coeff(&self, n: usize) -> &ZetaLaurent {
        &self.coeffs[n]
    }

    pub fn coeff_mut(&mut self, n: usize) -> &mut ZetaLaurent {
        &mut self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[ZetaLaurent] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ZetaLaurent> {
        self.coeffs
    }

    /// Smallest `n` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// First `q`-power at which the two series differ.
    pub fn first_difference(&self, other: &Self) -> Result<Option<usize>> {
        self.check_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b))
    }

    /// The one-variable series obtained at `ζ = 1`.
    pub fn at_zeta_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(ZetaLaurent::sum).collect()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    /// In-place `self += other`.
    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse, for series whose constant term is exactly 1.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotInvertible);
        }
        let support: Vec<usize> = (1..=self.order)
            .filter(|&j| !self.coeffs[j].is_zero())
            .collect();
        let mut out = Self::one(self.order);
        for n in 1..=self.order {
            let mut acc = ZetaLaurent::zero();
            for &j in support.iter().take_while(|&&j| j <= n) {
                acc -= &(&self.coeffs[j] * &out.coeffs[n - j]);
            }
            out.coeffs[n] = acc;
        }
        Ok(out)
    }

    /// Substitute `ζ → ζ⁻¹`.
    pub fn reflect(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(ZetaLaurent::reflect).collect(),
        }
    }

    /// Multiply by `ζ^zeta_exp`.
    pub fn shift_zeta(&mut self, zeta_exp: i64) {
        for c in &mut self.coeffs {
            *c = c.shift(zeta_exp);
        }
    }

    /// Multiply by `q^k`, dropping what falls beyond the order.
    pub fn shift_q(&mut self, k: usize) {
        if k == 0 {
            return;
        }
        let keep = (self.order + 1).saturating_sub(k);
        self.coeffs.truncate(keep);
        self.coeffs
            .splice(0..0, std::iter::repeat_with(ZetaLaurent::zero).take(k.min(self.order + 1)));
    }

    /// Multiply in place by `1 − s·ζ^e·q^d`.
    pub fn mul_binomial(&mut self, b: Binomial) {
        let d = b.q_exp;
        if d == 0 {
            let factor = ZetaLaurent::from_i64s(0, &[1]) - ZetaLaurent::monomial(
                if b.sign.is_minus() { BigInt::from(-1) } else { BigInt::from(1) },
                b.zeta_exp,
            );
            for c in &mut self.coeffs {
                *c = &*c * &factor;
            }
            return;
        }
        // Descending j so each c_{j-d} read is still the original value.
        for j in (d..=self.order).rev() {
            let (lower, upper) = self.coeffs.split_at_mut(j);
            upper[0].add_shifted(&lower[j - d], b.zeta_exp, !b.sign.is_minus());
        }
    }

    /// Divide in place by `1 − s·ζ^e·q^d` (requires `d ≥ 1`).
    pub fn div_binomial(&mut self, b: Binomial) -> Result<()> {
        let d = b.q_exp;
        if d == 0 {
            return Err(Error::ZeroValuationDivisor);
        }
        // Ascending j: c_j += s ζ^e c_{j-d} using already-divided lower terms.
        for j in d..=self.order {
            let (lower, upper) = self.coeffs.split_at_mut(j);
            upper[0].add_shifted(&lower[j - d], b.zeta_exp, b.sign.is_minus());
        }
        Ok(())
    }

    /// Every ζ-coefficient of every `q`-coefficient is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(ZetaLaurent::is_nonnegative)
    }

    /// Sets coefficients above `n` to zero without changing the order.
    pub fn zero_above(&mut self, n: usize) {
        for c in self.coeffs.iter_mut().skip(n + 1) {
            *c = ZetaLaurent::zero();
        }
    }
}

impl Default for BivariateSeries {
    fn default() -> Self {
        Self::zero(0)
    }
}
