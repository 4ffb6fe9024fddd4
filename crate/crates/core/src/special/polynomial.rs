//! Polynomials with exact rational coefficients and the Bernoulli and Euler
//! families.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::series::ExactRational;

/// Dense polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<ExactRational>,
}

fn rat(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    /// `x`.
    pub fn x() -> Self {
        Self::new(vec![ExactRational::zero(), ExactRational::one()])
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Antiderivative vanishing at 0.
    pub fn integral(&self) -> Self {
        let mut out = vec![ExactRational::zero()];
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / rat(i as i64 + 1)),
        );
        Self::new(out)
    }

    /// `∫₀¹ p(x) dx`.
    pub fn integral_unit(&self) -> ExactRational {
        self.integral().eval(&ExactRational::one())
    }

    /// `p(a + b·x)`.
    pub fn compose_affine(&self, a: &ExactRational, b: &ExactRational) -> Self {
        let inner = Self::new(vec![a.clone(), b.clone()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &inner) + &Self::constant(c.clone())
        })
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = ExactRational::zero();
        RationalPolynomial::new(
            (0..len)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                _ => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `B_0(x), …, B_max(x)`, from `B_ℓ' = ℓ B_{ℓ−1}` and `∫₀¹ B_ℓ = 0` for
/// `ℓ ≥ 1`.
pub fn bernoulli_polys(max: usize) -> Vec<RationalPolynomial> {
    let mut out = vec![RationalPolynomial::one()];
    for l in 1..=max {
        let p = out[l - 1].integral().scale(&rat(l as i64));
        let c = p.integral_unit();
        out.push(&p - &RationalPolynomial::constant(c));
    }
    out
}

pub fn bernoulli_poly(l: usize) -> RationalPolynomial {
    bernoulli_polys(l).pop().expect("nonempty")
}

/// `B_ℓ = B_ℓ(0)`, so `B_1 = −1/2`.
pub fn bernoulli_number(l: usize) -> ExactRational {
    bernoulli_poly(l).eval(&ExactRational::zero())
}

/// `E_0(x), …, E_max(x)`, from `E_n' = n E_{n−1}` and `E_n(0) + E_n(1) = 0`
/// for `n ≥ 1`.
pub fn euler_polys(max: usize) -> Vec<RationalPolynomial> {
    let mut out = vec![RationalPolynomial::one()];
    for n in 1..=max {
        let p = out[n - 1].integral().scale(&rat(n as i64));
        let c = -p.eval(&ExactRational::one()) / rat(2);
        out.push(&p + &RationalPolynomial::constant(c));
    }
    out
}

pub fn euler_poly(n: usize) -> RationalPolynomial {
    euler_polys(n).pop().expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn low_degree_bernoulli() {
        assert_eq!(bernoulli_poly(0), RationalPolynomial::one());
        let b2 = RationalPolynomial::new(vec![q(1, 6), q(-1, 1), q(1, 1)]);
        assert_eq!(bernoulli_poly(2), b2);
        assert_eq!(bernoulli_poly(2).eval(&q(1, 2)), q(-1, 12));
        assert_eq!(bernoulli_number(1), q(-1, 2));
        assert_eq!(bernoulli_number(12), q(-691, 2730));
    }

    #[test]
    fn bernoulli_difference_equation() {
        let x = RationalPolynomial::x();
        for (l, b) in bernoulli_polys(20).iter().enumerate().skip(1) {
            let shifted = b.compose_affine(&q(1, 1), &q(1, 1));
            let mut power = RationalPolynomial::one();
            for _ in 1..l {
                power = &power * &x;
            }
            assert_eq!(&shifted - b, power.scale(&q(l as i64, 1)), "l = {l}");
        }
    }

    #[test]
    fn euler_values() {
        let e = euler_polys(21);
        assert_eq!(e[0].eval(&q(1, 2)), q(1, 1));
        assert_eq!(e[2].eval(&q(1, 2)), q(-1, 4));
        assert_eq!(e[1], RationalPolynomial::new(vec![q(-1, 2), q(1, 1)]));
        for n in 0..=10 {
            assert!(e[2 * n + 1].eval(&q(1, 2)).is_zero());
        }
    }

    #[test]
    fn display() {
        assert_eq!(bernoulli_poly(2).to_string(), "x^2 - x + 1/6");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
    }
}
