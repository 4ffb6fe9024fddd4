//! Exact constants of the shape `± ∏ p^{e_p} · π^{e_π} · ∏ ζ(k)^{e_k}` with
//! rational exponents, and main terms `C · log(n)^α · n^β · e^{c√n}` built
//! from them. Two values are equal iff their canonical forms are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::series::ExactRational;
use crate::special::{bernoulli_number, zeta_value};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolicConstant {
    /// −1, 0 or 1; a zero constant has no factors.
    sign: i8,
    primes: BTreeMap<u64, Rational64>,
    pi: Rational64,
    /// Odd zeta values `ζ(k)`, `k ≥ 3`; even ones are rewritten in `π`.
    zeta: BTreeMap<u32, Rational64>,
}

fn factor(mut n: u64) -> Vec<(u64, i64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl SymbolicConstant {
    pub fn zero() -> Self {
        Self {
            sign: 0,
            primes: BTreeMap::new(),
            pi: Rational64::zero(),
            zeta: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self {
            sign: 1,
            ..Self::zero()
        }
    }

    pub fn pi() -> Self {
        Self::pi_pow(Rational64::one())
    }

    pub fn pi_pow(e: Rational64) -> Self {
        Self {
            pi: e,
            ..Self::one()
        }
    }

    /// `p^e` for an integer `p ≥ 1` (not necessarily prime).
    pub fn int_pow(p: u64, e: Rational64) -> Self {
        assert!(p >= 1, "base must be positive");
        let mut out = Self::one();
        for (q, m) in factor(p) {
            out.primes.insert(q, e * m);
        }
        out.canonicalize()
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(&ExactRational::from_integer(BigInt::from(n)))
            .expect("machine integers factor")
    }

    /// `None` if numerator or denominator does not fit in 64 bits.
    pub fn from_rational(r: &ExactRational) -> Option<Self> {
        if r.is_zero() {
            return Some(Self::zero());
        }
        let num = r.numer().abs().to_u64()?;
        let den = r.denom().to_u64()?;
        let mut out = Self::one();
        out.sign = if r.is_negative() { -1 } else { 1 };
        for (p, e) in factor(num) {
            *out.primes.entry(p).or_default() += Rational64::from(e);
        }
        for (p, e) in factor(den) {
            *out.primes.entry(p).or_default() -= Rational64::from(e);
        }
        Some(out.canonicalize())
    }

    /// `ζ(k)` for `k ≥ 2`; even `k` are expanded through Bernoulli numbers.
    pub fn zeta(k: u32) -> Self {
        assert!(k >= 2, "zeta({k}) is not a finite constant");
        if k % 2 == 0 {
            // ζ(2j) = (−1)^{j+1} B_{2j} (2π)^{2j} / (2 (2j)!)
            let b = bernoulli_number(k as usize);
            let fact: BigInt = (1..=k).map(BigInt::from).product();
            let sign = if (k / 2) % 2 == 1 { 1 } else { -1 };
            let r = b * ExactRational::from_integer(BigInt::from(sign) << (k as usize - 1))
                / ExactRational::from_integer(fact);
            Self::from_rational(&r).expect("small Bernoulli numbers") * Self::pi_pow(Rational64::from(k as i64))
        } else {
            let mut out = Self::one();
            out.zeta.insert(k, Rational64::one());
            out
        }
    }

    fn canonicalize(mut self) -> Self {
        if self.sign == 0 {
            return Self::zero();
        }
        self.primes.retain(|_, e| !e.is_zero());
        self.zeta.retain(|_, e| !e.is_zero());
        self
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn pow(&self, e: Rational64) -> Self {
        if self.is_zero() {
            assert!(e > Rational64::zero(), "0 to a nonpositive power");
            return Self::zero();
        }
        assert!(
            self.sign > 0 || e.denom() % 2 == 1,
            "fractional power of a negative constant"
        );
        let sign = if self.sign < 0 && e.numer() % 2 != 0 { -1 } else { 1 };
        Self {
            sign,
            primes: self.primes.iter().map(|(&p, &x)| (p, x * e)).collect(),
            pi: self.pi * e,
            zeta: self.zeta.iter().map(|(&k, &x)| (k, x * e)).collect(),
        }
        .canonicalize()
    }

    pub fn recip(&self) -> Self {
        self.pow(-Rational64::one())
    }

    pub fn abs(&self) -> Self {
        let mut out = self.clone();
        out.sign = out.sign.abs();
        out
    }

    /// `ln |c|`.
    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let r = |e: &Rational64| *e.numer() as f64 / *e.denom() as f64;
        let primes: f64 = self.primes.iter().map(|(&p, e)| r(e) * (p as f64).ln()).sum();
        let zeta: f64 = self
            .zeta
            .iter()
            .map(|(&k, e)| r(e) * zeta_value(k).expect("k ≥ 3").ln())
            .sum();
        primes + r(&self.pi) * std::f64::consts::PI.ln() + zeta
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.sign) * self.ln_abs().exp()
    }
}

impl Mul for SymbolicConstant {
    type Output = SymbolicConstant;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Mul for &SymbolicConstant {
    type Output = SymbolicConstant;
    fn mul(self, rhs: Self) -> SymbolicConstant {
        if self.is_zero() || rhs.is_zero() {
            return SymbolicConstant::zero();
        }
        let mut out = self.clone();
        out.sign *= rhs.sign;
        for (&p, &e) in &rhs.primes {
            *out.primes.entry(p).or_default() += e;
        }
        for (&k, &e) in &rhs.zeta {
            *out.zeta.entry(k).or_default() += e;
        }
        out.pi += rhs.pi;
        out.canonicalize()
    }
}

impl Neg for SymbolicConstant {
    type Output = SymbolicConstant;
    fn neg(mut self) -> Self {
        self.sign = -self.sign;
        self
    }
}

fn write_exp(f: &mut fmt::Formatter<'_>, base: &str, e: &Rational64) -> fmt::Result {
    if e.is_one() {
        write!(f, "{base}")
    } else if e.is_integer() {
        write!(f, "{base}^{}", e.numer())
    } else {
        write!(f, "{base}^({e})")
    }
}

impl fmt::Display for SymbolicConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.sign < 0 {
            f.write_str("-")?;
        }
        let mut parts = 0;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            parts += 1;
            if parts > 1 {
                f.write_str("*")?;
            }
            Ok(())
        };
        for (p, e) in &self.primes {
            sep(f)?;
            write_exp(f, &p.to_string(), e)?;
        }
        if !self.pi.is_zero() {
            sep(f)?;
            write_exp(f, "pi", &self.pi)?;
        }
        for (k, e) in &self.zeta {
            sep(f)?;
            write_exp(f, &format!("zeta({k})"), e)?;
        }
        if parts == 0 {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// `coeff · log(n)^log_power · n^n_power · exp(exp_sqrt · √n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub coeff: SymbolicConstant,
    pub log_power: Rational64,
    pub n_power: Rational64,
    pub exp_sqrt: SymbolicConstant,
}

impl ClosedForm {
    pub fn ln_eval(&self, n: f64) -> f64 {
        let r = |e: &Rational64| *e.numer() as f64 / *e.denom() as f64;
        let log_part = if self.log_power.is_zero() {
            0.0
        } else {
            r(&self.log_power) * n.ln().ln()
        };
        self.coeff.ln_abs() + log_part + r(&self.n_power) * n.ln() + self.exp_sqrt.to_f64() * n.sqrt()
    }

    pub fn eval(&self, n: f64) -> f64 {
        f64::from(self.coeff.sign()) * self.ln_eval(n).exp()
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coeff)?;
        if !self.log_power.is_zero() {
            write!(f, " * log(n)^({})", self.log_power)?;
        }
        if !self.n_power.is_zero() {
            write!(f, " * n^({})", self.n_power)?;
        }
        write!(f, " * exp(({}) * sqrt(n))", self.exp_sqrt)
    }
}

impl Serialize for ClosedForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn canonical_equality() {
        let a = SymbolicConstant::int_pow(12, r(1, 2));
        let b = SymbolicConstant::from_i64(2) * SymbolicConstant::int_pow(3, r(1, 2));
        assert_eq!(a, b);
        assert_eq!(a.pow(r(2, 1)), SymbolicConstant::from_i64(12));
        assert_eq!((&a * &a.recip()), SymbolicConstant::one());
    }

    #[test]
    fn even_zeta_in_pi() {
        let z2 = SymbolicConstant::zeta(2);
        assert_eq!(z2, SymbolicConstant::pi_pow(r(2, 1)) * SymbolicConstant::from_i64(6).recip());
        let z4 = SymbolicConstant::zeta(4);
        assert!((z4.to_f64() - std::f64::consts::PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((SymbolicConstant::zeta(3).to_f64() - 1.202_056_903_159_594).abs() < 1e-14);
    }

    #[test]
    fn signs_and_display() {
        let c = -SymbolicConstant::from_rational(&ExactRational::new(BigInt::from(3), BigInt::from(8))).unwrap();
        assert_eq!(c.to_string(), "-2^-3*3");
        assert!((c.to_f64() + 0.375).abs() < 1e-15);
        assert_eq!(SymbolicConstant::from_i64(-1).pow(r(3, 1)).sign(), -1);
        assert_eq!(SymbolicConstant::one().to_string(), "1");
    }

    #[test]
    fn closed_form_eval() {
        let cf = ClosedForm {
            coeff: SymbolicConstant::from_i64(2),
            log_power: r(1, 1),
            n_power: r(-1, 2),
            exp_sqrt: SymbolicConstant::pi(),
        };
        let n: f64 = 100.0;
        let direct = 2.0 * n.ln() * n.powf(-0.5) * (std::f64::consts::PI * 10.0).exp();
        assert!((cf.eval(n) / direct - 1.0).abs() < 1e-12);
    }
}
