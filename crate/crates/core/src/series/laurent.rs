use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `Σ c_i ζ^(lo+i)` with exact integer coefficients,
/// stored as a dense window.
///
/// The window is always trimmed: the first and last stored coefficients are
/// nonzero, and the zero polynomial has no coefficients and `lo == 0`.
/// Equality is therefore structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZetaLaurent {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl ZetaLaurent {
    pub fn new(lo: i64, coeffs: Vec<BigInt>) -> Self {
        let mut out = Self { lo, coeffs };
        out.trim();
        out
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · ζ^exp`.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        Self::new(exp, vec![c])
    }

    pub fn from_i64s(lo: i64, coeffs: &[i64]) -> Self {
        Self::new(lo, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Smallest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Largest exponent with a nonzero coefficient (`lo - 1` for zero).
    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    /// `(min, max)` exponent of the support, `None` for zero.
    pub fn support(&self) -> Option<(i64, i64)> {
        (!self.is_zero()).then(|| (self.lo, self.hi()))
    }

    /// Dense coefficients starting at `ζ^lo`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn get(&self, exp: i64) -> Option<&BigInt> {
        let idx = exp.checked_sub(self.lo)?;
        usize::try_from(idx).ok().and_then(|i| self.coeffs.get(i))
    }

    /// Coefficient of `ζ^exp` (zero outside the window).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.get(exp).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs over the window, zeros included.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// Value at `ζ = 1`.
    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `Σ m^k c_m`.
    pub fn moment(&self, k: u32) -> BigInt {
        self.iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| BigInt::from(m).pow(k) * c)
            .sum()
    }

    /// `Σ |m|^k c_m`.
    pub fn abs_moment(&self, k: u32) -> BigInt {
        self.iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| BigInt::from(m.unsigned_abs()).pow(k) * c)
            .sum()
    }

    /// Substitute `ζ → ζ⁻¹`.
    pub fn reflect(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            lo: -self.hi(),
            coeffs,
        }
    }

    /// Multiply by `ζ^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            lo: self.lo + shift,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `self += ± ζ^shift · other`, exactly and in place.
    pub fn add_shifted(&mut self, other: &ZetaLaurent, shift: i64, negate: bool) {
        if other.is_zero() {
            return;
        }
        let olo = other.lo + shift;
        if self.is_zero() {
            self.lo = olo;
            self.coeffs = if negate {
                other.coeffs.iter().map(|c| -c).collect()
            } else {
                other.coeffs.clone()
            };
            return;
        }
        if olo < self.lo {
            let pad = (self.lo - olo) as usize;
            self.coeffs
                .splice(0..0, std::iter::repeat_with(BigInt::zero).take(pad));
            self.lo = olo;
        }
        let ohi = olo + other.coeffs.len() as i64 - 1;
        if ohi > self.hi() {
            let new_len = (ohi - self.lo + 1) as usize;
            self.coeffs.resize_with(new_len, BigInt::zero);
        }
        let offset = (olo - self.lo) as usize;
        let dst = &mut self.coeffs[offset..offset + other.coeffs.len()];
        if negate {
            for (d, c) in dst.iter_mut().zip(&other.coeffs) {
                *d -= c;
            }
        } else {
            for (d, c) in dst.iter_mut().zip(&other.coeffs) {
                *d += c;
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        let Some(first) = self.coeffs.iter().position(|c| !c.is_zero()) else {
            self.coeffs.clear();
            self.lo = 0;
            return;
        };
        let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(first);
        self.coeffs.truncate(last + 1);
        if first > 0 {
            self.coeffs.drain(..first);
            self.lo += first as i64;
        }
    }

    /// True when every coefficient is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for ZetaLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.iter().filter(|(_, c)| !c.is_zero()) {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match m {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "z^{m}")?,
                _ => write!(f, "{mag}*z^{m}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&ZetaLaurent> for ZetaLaurent {
    fn add_assign(&mut self, rhs: &ZetaLaurent) {
        self.add_shifted(rhs, 0, false);
    }
}

impl SubAssign<&ZetaLaurent> for ZetaLaurent {
    fn sub_assign(&mut self, rhs: &ZetaLaurent) {
        self.add_shifted(rhs, 0, true);
    }
}

impl Add for &ZetaLaurent {
    type Output = ZetaLaurent;
    fn add(self, rhs: &ZetaLaurent) -> ZetaLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &ZetaLaurent {
    type Output = ZetaLaurent;
    fn sub(self, rhs: &ZetaLaurent) -> ZetaLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &ZetaLaurent {
    type Output = ZetaLaurent;
    fn neg(self) -> ZetaLaurent {
        ZetaLaurent {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ZetaLaurent {
    type Output = ZetaLaurent;
    fn mul(self, rhs: &ZetaLaurent) -> ZetaLaurent {
        if self.is_zero() || rhs.is_zero() {
            return ZetaLaurent::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        ZetaLaurent::new(self.lo + rhs.lo, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ZetaLaurent {
            type Output = ZetaLaurent;
            fn $m(self, rhs: ZetaLaurent) -> ZetaLaurent {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ZetaLaurent {
    type Output = ZetaLaurent;
    fn neg(self) -> ZetaLaurent {
        -&self
    }
}
