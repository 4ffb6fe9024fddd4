//! Floating-point views of big integers whose magnitude may exceed `f64`.

use num_bigint::{BigInt, Sign};
use num_traits::ToPrimitive;

/// `ln |x|`; `−∞` for zero.
pub fn ln_abs_big(x: &BigInt) -> f64 {
    if x.sign() == Sign::NoSign {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().map(|v| v.abs().ln()).unwrap_or(f64::NAN);
    }
    // keep the top 64 bits
    let shift = bits - 64;
    let top = (x.magnitude() >> shift).to_f64().unwrap_or(f64::NAN);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `a / b` without overflowing intermediate conversions.
pub fn big_ratio(a: &BigInt, b: &BigInt) -> f64 {
    let sign = match (a.sign(), b.sign()) {
        (Sign::NoSign, _) => return 0.0,
        (_, Sign::NoSign) => return f64::NAN,
        (x, y) if x == y => 1.0,
        _ => -1.0,
    };
    sign * (ln_abs_big(a) - ln_abs_big(b)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_values() {
        let x = BigInt::from(3).pow(2000);
        assert!((ln_abs_big(&x) - 2000.0 * 3f64.ln()).abs() < 1e-9);
        let y = BigInt::from(3).pow(1999) * -1;
        assert!((big_ratio(&x, &y) + 3.0).abs() < 1e-12);
        assert_eq!(ln_abs_big(&BigInt::from(0)), f64::NEG_INFINITY);
        assert!((ln_abs_big(&BigInt::from(-8)) - 8f64.ln()).abs() < 1e-15);
    }
}
