//! Closed-form main terms for moments, crank moments, the Euler product and
//! the three-term Bessel expansion of `u(m,n)`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::Rational64;
use serde::Serialize;

use super::symbolic::{ClosedForm, SymbolicConstant};
use crate::enumerate::Family;
use crate::error::{Error, Result};
use crate::series::ExactRational;
use crate::special::{bernoulli_poly, ln_bessel_i};

/// Which displayed formula an estimate came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaTag {
    UnimodalMoment,
    DurfeeMoment,
    SemistrictMoment,
    UnimodalAbsMoment,
    DurfeeAbsMoment,
    Ingham,
    EulerProduct,
    CrankMoment,
    BesselExpansion,
    BesselDiscriminant,
}

/// Arguments the estimate was evaluated at.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct EstimateParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticEstimate {
    pub value: f64,
    /// `ln |value|`, usable where `value` would overflow.
    pub ln_value: f64,
    pub tag: FormulaTag,
    pub params: EstimateParams,
}

impl AsymptoticEstimate {
    fn from_ln(ln_value: f64, sign: f64, tag: FormulaTag, params: EstimateParams) -> Self {
        Self {
            value: sign * ln_value.exp(),
            ln_value,
            tag,
            params,
        }
    }

    fn from_closed_form(cf: &ClosedForm, n: f64, tag: FormulaTag, k: u32) -> Self {
        let params = EstimateParams {
            k: Some(k),
            n: Some(n),
            ..Default::default()
        };
        Self::from_ln(cf.ln_eval(n), f64::from(cf.coeff.sign()), tag, params)
    }
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn half() -> ExactRational {
    ExactRational::new(BigInt::from(1), BigInt::from(2))
}

/// `B_{2k}(1/2)` as an exact constant.
pub(crate) fn bernoulli_half(k: u32) -> SymbolicConstant {
    let b = bernoulli_poly(2 * k as usize).eval(&half());
    SymbolicConstant::from_rational(&b).expect("small Bernoulli values")
}

fn minus_one_pow(k: u32) -> SymbolicConstant {
    SymbolicConstant::from_i64(if k % 2 == 0 { 1 } else { -1 })
}

fn exp_two_pi_sqrt_third() -> SymbolicConstant {
    // 2π/√3
    SymbolicConstant::from_i64(2) * SymbolicConstant::pi() * SymbolicConstant::int_pow(3, r(-1, 2))
}

/// `(−1)^k 2^{2k−3} 3^{k−3/4} B_{2k}(1/2) n^{k−5/4} e^{2π√(n/3)}`, the main
/// term of `u_{2k}(n)`.
pub fn closed_form_u_moment(k: u32) -> ClosedForm {
    let k64 = k as i64;
    ClosedForm {
        coeff: minus_one_pow(k)
            * SymbolicConstant::int_pow(2, r(2 * k64 - 3, 1))
            * SymbolicConstant::int_pow(3, r(4 * k64 - 3, 4))
            * bernoulli_half(k),
        log_power: r(0, 1),
        n_power: r(4 * k64 - 5, 4),
        exp_sqrt: exp_two_pi_sqrt_third(),
    }
}

/// `(−1)^k 2^{2k−2} 3^{k−7/4} B_{2k}(1/2) n^{k−5/4} e^{2π√(n/3)}`, the main
/// term of `v_{2k}(n)`.
pub fn closed_form_v_moment(k: u32) -> ClosedForm {
    let k64 = k as i64;
    ClosedForm {
        coeff: minus_one_pow(k)
            * SymbolicConstant::int_pow(2, r(2 * k64 - 2, 1))
            * SymbolicConstant::int_pow(3, r(4 * k64 - 7, 4))
            * bernoulli_half(k),
        log_power: r(0, 1),
        n_power: r(4 * k64 - 5, 4),
        exp_sqrt: exp_two_pi_sqrt_third(),
    }
}

/// `log(n)^k n^{k/2−1} e^{π√n} / (16 π^k)`, the main term of `dm_k(n)`.
pub fn closed_form_dm_moment(k: u32) -> ClosedForm {
    let k64 = k as i64;
    ClosedForm {
        coeff: SymbolicConstant::int_pow(2, r(-4, 1)) * SymbolicConstant::pi_pow(r(-k64, 1)),
        log_power: r(k64, 1),
        n_power: r(k64 - 2, 2),
        exp_sqrt: SymbolicConstant::pi(),
    }
}

fn abs_common(k: u32) -> Result<SymbolicConstant> {
    if k < 2 {
        return Err(Error::UnsupportedOrder(k));
    }
    let k64 = k as i64;
    // (1 − 2^{1−k}) k! = (2^{k−1} − 1) k! / 2^{k−1}
    let fact: BigInt = (1..=k).map(BigInt::from).product();
    let num = ((BigInt::from(1) << (k as usize - 1)) - 1u32) * fact;
    let rational = ExactRational::new(num, BigInt::from(1) << (k as usize - 1));
    Ok(SymbolicConstant::from_rational(&rational).ok_or(Error::UnsupportedOrder(k))?
        * SymbolicConstant::zeta(k)
        * SymbolicConstant::pi_pow(r(-k64, 1)))
}

/// `3^{k/2−3/4}(1 − 2^{1−k}) k! ζ(k) n^{k/2−5/4} e^{2π√(n/3)} / (4π^k)`,
/// the main term of `u_k⁺(n)` for `k ≥ 2`.
pub fn closed_form_abs_u(k: u32) -> Result<ClosedForm> {
    let k64 = k as i64;
    Ok(ClosedForm {
        coeff: abs_common(k)?
            * SymbolicConstant::int_pow(3, r(2 * k64 - 3, 4))
            * SymbolicConstant::int_pow(2, r(-2, 1)),
        log_power: r(0, 1),
        n_power: r(2 * k64 - 5, 4),
        exp_sqrt: exp_two_pi_sqrt_third(),
    })
}

/// `3^{k/2−7/4}(1 − 2^{1−k}) k! ζ(k) n^{k/2−5/4} e^{2π√(n/3)} / (2π^k)`,
/// the main term of `v_k⁺(n)` for `k ≥ 2`.
pub fn closed_form_abs_v(k: u32) -> Result<ClosedForm> {
    let k64 = k as i64;
    Ok(ClosedForm {
        coeff: abs_common(k)?
            * SymbolicConstant::int_pow(3, r(2 * k64 - 7, 4))
            * SymbolicConstant::int_pow(2, r(-1, 1)),
        log_power: r(0, 1),
        n_power: r(2 * k64 - 5, 4),
        exp_sqrt: exp_two_pi_sqrt_third(),
    })
}

fn check_n(n: f64) -> Result<()> {
    if n > 0.0 && n.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("n = {n} must be positive")))
    }
}

pub fn main_term_u_moment(k: u32, n: f64) -> Result<AsymptoticEstimate> {
    check_n(n)?;
    Ok(AsymptoticEstimate::from_closed_form(
        &closed_form_u_moment(k),
        n,
        FormulaTag::UnimodalMoment,
        2 * k,
    ))
}

pub fn main_term_v_moment(k: u32, n: f64) -> Result<AsymptoticEstimate> {
    check_n(n)?;
    Ok(AsymptoticEstimate::from_closed_form(
        &closed_form_v_moment(k),
        n,
        FormulaTag::DurfeeMoment,
        2 * k,
    ))
}

pub fn main_term_dm_moment(k: u32, n: f64) -> Result<AsymptoticEstimate> {
    check_n(n)?;
    if k >= 1 && n <= 1.0 {
        return Err(Error::Domain(format!("log(n)^{k} needs n > 1, got {n}")));
    }
    Ok(AsymptoticEstimate::from_closed_form(
        &closed_form_dm_moment(k),
        n,
        FormulaTag::SemistrictMoment,
        k,
    ))
}

pub fn main_term_abs_u(k: u32, n: f64) -> Result<AsymptoticEstimate> {
    check_n(n)?;
    Ok(AsymptoticEstimate::from_closed_form(
        &closed_form_abs_u(k)?,
        n,
        FormulaTag::UnimodalAbsMoment,
        k,
    ))
}

pub fn main_term_abs_v(k: u32, n: f64) -> Result<AsymptoticEstimate> {
    check_n(n)?;
    Ok(AsymptoticEstimate::from_closed_form(
        &closed_form_abs_v(k)?,
        n,
        FormulaTag::DurfeeAbsMoment,
        k,
    ))
}

/// Signed or absolute moments of order `k` (not halved).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MomentKind {
    Signed,
    Absolute,
}

impl std::str::FromStr for MomentKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "signed" => Ok(MomentKind::Signed),
            "absolute" | "abs" => Ok(MomentKind::Absolute),
            other => Err(format!("unknown moment kind `{other}` (expected signed or absolute)")),
        }
    }
}

impl std::fmt::Display for MomentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MomentKind::Signed => "signed",
            MomentKind::Absolute => "absolute",
        })
    }
}

/// Main term of the order-`k` moment of `family`. Signed odd moments of the
/// symmetric families vanish identically and have no main term; absolute
/// moments of the semistrict family share the signed main term.
pub fn main_term(family: Family, k: u32, kind: MomentKind, n: f64) -> Result<AsymptoticEstimate> {
    match (family, kind) {
        (Family::Unimodal, MomentKind::Signed) if k % 2 == 0 => main_term_u_moment(k / 2, n),
        (Family::Durfee, MomentKind::Signed) if k % 2 == 0 => main_term_v_moment(k / 2, n),
        (Family::Unimodal | Family::Durfee, MomentKind::Signed) => Err(Error::UnsupportedOrder(k)),
        (Family::Unimodal, MomentKind::Absolute) if k % 2 == 0 => main_term_u_moment(k / 2, n),
        (Family::Durfee, MomentKind::Absolute) if k % 2 == 0 => main_term_v_moment(k / 2, n),
        (Family::Unimodal, MomentKind::Absolute) => main_term_abs_u(k, n),
        (Family::Durfee, MomentKind::Absolute) => main_term_abs_v(k, n),
        (Family::Semistrict, _) => main_term_dm_moment(k, n),
        (f, _) => Err(Error::NoMainTerm(f)),
    }
}

/// `√(2π/w) e^{−π²/(6w)}`, the main term of `(e^{−w}; e^{−w})_∞`.
pub fn pochhammer_main_term(w: f64) -> f64 {
    (2.0 * PI / w).sqrt() * (-PI * PI / (6.0 * w)).exp()
}

/// `(−1)^j B_{2j}(1/2) (w/2π)^{1/2−2j} e^{π²/(6w)}`, the main term of
/// `C_{2j}(e^{−w}) = Σ_n Σ_m m^{2j} M(m,n) e^{−wn}`.
pub fn crank_moment_main_term(j: u32, w: f64) -> f64 {
    let c = (minus_one_pow(j) * bernoulli_half(j)).to_f64();
    c * (w / (2.0 * PI)).powf(0.5 - 2.0 * f64::from(j)) * (PI * PI / (6.0 * w)).exp()
}

/// `ln X_j(n)` with `X_j(n) = (2√(3n))^{−j} I_j(2π√(n/3))`.
pub fn ln_bessel_x(j: u32, n: f64) -> f64 {
    -f64::from(j) * (2.0 * (3.0 * n).sqrt()).ln() + ln_bessel_i(j, 2.0 * PI * (n / 3.0).sqrt())
}

/// `(π²/2) X₃ + (π³/3) X₄ + (π⁴/72)(59 − 36m²) X₅`.
pub fn bessel_expansion_u(m: i64, n: u64) -> Result<AsymptoticEstimate> {
    if n == 0 {
        return Err(Error::Domain("the Bessel expansion needs n ≥ 1".into()));
    }
    let nf = n as f64;
    // Factor out X₃ to stay finite for large n.
    let x3 = ln_bessel_x(3, nf);
    let t4 = (ln_bessel_x(4, nf) - x3).exp();
    let t5 = (ln_bessel_x(5, nf) - x3).exp();
    let m2 = (m * m) as f64;
    let bracket = PI * PI / 2.0 + PI.powi(3) / 3.0 * t4 + PI.powi(4) / 72.0 * (59.0 - 36.0 * m2) * t5;
    let params = EstimateParams {
        m: Some(m),
        n: Some(nf),
        ..Default::default()
    };
    Ok(AsymptoticEstimate::from_ln(
        x3 + bracket.abs().ln(),
        bracket.signum(),
        FormulaTag::BesselExpansion,
        params,
    ))
}

/// `(π⁶/2) X₃(n) X₅(n)`, the main term of `u(m,n)² − u(m−1,n)u(m+1,n)`.
pub fn bessel_discriminant_main_term(n: u64) -> Result<AsymptoticEstimate> {
    if n == 0 {
        return Err(Error::Domain("the Bessel expansion needs n ≥ 1".into()));
    }
    let nf = n as f64;
    let ln = (PI.powi(6) / 2.0).ln() + ln_bessel_x(3, nf) + ln_bessel_x(5, nf);
    let params = EstimateParams {
        n: Some(nf),
        ..Default::default()
    };
    Ok(AsymptoticEstimate::from_ln(ln, 1.0, FormulaTag::BesselDiscriminant, params))
}
