//! Exact truncated power series in `q` whose coefficients are Laurent
//! polynomials in `ζ` with arbitrary-precision integer coefficients.
//!
//! Every [`BivariateSeries`] carries a fixed truncation order `N`; binary
//! operations refuse inputs of different orders instead of silently
//! truncating to the smaller one.

mod bivariate;
mod laurent;
mod pochhammer;

pub use bivariate::{Binomial, BivariateSeries, Sign};
pub use laurent::ZetaLaurent;
pub use pochhammer::{
    divide_by_pochhammer, pochhammer_finite, pochhammer_infinite, PochhammerFactor,
};

/// Exact rational number with positive, reduced denominator.
pub type ExactRational = num_rational::BigRational;
