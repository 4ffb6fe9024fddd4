//! Exact Bernoulli and Euler polynomials and double-precision special
//! functions.

mod functions;
mod polynomial;

pub use functions::{
    bessel_i, bessel_i_scaled, digamma, digamma_const, ln_bessel_i, logistic_cdf, logistic_pdf,
    zeta_value, EULER_GAMMA,
};
pub use polynomial::{
    bernoulli_number, bernoulli_poly, bernoulli_polys, euler_poly, euler_polys,
    RationalPolynomial,
};
