//! Closed-form main terms, the Tauberian translator and the numerical
//! Euler–Maclaurin instrument.

mod em_cases;
mod euler_maclaurin;
mod main_terms;
mod numeric;
mod quadrature;
mod symbolic;
mod tauberian;

pub use em_cases::{pole_leading_ratio, EmCase, EM_GRID};
pub use euler_maclaurin::{
    em_expand, em_expand_alternating, em_expand_pole, fit_remainder_order, Decay, EmResult,
    ExpansionInput, NeumaierSum, RemainderFit,
};
pub use main_terms::{
    bessel_discriminant_main_term, bessel_expansion_u, closed_form_abs_u, closed_form_abs_v,
    closed_form_dm_moment, closed_form_u_moment, closed_form_v_moment, crank_moment_main_term,
    ln_bessel_x, main_term, main_term_abs_u, main_term_abs_v, main_term_dm_moment,
    main_term_u_moment, main_term_v_moment, pochhammer_main_term, AsymptoticEstimate,
    EstimateParams, FormulaTag, MomentKind,
};
pub use numeric::{crank_moment_numeric, euler_product_numeric, truncation_order};
pub use quadrature::{integrate, integrate_half_line, Quadrature};
pub use symbolic::{ClosedForm, SymbolicConstant};
pub use tauberian::{
    durfee_moment_input, ingham_closed_form, ingham_translate, partition_input,
    semistrict_moment_input, unimodal_moment_input, SymbolicTauberianInput, TauberianInput,
};
