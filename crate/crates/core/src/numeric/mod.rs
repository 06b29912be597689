//! High-precision numerics: reals, complex numbers, double-exponential
//! quadrature, eta/theta evaluation with modular inversion, generalized
//! hypergeometric series and singular moduli.

pub mod complex;
pub mod hyper;
pub mod modular;
pub mod quad;
pub mod real;
pub mod theta;

use alloc::string::String;

pub use complex::BigComplex;
pub use hyper::{hypergeom_pfq, hypergeom_pfq_complex};
pub use modular::{class_invariant_alpha, modular_params, singular_modulus, ModularEntry, ModularParams};
pub use quad::{Abscissa, Domain, QuadResult, Quadrature, Rule};
pub use real::{default_guard, BigReal, Context, DEFAULT_DIGITS};
pub use theta::{eta_direct, eta_numeric, eta_q, phi_numeric, psi_numeric, theta_weight32};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("non-finite integrand value at x = {at}")]
    NonFinite { at: String },
    #[error("did not reach {target} digits (estimated error {estimate})")]
    NotConverged { target: u32, estimate: String },
    #[error("divergent series: {0}")]
    Divergent(String),
    #[error("cannot parse `{0}` as a decimal number")]
    Parse(String),
    #[error("cancellation of {lost} digits exceeds the {guard} guard digits; raise the precision")]
    Cancellation { lost: u32, guard: u32 },
}
