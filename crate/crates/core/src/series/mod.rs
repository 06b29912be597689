//! Exact truncated q-series with exponents in 1/24 units, eta and theta
//! expansions, and coefficient-level identity checks.

mod eta;
mod qseries;
mod theta;
mod verify;

use alloc::string::String;

use num_bigint::BigInt;

pub use eta::{eta_series, EtaExpression, EtaMonomial, Expansion};
pub use qseries::FormalQSeries;
pub use theta::{
    expand_theta2d, theta_series_phi, theta_series_psi, IndexRange, LinearWeight, SignPattern, SquareForm, Theta2DFamily,
};
pub use verify::{
    compare_scaled, compare_series, density_profile, lacunarity_scan, sturm_bound, verify_coefficient_identity,
    DensityProfile, Mismatch, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("division by a series whose leading coefficient {0} is not ±1")]
    NonUnitLeading(BigInt),
    #[error("division by the zero series")]
    ZeroDivisor,
    #[error("leading exponents {a}/24 and {b}/24 do not differ by an integer")]
    IncongruentLeads { a: i64, b: i64 },
    #[error("theta family is not positive definite")]
    Indefinite,
    #[error("exponent {numerator}/{divisor} is not a multiple of 1/24")]
    NonIntegralExponent { numerator: i64, divisor: i64 },
    #[error("series known to exponent {available}/24 but {needed}/24 is required")]
    Truncated { needed: i64, available: i64 },
    #[error("{0}")]
    InvalidArgument(String),
}
