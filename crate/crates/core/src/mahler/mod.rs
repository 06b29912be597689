//! Mahler measures of `y + 1/y + z + 1/z + α` (m), `y³ + z³ + 1 - αyz` (n)
//! and `(y+1)(z+1)(y+z) - αyz` (g), each by a hypergeometric route and a
//! Jensen-formula quadrature.

mod arg;
mod cubic;
mod jensen;
mod measure;

use alloc::string::String;

use crate::numeric::NumericError;

pub use arg::{alpha25, arg_t_imag, arg_t_real, catalog_argument, catalog_arguments, MahlerArg, Radical};
pub use cubic::cubic_roots;
pub use measure::{
    mahler_g, mahler_g_combination, mahler_g_jensen, mahler_m, mahler_m_hyper, mahler_m_jensen, mahler_n,
    mahler_n_hyper, mahler_n_jensen,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Route {
    /// Hypergeometric where it converges comfortably, Jensen otherwise.
    #[default]
    Auto,
    Hyper,
    Jensen,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MahlerError {
    #[error("outside the hypergeometric region: {0}")]
    OutOfConvergence(String),
    #[error("bad argument recipe: {0}")]
    Recipe(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}
