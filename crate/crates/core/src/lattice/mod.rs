//! Alternating four-dimensional lattice sums `F(a,b,c,d)`, their
//! two-dimensional reductions and `L(f,2)` for eta-quotient cusp forms.

mod cubes;
mod cusp;
mod integral;
mod relation;
mod spec;
mod sum2d;

use crate::mahler::MahlerError;
use crate::numeric::NumericError;
use crate::series::SeriesError;

pub use cubes::f_cubes;
pub use cusp::{cusp_l2, dirichlet_partial_sum, CuspL2, PartialSum};
pub use integral::{f18_elementary, f_integral, Evaluated};
pub use relation::{relation_check, Atom, Evaluator, RelationVerdict, Term};
pub use spec::LatticeSpec;
pub use sum2d::{closed_form_sum, sum2d, TwoDimSumSpec, TwoDimVariant};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LatticeError {
    #[error("lattice entries must be positive")]
    NonPositiveEntry,
    #[error("expression has a term at a non-positive exponent, so it is not a cusp form")]
    NotCuspidal,
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Mahler(#[from] MahlerError),
}
