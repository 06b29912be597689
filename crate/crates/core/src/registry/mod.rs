//! Executable catalog of the identities, theorems and conjectures the
//! workbench knows about, with per-record tolerance policy.

mod catalog;
mod eval;
mod props;

use alloc::vec::Vec;
use core::fmt;

use crate::lattice::Term;
use crate::series::{EtaExpression, Theta2DFamily};

pub use catalog::{f17, f30, registry_catalog};
pub use eval::{evaluate, MIN_TERMS, CoefficientDetail, Detail, Evaluation, Outcome, Overrides, ResidualDetail};
pub use props::Property;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    CoefficientExact,
    NumericTheorem,
    NumericConjecture,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::CoefficientExact => "coefficient-exact",
            Kind::NumericTheorem => "numeric-theorem",
            Kind::NumericConjecture => "numeric-conjecture",
        }
    }

    pub fn from_name(s: &str) -> Option<Kind> {
        match s {
            "coefficient-exact" => Some(Kind::CoefficientExact),
            "numeric-theorem" => Some(Kind::NumericTheorem),
            "numeric-conjecture" | "conjecture" => Some(Kind::NumericConjecture),
            _ => None,
        }
    }

    pub fn gates(self) -> bool {
        self != Kind::NumericConjecture
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Proved,
    Conjectural,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Proved => "proved",
            Status::Conjectural => "conjectural",
        }
    }
}

/// One side-by-side equality `Σ lhs = Σ rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |f: &mut fmt::Formatter<'_>, terms: &[Term]| -> fmt::Result {
            if terms.is_empty() {
                return f.write_str("0");
            }
            for (i, t) in terms.iter().enumerate() {
                if i > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "{t}")?;
            }
            Ok(())
        };
        side(f, &self.lhs)?;
        f.write_str(" = ")?;
        side(f, &self.rhs)
    }
}

/// What a record evaluates.
#[derive(Debug, Clone, PartialEq)]
pub enum Check {
    /// Two eta expressions agree coefficient by coefficient.
    EtaIdentity { lhs: EtaExpression, rhs: EtaExpression },
    /// A sum of two-dimensional theta families equals an eta expression.
    ThetaExpansion { families: Vec<Theta2DFamily>, eta: EtaExpression },
    /// Normalized newform: integral coefficients, `a₁ = 1`, `a_{mn} = a_m a_n`
    /// for coprime `m, n`.
    Newform { form: EtaExpression },
    Relations(Vec<Relation>),
    Property(Property),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub precision: u32,
    /// Coefficient count; `None` means `max(500, Sturm bound)`.
    pub n_terms: Option<usize>,
    pub tolerance: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub kind: Kind,
    pub status: Status,
    /// Verbatim phrase locating the statement in the source text.
    pub anchor: &'static str,
    pub summary: &'static str,
    pub check: Check,
    pub params: Params,
}

impl IdentityRecord {
    /// Copy with one coefficient perturbed. Only coefficient-exact records
    /// have one; the copy must fail.
    pub fn mutated(&self) -> Option<IdentityRecord> {
        use num_rational::Ratio;
        let check = match &self.check {
            Check::EtaIdentity { lhs, rhs } => {
                let last = rhs.terms().len().checked_sub(1)?;
                let c = rhs.terms()[last].0 + Ratio::from_integer(1);
                Check::EtaIdentity { lhs: lhs.clone(), rhs: rhs.with_coefficient(last, c) }
            }
            Check::ThetaExpansion { families, eta } => {
                let mut families = families.clone();
                families.first_mut()?.coeff += 1;
                Check::ThetaExpansion { families, eta: eta.clone() }
            }
            Check::Newform { form } => {
                let c = form.terms().get(1)?.0 + Ratio::new(1, 2);
                Check::Newform { form: form.with_coefficient(1, c) }
            }
            _ => return None,
        };
        Some(IdentityRecord { check, ..self.clone() })
    }
}

/// Looks a record up by id.
pub fn find_record(id: &str) -> Option<IdentityRecord> {
    registry_catalog().into_iter().find(|r| r.id == id)
}

/// Reasons a record could not be evaluated.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RegistryError {
    #[error("{requested} coefficients is below the Sturm bound {bound}")]
    BelowSturm { requested: usize, bound: u64 },
    #[error(transparent)]
    Series(#[from] crate::series::SeriesError),
    #[error(transparent)]
    Lattice(#[from] crate::lattice::LatticeError),
    #[error(transparent)]
    Numeric(#[from] crate::numeric::NumericError),
    #[error(transparent)]
    Mahler(#[from] crate::mahler::MahlerError),
}
