use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::One;

use super::cusp::cusp_l2;
use super::integral::{f18_elementary, f_integral};
use super::spec::LatticeSpec;
use super::sum2d::{closed_form_sum, sum2d, TwoDimSumSpec};
use super::LatticeError;
use crate::mahler::{mahler_g, mahler_m, mahler_n, MahlerArg, Radical, Route};
use crate::numeric::{hypergeom_pfq, singular_modulus, BigReal, Context};
use crate::series::EtaExpression;

/// A quantity a relation is built from.
#[derive(Debug, Clone, PartialEq)]
pub enum Atom {
    One,
    F(LatticeSpec),
    Sum2D(TwoDimSumSpec),
    /// `(π²/(32√x))·m(4√α_x)`.
    ClosedFormSum(Ratio<i64>),
    /// `L(f,2)` of a labelled eta-quotient combination.
    CuspL2 { label: String, form: EtaExpression },
    M(MahlerArg),
    N(MahlerArg),
    G(MahlerArg),
    /// Real `pFq(num; den; z)`.
    Hypergeom { num: Vec<Ratio<i64>>, den: Vec<Ratio<i64>>, z: Ratio<i64> },
    /// The elementary one-dimensional integral equal to `F(1,8)`.
    F18Elementary,
    /// Singular modulus `α_x`.
    Alpha(Ratio<i64>),
    /// Real part of a radical recipe.
    Value(Radical),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Ratio<i64>]| v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Atom::One => f.write_str("1"),
            Atom::F(s) => write!(f, "{s}"),
            Atom::Sum2D(s) => write!(f, "{s}"),
            Atom::ClosedFormSum(x) => write!(f, "closed_form_sum({x})"),
            Atom::CuspL2 { label, .. } => write!(f, "L({label},2)"),
            Atom::M(a) => write!(f, "m({a})"),
            Atom::N(a) => write!(f, "n({a})"),
            Atom::G(a) => write!(f, "g({a})"),
            Atom::Hypergeom { num, den, z } => write!(f, "{}F{}({};{};{z})", num.len(), den.len(), list(num), list(den)),
            Atom::F18Elementary => f.write_str("F(1,8)[elementary]"),
            Atom::Alpha(x) => write!(f, "alpha_{x}"),
            Atom::Value(r) => write!(f, "[{r}]"),
        }
    }
}

/// `coeff · π^pi_power · atom`.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coeff: Ratio<i64>,
    pub pi_power: i32,
    pub atom: Atom,
}

impl Term {
    pub fn new(coeff: Ratio<i64>, pi_power: i32, atom: Atom) -> Self {
        Term { coeff, pi_power, atom }
    }

    pub fn int(coeff: i64, atom: Atom) -> Self {
        Term::new(Ratio::from_integer(coeff), 0, atom)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.coeff.is_one() {
            write!(f, "({})*", self.coeff)?;
        }
        match self.pi_power {
            0 => {}
            1 => f.write_str("pi*")?,
            p => write!(f, "pi^{p}*")?,
        }
        write!(f, "{}", self.atom)
    }
}

/// Evaluates atoms at a fixed precision, caching by display form.
pub struct Evaluator {
    pub ctx: Context,
    pub target_digits: u32,
    pub route: Route,
    cache: BTreeMap<String, BigReal>,
}

impl Evaluator {
    pub fn new(ctx: Context, target_digits: u32) -> Self {
        Evaluator { ctx, target_digits, route: Route::Auto, cache: BTreeMap::new() }
    }

    pub fn atom(&mut self, atom: &Atom) -> Result<BigReal, LatticeError> {
        let key = format!("{atom}");
        if let Some(v) = self.cache.get(&key) {
            return Ok(v.clone());
        }
        let ctx = &self.ctx;
        let v = match atom {
            Atom::One => ctx.one(),
            Atom::F(s) => f_integral(ctx, s, self.target_digits)?.value,
            Atom::Sum2D(s) => sum2d(ctx, s)?,
            Atom::ClosedFormSum(x) => closed_form_sum(ctx, *x)?,
            Atom::CuspL2 { form, .. } => cusp_l2(ctx, form, self.target_digits)?.value,
            Atom::M(a) => mahler_m(ctx, &a.value(ctx)?, self.route)?,
            Atom::N(a) => mahler_n(ctx, &a.value(ctx)?, self.route)?,
            Atom::G(a) => mahler_g(ctx, &a.value(ctx)?, Route::Jensen)?,
            Atom::Hypergeom { num, den, z } => hypergeom_pfq(ctx, num, den, &ctx.ratio(z))?,
            Atom::F18Elementary => f18_elementary(ctx, self.target_digits)?,
            Atom::Alpha(x) => singular_modulus(ctx, &ctx.ratio(x))?,
            Atom::Value(r) => r.eval(ctx)?.re,
        };
        self.cache.insert(key, v.clone());
        Ok(v)
    }

    pub fn terms(&mut self, terms: &[Term]) -> Result<BigReal, LatticeError> {
        let mut total = self.ctx.zero();
        for t in terms {
            let v = self.atom(&t.atom)?;
            let scale = self.ctx.ratio(&t.coeff) * self.ctx.pi().powi(t.pi_power as i64);
            total += v * scale;
        }
        Ok(total)
    }
}

#[derive(Debug, Clone)]
pub struct RelationVerdict {
    pub lhs: BigReal,
    pub rhs: BigReal,
    /// `lhs - rhs`.
    pub residual: BigReal,
    /// `-log10(|residual| / max(|lhs|, 1))`.
    pub digits: f64,
    pub pass: bool,
}

/// PASS when `|lhs - rhs| < 10^{-target}·max(|lhs|, 1)`.
pub fn relation_check(ev: &mut Evaluator, lhs: &[Term], rhs: &[Term], target_digits: u32) -> Result<RelationVerdict, LatticeError> {
    let l = ev.terms(lhs)?;
    let r = ev.terms(rhs)?;
    let residual = &l - &r;
    let scale = l.abs().max(ev.ctx.one());
    let digits = if residual.is_zero() {
        ev.ctx.working_digits() as f64
    } else {
        -(residual.abs() / &scale).log10_abs_approx()
    };
    let pass = residual.abs() < ev.ctx.ten_pow_neg(target_digits) * scale;
    Ok(RelationVerdict { lhs: l, rhs: r, residual, digits, pass })
}

