use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::{Check, IdentityRecord, Kind, RegistryError};
use crate::lattice::{relation_check, Evaluator};
use crate::numeric::{BigReal, Context};
use crate::series::{compare_scaled, expand_theta2d, sturm_bound, verify_coefficient_identity, EtaExpression, Verdict};

/// Coefficient checks always cover at least this many terms.
pub const MIN_TERMS: usize = 500;

/// Per-run replacements for a record's own parameters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Overrides {
    pub precision: Option<u32>,
    pub n_terms: Option<usize>,
    pub tolerance: Option<u32>,
    /// Guard digits on top of the precision; default `10 + P/10`.
    pub guard: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    ConjectureConsistent,
    ConjectureInconsistent,
    Error,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::ConjectureConsistent => "CONJECTURE-CONSISTENT",
            Outcome::ConjectureInconsistent => "CONJECTURE-INCONSISTENT",
            Outcome::Error => "ERROR",
        }
    }

    pub fn from_name(s: &str) -> Option<Outcome> {
        [Outcome::Pass, Outcome::Fail, Outcome::ConjectureConsistent, Outcome::ConjectureInconsistent, Outcome::Error]
            .into_iter()
            .find(|o| o.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientDetail {
    pub level: u64,
    pub sturm_bound: u64,
    pub checked: usize,
    /// First failing exponent with both sides, as decimal strings.
    pub mismatch: Option<(String, String, String)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualDetail {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    /// Signed `lhs - rhs`.
    pub residual: String,
    pub digits: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Detail {
    Coefficients(CoefficientDetail),
    Residuals { tolerance: u32, items: Vec<ResidualDetail> },
    Error(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub outcome: Outcome,
    pub precision: u32,
    /// Worst agreement over the record's residuals; `None` for exact checks.
    pub digits: Option<f64>,
    pub detail: Detail,
}

/// Evaluates one record. Evaluator failures become an `Error` outcome.
pub fn evaluate(record: &IdentityRecord, overrides: &Overrides) -> Evaluation {
    let precision = overrides.precision.unwrap_or(record.params.precision);
    match run(record, overrides, precision) {
        Ok((pass, digits, detail)) => {
            let outcome = match (record.kind, pass) {
                (Kind::NumericConjecture, true) => Outcome::ConjectureConsistent,
                (Kind::NumericConjecture, false) => Outcome::ConjectureInconsistent,
                (_, true) => Outcome::Pass,
                (_, false) => Outcome::Fail,
            };
            Evaluation { outcome, precision, digits, detail }
        }
        Err(e) => Evaluation { outcome: Outcome::Error, precision, digits: None, detail: Detail::Error(e.to_string()) },
    }
}

type Raw = (bool, Option<f64>, Detail);

fn run(record: &IdentityRecord, overrides: &Overrides, precision: u32) -> Result<Raw, RegistryError> {
    match &record.check {
        Check::EtaIdentity { lhs, rhs } => {
            let level = lhs.level().lcm(&rhs.level());
            let n = terms(overrides, level, lhs)?;
            coefficients(level, n, verify_coefficient_identity(lhs, rhs, n)?)
        }
        Check::ThetaExpansion { families, eta } => {
            let level = eta.level();
            let n = terms(overrides, level, eta)?;
            let theta = expand_theta2d(families, n)?;
            let e = eta.expand(n)?;
            let lead = theta.lead24().min(e.series.lead24());
            let verdict = compare_scaled(&theta, &BigInt::one(), &e.series, &e.denominator, lead, n)?;
            coefficients(level, n, verdict)
        }
        Check::Newform { form } => {
            let level = form.level();
            let n = terms(overrides, level, form)?;
            newform(form, level, n)
        }
        Check::Relations(rels) => {
            let tol = tolerance(record, overrides, precision);
            let ctx = context(precision, overrides);
            let mut ev = Evaluator::new(ctx, precision.saturating_sub(5).max(10));
            let mut items = Vec::new();
            let mut pass = true;
            for rel in rels {
                let v = relation_check(&mut ev, &rel.lhs, &rel.rhs, tol)?;
                pass &= v.pass;
                let digits = v.digits.min(ev.ctx.working_digits() as f64);
                items.push(residual_item(rel.to_string(), &v.lhs, &v.rhs, &v.residual, digits, precision));
            }
            Ok(summarize(pass, tol, items))
        }
        Check::Property(p) => {
            let tol = tolerance(record, overrides, precision);
            let ctx = context(precision, overrides);
            let samples = p.samples(&ctx, precision.saturating_sub(5).max(10))?;
            let mut items = Vec::new();
            let mut pass = true;
            for (i, (l, r)) in samples.iter().enumerate() {
                let residual = l - r;
                let scale = if p.relative() { r.abs() } else { l.abs().max(ctx.one()) };
                let digits = if residual.is_zero() {
                    ctx.working_digits() as f64
                } else {
                    (-(residual.abs() / &scale).log10_abs_approx()).min(ctx.working_digits() as f64)
                };
                pass &= residual.abs() < ctx.ten_pow_neg(tol) * scale;
                items.push(residual_item(format!("{}[{i}]", p.name()), l, r, &residual, digits, precision));
            }
            Ok(summarize(pass, tol, items))
        }
    }
}

fn context(precision: u32, overrides: &Overrides) -> Context {
    match overrides.guard {
        Some(g) => Context::with_guard(precision, g),
        None => Context::new(precision),
    }
}

/// The record's tolerance, capped five digits below the working precision.
fn tolerance(record: &IdentityRecord, overrides: &Overrides, precision: u32) -> u32 {
    overrides.tolerance.unwrap_or(record.params.tolerance).min(precision.saturating_sub(5)).max(1)
}

fn terms(overrides: &Overrides, level: u64, x: &EtaExpression) -> Result<usize, RegistryError> {
    let weight = x.weight().ceil().to_integer().max(0) as u64;
    let bound = sturm_bound(level, weight);
    match overrides.n_terms {
        Some(n) if (n as u64) < bound => Err(RegistryError::BelowSturm { requested: n, bound }),
        Some(n) => Ok(n),
        None => Ok(MIN_TERMS.max(bound as usize)),
    }
}

fn coefficients(level: u64, n: usize, verdict: Verdict) -> Result<Raw, RegistryError> {
    let detail = |mismatch| CoefficientDetail { level, sturm_bound: sturm_bound(level, 2), checked: n, mismatch };
    Ok(match verdict {
        Verdict::Pass { .. } => (true, None, Detail::Coefficients(detail(None))),
        Verdict::Fail(m) => {
            let mm = (m.exponent().to_string(), m.lhs.to_string(), m.rhs.to_string());
            (false, None, Detail::Coefficients(detail(Some(mm))))
        }
    })
}

/// Integral coefficients, `a₁ = 1` at `q¹`, and `a_{mn} = a_m a_n` for coprime
/// `m, n ≤ n_terms`.
fn newform(form: &EtaExpression, level: u64, n: usize) -> Result<Raw, RegistryError> {
    let e = form.expand(n)?;
    let detail = |mismatch| {
        Detail::Coefficients(CoefficientDetail { level, sturm_bound: sturm_bound(level, 2), checked: n, mismatch })
    };
    let fail = |at: usize, got: String, want: String| Ok((false, None, detail(Some((at.to_string(), got, want)))));
    if e.series.lead24() != 24 {
        return fail(0, e.series.lead_exponent().to_string(), "1".into());
    }
    let mut a = Vec::with_capacity(n + 1);
    a.push(BigInt::zero());
    for (i, c) in e.series.coeffs().iter().enumerate() {
        let (q, r) = c.div_rem(&e.denominator);
        if !r.is_zero() {
            return fail(i + 1, Ratio::new(c.clone(), e.denominator.clone()).to_string(), "an integer".into());
        }
        a.push(q);
    }
    if !a[1].is_one() {
        return fail(1, a[1].to_string(), "1".into());
    }
    for i in 2..=n {
        for j in 2..=n / i {
            if j >= i && i.gcd(&j) == 1 {
                let want = &a[i] * &a[j];
                if a[i * j] != want {
                    return fail(i * j, a[i * j].to_string(), want.to_string());
                }
            }
        }
    }
    Ok((true, None, detail(None)))
}

fn residual_item(label: String, l: &BigReal, r: &BigReal, res: &BigReal, digits: f64, precision: u32) -> ResidualDetail {
    let p = precision as usize;
    ResidualDetail { label, lhs: l.to_decimal(p), rhs: r.to_decimal(p), residual: res.to_decimal(12), digits }
}

fn summarize(pass: bool, tolerance: u32, items: Vec<ResidualDetail>) -> Raw {
    let worst = items.iter().map(|i| i.digits).fold(f64::INFINITY, f64::min);
    let digits = if worst.is_finite() { Some(worst) } else { None };
    (pass, digits, Detail::Residuals { tolerance, items })
}
