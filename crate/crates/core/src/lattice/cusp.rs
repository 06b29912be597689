use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use super::integral::{centre, q_log_integral, Evaluated};
use super::LatticeError;
use crate::numeric::{eta_numeric, BigReal, Context, NumericError};
use crate::series::EtaExpression;

/// `L(f,2)` for an eta-quotient combination together with how many digits
/// the pointwise cancellation between its monomials cost.
#[derive(Debug, Clone)]
pub struct CuspL2 {
    pub value: BigReal,
    pub error_estimate: BigReal,
    pub lost_digits: f64,
    /// Working digits of the evaluation that was accepted.
    pub working_digits: u32,
}

/// Per-monomial integrand data.
struct Monomial {
    coeff: BigReal,
    factors: Vec<(BigReal, i32)>,
    /// Decay rates: the monomial behaves like `exp(-2π·lead·t)` as `t → ∞`
    /// and like `exp(-2π·dual/t)` (up to powers of `t`) as `t → 0`.
    lead: f64,
    dual: f64,
}

fn monomials(ctx: &Context, x: &EtaExpression) -> Vec<Monomial> {
    x.terms()
        .iter()
        .map(|(c, m)| {
            let factors = m.factors().iter().map(|&(j, e)| (ctx.int(j as i64), e)).collect();
            let lead = m.factors().iter().map(|&(j, e)| (j as f64) * e as f64).sum::<f64>() / 24.0;
            let dual = m.factors().iter().map(|&(j, e)| e as f64 / j as f64).sum::<f64>() / 24.0;
            Monomial { coeff: ctx.ratio(c), factors, lead, dual }
        })
        .collect()
}

impl Monomial {
    /// Value at `t`, or zero once it has decayed far below the working
    /// precision (evaluating factors with negative powers there would
    /// overflow the exponent range).
    fn eval(&self, ctx: &Context, t: &BigReal, cutoff: f64) -> Result<BigReal, NumericError> {
        let tf = t.to_f64();
        let tau = 2.0 * core::f64::consts::PI;
        if tau * self.lead * tf > cutoff || (tf > 0.0 && tau * self.dual / tf > cutoff) {
            return Ok(ctx.zero());
        }
        let mut v = self.coeff.clone();
        for (j, e) in &self.factors {
            v = v * eta_numeric(ctx, &(j * t))?.powi(*e as i64);
        }
        Ok(v)
    }
}

/// Largest pointwise ratio `Σ|c·m(t)| / |Σ c·m(t)|`, tracked as maxima of
/// `t·Σ|…|` and `t·|Σ…|` over the nodes so that sign changes of `f` do not
/// register as cancellation.
struct CancellationMeter {
    max_abs: BigReal,
    max_val: BigReal,
}

fn attempt(ctx: &Context, x: &EtaExpression, target: u32) -> Result<(Evaluated, f64), LatticeError> {
    let terms = monomials(ctx, x);
    let scales: Vec<Ratio<i64>> =
        x.terms().iter().flat_map(|(_, m)| m.factors().iter().map(|&(j, _)| Ratio::from_integer(j as i64))).collect();
    let cutoff = (ctx.working_digits() as f64 + 30.0) * core::f64::consts::LN_10;
    let mut meter = CancellationMeter { max_abs: ctx.zero(), max_val: ctx.zero() };
    let r = q_log_integral(ctx, target, centre(ctx, &scales), |t| {
        let mut total = ctx.zero();
        let mut abs = ctx.zero();
        for m in &terms {
            let v = m.eval(ctx, t, cutoff)?;
            abs += v.abs();
            total += &v;
        }
        let tw = t.abs();
        meter.max_abs = meter.max_abs.clone().max(&abs * &tw);
        meter.max_val = meter.max_val.clone().max(total.abs() * &tw);
        Ok::<_, NumericError>(total)
    })?;
    let lost = if meter.max_val.is_zero() {
        f64::INFINITY
    } else {
        (meter.max_abs / meter.max_val).log10_abs_approx().max(0.0)
    };
    Ok((r, lost))
}

/// `-∫₀¹ f(q) log q dq/q = Σ aₑ/e²` for `f = x` expanded as `Σ aₑ qᵉ`.
///
/// If cancellation between monomials eats more than the guard digits, the
/// evaluation is repeated once with that many extra digits; a second failure
/// is reported as [`NumericError::Cancellation`].
pub fn cusp_l2(ctx: &Context, x: &EtaExpression, target_digits: u32) -> Result<CuspL2, LatticeError> {
    if x.is_empty() {
        return Ok(CuspL2 { value: ctx.zero(), error_estimate: ctx.zero(), lost_digits: 0.0, working_digits: ctx.working_digits() });
    }
    let mut work = ctx.clone();
    for retry in 0..2 {
        let (r, lost) = attempt(&work, x, target_digits)?;
        if lost <= work.guard() as f64 {
            return Ok(CuspL2 {
                value: r.value,
                error_estimate: r.error_estimate,
                lost_digits: lost,
                working_digits: work.working_digits(),
            });
        }
        if retry == 1 || !lost.is_finite() {
            return Err(NumericError::Cancellation { lost: libm::ceil(lost) as u32, guard: work.guard() }.into());
        }
        work = work.raised(libm::ceil(lost) as u32 + 5);
    }
    unreachable!("loop returns on its second pass")
}

/// `Σ_{e < lead+N} aₑ/e²` from the exact expansion, with a random-sign tail
/// estimate `4·√(mean aₙ²/n)/N`: if `aₙ ~ √n` with uncorrelated signs the
/// tail is of order `√(Σ_{n>N} n⁻³)`. This is an estimate, not a bound.
#[derive(Debug, Clone)]
pub struct PartialSum {
    pub value: BigReal,
    pub tail_estimate: BigReal,
    pub terms: usize,
}

pub fn dirichlet_partial_sum(ctx: &Context, x: &EtaExpression, n_terms: usize) -> Result<PartialSum, LatticeError> {
    let e = x.expand(n_terms)?;
    let den = ctx.bigint(&e.denominator);
    let lead = e.series.lead24();
    let mut sum = ctx.zero();
    let mut power = 0.0f64;
    for (i, c) in e.series.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // exponent (lead + 24i)/24
        let e24 = lead + 24 * i as i64;
        if e24 <= 0 {
            return Err(LatticeError::NotCuspidal);
        }
        let n = ctx.ratio(&Ratio::new(e24, 24));
        sum += ctx.bigint(c) / n.square();
        let cf = c.to_f64().unwrap_or(f64::MAX);
        power += cf * cf / (e24 as f64 / 24.0);
    }
    let nf = (lead as f64 / 24.0) + n_terms as f64;
    let tail = 4.0 * libm::sqrt(power / n_terms.max(1) as f64) / nf;
    Ok(PartialSum { value: sum / &den, tail_estimate: ctx.f64(tail) / den, terms: n_terms })
}
