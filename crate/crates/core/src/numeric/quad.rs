//! Double-exponential quadrature.
//!
//! Finite intervals use the tanh-sinh map `x = c + h·tanh(π/2·sinh s)`,
//! half-lines the exp-sinh map `x = a + λ·exp(π/2·sinh s)`. Each level halves
//! the step in `s`; the difference between successive levels is the error
//! estimate. Integrands receive the node together with its distance to each
//! finite endpoint, computed without cancellation, so endpoint singularities
//! like `√(1-x)` can be evaluated accurately.

use alloc::string::ToString;

use super::real::{BigReal, Context};
use super::NumericError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    TanhSinh,
    ExpSinh,
}

/// Integration domain.
#[derive(Debug, Clone)]
pub enum Domain {
    /// `[a, b]`.
    Interval(BigReal, BigReal),
    /// `[lower, ∞)`; `scale` centres the exp-sinh map where the integrand lives.
    HalfLine { lower: BigReal, scale: BigReal },
}

impl Domain {
    pub fn rule(&self) -> Rule {
        match self {
            Domain::Interval(..) => Rule::TanhSinh,
            Domain::HalfLine { .. } => Rule::ExpSinh,
        }
    }
}

/// A quadrature node.
#[derive(Debug, Clone)]
pub struct Abscissa {
    pub x: BigReal,
    /// `x - a`.
    pub from_lower: BigReal,
    /// `b - x`; `None` on a half-line.
    pub from_upper: Option<BigReal>,
}

#[derive(Debug, Clone)]
pub struct QuadResult {
    pub value: BigReal,
    /// `|I_L - I_{L-1}|` at the final level.
    pub error_estimate: BigReal,
    pub level: u32,
    pub converged: bool,
    pub evaluations: usize,
    pub rule: Rule,
}

impl QuadResult {
    /// Turns a non-converged result into [`NumericError::NotConverged`].
    pub fn require_converged(self, target: u32) -> Result<QuadResult, NumericError> {
        if self.converged {
            Ok(self)
        } else {
            Err(NumericError::NotConverged { target, estimate: self.error_estimate.to_decimal(3) })
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub target_digits: u32,
    pub min_level: u32,
    pub max_level: u32,
}

/// Nodes are never placed beyond this `|s|`; by then the weights are far
/// below any working precision we use.
const S_MAX: f64 = 6.5;

impl Quadrature {
    pub fn new(target_digits: u32) -> Self {
        Quadrature { target_digits, min_level: 3, max_level: 10 }
    }

    pub fn with_max_level(mut self, level: u32) -> Self {
        self.max_level = level;
        self
    }

    pub fn integrate<F>(&self, ctx: &Context, mut f: F, domain: &Domain) -> Result<QuadResult, NumericError>
    where
        F: FnMut(&Abscissa) -> Result<BigReal, NumericError>,
    {
        let pi_half = ctx.pi().mul_pow2(-1);
        let tol = ctx.ten_pow_neg(self.target_digits);
        let floor = ctx.epsilon();
        let negligible = ctx.ten_pow_neg(ctx.working_digits() + 2);

        let mut acc = ctx.zero();
        let mut prev: Option<BigReal> = None;
        let mut evaluations = 0usize;
        let mut last_err = ctx.zero();
        for level in 0..=self.max_level {
            let h = ctx.one().mul_pow2(-(level as i32));
            // level 0 visits every integer s, later levels the odd multiples of h
            let (start, step) = if level == 0 { (0i64, 1i64) } else { (1, 2) };
            for sign in [1i64, -1] {
                // s = 0 is visited once, on the positive sweep of level 0
                let mut k = if level == 0 && sign == -1 { 1 } else { start };
                let mut small_run = 0;
                loop {
                    let s = h.mul_i64(k * sign);
                    if s.abs().to_f64() > S_MAX {
                        break;
                    }
                    let term = self.term(ctx, &mut f, domain, &s, &pi_half)?;
                    evaluations += 1;
                    let mag = term.abs();
                    acc += term;
                    let scale = (&acc * &h).abs();
                    if mag * &h <= &negligible * scale.max(floor.clone()) {
                        small_run += 1;
                    } else {
                        small_run = 0;
                    }
                    if small_run >= 2 && s.abs().to_f64() >= 1.0 {
                        break;
                    }
                    k += step;
                }
            }
            let estimate = &acc * &h;
            if let Some(p) = prev.as_ref() {
                last_err = (&estimate - p).abs();
                if level >= self.min_level {
                    let bound = (&tol * estimate.abs()).max(floor.clone());
                    if last_err <= bound {
                        return Ok(QuadResult {
                            value: estimate,
                            error_estimate: last_err,
                            level,
                            converged: true,
                            evaluations,
                            rule: domain.rule(),
                        });
                    }
                }
            }
            prev = Some(estimate);
        }
        Ok(QuadResult {
            value: prev.unwrap_or_else(|| ctx.zero()),
            error_estimate: last_err,
            level: self.max_level,
            converged: false,
            evaluations,
            rule: domain.rule(),
        })
    }

    /// Jacobian-weighted integrand at parameter `s` (without the step factor).
    fn term<F>(&self, ctx: &Context, f: &mut F, domain: &Domain, s: &BigReal, pi_half: &BigReal) -> Result<BigReal, NumericError>
    where
        F: FnMut(&Abscissa) -> Result<BigReal, NumericError>,
    {
        let es = ctx.exp(s);
        let inv_es = ctx.one() / &es;
        let sinh = (&es - &inv_es).mul_pow2(-1);
        let cosh = (&es + &inv_es).mul_pow2(-1);
        let u = pi_half * &sinh;
        let (node, jac) = match domain {
            Domain::Interval(a, b) => {
                let half = (b - a).mul_pow2(-1);
                // tanh u via e^{-2|u|} to keep 1 - |x| accurate
                let e = ctx.exp(&(-u.abs().mul_pow2(1)));
                let denom = ctx.one() + &e;
                let one_minus = e.mul_pow2(1) / &denom; // 1 - |x|
                let one_plus = ctx.int(2) / &denom; // 1 + |x|
                let (from_lower, from_upper) = if u.is_negative() {
                    (&half * &one_minus, &half * &one_plus)
                } else {
                    (&half * &one_plus, &half * &one_minus)
                };
                let x = a + &from_lower;
                let jac = &half * pi_half * &cosh * &one_minus * &one_plus;
                (Abscissa { x, from_lower, from_upper: Some(from_upper) }, jac)
            }
            Domain::HalfLine { lower, scale } => {
                let off = scale * ctx.exp(&u);
                let jac = &off * pi_half * &cosh;
                let x = lower + &off;
                (Abscissa { x, from_lower: off, from_upper: None }, jac)
            }
        };
        if jac.is_zero() || node.from_lower.is_zero() || node.from_upper.as_ref().is_some_and(|g| g.is_zero()) {
            return Ok(ctx.zero());
        }
        let v = f(&node)?;
        if !v.is_finite() {
            return Err(NumericError::NonFinite { at: node.x.to_decimal(20).to_string() });
        }
        Ok(v * jac)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(ctx: &Context) -> Domain {
        Domain::Interval(ctx.zero(), ctx.one())
    }

    #[test]
    fn log_on_unit_interval() {
        let ctx = Context::new(40);
        let q = Quadrature::new(40);
        let r = q.integrate(&ctx, |n| Ok(ctx.ln(&n.x)), &unit(&ctx)).unwrap();
        assert!(r.converged);
        assert!(ctx.agreement_digits(&r.value, &ctx.int(-1)) > 40.0, "{:?}", r.value);
        assert!(r.error_estimate <= ctx.ten_pow_neg(40));
    }

    #[test]
    fn exponential_on_half_line() {
        let ctx = Context::new(40);
        let q = Quadrature::new(40);
        let dom = Domain::HalfLine { lower: ctx.zero(), scale: ctx.one() };
        let r = q.integrate(&ctx, |n| Ok(ctx.exp(&-n.x.clone())), &dom).unwrap();
        assert!(r.converged);
        assert_eq!(r.rule, Rule::ExpSinh);
        assert!(ctx.agreement_digits(&r.value, &ctx.one()) > 40.0);
    }

    #[test]
    fn beta_half_half_is_pi() {
        let ctx = Context::new(40);
        let q = Quadrature::new(40);
        let r = q
            .integrate(
                &ctx,
                |n| {
                    let up = n.from_upper.as_ref().unwrap();
                    Ok(ctx.one() / ctx.sqrt(&(&n.from_lower * up)))
                },
                &unit(&ctx),
            )
            .unwrap();
        assert!(r.converged);
        assert!(ctx.agreement_digits(&r.value, &ctx.pi()) > 40.0, "{:?}", r.value);
    }

    #[test]
    fn non_finite_integrand_reports_node() {
        let ctx = Context::new(20);
        let q = Quadrature::new(20);
        let err = q.integrate(&ctx, |n| Ok(ctx.one() / (&n.x - ctx.f64(0.5))), &unit(&ctx)).unwrap_err();
        assert!(matches!(err, NumericError::NonFinite { .. }));
    }

    #[test]
    fn successive_levels_agree_within_estimate() {
        let ctx = Context::new(30);
        let dom = unit(&ctx);
        let f = |n: &Abscissa| Ok(ctx.sqrt(&n.x) * ctx.ln(&n.from_upper.clone().unwrap()));
        let r = Quadrature::new(30).integrate(&ctx, f, &dom).unwrap();
        let r2 = Quadrature { min_level: r.level + 1, ..Quadrature::new(30) }.integrate(&ctx, f, &dom).unwrap();
        let diff = (&r.value - &r2.value).abs();
        assert!(diff <= r.error_estimate.clone().max(ctx.epsilon().mul_i64(10)));
    }
}
