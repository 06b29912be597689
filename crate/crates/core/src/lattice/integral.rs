use alloc::vec::Vec;

use num_rational::Ratio;

use super::spec::LatticeSpec;
use super::LatticeError;
use crate::numeric::{eta_numeric, BigReal, Context, Domain, NumericError, QuadResult, Quadrature};

/// A quadrature-backed value with its error estimate.
#[derive(Debug, Clone)]
pub struct Evaluated {
    pub value: BigReal,
    pub error_estimate: BigReal,
    pub level: u32,
    pub evaluations: usize,
}

impl Evaluated {
    fn from_quad(r: QuadResult, factor: &BigReal) -> Self {
        Evaluated {
            value: &r.value * factor,
            error_estimate: (&r.error_estimate * factor).abs(),
            level: r.level,
            evaluations: r.evaluations,
        }
    }
}

/// Centre of mass for `t·Π η(a_i t)`: the integrand decays like
/// `exp(-2πt·Σa/24)` at infinity and `exp(-2π·Σ(1/a)/(24t))` at zero.
pub(crate) fn centre(ctx: &Context, scales: &[Ratio<i64>]) -> BigReal {
    let s: Ratio<i64> = scales.iter().sum();
    let inv: Ratio<i64> = scales.iter().map(|a| a.recip()).sum();
    ctx.sqrt(&ctx.ratio(&(inv / s)))
}

/// `4π² ∫₀^∞ t·g(t) dt`, i.e. `-∫₀¹ g log q dq/q` with `q = e^{-2πt}`.
pub(crate) fn q_log_integral<G>(ctx: &Context, target: u32, scale: BigReal, mut g: G) -> Result<Evaluated, LatticeError>
where
    G: FnMut(&BigReal) -> Result<BigReal, NumericError>,
{
    let domain = Domain::HalfLine { lower: ctx.zero(), scale };
    let r = Quadrature::new(target).integrate(
        ctx,
        |node| if node.x.is_zero() { Ok(ctx.zero()) } else { Ok(g(&node.x)? * &node.x) },
        &domain,
    )?;
    let r = r.require_converged(target)?;
    let four_pi2 = ctx.pi().square().mul_pow2(2);
    Ok(Evaluated::from_quad(r, &four_pi2))
}

/// `Π η(e^{-2π a_i t})` over the given scales.
pub(crate) fn eta_product(ctx: &Context, scales: &[BigReal], t: &BigReal) -> Result<BigReal, NumericError> {
    let mut p = ctx.one();
    for a in scales {
        p = p * eta_numeric(ctx, &(a * t))?;
    }
    Ok(p)
}

/// `F(a,b,c,d) = ((a+b+c+d)²/24²)·4π²∫₀^∞ t·Π η(e^{-2π a_i t}) dt`.
pub fn f_integral(ctx: &Context, spec: &LatticeSpec, target_digits: u32) -> Result<Evaluated, LatticeError> {
    let scales: Vec<BigReal> = spec.entries().iter().map(|a| ctx.ratio(a)).collect();
    let centre = centre(ctx, spec.entries());
    let raw = q_log_integral(ctx, target_digits, centre, |t| eta_product(ctx, &scales, t))?;
    let norm = ctx.ratio(&(spec.norm() / 576));
    Ok(Evaluated {
        value: &raw.value * &norm,
        error_estimate: &raw.error_estimate * &norm,
        level: raw.level,
        evaluations: raw.evaluations,
    })
}

/// `(9π·2^{1/4}/128)·∫₀¹ ((1-k)² + 2√(2(k+k³))) / ((1+k)(k+k³)^{3/4})
///  · log((1 + 2k - k² + 2√(k-k³))/(1+k²)) dk`, an elementary form of `F(1,8)`.
pub fn f18_elementary(ctx: &Context, target_digits: u32) -> Result<BigReal, LatticeError> {
    let one = ctx.one();
    let domain = Domain::Interval(ctx.zero(), one.clone());
    let r = Quadrature::new(target_digits).integrate(
        ctx,
        |node| {
            let k = &node.x;
            if k.is_zero() {
                return Ok(ctx.zero());
            }
            // 1 - k straight from the node keeps √(k - k³) accurate near 1
            let omk = node.from_upper.clone().expect("finite interval");
            let kk = k + &k.powi(3);
            let num = omk.square() + ctx.sqrt(&kk.mul_pow2(1)).mul_pow2(1);
            let den = (&one + k) * ctx.pow_ratio(&kk, &Ratio::new(3, 4));
            let root = ctx.sqrt(&(k * &omk * (&one + k)));
            let arg = (&one + k.mul_pow2(1) - k.square() + root.mul_pow2(1)) / (&one + k.square());
            Ok(num / den * ctx.ln(&arg))
        },
        &domain,
    )?;
    let r = r.require_converged(target_digits)?;
    let c = ctx.pi().mul_i64(9) * ctx.pow_ratio(&ctx.int(2), &Ratio::new(1, 4)) / ctx.int(128);
    Ok(r.value * c)
}
