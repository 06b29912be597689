//! One-dimensional reductions by Jensen's formula: for `y = e^{iθ}` the inner
//! integral over `z` is `log|lead| + Σ log⁺|zᵢ|`, which is continuous in `θ`
//! with square-root kinks where a root crosses the unit circle.

use alloc::vec::Vec;

use crate::numeric::{Abscissa, BigReal, Context, Domain, NumericError, Quadrature};

use super::MahlerError;

/// Max refinement level for the piecewise tanh-sinh rule.
const MAX_LEVEL: u32 = 10;

/// `(1/(b₀ - a₀)) ∫ f` over `[a₀, b₀]` split at `kinks`; the integrand also
/// receives the node so it can use endpoint distances.
pub(crate) fn average<F>(ctx: &Context, lo: &BigReal, hi: &BigReal, kinks: &[BigReal], mut f: F) -> Result<BigReal, MahlerError>
where
    F: FnMut(&Abscissa) -> Result<BigReal, NumericError>,
{
    let mut cuts: Vec<BigReal> = Vec::with_capacity(kinks.len() + 2);
    cuts.push(lo.clone());
    for k in kinks {
        if k > lo && k < hi {
            cuts.push(k.clone());
        }
    }
    cuts.push(hi.clone());
    cuts.sort_by(|a, b| a.partial_cmp(b).expect("finite kinks"));
    cuts.dedup();
    let quad = Quadrature::new(ctx.digits()).with_max_level(MAX_LEVEL);
    let mut total = ctx.zero();
    for w in cuts.windows(2) {
        let r = quad.integrate(ctx, &mut f, &Domain::Interval(w[0].clone(), w[1].clone()))?;
        total += r.require_converged(ctx.digits())?.value;
    }
    Ok(total / (hi - lo))
}

/// Bisects `[lo, hi]` for the point where `count` changes, given that it
/// differs at the two ends.
pub(crate) fn bisect<C>(ctx: &Context, mut lo: BigReal, mut hi: BigReal, mut count: C) -> Result<BigReal, MahlerError>
where
    C: FnMut(&BigReal) -> Result<usize, MahlerError>,
{
    let at_lo = count(&lo)?;
    let tol = ctx.epsilon();
    while &hi - &lo > tol {
        let mid = (&lo + &hi).mul_pow2(-1);
        if mid <= lo || mid >= hi {
            break;
        }
        if count(&mid)? == at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi).mul_pow2(-1))
}
