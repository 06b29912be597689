use alloc::format;
use alloc::vec::Vec;

use num_rational::Ratio;

use super::cubic::{cubic_roots, CubicScan};
use super::jensen::{average, bisect};
use super::{MahlerError, Route};
use crate::numeric::{hypergeom_pfq_complex, BigComplex, BigReal, Context, NumericError};

fn r(n: i64, d: i64) -> Ratio<i64> {
    Ratio::new(n, d)
}

/// Larger-modulus root of `w² + b·w + c`.
fn big_root(ctx: &Context, b: &BigComplex, c: &BigComplex) -> BigComplex {
    let disc = &b.square() - &c.mul_i64(4);
    let s = disc.sqrt(ctx);
    // pick the sign that avoids cancellation in -b ∓ s
    let dot = &b.re * &s.re + &b.im * &s.im;
    let w = if dot.is_negative() { &s - b } else { -(b + &s) };
    w.mul_pow2(-1)
}

/// `log|α| - Re[(k/α^p)·F(num; 2,2,2; c/α^p)]`.
fn hyper_route(ctx: &Context, alpha: &BigComplex, p: i64, c: i64, num: [Ratio<i64>; 4]) -> Result<BigReal, MahlerError> {
    let ap = {
        let mut acc = BigComplex::real(ctx, ctx.one());
        for _ in 0..p {
            acc = acc * alpha.clone();
        }
        acc
    };
    let inv = ap.recip(ctx);
    let z = inv.mul_i64(c);
    let den = [r(2, 1); 3];
    let f = hypergeom_pfq_complex(ctx, &num, &den, &z)?;
    let corr = (inv * f).mul_i64(2);
    Ok(alpha.ln_abs(ctx) - corr.re)
}

fn need_nonzero(alpha: &BigComplex) -> Result<(), MahlerError> {
    if alpha.is_zero() {
        return Err(MahlerError::OutOfConvergence("the hypergeometric form needs α ≠ 0".into()));
    }
    Ok(())
}

/// `m(α) = log|α| - Re[(2/α²)·₄F₃(3/2,3/2,1,1;2,2,2;16/α²)]` for `|α| > 4`.
pub fn mahler_m_hyper(ctx: &Context, alpha: &BigComplex) -> Result<BigReal, MahlerError> {
    need_nonzero(alpha)?;
    if alpha.norm_sqr() <= ctx.int(16) {
        return Err(MahlerError::OutOfConvergence(format!("m needs |α| > 4, got |α| = {}", alpha.abs(ctx).to_decimal(6))));
    }
    hyper_route(ctx, alpha, 2, 16, [r(3, 2), r(3, 2), r(1, 1), r(1, 1)])
}

/// `m(α)` as `(1/π)∫₀^π log⁺ of the larger root of y² + (2cos θ + α)y + 1`.
pub fn mahler_m_jensen(ctx: &Context, alpha: &BigComplex) -> Result<BigReal, MahlerError> {
    let pi = ctx.pi();
    let mut kinks = Vec::new();
    if alpha.is_real() {
        // roots on the circle exactly when 2cos θ + α ∈ [-2, 2]
        for edge in [2, -2] {
            let c = (ctx.int(edge) - &alpha.re).mul_pow2(-1);
            if c.abs() < ctx.one() {
                kinks.push(ctx.acos(&c));
            }
        }
    }
    let one = ctx.one();
    average(ctx, &ctx.zero(), &pi, &kinks, |node| {
        let c = alpha + &BigComplex::real(ctx, ctx.cos(&node.x).mul_pow2(1));
        let w = big_root(ctx, &c, &BigComplex::real(ctx, one.clone()));
        Ok(w.ln_abs(ctx).max(ctx.zero()))
    })
}

/// `n(α) = log|α| - Re[(2/α³)·₄F₃(4/3,5/3,1,1;2,2,2;27/α³)]` for `|α|³ > 27`.
pub fn mahler_n_hyper(ctx: &Context, alpha: &BigComplex) -> Result<BigReal, MahlerError> {
    need_nonzero(alpha)?;
    if alpha.norm_sqr().powi(3) <= ctx.int(729) {
        return Err(MahlerError::OutOfConvergence(format!("n needs |α| > 3, got |α| = {}", alpha.abs(ctx).to_decimal(6))));
    }
    hyper_route(ctx, alpha, 3, 27, [r(4, 3), r(5, 3), r(1, 1), r(1, 1)])
}

/// `n(α)` from the roots of `z³ - αy·z + y³ + 1`. The substitution
/// `y → ωy, z → ω²z` leaves the fiber measure unchanged, so `θ ∈ [0, 2π/3]`
/// suffices, and `[0, π/3]` when `α` is real.
pub fn mahler_n_jensen(ctx: &Context, alpha: &BigComplex) -> Result<BigReal, MahlerError> {
    let pi = ctx.pi();
    let hi = if alpha.is_real() { pi.div_i64(3) } else { pi.mul_i64(2).div_i64(3) };
    let scan = CubicScan::new(alpha);
    let mut kinks = Vec::new();
    for (a, b) in scan.sign_changes(hi.to_f64()) {
        let k = bisect(ctx, ctx.f64(a), ctx.f64(b), |th| Ok(outside_count(ctx, alpha, th)))?;
        kinks.push(k);
    }
    average(ctx, &ctx.zero(), &hi, &kinks, |node| {
        let (p, q) = n_fiber(ctx, alpha, &node.x);
        let roots = cubic_roots(ctx, &p, &q);
        let mut s = ctx.zero();
        for z in roots {
            s += z.ln_abs(ctx).max(ctx.zero());
        }
        Ok::<_, NumericError>(s)
    })
}

/// `(p, q)` of the fiber `z³ + pz + q` at `y = e^{iθ}`.
fn n_fiber(ctx: &Context, alpha: &BigComplex, th: &BigReal) -> (BigComplex, BigComplex) {
    let y = BigComplex::unit(ctx, th);
    let q = &(&y.square() * &y) + &BigComplex::real(ctx, ctx.one());
    (-(alpha * &y), q)
}

fn outside_count(ctx: &Context, alpha: &BigComplex, th: &BigReal) -> usize {
    let (p, q) = n_fiber(ctx, alpha, th);
    let roots = cubic_roots(ctx, &p, &q);
    roots.iter().filter(|z| z.norm_sqr() > ctx.one()).count()
}

/// `g(α)` from `(y+1)(z+1)(y+z) - αyz`, quadratic in `z` with leading
/// coefficient `y + 1`: the fiber contributes `log|y+1| + log⁺|z_big|`
/// since the roots multiply to `y`. Real `α` only.
pub fn mahler_g_jensen(ctx: &Context, alpha: &BigReal) -> Result<BigReal, MahlerError> {
    let pi = ctx.pi();
    let one = ctx.one();
    let mut kinks = Vec::new();
    // a root on the circle when 2cos(θ/2) = ±1 ± √(1+α)
    let s = &one + alpha;
    if !s.is_negative() {
        let rt = ctx.sqrt(&s);
        for x in [&one + &rt, &one - &rt, -&one + &rt, -&one - &rt] {
            if x.is_positive() && x < ctx.int(2) {
                kinks.push(ctx.acos(&x.mul_pow2(-1)).mul_pow2(1));
            }
        }
    }
    let alpha_c = BigComplex::real(ctx, alpha.clone());
    average(ctx, &ctx.zero(), &pi, &kinks, |node| {
        let y = BigComplex::unit(ctx, &node.x);
        let a = &y + &BigComplex::real(ctx, one.clone());
        let b = &a.square() - &(&alpha_c * &y);
        let c = &y * &a;
        // Az are the roots of w² + Bw + AC
        let w = big_root(ctx, &b, &(&a * &c));
        // |y+1| = 2 sin((π-θ)/2) without cancellation near θ = π
        let d = node.from_upper.as_ref().expect("finite interval");
        let la = ctx.ln(&ctx.sin(&d.mul_pow2(-1)).mul_pow2(1));
        let lw = w.ln_abs(ctx);
        Ok::<_, NumericError>(if lw > la { lw } else { la })
    })
}

/// `g(α)` from `3g(α) = n((α+4)/α^{2/3}) + 4n((α-2)/α^{1/3})`, which holds
/// for real `α ≥ 8`.
pub fn mahler_g_combination(ctx: &Context, alpha: &BigReal) -> Result<BigReal, MahlerError> {
    if *alpha < ctx.int(8) {
        return Err(MahlerError::OutOfConvergence(format!("the n-combination for g needs α ≥ 8, got {}", alpha.to_decimal(6))));
    }
    let c1 = ctx.cbrt(alpha);
    let a1 = (alpha + &ctx.int(4)) / c1.square();
    let a2 = (alpha - &ctx.int(2)) / &c1;
    let n1 = mahler_n(ctx, &BigComplex::real(ctx, a1), Route::Auto)?;
    let n2 = mahler_n(ctx, &BigComplex::real(ctx, a2), Route::Auto)?;
    Ok((n1 + n2.mul_i64(4)).div_i64(3))
}

/// Hyper route when `16/|α|² ≤ 0.8`, Jensen otherwise.
pub fn mahler_m(ctx: &Context, alpha: &BigComplex, route: Route) -> Result<BigReal, MahlerError> {
    match route {
        Route::Hyper => mahler_m_hyper(ctx, alpha),
        Route::Jensen => mahler_m_jensen(ctx, alpha),
        Route::Auto if alpha.norm_sqr() >= ctx.int(20) => mahler_m_hyper(ctx, alpha),
        Route::Auto => mahler_m_jensen(ctx, alpha),
    }
}

/// Hyper route when `27/|α|³ ≤ 0.9`, Jensen otherwise.
pub fn mahler_n(ctx: &Context, alpha: &BigComplex, route: Route) -> Result<BigReal, MahlerError> {
    match route {
        Route::Hyper => mahler_n_hyper(ctx, alpha),
        Route::Jensen => mahler_n_jensen(ctx, alpha),
        Route::Auto if alpha.norm_sqr().powi(3) >= ctx.int(900) => mahler_n_hyper(ctx, alpha),
        Route::Auto => mahler_n_jensen(ctx, alpha),
    }
}

/// `Hyper` selects the n-combination; `Auto` is the Jensen route.
pub fn mahler_g(ctx: &Context, alpha: &BigComplex, route: Route) -> Result<BigReal, MahlerError> {
    if !alpha.is_real() {
        return Err(MahlerError::OutOfConvergence("g is implemented for real α only".into()));
    }
    match route {
        Route::Hyper => mahler_g_combination(ctx, &alpha.re),
        Route::Jensen | Route::Auto => mahler_g_jensen(ctx, &alpha.re),
    }
}
