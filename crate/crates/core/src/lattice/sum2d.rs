use core::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use super::LatticeError;
use crate::mahler::{mahler_m, Route};
use crate::numeric::{singular_modulus, BigComplex, BigReal, Context};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwoDimVariant {
    /// `Σ_{n,k≥0} (-1)ⁿ(2n+1)/((2n+1)² + x(2k+1)²)²`.
    OddOdd,
    /// `Σ_{n≥0, k∈ℤ} (-1)^{n+k}(2n+1)/((2n+1)² + x(2k)²)²`.
    OddEvenAlt,
    /// `(π²/(16√x)) Σ_{n≥0} (-1)ⁿ(2n+1) log((1+e^{-π√x(n+½)})/(1-e^{-π√x(n+½)}))`,
    /// an independent route to the odd-odd value.
    LogSeries,
}

impl TwoDimVariant {
    pub fn name(self) -> &'static str {
        match self {
            TwoDimVariant::OddOdd => "odd-odd",
            TwoDimVariant::OddEvenAlt => "odd-even-alt",
            TwoDimVariant::LogSeries => "log-series",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoDimSumSpec {
    pub variant: TwoDimVariant,
    pub x: Ratio<i64>,
}

impl TwoDimSumSpec {
    pub fn new(variant: TwoDimVariant, x: Ratio<i64>) -> Result<Self, LatticeError> {
        if x <= Ratio::zero() {
            return Err(LatticeError::NonPositiveEntry);
        }
        Ok(TwoDimSumSpec { variant, x })
    }
}

impl fmt::Display for TwoDimSumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sum2d[{}]({})", self.variant.name(), self.x)
    }
}

/// `Σ_{n≥0} (-1)ⁿ(2n+1)/((2n+1)²+y²)² = (π²/(16y)) sech(πy/2) tanh(πy/2)`,
/// written with `e = e^{-πy/2}` so large `y` cannot overflow.
fn inner_odd(ctx: &Context, y: &BigReal) -> BigReal {
    let e = ctx.exp(&-(ctx.pi() * y).mul_pow2(-1));
    let e2 = e.square();
    let st = (&e * (ctx.one() - &e2)).mul_pow2(1) / (ctx.one() + &e2).square();
    ctx.pi().square() / y.mul_i64(16) * st
}

/// Sum over `k` of `sign(k)·inner_odd(y₀ + k·step)`. Every term is below
/// `(π²/(8y₀)) e^{-πy/2}`, which gives a geometric tail bound.
fn outer_sum(ctx: &Context, y0: &BigReal, step: &BigReal, alternate: bool) -> BigReal {
    let eps = ctx.epsilon();
    let pi = ctx.pi();
    let ratio = ctx.exp(&-(&pi * step).mul_pow2(-1));
    let tail_factor = pi.square() / y0.mul_i64(8) / (ctx.one() - &ratio);
    let mut sum = ctx.zero();
    let mut k: i64 = 0;
    loop {
        let y = y0 + &step.mul_i64(k);
        let t = inner_odd(ctx, &y);
        sum += if alternate && k % 2 == 1 { -t } else { t };
        let next = y0 + &step.mul_i64(k + 1);
        let tail = &tail_factor * ctx.exp(&-(&pi * &next).mul_pow2(-1));
        if tail <= &eps * sum.abs() {
            return sum;
        }
        k += 1;
    }
}

fn log_series(ctx: &Context, sx: &BigReal) -> BigReal {
    let eps = ctx.epsilon();
    let rho = ctx.exp(&-(ctx.pi() * sx));
    let w0 = ctx.exp(&-(ctx.pi() * sx).mul_pow2(-1));
    let one = ctx.one();
    // log((1+w)/(1-w)) = 2 atanh w ≤ 2w/(1-w0²)
    let c = w0.mul_pow2(1) / (&one - w0.square());
    let gap = &one - &rho;
    let mut sum = ctx.zero();
    let mut w = w0.clone();
    let mut rho_n = one.clone();
    let mut n: i64 = 0;
    loop {
        let t = ctx.atanh(&w).mul_pow2(1).mul_i64(2 * n + 1);
        sum += if n % 2 == 1 { -t } else { t };
        // Σ_{m>n} (2m+1)ρ^m ≤ ρ^{n+1}((2n+3)/(1-ρ) + 2ρ/(1-ρ)²)
        rho_n = &rho_n * &rho;
        let bound = &rho_n * (ctx.int(2 * n + 3) / &gap + rho.mul_pow2(1) / gap.square());
        if &c * bound <= &eps * sum.abs() {
            break;
        }
        w = &w * &rho;
        n += 1;
    }
    ctx.pi().square() / sx.mul_i64(16) * sum
}

/// Evaluates a two-dimensional alternating sum to working precision.
pub fn sum2d(ctx: &Context, spec: &TwoDimSumSpec) -> Result<BigReal, LatticeError> {
    let x = ctx.ratio(&spec.x);
    if !x.is_positive() {
        return Err(LatticeError::NonPositiveEntry);
    }
    let sx = ctx.sqrt(&x);
    Ok(match spec.variant {
        TwoDimVariant::OddOdd => outer_sum(ctx, &sx, &sx.mul_pow2(1), false),
        TwoDimVariant::OddEvenAlt => {
            // k = 0 is the y → 0 limit π³/32; ±k pair up
            let zero = ctx.pi().powi(3).mul_pow2(-5);
            let step = sx.mul_pow2(1);
            zero - outer_sum(ctx, &step, &step, true).mul_pow2(1)
        }
        TwoDimVariant::LogSeries => log_series(ctx, &sx),
    })
}

/// `(π²/(32√x))·m(4√α_x)`, the closed form of the odd-odd sum.
pub fn closed_form_sum(ctx: &Context, x: Ratio<i64>) -> Result<BigReal, LatticeError> {
    if x <= Ratio::zero() {
        return Err(LatticeError::NonPositiveEntry);
    }
    let xr = ctx.ratio(&x);
    let alpha = singular_modulus(ctx, &xr)?;
    let arg = BigComplex::real(ctx, ctx.sqrt(&alpha).mul_pow2(2));
    let m = mahler_m(ctx, &arg, Route::Auto)?;
    Ok(ctx.pi().square() / ctx.sqrt(&xr).mul_i64(32) * m)
}
