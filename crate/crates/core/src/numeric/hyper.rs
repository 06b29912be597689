//! Generalized hypergeometric series `pFq(a; b; z)` with rational parameters.
//!
//! Terms are generated by the exact ratio `t_{k+1}/t_k = Π(a_i+k)/Π(b_j+k) ·
//! z/(k+1)`. Summation stops once every parameter is behind `k`, so the ratio
//! is monotone, and the geometric tail `|t_{k+1}|/(1-ρ)` with
//! `ρ = max(|ratio_k|, limit)` is below the working epsilon.

use alloc::format;


use num_rational::Ratio;

use super::complex::BigComplex;
use super::real::{BigReal, Context};
use super::NumericError;

/// Hard cap on the number of terms; only reachable for `|z|` very near 1.
const MAX_TERMS: i64 = 2_000_000;

fn is_nonpositive_integer(r: &Ratio<i64>) -> bool {
    *r.denom() == 1 && *r.numer() <= 0
}

/// Checks the parameter/argument combination, returning the index at which
/// the series terminates (if it does).
fn validate(num: &[Ratio<i64>], den: &[Ratio<i64>], abs_z: f64) -> Result<Option<i64>, NumericError> {
    if let Some(b) = den.iter().find(|b| is_nonpositive_integer(b)) {
        return Err(NumericError::Domain(format!("denominator parameter {b} is a nonpositive integer")));
    }
    let stop = num.iter().filter(|a| is_nonpositive_integer(a)).map(|a| -*a.numer()).min();
    if stop.is_some() || abs_z == 0.0 {
        return Ok(stop);
    }
    let (p, q) = (num.len(), den.len());
    if p > q + 1 {
        return Err(NumericError::Divergent(format!("{p}F{q} with nonzero argument never converges")));
    }
    if p == q + 1 && abs_z >= 1.0 {
        return Err(NumericError::Domain(format!(
            "{p}F{q} needs |z| < 1, got |z| = {abs_z}"
        )));
    }
    Ok(None)
}

/// `|Π(a_i+k)/Π(b_j+k)/(k+1)|` in f64, for the tail bound.
fn ratio_magnitude(num: &[Ratio<i64>], den: &[Ratio<i64>], k: i64) -> f64 {
    let kf = k as f64;
    let mut r = 1.0 / (kf + 1.0);
    for a in num {
        r *= (*a.numer() as f64 / *a.denom() as f64 + kf).abs();
    }
    for b in den {
        r /= (*b.numer() as f64 / *b.denom() as f64 + kf).abs();
    }
    r
}

/// Largest `|parameter|` rounded up; past this index the ratio is monotone.
fn monotone_from(num: &[Ratio<i64>], den: &[Ratio<i64>]) -> i64 {
    num.iter()
        .chain(den)
        .map(|r| num_integer::div_ceil(r.numer().abs(), *r.denom()))
        .max()
        .unwrap_or(0)
        + 1
}

/// Multiplies `x` by the rational part of the `k`-th term ratio.
fn apply_ratio(x: &BigReal, num: &[Ratio<i64>], den: &[Ratio<i64>], k: i64) -> BigReal {
    let mut x = x.clone();
    for a in num {
        x = x.mul_i64(a.numer() + k * a.denom()).div_i64(*a.denom());
    }
    for b in den {
        x = x.mul_i64(*b.denom()).div_i64(b.numer() + k * b.denom());
    }
    x.div_i64(k + 1)
}

/// Real `pFq(num; den; z)`.
pub fn hypergeom_pfq(ctx: &Context, num: &[Ratio<i64>], den: &[Ratio<i64>], z: &BigReal) -> Result<BigReal, NumericError> {
    let r = hypergeom_pfq_complex(ctx, num, den, &BigComplex::real(ctx, z.clone()))?;
    Ok(r.re)
}

/// Complex `pFq(num; den; z)`.
pub fn hypergeom_pfq_complex(
    ctx: &Context,
    num: &[Ratio<i64>],
    den: &[Ratio<i64>],
    z: &BigComplex,
) -> Result<BigComplex, NumericError> {
    let abs_z = z.abs(ctx).to_f64();
    let stop = validate(num, den, abs_z)?;
    let one = BigComplex::real(ctx, ctx.one());
    if z.is_zero() {
        return Ok(one);
    }
    let limit = if num.len() == den.len() + 1 { abs_z } else { 0.0 };
    let log_eps = -(ctx.working_digits() as f64);
    let monotone = monotone_from(num, den);
    let mut term = one.clone();
    let mut sum = one;
    let mut k: i64 = 0;
    loop {
        if stop == Some(k) {
            return Ok(sum);
        }
        let scaled = &term * z;
        term = BigComplex::new(apply_ratio(&scaled.re, num, den, k), apply_ratio(&scaled.im, num, den, k));
        sum = &sum + &term;
        k += 1;
        if k >= monotone {
            let rho = (ratio_magnitude(num, den, k) * abs_z).max(limit);
            if rho < 1.0 {
                // compared in log10 to stay clear of f64 underflow
                let t = term.norm_sqr().log10_abs_approx() / 2.0;
                let s = sum.norm_sqr().log10_abs_approx() / 2.0;
                let tail = t + libm::log10(rho / (1.0 - rho));
                if tail <= log_eps + s || t == f64::NEG_INFINITY {
                    return Ok(sum);
                }
            }
        }
        if k > MAX_TERMS {
            return Err(NumericError::NotConverged {
                target: ctx.working_digits(),
                estimate: term.abs(ctx).to_decimal(3),
            });
        }
    }
}
