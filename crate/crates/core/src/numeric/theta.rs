//! Radial values of the Dedekind eta function and the classical thetas.
//!
//! `η(e^{-2πt})` is summed from the pentagonal series
//! `q^{1/24} Σ (-1)^n q^{n(3n±1)/2}`. For `t < 1` the transformation
//! `η(it) = t^{-1/2} η(i/t)` (standard background, not re-derived here) is
//! applied first, so the series argument never exceeds `e^{-2π}`.

use alloc::format;

use super::real::{BigReal, Context};
use super::NumericError;

/// Pentagonal series `Σ (-1)^n q^{n(3n±1)/2}` without the `q^{1/24}` factor.
fn pentagonal_sum(ctx: &Context, q: &BigReal) -> BigReal {
    let eps = ctx.epsilon();
    let mut sum = ctx.one();
    let mut qn = ctx.one(); // q^n
    let mut base = ctx.one(); // q^{n(3n-1)/2}
    let mut n: i64 = 0;
    loop {
        n += 1;
        // n(3n-1)/2 - (n-1)(3n-4)/2 = 3n - 2
        base = &base * q.powi(3 * n - 2);
        qn = &qn * q;
        let pair = &base + &base * &qn;
        let done = pair.abs() <= &eps * sum.abs();
        if n % 2 == 1 {
            sum -= pair;
        } else {
            sum += pair;
        }
        if done || base.is_zero() {
            return sum;
        }
    }
}

/// `η(e^{-2πt})` from the raw series, no inversion. Slow for small `t`.
pub fn eta_direct(ctx: &Context, t: &BigReal) -> Result<BigReal, NumericError> {
    if !t.is_positive() {
        return Err(NumericError::Domain(format!("eta needs t > 0, got {}", t)));
    }
    let two_pi_t = ctx.pi().mul_pow2(1) * t;
    let q = ctx.exp(&-&two_pi_t);
    let lead = ctx.exp(&-(two_pi_t / ctx.int(24)));
    Ok(lead * pentagonal_sum(ctx, &q))
}

/// `η(e^{-2πt})` for `t > 0`, inverting `t ↦ 1/t` below 1.
pub fn eta_numeric(ctx: &Context, t: &BigReal) -> Result<BigReal, NumericError> {
    if !t.is_positive() {
        return Err(NumericError::Domain(format!("eta needs t > 0, got {}", t)));
    }
    if *t >= ctx.one() {
        return eta_direct(ctx, t);
    }
    let inv = ctx.one() / t;
    Ok(eta_direct(ctx, &inv)? / ctx.sqrt(t))
}

/// `η` at a nome `q ∈ (0, 1)`.
pub fn eta_q(ctx: &Context, q: &BigReal) -> Result<BigReal, NumericError> {
    if !q.is_positive() || *q >= ctx.one() {
        return Err(NumericError::Domain(format!("eta needs 0 < q < 1, got {}", q)));
    }
    let t = -ctx.ln(q) / ctx.pi().mul_pow2(1);
    eta_numeric(ctx, &t)
}

fn check_nome(ctx: &Context, q: &BigReal) -> Result<(), NumericError> {
    if q.abs() >= ctx.one() {
        return Err(NumericError::Domain(format!("theta series need |q| < 1, got {}", q)));
    }
    Ok(())
}

/// Sums `Σ_{n≥1} q^{e(n)}` where `e(n) - e(n-1) = step(n)`, stopping once the
/// geometric tail bound `|term|·|q|/(1-|q|)` drops below the working epsilon.
fn gap_series(ctx: &Context, q: &BigReal, step: impl Fn(i64) -> i64) -> BigReal {
    let eps = ctx.epsilon();
    let aq = q.abs();
    let tail_factor = &aq / (ctx.one() - &aq);
    let mut sum = ctx.zero();
    let mut term = ctx.one();
    let mut n = 0;
    loop {
        n += 1;
        term = &term * q.powi(step(n));
        sum += &term;
        let tail = term.abs() * &tail_factor;
        if term.is_zero() || tail <= &eps * sum.abs().max(ctx.one()) {
            return sum;
        }
    }
}

/// `φ(q) = Σ_{n∈ℤ} q^{n²}` for `|q| < 1`; negative `q` allowed.
pub fn phi_numeric(ctx: &Context, q: &BigReal) -> Result<BigReal, NumericError> {
    check_nome(ctx, q)?;
    if q.is_zero() {
        return Ok(ctx.one());
    }
    Ok(ctx.one() + gap_series(ctx, q, |n| 2 * n - 1).mul_pow2(1))
}

/// `ψ(q) = Σ_{n≥0} q^{n(n+1)/2}` for `|q| < 1`.
pub fn psi_numeric(ctx: &Context, q: &BigReal) -> Result<BigReal, NumericError> {
    check_nome(ctx, q)?;
    if q.is_zero() {
        return Ok(ctx.one());
    }
    Ok(ctx.one() + gap_series(ctx, q, |n| n))
}

/// `Σ_{n≥0} (-1)^n (2n+1) e^{-π(n+½)²u}` summed directly for `u > 0`.
pub fn theta_weight32(ctx: &Context, u: &BigReal) -> Result<BigReal, NumericError> {
    if !u.is_positive() {
        return Err(NumericError::Domain(format!("weight-3/2 theta needs u > 0, got {}", u)));
    }
    let eps = ctx.epsilon();
    let r = ctx.exp(&-(ctx.pi() * u)); // e^{-πu}
    // (n+½)² - (n-½)² = 2n
    let mut e = ctx.exp(&-(ctx.pi() * u).mul_pow2(-2));
    let mut sum = e.clone();
    let mut n: i64 = 0;
    loop {
        n += 1;
        e = &e * r.powi(2 * n);
        let term = e.mul_i64(2 * n + 1);
        if n % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        if e.is_zero() || term <= &eps * sum.abs() {
            return Ok(sum);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_inversion_self_consistent() {
        let ctx = Context::new(40);
        for t in [0.1, 0.37, 0.9] {
            let t = ctx.f64(t);
            let inv = ctx.one() / &t;
            let lhs = eta_direct(&ctx, &t).unwrap();
            let rhs = eta_direct(&ctx, &inv).unwrap() / ctx.sqrt(&t);
            assert!(ctx.agreement_digits(&lhs, &rhs) > 45.0, "t={t:?}");
            assert!(ctx.agreement_digits(&eta_numeric(&ctx, &t).unwrap(), &lhs) > 45.0);
        }
    }

    #[test]
    fn eta_decays() {
        let ctx = Context::new(30);
        let a = eta_numeric(&ctx, &ctx.int(2)).unwrap();
        let b = eta_numeric(&ctx, &ctx.int(20)).unwrap();
        assert!(b < a && b.is_positive());
        let lead = ctx.exp(&-(ctx.pi() * ctx.int(40) / ctx.int(24)));
        assert!(ctx.agreement_digits(&(b / lead), &ctx.one()) > 40.0);
    }

    #[test]
    fn rejects_bad_arguments() {
        let ctx = Context::new(20);
        assert!(eta_numeric(&ctx, &ctx.zero()).is_err());
        assert!(phi_numeric(&ctx, &ctx.one()).is_err());
        assert!(psi_numeric(&ctx, &ctx.int(-1)).is_err());
        assert!(theta_weight32(&ctx, &ctx.int(-1)).is_err());
        assert_eq!(phi_numeric(&ctx, &ctx.zero()).unwrap(), ctx.one());
        assert_eq!(psi_numeric(&ctx, &ctx.zero()).unwrap(), ctx.one());
    }

    #[test]
    fn theta32_fixed_point_and_large_u() {
        let ctx = Context::new(30);
        let one = ctx.one();
        let v = theta_weight32(&ctx, &one).unwrap();
        let w = theta_weight32(&ctx, &(ctx.one() / &one)).unwrap() * ctx.pow(&one, &ctx.f64(-1.5));
        assert_eq!(v, w);
        let u = ctx.int(40);
        let big = theta_weight32(&ctx, &u).unwrap();
        let lead = ctx.exp(&-(ctx.pi() * &u).mul_pow2(-2));
        assert!(ctx.agreement_digits(&(big / lead), &ctx.one()) > 40.0);
    }
}
