//! Singular moduli and the modular parameters `u_j = 1 - φ⁴(-q^j)/φ⁴(q^j)`,
//! `z_j = φ²(q^j)`.

use alloc::format;
use alloc::vec::Vec;

use super::real::{BigReal, Context};
use super::theta::phi_numeric;
use super::NumericError;

/// Sum `Σ_{k≥0} q^{(2k+1)²}`, so that `φ(q) - φ(-q)` is four times it.
fn odd_square_sum(ctx: &Context, q: &BigReal) -> BigReal {
    let eps = ctx.epsilon();
    let q8 = q.powi(8);
    let mut term = q.clone();
    let mut sum = q.clone();
    let mut k: i64 = 0;
    loop {
        k += 1;
        // (2k+1)² - (2k-1)² = 8k
        term = &term * q8.powi(k);
        sum += &term;
        if term.is_zero() || term <= &eps * &sum {
            return sum;
        }
    }
}

/// `1 - φ⁴(-q)/φ⁴(q)` for `q ∈ (0,1)`, without subtracting nearly equal numbers.
fn alpha_of_nome(ctx: &Context, q: &BigReal) -> Result<BigReal, NumericError> {
    let plus = phi_numeric(ctx, q)?;
    let minus = phi_numeric(ctx, &-q)?;
    let diff = odd_square_sum(ctx, q).mul_pow2(2);
    let sum = phi_numeric(ctx, &q.powi(4))?.mul_pow2(1);
    let num = diff * sum * (plus.square() + minus.square());
    Ok(num / plus.powi(4))
}

/// `α_x = 1 - φ⁴(-e^{-π√x})/φ⁴(e^{-π√x})` for `x > 0`.
///
/// For `x < 1` the value comes from `α_x = 1 - α_{1/x}` to keep the nome small.
pub fn singular_modulus(ctx: &Context, x: &BigReal) -> Result<BigReal, NumericError> {
    if !x.is_positive() {
        return Err(NumericError::Domain(format!("singular modulus needs x > 0, got {}", x)));
    }
    if *x < ctx.one() {
        let inv = ctx.one() / x;
        return Ok(ctx.one() - singular_modulus(ctx, &inv)?);
    }
    let q = ctx.exp(&-(ctx.pi() * ctx.sqrt(x)));
    alpha_of_nome(ctx, &q)
}

/// `α = ½(1 - √(1 - G^{-24}))` from a class invariant `G ≥ 1`.
pub fn class_invariant_alpha(ctx: &Context, g: &BigReal) -> Result<BigReal, NumericError> {
    if *g < ctx.one() {
        return Err(NumericError::Domain(format!("class invariant must be at least 1, got {}", g)));
    }
    let eps = g.powi(-24);
    let root = ctx.sqrt(&(ctx.one() - &eps));
    Ok(eps / (ctx.one() + root).mul_pow2(1))
}

#[derive(Debug, Clone)]
pub struct ModularEntry {
    pub degree: u32,
    pub u: BigReal,
    pub z: BigReal,
}

#[derive(Debug, Clone)]
pub struct ModularParams {
    pub q: BigReal,
    pub entries: Vec<ModularEntry>,
}

impl ModularParams {
    pub fn get(&self, degree: u32) -> Option<&ModularEntry> {
        self.entries.iter().find(|e| e.degree == degree)
    }

    /// `u_j`, panicking if the degree was not requested.
    pub fn u(&self, degree: u32) -> &BigReal {
        &self.get(degree).expect("degree was requested").u
    }

    pub fn z(&self, degree: u32) -> &BigReal {
        &self.get(degree).expect("degree was requested").z
    }
}

/// `u_j` and `z_j` at the nome `q ∈ (0,1)` for each requested degree.
pub fn modular_params(ctx: &Context, q: &BigReal, degrees: &[u32]) -> Result<ModularParams, NumericError> {
    if !q.is_positive() || *q >= ctx.one() {
        return Err(NumericError::Domain(format!("modular parameters need 0 < q < 1, got {}", q)));
    }
    let mut entries = Vec::with_capacity(degrees.len());
    for &j in degrees {
        if j == 0 {
            return Err(NumericError::Domain("degree must be positive".into()));
        }
        let qj = q.powi(j as i64);
        let u = alpha_of_nome(ctx, &qj)?;
        let z = phi_numeric(ctx, &qj)?.square();
        entries.push(ModularEntry { degree: j, u, z });
    }
    Ok(ModularParams { q: q.clone(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha9_closed_form() {
        let ctx = Context::new(40);
        let t = ctx.sqrt(&ctx.sqrt(&ctx.int(12)));
        let poly = ctx.int(4) - t.mul_pow2(1) - t.square().mul_pow2(1) + t.powi(3);
        let expect = poly.square() / ctx.int(32);
        let got = singular_modulus(&ctx, &ctx.int(9)).unwrap();
        assert!(ctx.agreement_digits(&got, &expect) > 45.0, "{got:?} vs {expect:?}");
    }

    #[test]
    fn alpha25_closed_form() {
        let ctx = Context::new(40);
        let s5 = ctx.sqrt(&ctx.int(5));
        let r5 = ctx.sqrt(&s5);
        let expect = (s5 - ctx.one()).powi(8) * (r5 - ctx.one()).powi(8) / ctx.int(8192);
        let got = singular_modulus(&ctx, &ctx.int(25)).unwrap();
        // relative comparison: the value is of order 1e-6
        assert!(ctx.agreement_digits(&(got / expect), &ctx.one()) > 45.0);
    }

    #[test]
    fn second_degree_modular_equation() {
        let ctx = Context::new(40);
        for x in [4, 9, 25] {
            let small = singular_modulus(&ctx, &ctx.f64(x as f64 / 4.0)).unwrap();
            let r = ctx.sqrt(&(ctx.one() - small));
            let lhs = (ctx.one() - &r) / (ctx.one() + &r);
            let rhs = ctx.sqrt(&singular_modulus(&ctx, &ctx.int(x)).unwrap());
            assert!(ctx.agreement_digits(&(lhs / rhs), &ctx.one()) > 45.0, "x={x}");
        }
    }

    #[test]
    fn alpha_one_is_half() {
        let ctx = Context::new(30);
        let a = singular_modulus(&ctx, &ctx.one()).unwrap();
        assert!(ctx.agreement_digits(&a, &ctx.f64(0.5)) > 40.0);
        let below = singular_modulus(&ctx, &ctx.f64(0.25)).unwrap();
        let above = singular_modulus(&ctx, &ctx.int(4)).unwrap();
        assert!(ctx.agreement_digits(&(below + above), &ctx.one()) > 40.0);
    }

    #[test]
    fn class_invariant_limits() {
        let ctx = Context::new(30);
        assert_eq!(class_invariant_alpha(&ctx, &ctx.one()).unwrap(), ctx.f64(0.5));
        assert!(class_invariant_alpha(&ctx, &ctx.f64(0.9)).is_err());
        let tiny = class_invariant_alpha(&ctx, &ctx.int(1000)).unwrap();
        assert!(tiny.log10_abs_approx() < -70.0);
        // G₉^{-3} = √2/(√3+1)
        let g9 = ctx.pow(&((ctx.sqrt(&ctx.int(3)) + ctx.one()) / ctx.sqrt(&ctx.int(2))), &(ctx.one() / ctx.int(3)));
        let a = class_invariant_alpha(&ctx, &g9).unwrap();
        let b = singular_modulus(&ctx, &ctx.int(9)).unwrap();
        assert!(ctx.agreement_digits(&(a / b), &ctx.one()) > 40.0);
    }

    #[test]
    fn params_are_in_range() {
        let ctx = Context::new(30);
        let q = ctx.f64(0.3);
        let p = modular_params(&ctx, &q, &[1, 3, 5, 15]).unwrap();
        for e in &p.entries {
            assert!(e.u.is_positive() && e.u < ctx.one());
            assert!(e.z.is_positive());
        }
        assert!(modular_params(&ctx, &ctx.one(), &[1]).is_err());
    }
}
