//! Minimal complex arithmetic over [`BigReal`].

use core::ops::{Add, Mul, Neg, Sub};

use super::real::{BigReal, Context};

#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        BigComplex { re, im }
    }

    pub fn real(ctx: &Context, re: BigReal) -> Self {
        BigComplex { re, im: ctx.zero() }
    }

    pub fn i(ctx: &Context) -> Self {
        BigComplex { re: ctx.zero(), im: ctx.one() }
    }

    /// `e^{iθ}`.
    pub fn unit(ctx: &Context, theta: &BigReal) -> Self {
        BigComplex { re: ctx.cos(theta), im: ctx.sin(theta) }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> BigReal {
        self.re.square() + self.im.square()
    }

    pub fn abs(&self, ctx: &Context) -> BigReal {
        ctx.sqrt(&self.norm_sqr())
    }

    /// `log |z|`.
    pub fn ln_abs(&self, ctx: &Context) -> BigReal {
        ctx.ln(&self.norm_sqr()).mul_pow2(-1)
    }

    pub fn arg(&self, ctx: &Context) -> BigReal {
        ctx.atan2(&self.im, &self.re)
    }

    pub fn scale(&self, k: &BigReal) -> Self {
        BigComplex { re: &self.re * k, im: &self.im * k }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        BigComplex { re: self.re.mul_i64(k), im: self.im.mul_i64(k) }
    }

    pub fn mul_pow2(&self, k: i32) -> Self {
        BigComplex { re: self.re.mul_pow2(k), im: self.im.mul_pow2(k) }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn div(&self, other: &BigComplex) -> Self {
        let d = other.norm_sqr();
        let re = (&self.re * &other.re + &self.im * &other.im) / &d;
        let im = (&self.im * &other.re - &self.re * &other.im) / &d;
        BigComplex { re, im }
    }

    pub fn recip(&self, ctx: &Context) -> Self {
        BigComplex::real(ctx, ctx.one()).div(self)
    }

    /// Principal square root, `Re ≥ 0`.
    pub fn sqrt(&self, ctx: &Context) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let r = self.abs(ctx);
        if !self.re.is_negative() {
            let re = ctx.sqrt(&(&r + &self.re).mul_pow2(-1));
            let im = &self.im / re.mul_pow2(1);
            BigComplex { re, im }
        } else {
            let mut im = ctx.sqrt(&(&r - &self.re).mul_pow2(-1));
            if self.im.is_negative() {
                im = -im;
            }
            let re = &self.im / im.mul_pow2(1);
            BigComplex { re, im }
        }
    }

    /// Principal value of `z^p` for a real exponent, `exp(p·Log z)`.
    pub fn powr(&self, ctx: &Context, p: &BigReal) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        if self.is_real() && self.re.is_positive() {
            return BigComplex::real(ctx, ctx.pow(&self.re, p));
        }
        let mag = ctx.exp(&(self.ln_abs(ctx) * p));
        let ang = self.arg(ctx) * p;
        BigComplex::unit(ctx, &ang).scale(&mag)
    }

    /// Principal logarithm.
    pub fn ln(&self, ctx: &Context) -> Self {
        BigComplex { re: self.ln_abs(ctx), im: self.arg(ctx) }
    }

    pub fn exp(&self, ctx: &Context) -> Self {
        BigComplex::unit(ctx, &self.im).scale(&ctx.exp(&self.re))
    }
}

impl Add<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Add for BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: BigComplex) -> BigComplex {
        &self + &rhs
    }
}

impl Sub for BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: BigComplex) -> BigComplex {
        &self - &rhs
    }
}

impl Mul for BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: BigComplex) -> BigComplex {
        &self * &rhs
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -self.re, im: -self.im }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -&self.re, im: -&self.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_branches() {
        let ctx = Context::new(30);
        for (re, im) in [(3, 4), (-3, 4), (-3, -4), (0, -2), (-4, 0)] {
            let z = BigComplex::new(ctx.int(re), ctx.int(im));
            let s = z.sqrt(&ctx);
            assert!(!s.re.is_negative());
            let back = s.square();
            assert!(ctx.agreement_digits(&back.re, &z.re) > 40.0);
            assert!(ctx.agreement_digits(&back.im, &z.im) > 40.0);
        }
    }

    #[test]
    fn powr_cube_roots() {
        let ctx = Context::new(30);
        let z = BigComplex::new(ctx.int(-8), ctx.zero());
        let third = ctx.one() / ctx.int(3);
        let r = z.powr(&ctx, &third);
        // principal cube root of -8 is 1 + i√3
        assert!(ctx.agreement_digits(&r.re, &ctx.one()) > 40.0);
        assert!(ctx.agreement_digits(&r.im, &ctx.sqrt(&ctx.int(3))) > 40.0);
    }

    #[test]
    fn division_roundtrip() {
        let ctx = Context::new(30);
        let a = BigComplex::new(ctx.int(2), ctx.int(-7));
        let b = BigComplex::new(ctx.f64(0.5), ctx.int(3));
        let q = a.div(&b);
        let back = &q * &b;
        assert!(ctx.agreement_digits(&back.re, &a.re) > 40.0);
        assert!(ctx.agreement_digits(&back.im, &a.im) > 40.0);
    }
}
