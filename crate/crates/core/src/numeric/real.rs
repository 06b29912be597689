//! Arbitrary-precision reals at a declared decimal working precision.
//!
//! [`BigReal`] is a thin newtype over an `astro-float` number; every value
//! carries its own binary precision and arithmetic between two values runs at
//! the larger of the two. Transcendental functions need the constant cache
//! held by a [`Context`], which also fixes the user-facing precision `P` and
//! the guard digits `G`.
//!
//! Accuracy contract: every public numeric operation in this crate is
//! evaluated at `P + G` decimal digits and documents a relative error of at
//! most `10^-(P - G)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cell::RefCell;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::Ratio;

use super::NumericError;

const RM: RoundingMode = RoundingMode::ToEven;

/// Bits per decimal digit, rounded up.
const BITS_PER_DIGIT: f64 = core::f64::consts::LOG2_10;

/// Default user-facing precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 40;

/// Guard digits for a requested precision: 10 plus 10% of `digits`.
pub fn default_guard(digits: u32) -> u32 {
    10 + digits.div_ceil(10)
}

/// A real number at some binary working precision.
#[derive(Clone)]
pub struct BigReal(BigFloat);

impl BigReal {
    fn prec(&self) -> usize {
        self.0.mantissa_max_bit_len().unwrap_or(64)
    }

    fn joint_prec(&self, other: &BigReal) -> usize {
        self.prec().max(other.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive() && !self.0.is_zero()
    }

    /// False for NaN and infinities.
    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    pub fn abs(&self) -> BigReal {
        BigReal(self.0.abs())
    }

    pub fn max(self, other: BigReal) -> BigReal {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: BigReal) -> BigReal {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn square(&self) -> BigReal {
        self * self
    }

    /// `self * 2^k`, exact.
    pub fn mul_pow2(&self, k: i32) -> BigReal {
        if self.0.is_zero() {
            return self.clone();
        }
        let mut v = self.0.clone();
        if let Some(e) = v.exponent() {
            v.set_exponent(e + k);
        }
        BigReal(v)
    }

    pub fn mul_i64(&self, k: i64) -> BigReal {
        let p = self.prec();
        BigReal(self.0.mul(&BigFloat::from_i64(k, 64), p, RM))
    }

    pub fn div_i64(&self, k: i64) -> BigReal {
        let p = self.prec();
        BigReal(self.0.div(&BigFloat::from_i64(k, 64), p, RM))
    }

    /// Integer power by repeated squaring; negative exponents invert.
    pub fn powi(&self, n: i64) -> BigReal {
        let p = self.prec();
        let mag = self.0.powi(n.unsigned_abs() as usize, p, RM);
        if n < 0 {
            BigReal(mag.reciprocal(p, RM))
        } else {
            BigReal(mag)
        }
    }

    /// Binary exponent `e` with `|self| = 0.m × 2^e`, `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        if self.0.is_zero() {
            None
        } else {
            self.0.exponent()
        }
    }

    /// Nearest `f64`, saturating to 0 or infinity outside its range.
    pub fn to_f64(&self) -> f64 {
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_inf() {
            return if self.0.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        let Some((words, _, sign, exp, _)) = self.0.as_raw_parts() else {
            return 0.0;
        };
        if self.0.is_zero() {
            return 0.0;
        }
        let n = words.len();
        let hi = words[n - 1] as f64;
        let lo = if n >= 2 { words[n - 2] as f64 } else { 0.0 };
        let mant = (hi + lo / 18_446_744_073_709_551_616.0) / 18_446_744_073_709_551_616.0;
        let mag = mant * libm::pow(2.0, exp as f64);
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// Approximate `log10 |self|`, `-inf` for zero.
    pub fn log10_abs_approx(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        let e = self.0.exponent().unwrap_or(0) as f64;
        let m = self.mul_pow2(-(e as i32)).to_f64().abs();
        libm::log10(m) + e * core::f64::consts::LOG10_2
    }

    /// Decimal scientific notation with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        format_decimal(&self.0, digits)
    }
}

fn format_decimal(v: &BigFloat, digits: usize) -> String {
    if v.is_nan() {
        return "NaN".to_string();
    }
    if v.is_inf() {
        return if v.is_negative() { "-inf".to_string() } else { "inf".to_string() };
    }
    if v.is_zero() {
        return "0".to_string();
    }
    let Ok(mut cc) = Consts::new() else {
        return "NaN".to_string();
    };
    let Ok((sign, mut mantissa, mut exp)) = v.convert_to_radix(Radix::Dec, RM, &mut cc) else {
        return "NaN".to_string();
    };
    // value = 0.d1 d2 d3 ... × 10^exp
    while mantissa.len() > 1 && mantissa[0] == 0 {
        mantissa.remove(0);
        exp -= 1;
    }
    let digits = digits.max(1);
    let mut kept: Vec<u8> = mantissa.iter().take(digits).copied().collect();
    kept.resize(digits, 0);
    if mantissa.len() > digits && mantissa[digits] >= 5 {
        let mut i = digits;
        loop {
            if i == 0 {
                kept.insert(0, 1);
                kept.truncate(digits);
                exp += 1;
                break;
            }
            i -= 1;
            if kept[i] == 9 {
                kept[i] = 0;
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    let mut s = String::new();
    if sign == Sign::Neg {
        s.push('-');
    }
    s.push((b'0' + kept[0]) as char);
    if kept.len() > 1 {
        s.push('.');
        for d in &kept[1..] {
            s.push((b'0' + d) as char);
        }
    }
    let e10 = exp - 1;
    if e10 != 0 {
        s.push('e');
        s.push_str(&e10.to_string());
    }
    s
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(30))
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        f.write_str(&self.to_decimal(digits))
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &BigReal) -> BigReal {
                let p = self.joint_prec(rhs);
                BigReal(self.0.$inner(&rhs.0, p, RM))
            }
        }
        impl $tr<BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: BigReal) -> BigReal {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &BigReal) -> BigReal {
                (&self).$m(rhs)
            }
        }
        impl $tr<BigReal> for &BigReal {
            type Output = BigReal;
            fn $m(self, rhs: BigReal) -> BigReal {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl AddAssign<&BigReal> for BigReal {
    fn add_assign(&mut self, rhs: &BigReal) {
        *self = &*self + rhs;
    }
}

impl AddAssign<BigReal> for BigReal {
    fn add_assign(&mut self, rhs: BigReal) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&BigReal> for BigReal {
    fn sub_assign(&mut self, rhs: &BigReal) {
        *self = &*self - rhs;
    }
}

impl SubAssign<BigReal> for BigReal {
    fn sub_assign(&mut self, rhs: BigReal) {
        *self = &*self - &rhs;
    }
}

impl MulAssign<&BigReal> for BigReal {
    fn mul_assign(&mut self, rhs: &BigReal) {
        *self = &*self * rhs;
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(self.0.neg())
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(self.0.clone().neg())
    }
}

/// Precision settings plus the cached constants transcendental functions need.
///
/// A context is cheap to create but not `Sync` (the constant cache is behind a
/// `RefCell`); give each worker thread its own.
pub struct Context {
    digits: u32,
    guard: u32,
    bits: usize,
    consts: RefCell<Consts>,
}

impl Clone for Context {
    /// Same precision with a fresh constant cache.
    fn clone(&self) -> Self {
        Context::with_guard(self.digits, self.guard)
    }
}

impl Context {
    /// Context with `digits` significant digits and the default guard.
    pub fn new(digits: u32) -> Self {
        Self::with_guard(digits, default_guard(digits))
    }

    pub fn with_guard(digits: u32, guard: u32) -> Self {
        let working = (digits + guard) as f64;
        let bits = libm::ceil(working * BITS_PER_DIGIT) as usize + 16;
        let bits = bits.div_ceil(64) * 64;
        Context {
            digits,
            guard,
            bits,
            consts: RefCell::new(Consts::new().expect("constant cache allocation")),
        }
    }

    /// User-facing precision `P`.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Guard digits `G`.
    pub fn guard(&self) -> u32 {
        self.guard
    }

    /// Digits actually carried internally, `P + G`.
    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Digits the accuracy contract promises, `P - G`.
    pub fn guaranteed_digits(&self) -> u32 {
        self.digits.saturating_sub(self.guard)
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Same guard policy, higher precision.
    pub fn raised(&self, extra_digits: u32) -> Context {
        Context::with_guard(self.digits + extra_digits, self.guard)
    }

    pub fn zero(&self) -> BigReal {
        BigReal(BigFloat::new(self.bits))
    }

    pub fn one(&self) -> BigReal {
        self.int(1)
    }

    pub fn int(&self, v: i64) -> BigReal {
        BigReal(BigFloat::from_i64(v, self.bits))
    }

    pub fn f64(&self, v: f64) -> BigReal {
        BigReal(BigFloat::from_f64(v, self.bits))
    }

    pub fn ratio(&self, r: &Ratio<i64>) -> BigReal {
        let n = BigFloat::from_i64(*r.numer(), self.bits);
        let d = BigFloat::from_i64(*r.denom(), self.bits);
        BigReal(n.div(&d, self.bits, RM))
    }

    pub fn bigint(&self, v: &BigInt) -> BigReal {
        if let Ok(small) = i64::try_from(v) {
            return self.int(small);
        }
        self.parse(&v.to_string()).expect("integer literal parses")
    }

    pub fn big_ratio(&self, r: &Ratio<BigInt>) -> BigReal {
        self.bigint(r.numer()) / self.bigint(r.denom())
    }

    /// `10^(-k)`.
    pub fn ten_pow_neg(&self, k: u32) -> BigReal {
        let ten = BigFloat::from_i64(10, self.bits);
        BigReal(ten.powi(k as usize, self.bits, RM).reciprocal(self.bits, RM))
    }

    /// Relative epsilon of the working precision, `10^-(P+G)`.
    pub fn epsilon(&self) -> BigReal {
        self.ten_pow_neg(self.working_digits())
    }

    /// Parses a decimal literal such as `-1.25e-3`.
    pub fn parse(&self, s: &str) -> Result<BigReal, NumericError> {
        let mut cc = self.consts.borrow_mut();
        let v = BigFloat::parse(s, Radix::Dec, self.bits, RM, &mut cc);
        if v.is_nan() {
            return Err(NumericError::Parse(s.to_string()));
        }
        Ok(BigReal(v))
    }

    /// Rounds a value to this context's precision.
    pub fn round(&self, x: &BigReal) -> BigReal {
        let mut v = x.0.clone();
        let _ = v.set_precision(self.bits, RM);
        BigReal(v)
    }

    pub fn pi(&self) -> BigReal {
        let mut cc = self.consts.borrow_mut();
        BigReal(cc.pi(self.bits, RM))
    }

    pub fn sqrt(&self, x: &BigReal) -> BigReal {
        BigReal(x.0.sqrt(self.bits, RM))
    }

    pub fn cbrt(&self, x: &BigReal) -> BigReal {
        BigReal(x.0.cbrt(self.bits, RM))
    }

    pub fn exp(&self, x: &BigReal) -> BigReal {
        let mut cc = self.consts.borrow_mut();
        BigReal(x.0.exp(self.bits, RM, &mut cc))
    }

    pub fn ln(&self, x: &BigReal) -> BigReal {
        let mut cc = self.consts.borrow_mut();
        BigReal(x.0.ln(self.bits, RM, &mut cc))
    }

    /// `x^y` for `x > 0`.
    pub fn pow(&self, x: &BigReal, y: &BigReal) -> BigReal {
        let mut cc = self.consts.borrow_mut();
        BigReal(x.0.pow(&y.0, self.bits, RM, &mut cc))
    }

    /// `x^(p/q)` for `x > 0`.
    pub fn pow_ratio(&self, x: &BigReal, r: &Ratio<i64>) -> BigReal {
        self.pow(x, &self.ratio(r))
    }

    pub fn sin(&self, x: &BigReal) -> BigReal {
        let mut cc = self.consts.borrow_mut();
        BigReal(x.0.sin(self.bits, RM, &mut cc))
    }

    pub fn cos(&self, x: &BigReal) -> BigReal {
        let mut cc = self.consts.borrow_mut();
        BigReal(x.0.cos(self.bits, RM, &mut cc))
    }

    pub fn atan(&self, x: &BigReal) -> BigReal {
        let mut cc = self.consts.borrow_mut();
        BigReal(x.0.atan(self.bits, RM, &mut cc))
    }

    pub fn acos(&self, x: &BigReal) -> BigReal {
        let mut cc = self.consts.borrow_mut();
        BigReal(x.0.acos(self.bits, RM, &mut cc))
    }

    pub fn atanh(&self, x: &BigReal) -> BigReal {
        let mut cc = self.consts.borrow_mut();
        BigReal(x.0.atanh(self.bits, RM, &mut cc))
    }

    /// Four-quadrant arctangent of `y / x`.
    pub fn atan2(&self, y: &BigReal, x: &BigReal) -> BigReal {
        if x.is_zero() {
            let half_pi = self.pi().mul_pow2(-1);
            return if y.is_negative() {
                -half_pi
            } else if y.is_zero() {
                self.zero()
            } else {
                half_pi
            };
        }
        let base = self.atan(&(y / x));
        if x.is_positive() {
            base
        } else if y.is_negative() {
            base - self.pi()
        } else {
            base + self.pi()
        }
    }

    pub fn cosh(&self, x: &BigReal) -> BigReal {
        let e = self.exp(x);
        let inv = self.one() / &e;
        (e + inv).mul_pow2(-1)
    }

    pub fn sinh(&self, x: &BigReal) -> BigReal {
        let e = self.exp(x);
        let inv = self.one() / &e;
        (e - inv).mul_pow2(-1)
    }

    pub fn to_string(&self, x: &BigReal) -> String {
        x.to_decimal(self.digits as usize)
    }

    /// Number of leading decimal digits on which `a` and `b` agree, measured
    /// as `-log10(|a-b| / max(1, |a|))`, capped at the working precision.
    pub fn agreement_digits(&self, a: &BigReal, b: &BigReal) -> f64 {
        let diff = (a - b).abs();
        let scale = a.abs().max(self.one());
        let rel = diff / scale;
        if rel.is_zero() {
            return self.working_digits() as f64;
        }
        (-rel.log10_abs_approx()).min(self.working_digits() as f64)
    }
}

impl fmt::Debug for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Context")
            .field("digits", &self.digits)
            .field("guard", &self.guard)
            .field("bits", &self.bits)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_policy() {
        assert_eq!(default_guard(40), 14);
        let ctx = Context::new(40);
        assert_eq!(ctx.working_digits(), 54);
        assert_eq!(ctx.guaranteed_digits(), 26);
        assert!(ctx.bits() >= 180);
    }

    #[test]
    fn decimal_formatting_rounds() {
        let ctx = Context::new(30);
        let third = ctx.one() / ctx.int(3);
        assert_eq!(third.to_decimal(5), "3.3333e-1");
        let two_thirds = ctx.int(2) / ctx.int(3);
        assert_eq!(two_thirds.to_decimal(4), "6.667e-1");
        assert_eq!(ctx.int(-12).to_decimal(3), "-1.20e1");
        let nines = ctx.parse("9.9996").unwrap();
        assert_eq!(nines.to_decimal(3), "1.00e1");
        assert_eq!(ctx.zero().to_decimal(5), "0");
    }

    #[test]
    fn pi_and_transcendentals() {
        let ctx = Context::new(40);
        let pi = ctx.pi();
        assert_eq!(pi.to_decimal(40), "3.141592653589793238462643383279502884197");
        let e = ctx.exp(&ctx.one());
        assert_eq!(e.to_decimal(30), "2.71828182845904523536028747135");
        let back = ctx.ln(&e);
        assert!(ctx.agreement_digits(&back, &ctx.one()) > 50.0);
        let a = ctx.atan2(&ctx.int(-1), &ctx.int(-1));
        let expect = -(pi.clone() * ctx.int(3)).mul_pow2(-2);
        assert!(ctx.agreement_digits(&a, &expect) > 50.0);
    }

    #[test]
    fn to_f64_is_close() {
        let ctx = Context::new(20);
        for v in [1.0, -2.5, 1e-30, 3.75e12, core::f64::consts::PI] {
            let x = ctx.f64(v);
            assert!((x.to_f64() - v).abs() <= 1e-15 * v.abs());
        }
        assert!((ctx.int(1000).log10_abs_approx() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn powi_and_pow2() {
        let ctx = Context::new(20);
        let x = ctx.int(3);
        assert_eq!(x.powi(4), ctx.int(81));
        assert_eq!(x.powi(-2) * ctx.int(9), ctx.one());
        assert_eq!(x.mul_pow2(3), ctx.int(24));
    }
}
