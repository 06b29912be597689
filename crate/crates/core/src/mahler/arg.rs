use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use super::MahlerError;
use crate::numeric::{singular_modulus, BigComplex, Context};

/// Exact recipe for an algebraic argument, built from integers, `i`, singular
/// moduli and rational powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Radical {
    Int(i64),
    /// The imaginary unit.
    I,
    /// Singular modulus `α_x`.
    Alpha(Ratio<i64>),
    Neg(Box<Radical>),
    Add(Box<Radical>, Box<Radical>),
    Sub(Box<Radical>, Box<Radical>),
    Mul(Box<Radical>, Box<Radical>),
    Div(Box<Radical>, Box<Radical>),
    /// Principal branch for non-integer powers of non-positive values.
    Pow(Box<Radical>, Ratio<i64>),
}

impl Radical {
    pub fn int(v: i64) -> Self {
        Radical::Int(v)
    }

    pub fn sqrt(self) -> Self {
        self.pow(Ratio::new(1, 2))
    }

    pub fn pow(self, p: Ratio<i64>) -> Self {
        Radical::Pow(Box::new(self), p)
    }

    pub fn powi(self, p: i64) -> Self {
        self.pow(Ratio::from_integer(p))
    }

    pub fn eval(&self, ctx: &Context) -> Result<BigComplex, MahlerError> {
        let real = |v| BigComplex::real(ctx, v);
        Ok(match self {
            Radical::Int(v) => real(ctx.int(*v)),
            Radical::I => BigComplex::i(ctx),
            Radical::Alpha(x) => real(singular_modulus(ctx, &ctx.ratio(x))?),
            Radical::Neg(a) => -a.eval(ctx)?,
            Radical::Add(a, b) => a.eval(ctx)? + b.eval(ctx)?,
            Radical::Sub(a, b) => a.eval(ctx)? - b.eval(ctx)?,
            Radical::Mul(a, b) => a.eval(ctx)? * b.eval(ctx)?,
            Radical::Div(a, b) => {
                let d = b.eval(ctx)?;
                if d.is_zero() {
                    return Err(MahlerError::Recipe("division by zero".into()));
                }
                a.eval(ctx)?.div(&d)
            }
            Radical::Pow(a, p) => {
                let base = a.eval(ctx)?;
                if p.is_integer() {
                    let n = p.to_integer();
                    if n < 0 && base.is_zero() {
                        return Err(MahlerError::Recipe("zero to a negative power".into()));
                    }
                    let mut acc = real(ctx.one());
                    for _ in 0..n.unsigned_abs() {
                        acc = acc * base.clone();
                    }
                    if n < 0 {
                        acc.recip(ctx)
                    } else {
                        acc
                    }
                } else if base.is_real() && !base.re.is_negative() {
                    real(ctx.pow_ratio(&base.re, p))
                } else {
                    base.powr(ctx, &ctx.ratio(p))
                }
            }
        })
    }

    fn is_atom(&self) -> bool {
        matches!(self, Radical::Int(v) if *v >= 0) || matches!(self, Radical::I | Radical::Alpha(_))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $v:ident) => {
        impl core::ops::$tr for Radical {
            type Output = Radical;
            fn $m(self, rhs: Radical) -> Radical {
                Radical::$v(Box::new(self), Box::new(rhs))
            }
        }
    };
}
binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl core::ops::Neg for Radical {
    type Output = Radical;
    fn neg(self) -> Radical {
        Radical::Neg(Box::new(self))
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |r: &Radical, f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if r.is_atom() {
                write!(f, "{r}")
            } else {
                write!(f, "({r})")
            }
        };
        match self {
            Radical::Int(v) => write!(f, "{v}"),
            Radical::I => f.write_str("i"),
            Radical::Alpha(x) => write!(f, "alpha({x})"),
            Radical::Neg(a) => {
                f.write_str("-")?;
                wrap(a, f)
            }
            Radical::Add(a, b) => write!(f, "{a}+{b}"),
            Radical::Sub(a, b) => {
                write!(f, "{a}-")?;
                wrap(b, f)
            }
            Radical::Mul(a, b) | Radical::Div(a, b) => {
                wrap(a, f)?;
                f.write_str(if matches!(self, Radical::Mul(..)) { "*" } else { "/" })?;
                wrap(b, f)
            }
            Radical::Pow(a, p) if *p == Ratio::new(1, 2) => {
                f.write_str("sqrt(")?;
                write!(f, "{a})")
            }
            Radical::Pow(a, p) => {
                wrap(a, f)?;
                if p.is_integer() {
                    write!(f, "^{p}")
                } else {
                    write!(f, "^({p})")
                }
            }
        }
    }
}

/// An argument of `m`, `n` or `g` with the recipe kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MahlerArg {
    pub label: String,
    pub recipe: Radical,
}

impl MahlerArg {
    pub fn new(label: impl Into<String>, recipe: Radical) -> Self {
        MahlerArg { label: label.into(), recipe }
    }

    /// Argument labelled by its own recipe.
    pub fn from_recipe(recipe: Radical) -> Self {
        use alloc::string::ToString;
        MahlerArg { label: recipe.to_string(), recipe }
    }

    pub fn int(v: i64) -> Self {
        Self::from_recipe(Radical::Int(v))
    }

    pub fn value(&self, ctx: &Context) -> Result<BigComplex, MahlerError> {
        self.recipe.eval(ctx)
    }
}

impl fmt::Display for MahlerArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

fn int(v: i64) -> Radical {
    Radical::Int(v)
}

fn t12() -> Radical {
    int(12).pow(Ratio::new(1, 4))
}

/// `α₂₅ = (√5-1)⁸(5^{1/4}-1)⁸/2¹³`.
pub fn alpha25() -> Radical {
    let s5 = int(5).sqrt();
    let r5 = int(5).pow(Ratio::new(1, 4));
    (s5 - int(1)).powi(8) * (r5 - int(1)).powi(8) / int(8192)
}

/// `(4 - 2t - 2t² + t³)/√2` with `t = 12^{1/4}`.
pub fn arg_t_real() -> Radical {
    let t = t12;
    (int(4) - int(2) * t() - int(2) * t().powi(2) + t().powi(3)) / int(2).sqrt()
}

/// `4i(7 + 4t + 2t² + t³)` with `t = 12^{1/4}`.
pub fn arg_t_imag() -> Radical {
    let t = t12;
    int(4) * Radical::I * (int(7) + int(4) * t() + int(2) * t().powi(2) + t().powi(3))
}

/// Every argument the evaluations need, each from an exact recipe.
pub fn catalog_arguments() -> Vec<MahlerArg> {
    let i = || Radical::I;
    let third = Ratio::new(1, 3);
    let a25 = alpha25;
    Vec::from([
        MahlerArg::new("4i", int(4) * i()),
        MahlerArg::new("(4-2t-2t^2+t^3)/sqrt(2), t=12^(1/4)", arg_t_real()),
        MahlerArg::new("4i(7+4t+2t^2+t^3), t=12^(1/4)", arg_t_imag()),
        MahlerArg::new("2*sqrt(2)", int(2) * int(2).sqrt()),
        MahlerArg::new("4*sqrt(alpha25)", int(4) * a25().sqrt()),
        MahlerArg::new("4i*sqrt((1-alpha25)/alpha25)", int(4) * i() * ((int(1) - a25()) / a25()).sqrt()),
        MahlerArg::new("3*2^(1/3)", int(3) * int(2).pow(third)),
        MahlerArg::new("2*4^(1/3)", int(2) * int(4).pow(third)),
        MahlerArg::new("(1+sqrt(17))^2/4", (int(1) + int(17).sqrt()).powi(2) / int(4)),
        MahlerArg::new("sqrt(17)", int(17).sqrt()),
        MahlerArg::new("1", int(1)),
        MahlerArg::new("2", int(2)),
        MahlerArg::new("3", int(3)),
    ])
}

/// Looks up a catalogued argument by label.
pub fn catalog_argument(label: &str) -> Option<MahlerArg> {
    catalog_arguments().into_iter().find(|a| a.label == label)
}
