//! Numeric identities that are not linear relations between atoms: modular
//! equations sampled at several nomes, theta involutions, and the
//! summation-by-cubes oracle.

use alloc::vec::Vec;

use num_rational::Ratio;

use super::RegistryError;
use crate::lattice::{f_cubes, f_integral, LatticeSpec};
use crate::numeric::{
    eta_direct, eta_q, modular_params, singular_modulus, theta_weight32, BigReal, Context, ModularParams,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    /// The degree-15 relation both sides of the three-term identity reduce to.
    MidwayIdentity,
    /// Product of two degree-15 modular equations equals one.
    ProductOfEntries,
    /// `1 - (u₁u₃u₅u₁₅)^{1/8} - ((1-u₁)…(1-u₁₅))^{1/8} = 2^{1/3}(…)^{1/24}`.
    DegreeFifteen,
    /// `η(q), η(q²), η(q⁴)` in terms of `u₁, z₁`, and `η` under `t → 1/t`.
    EtaInversions,
    Theta32Involution,
    /// `√α_x = (1 - √(1-α_{x/4}))/(1 + √(1-α_{x/4}))`.
    SecondDegree,
    /// Cube partial sums at radius 40 against the integral, in f64.
    CubesVsIntegral,
}

/// Nomes `e^{-πs}` for the modular-equation samples.
const NOMES: [(i64, i64); 5] = [(1, 1), (2, 1), (1, 2), (1, 5), (7, 3)];
const DEGREES: [u32; 4] = [1, 3, 5, 15];
const CUBE_SPECS: [(i64, i64, i64, i64); 3] = [(1, 1, 1, 1), (1, 2, 2, 4), (1, 3, 5, 15)];
const CUBE_RADIUS: u32 = 40;

fn root(ctx: &Context, x: &BigReal, k: i64) -> BigReal {
    ctx.pow_ratio(x, &Ratio::new(1, k))
}

fn params(ctx: &Context, s: (i64, i64)) -> Result<ModularParams, RegistryError> {
    let q = ctx.exp(&-(ctx.pi() * ctx.ratio(&Ratio::new(s.0, s.1))));
    Ok(modular_params(ctx, &q, &DEGREES)?)
}

/// Products `u₁u₃u₅u₁₅` and `(1-u₁)(1-u₃)(1-u₅)(1-u₁₅)`.
fn products(ctx: &Context, p: &ModularParams) -> (BigReal, BigReal) {
    let mut u = ctx.one();
    let mut v = ctx.one();
    for j in DEGREES {
        u *= p.u(j);
        v = v * (ctx.one() - p.u(j));
    }
    (u, v)
}

fn midway_lhs(ctx: &Context, u: &BigReal, v: &BigReal) -> BigReal {
    ctx.pow_ratio(&ctx.int(2), &Ratio::new(1, 3)) * root(ctx, &(u * v), 24)
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::MidwayIdentity => "midway",
            Property::ProductOfEntries => "product-of-entries",
            Property::DegreeFifteen => "degree-fifteen",
            Property::EtaInversions => "eta-inversions",
            Property::Theta32Involution => "theta32-involution",
            Property::SecondDegree => "second-degree",
            Property::CubesVsIntegral => "cubes-vs-integral",
        }
    }

    /// Whether the residual is judged relative to the larger side only
    /// (f64 oracles) rather than `max(|lhs|, 1)`.
    pub fn relative(self) -> bool {
        self == Property::CubesVsIntegral
    }

    /// `(lhs, rhs)` pairs that must agree.
    pub fn samples(self, ctx: &Context, target_digits: u32) -> Result<Vec<(BigReal, BigReal)>, RegistryError> {
        let mut out = Vec::new();
        match self {
            Property::MidwayIdentity => {
                for s in NOMES {
                    let p = params(ctx, s)?;
                    let (u, v) = products(ctx, &p);
                    let uj = |j| p.u(j).clone();
                    let wj = |j| ctx.one() - p.u(j);
                    let rhs = root(ctx, &(uj(3) * uj(5) * wj(1) * wj(15)), 8)
                        + root(ctx, &(uj(1) * uj(15) * wj(3) * wj(5)), 8);
                    out.push((midway_lhs(ctx, &u, &v), rhs));
                }
            }
            Property::ProductOfEntries => {
                for s in NOMES {
                    let p = params(ctx, s)?;
                    let u = |j| p.u(j).clone();
                    let w = |j| ctx.one() - p.u(j);
                    let a = root(ctx, &(u(1) * u(15)), 8) + root(ctx, &(w(1) * w(15)), 8);
                    let b = root(ctx, &(u(3) * u(5)), 8) + root(ctx, &(w(3) * w(5)), 8);
                    out.push((a * b, ctx.one()));
                }
            }
            Property::DegreeFifteen => {
                for s in NOMES {
                    let p = params(ctx, s)?;
                    let (u, v) = products(ctx, &p);
                    let lhs = ctx.one() - root(ctx, &u, 8) - root(ctx, &v, 8);
                    out.push((lhs, midway_lhs(ctx, &u, &v)));
                }
            }
            Property::EtaInversions => {
                let two = ctx.int(2);
                for s in [(1, 1), (2, 1), (1, 3)] {
                    let q = ctx.exp(&-(ctx.pi() * ctx.ratio(&Ratio::new(s.0, s.1))));
                    let p = modular_params(ctx, &q, &[1])?;
                    let (u, z) = (p.u(1).clone(), p.z(1).clone());
                    let w = ctx.one() - &u;
                    let sz = ctx.sqrt(&z);
                    let e1 = ctx.pow_ratio(&two, &Ratio::new(-1, 6)) * root(ctx, &u, 24) * root(ctx, &w, 6) * &sz;
                    let e2 = ctx.pow_ratio(&two, &Ratio::new(-1, 3)) * root(ctx, &(&u * &w), 12) * &sz;
                    let e4 = ctx.pow_ratio(&two, &Ratio::new(-2, 3)) * root(ctx, &u, 6) * root(ctx, &w, 24) * &sz;
                    out.push((eta_q(ctx, &q)?, e1));
                    out.push((eta_q(ctx, &q.powi(2))?, e2));
                    out.push((eta_q(ctx, &q.powi(4))?, e4));
                }
                for t in [Ratio::new(1, 2), Ratio::new(13, 10), Ratio::new(2, 1)] {
                    let t = ctx.ratio(&t);
                    let inv = ctx.one() / &t;
                    out.push((eta_direct(ctx, &t)?, eta_direct(ctx, &inv)? / ctx.sqrt(&t)));
                }
            }
            Property::Theta32Involution => {
                for u in [Ratio::new(1, 3), Ratio::new(1, 1), Ratio::new(27, 10), Ratio::new(1, 7), Ratio::new(5, 2)] {
                    let u = ctx.ratio(&u);
                    let a = theta_weight32(ctx, &u)?;
                    let b = theta_weight32(ctx, &(ctx.one() / &u))? * ctx.pow_ratio(&u, &Ratio::new(-3, 2));
                    out.push((a, b));
                }
            }
            Property::SecondDegree => {
                for x in [4, 9, 25] {
                    let small = singular_modulus(ctx, &ctx.ratio(&Ratio::new(x, 4)))?;
                    let r = ctx.sqrt(&(ctx.one() - small));
                    let lhs = (ctx.one() - &r) / (ctx.one() + &r);
                    out.push((lhs, ctx.sqrt(&singular_modulus(ctx, &ctx.int(x))?)));
                }
            }
            Property::CubesVsIntegral => {
                for (a, b, c, d) in CUBE_SPECS {
                    let s = LatticeSpec::ints(a, b, c, d)?;
                    let exact = f_integral(ctx, &s, target_digits)?.value;
                    out.push((ctx.f64(f_cubes(&s, CUBE_RADIUS)), exact));
                }
            }
        }
        Ok(out)
    }
}
