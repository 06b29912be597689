use alloc::vec::Vec;

use num_complex::Complex64;

use crate::numeric::{BigComplex, Context};

/// Roots of `z³ + p·z + q` by Cardano's formula, each polished by Newton
/// steps at working precision.
pub fn cubic_roots(ctx: &Context, p: &BigComplex, q: &BigComplex) -> [BigComplex; 3] {
    let zero = BigComplex::real(ctx, ctx.zero());
    let half_q = q.mul_pow2(-1);
    let p3 = p.scale(&(ctx.one() / ctx.int(3)));
    let disc = &half_q.square() + &(&p3.square() * &p3);
    let s = disc.sqrt(ctx);
    let (t1, t2) = (&s - &half_q, -(&half_q + &s));
    let t = if t1.norm_sqr() >= t2.norm_sqr() { t1 } else { t2 };
    if t.is_zero() {
        // p = q = 0
        return [zero.clone(), zero.clone(), zero];
    }
    let u = t.powr(ctx, &(ctx.one() / ctx.int(3)));
    let v = -(p3.div(&u));
    let half = ctx.one().mul_pow2(-1);
    let omega = BigComplex::new(-half.clone(), ctx.sqrt(&ctx.int(3)).mul_pow2(-1));
    let omega2 = omega.conj();
    let roots = [&u + &v, &(&omega * &u) + &(&omega2 * &v), &(&omega2 * &u) + &(&omega * &v)];
    roots.map(|z| polish(ctx, p, q, z))
}

fn polish(ctx: &Context, p: &BigComplex, q: &BigComplex, mut z: BigComplex) -> BigComplex {
    for _ in 0..2 {
        let z2 = z.square();
        let f = &(&(&z2 * &z) + &(p * &z)) + q;
        let df = &z2.mul_i64(3) + p;
        if df.norm_sqr() <= ctx.epsilon() {
            break;
        }
        z = &z - &f.div(&df);
    }
    z
}

/// Double-precision scan of `z³ - αy·z + y³ + 1` over `y = e^{iθ}` for
/// changes in the number of roots outside the unit circle.
pub struct CubicScan {
    alpha: Complex64,
}

impl CubicScan {
    const CELLS: usize = 3000;

    pub fn new(alpha: &BigComplex) -> Self {
        CubicScan { alpha: Complex64::new(alpha.re.to_f64(), alpha.im.to_f64()) }
    }

    fn outside(&self, theta: f64) -> usize {
        let y = Complex64::from_polar(1.0, theta);
        let p = -self.alpha * y;
        let q = y * y * y + 1.0;
        let half_q = q / 2.0;
        let p3 = p / 3.0;
        let s = (half_q * half_q + p3 * p3 * p3).sqrt();
        let (t1, t2) = (s - half_q, -half_q - s);
        let t = if t1.norm_sqr() >= t2.norm_sqr() { t1 } else { t2 };
        if t.norm_sqr() == 0.0 {
            return 0;
        }
        let u = t.powf(1.0 / 3.0);
        let v = -p3 / u;
        let w = Complex64::new(-0.5, libm::sqrt(3.0) / 2.0);
        [u + v, w * u + w.conj() * v, w.conj() * u + w * v].iter().filter(|z| z.norm_sqr() > 1.0).count()
    }

    /// Cells `(a, b)` of `(0, hi)` whose ends differ in the outside count.
    pub fn sign_changes(&self, hi: f64) -> Vec<(f64, f64)> {
        let edge = 1e-9;
        let step = (hi - 2.0 * edge) / Self::CELLS as f64;
        let mut out = Vec::new();
        let mut a = edge;
        let mut ca = self.outside(a);
        for i in 1..=Self::CELLS {
            let b = edge + step * i as f64;
            let cb = self.outside(b);
            if cb != ca {
                out.push((a, b));
            }
            a = b;
            ca = cb;
        }
        out
    }
}
