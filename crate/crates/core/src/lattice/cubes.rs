use alloc::vec::Vec;

use super::spec::LatticeSpec;

/// Neumaier-compensated running sum.
#[derive(Debug, Default, Clone, Copy)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if libm::fabs(self.sum) >= libm::fabs(x) {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// `(a+b+c+d)²·Σ (-1)^{n₁+n₂+n₃+n₄} / (Σ aᵢ(6nᵢ+1)²)²` over the cube
/// `-R ≤ nᵢ ≤ R`. The sum converges only conditionally, so this is an
/// order-of-magnitude oracle.
pub fn f_cubes(spec: &LatticeSpec, radius: u32) -> f64 {
    let r = radius as i64;
    let coord = |a: f64| -> Vec<(f64, bool)> {
        (-r..=r)
            .map(|n| {
                let m = (6 * n + 1) as f64;
                (a * m * m, n.rem_euclid(2) == 1)
            })
            .collect()
    };
    let [a, b, c, d] = spec.entries().map(|e| *e.numer() as f64 / *e.denom() as f64);
    let (xa, xb, xc, xd) = (coord(a), coord(b), coord(c), coord(d));
    let mut total = Compensated::default();
    for &(va, sa) in &xa {
        for &(vb, sb) in &xb {
            for &(vc, sc) in &xc {
                let base = va + vb + vc;
                let outer = sa ^ sb ^ sc;
                let mut inner = Compensated::default();
                for &(vd, sd) in &xd {
                    let q = base + vd;
                    let term = 1.0 / (q * q);
                    inner.add(if outer ^ sd { -term } else { term });
                }
                total.add(inner.value());
            }
        }
    }
    let s = a + b + c + d;
    s * s * total.value()
}
