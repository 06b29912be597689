use latticelab_core::numeric::*;
use num_rational::Ratio;

const DEGREES: [u32; 4] = [1, 3, 5, 15];

fn ctx() -> Context {
    Context::new(40)
}

fn close(ctx: &Context, a: &BigReal, b: &BigReal, digits: f64) {
    let got = ctx.agreement_digits(a, b);
    assert!(got >= digits, "agree to {got:.1} digits only: {a} vs {b}");
}

fn root(ctx: &Context, x: &BigReal, k: i64) -> BigReal {
    ctx.pow_ratio(x, &Ratio::new(1, k))
}

/// Sample nomes `e^{-πs}`.
fn nomes(ctx: &Context, s: &[(i64, i64)]) -> Vec<BigReal> {
    s.iter().map(|&(a, b)| ctx.exp(&-(ctx.pi() * ctx.ratio(&Ratio::new(a, b))))).collect()
}

/// `(u₁u₃u₅u₁₅, (1-u₁)(1-u₃)(1-u₅)(1-u₁₅))` along with the parameters.
fn products(ctx: &Context, q: &BigReal) -> (ModularParams, BigReal, BigReal) {
    let p = modular_params(ctx, q, &DEGREES).unwrap();
    let mut u = ctx.one();
    let mut v = ctx.one();
    for j in DEGREES {
        u *= p.u(j);
        v = v * (ctx.one() - p.u(j));
    }
    (p, u, v)
}

#[test]
fn eta_inversions() {
    let ctx = ctx();
    for q in nomes(&ctx, &[(1, 1), (2, 1), (1, 3)]) {
        let p = modular_params(&ctx, &q, &[1]).unwrap();
        let (u, z) = (p.u(1).clone(), p.z(1).clone());
        let w = ctx.one() - &u;
        let sz = ctx.sqrt(&z);
        let two = ctx.int(2);
        let e1 = ctx.pow_ratio(&two, &Ratio::new(-1, 6)) * root(&ctx, &u, 24) * root(&ctx, &w, 6) * &sz;
        let e2 = ctx.pow_ratio(&two, &Ratio::new(-1, 3)) * root(&ctx, &(&u * &w), 12) * &sz;
        let e4 = ctx.pow_ratio(&two, &Ratio::new(-2, 3)) * root(&ctx, &u, 6) * root(&ctx, &w, 24) * &sz;
        close(&ctx, &eta_q(&ctx, &q).unwrap(), &e1, 30.0);
        close(&ctx, &eta_q(&ctx, &q.powi(2)).unwrap(), &e2, 30.0);
        close(&ctx, &eta_q(&ctx, &q.powi(4)).unwrap(), &e4, 30.0);
    }
}

#[test]
fn eta_inversion_paths_agree() {
    let ctx = ctx();
    for t in [Ratio::new(1, 2), Ratio::new(9, 10), Ratio::new(13, 10), Ratio::new(2, 1)] {
        let t = ctx.ratio(&t);
        let a = eta_direct(&ctx, &t).unwrap();
        let b = eta_numeric(&ctx, &t).unwrap();
        let inv = ctx.one() / &t;
        let c = eta_direct(&ctx, &inv).unwrap() / ctx.sqrt(&t);
        close(&ctx, &a, &b, ctx.guaranteed_digits() as f64);
        close(&ctx, &a, &c, ctx.guaranteed_digits() as f64);
    }
}

#[test]
fn product_of_two_modular_equations() {
    let ctx = ctx();
    for q in nomes(&ctx, &[(1, 1), (2, 1)]) {
        let p = modular_params(&ctx, &q, &DEGREES).unwrap();
        let u = |j| p.u(j).clone();
        let w = |j| ctx.one() - p.u(j);
        let a = root(&ctx, &(u(1) * u(15)), 8) + root(&ctx, &(w(1) * w(15)), 8);
        let b = root(&ctx, &(u(3) * u(5)), 8) + root(&ctx, &(w(3) * w(5)), 8);
        close(&ctx, &(a * b), &ctx.one(), 25.0);
    }
}

#[test]
fn degree_fifteen_relation_and_midway_identity() {
    let ctx = ctx();
    for q in nomes(&ctx, &[(1, 1), (2, 1), (1, 2), (1, 5), (7, 3)]) {
        let (p, u, v) = products(&ctx, &q);
        let lhs = ctx.pow_ratio(&ctx.int(2), &Ratio::new(1, 3)) * root(&ctx, &(&u * &v), 24);
        let other = ctx.one() - root(&ctx, &u, 8) - root(&ctx, &v, 8);
        close(&ctx, &other, &lhs, 25.0);

        let uj = |j| p.u(j).clone();
        let wj = |j| ctx.one() - p.u(j);
        let rhs = root(&ctx, &(uj(3) * uj(5) * wj(1) * wj(15)), 8) + root(&ctx, &(uj(1) * uj(15) * wj(3) * wj(5)), 8);
        close(&ctx, &lhs, &rhs, 25.0);
    }
}

#[test]
fn theta_eta_cross_identities() {
    let ctx = ctx();
    for k in 1..=10 {
        let q = ctx.ratio(&Ratio::new(8 * k - 3, 100));
        let e1 = eta_q(&ctx, &q).unwrap();
        let e2 = eta_q(&ctx, &q.square()).unwrap();
        close(&ctx, &phi_numeric(&ctx, &-&q).unwrap(), &(e1.square() / &e2), 30.0);
        let lhs = root(&ctx, &q, 8) * psi_numeric(&ctx, &q).unwrap();
        close(&ctx, &lhs, &(e2.square() / &e1), 30.0);
    }
}

#[test]
fn weight_three_halves_involution() {
    let ctx = ctx();
    for u in [Ratio::new(1, 3), Ratio::new(1, 1), Ratio::new(27, 10), Ratio::new(1, 7), Ratio::new(5, 2)] {
        let u = ctx.ratio(&u);
        let a = theta_weight32(&ctx, &u).unwrap();
        let b = theta_weight32(&ctx, &(ctx.one() / &u)).unwrap() * ctx.pow_ratio(&u, &Ratio::new(-3, 2));
        close(&ctx, &a, &b, 30.0);
    }
}

#[test]
fn second_degree_modular_equation() {
    // √β = (1 - √(1-α))/(1 + √(1-α)) with β = α_{4x}
    let ctx = ctx();
    for x in [1, 4, 9, 25] {
        let a = singular_modulus(&ctx, &ctx.int(x)).unwrap();
        let b = singular_modulus(&ctx, &ctx.int(4 * x)).unwrap();
        let s = ctx.sqrt(&(ctx.one() - &a));
        let rhs = (ctx.one() - &s) / (ctx.one() + &s);
        close(&ctx, &ctx.sqrt(&b), &rhs, 30.0);
    }
}
