use latticelab_core::series::*;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn prod(scales: &[u32]) -> EtaMonomial {
    EtaMonomial::product(scales).unwrap()
}

fn mono(f: &[(u32, i32)]) -> EtaMonomial {
    EtaMonomial::new(f.iter().copied()).unwrap()
}

/// Coefficients of Π_{n≥1}(1 - q^{jn}) by multiplying one factor at a time.
fn brute_product(j: usize, n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n];
    c[0] = BigInt::one();
    let mut k = 1;
    while j * k < n {
        let s = j * k;
        for i in (s..n).rev() {
            let t = c[i - s].clone();
            c[i] -= t;
        }
        k += 1;
    }
    c
}

#[test]
fn eta_series_pentagonal_offsets() {
    let e = eta_series(1, 13);
    assert_eq!(e.lead_exponent(), Ratio::new(1, 24));
    assert_eq!(e.coeffs(), ints(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]).as_slice());
    let e2 = eta_series(2, 1);
    assert_eq!(e2.lead_exponent(), Ratio::new(1, 12));
    assert_eq!(e2.coeffs(), ints(&[1]).as_slice());
}

#[test]
fn eta_series_matches_brute_force_product() {
    for j in [1, 2, 7] {
        let e = eta_series(j, 200);
        assert_eq!(e.coeffs(), brute_product(j as usize, 200).as_slice(), "j = {j}");
    }
}

#[test]
fn product_lead_exponent() {
    let p = prod(&[1, 2, 9, 18]).expand(10).unwrap();
    assert_eq!(p.lead_exponent(), Ratio::new(5, 4));
}

fn somos_three_term() -> (EtaExpression, EtaExpression) {
    let lhs = EtaExpression::new().with(1, prod(&[2, 6, 10, 30]));
    let rhs = EtaExpression::new().with(1, prod(&[1, 12, 15, 20])).with(1, prod(&[3, 4, 5, 60]));
    (lhs, rhs)
}

#[test]
fn somos_three_term_identity() {
    let (lhs, rhs) = somos_three_term();
    assert!(verify_coefficient_identity(&lhs, &rhs, 200).unwrap().is_pass());
    let a = lhs.expand(200).unwrap().series;
    let b = rhs.expand(200).unwrap().series;
    assert_eq!(a.lead24(), 48);
    assert_eq!(a, b);
}

#[test]
fn mutated_somos_fails_where_second_term_starts() {
    let (lhs, rhs) = somos_three_term();
    let bad = rhs.with_coefficient(1, Ratio::from_integer(2));
    match verify_coefficient_identity(&lhs, &bad, 200).unwrap() {
        Verdict::Fail(m) => {
            // e3 e4 e5 e60 starts at q^{72/24}
            assert_eq!(m.exponent24, 72);
            assert_eq!(m.lhs - m.rhs, Ratio::from_integer(BigInt::from(-1)));
        }
        v => panic!("expected failure, got {v:?}"),
    }
}

#[test]
fn literal_identity_passes() {
    let (lhs, _) = somos_three_term();
    assert!(verify_coefficient_identity(&lhs, &lhs, 50).unwrap().is_pass());
}

#[test]
fn division_examples() {
    let e1 = eta_series(1, 100);
    let cube = e1.pow(3);
    assert_eq!(cube.div(&e1, 100).unwrap(), e1.pow(2));
    assert_eq!(e1.div(&e1, 100).unwrap(), FormalQSeries::one(100));
    let q = mono(&[(1, 5), (2, -2)]).expand(100).unwrap();
    let back = q.mul(&eta_series(2, 100).pow(2));
    assert_eq!(back, e1.pow(5));
    // e1^5/e2^2 = Σ (6n+1) q^{(6n+1)²/24}
    assert_eq!(&q.coeffs()[..16], ints(&[1, -5, 7, 0, 0, -11, 0, 13, 0, 0, 0, 0, -17, 0, 0, 19]).as_slice());
}

fn f30() -> EtaExpression {
    EtaExpression::new().with(1, prod(&[3, 5, 6, 10])).with(-1, prod(&[1, 2, 15, 30]))
}

fn f17() -> EtaExpression {
    EtaExpression::new()
        .with(1, mono(&[(1, 1), (4, 2), (34, 5), (2, -1), (17, -1), (68, -2)]))
        .with(-1, mono(&[(2, 5), (17, 1), (68, 2), (1, -1), (4, -2), (34, -1)]))
}

#[test]
fn cusp_form_expansions() {
    let e = f30().expand(20).unwrap();
    assert_eq!(e.denominator, BigInt::one());
    assert_eq!(e.series.lead24(), 24);
    let expect = ints(&[1, -1, 1, 1, -1, -1, -4, -1, 1, 1, 0, 1, 2, 4, -1, 1, 6, -1, -4, -1]);
    assert_eq!(e.series.coeffs(), expect.as_slice());

    let g = f17().expand(500).unwrap();
    assert_eq!(g.denominator, BigInt::one());
    assert_eq!(g.series.order(), 500);
    let expect = ints(&[1, -1, 0, -1, -2, 0, 4, 3, -3, 2, 0, 0, -2, -4, 0, -1, 1, 3, -4, 2]);
    assert_eq!(&g.series.coeffs()[..20], expect.as_slice());
    // a_p for primes: Hecke multiplicativity a_{mn} = a_m a_n for coprime m, n
    let a = |n: usize| g.series.coeffs()[n - 1].clone();
    assert_eq!(a(6), a(2) * a(3));
    assert_eq!(a(35), a(5) * a(7));
    assert_eq!(a(323), a(17) * a(19));
}

#[test]
fn empty_expression_is_zero() {
    let e = EtaExpression::new().expand(10).unwrap();
    assert!(e.series.is_zero());
}

#[test]
fn classical_thetas() {
    assert_eq!(theta_series_phi(10).coeffs(), ints(&[1, 2, 0, 0, 2, 0, 0, 0, 0, 2]).as_slice());
    assert_eq!(theta_series_psi(11).coeffs(), ints(&[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]).as_slice());
    // q^{1/8} ψ(q) = η²(q²)/η(q)
    let rhs = mono(&[(2, 2), (1, -1)]).expand(200).unwrap();
    assert_eq!(rhs.lead24(), 3);
    assert_eq!(rhs.coeffs(), theta_series_psi(200).coeffs());
    // φ(-q) = η²(q)/η(q²)
    let rhs = mono(&[(1, 2), (2, -1)]).expand(200).unwrap();
    let alt: Vec<BigInt> =
        theta_series_phi(200).coeffs().iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
    assert_eq!(rhs.coeffs(), alt.as_slice());
}

fn half(coeff: i64, mul: i64, shift: i64) -> SquareForm {
    SquareForm::new(coeff, mul, shift, IndexRange::NonNegative)
}

fn full(coeff: i64, mul: i64, shift: i64) -> SquareForm {
    SquareForm::new(coeff, mul, shift, IndexRange::All)
}

#[test]
fn single_family_reproduces_phi() {
    let fam = Theta2DFamily {
        coeff: 1,
        sign: SignPattern::None,
        weight: LinearWeight::One,
        first: full(1, 1, 0),
        second: full(1, 1, 0),
        divisor: 1,
    };
    // Σ q^{n²+k²} = φ²
    let s = expand_theta2d(&[fam], 100).unwrap();
    assert_eq!(s, theta_series_phi(100).pow(2));
}

#[test]
fn degree_18_theta_expansion() {
    let fams = [
        Theta2DFamily {
            coeff: -1,
            sign: SignPattern::First,
            weight: LinearWeight::TwoNPlusOne,
            first: half(1, 2, 1),
            second: half(1, 2, 1),
            divisor: 8,
        },
        Theta2DFamily {
            coeff: 1,
            sign: SignPattern::First,
            weight: LinearWeight::TwoNPlusOne,
            first: half(1, 2, 1),
            second: half(9, 2, 1),
            divisor: 8,
        },
        Theta2DFamily {
            coeff: 1,
            sign: SignPattern::Both,
            weight: LinearWeight::TwoNPlusOne,
            first: half(1, 2, 1),
            second: full(9, 2, 0),
            divisor: 4,
        },
    ];
    let theta = expand_theta2d(&fams, 300).unwrap();
    let eta = EtaExpression::new().with(3, prod(&[1, 2, 9, 18])).expand(300).unwrap().series;
    assert!(compare_series(&theta, &eta, 300).unwrap().is_pass());
}

#[test]
fn degree_28_theta_expansion() {
    let fams = [
        Theta2DFamily {
            coeff: -7,
            sign: SignPattern::Both,
            weight: LinearWeight::TwoNPlusOne,
            first: half(21, 2, 1),
            second: full(1, 6, 1),
            divisor: 24,
        },
        Theta2DFamily {
            coeff: -1,
            sign: SignPattern::None,
            weight: LinearWeight::SixNPlusOne,
            first: full(1, 6, 1),
            second: half(21, 2, 1),
            divisor: 24,
        },
        Theta2DFamily {
            coeff: 8,
            sign: SignPattern::Both,
            weight: LinearWeight::ThreeNPlusOne,
            first: full(4, 3, 1),
            second: full(7, 6, 1),
            divisor: 12,
        },
    ];
    let theta = expand_theta2d(&fams, 300).unwrap();
    let eta = EtaExpression::new().with(28, mono(&[(4, 1), (7, 2), (28, 1)])).expand(300).unwrap().series;
    assert!(compare_series(&theta, &eta, 300).unwrap().is_pass());
}

#[test]
fn indefinite_family_rejected() {
    let fam = Theta2DFamily {
        coeff: 1,
        sign: SignPattern::None,
        weight: LinearWeight::One,
        first: full(1, 1, 0),
        second: full(-1, 1, 0),
        divisor: 1,
    };
    assert_eq!(expand_theta2d(&[fam], 10), Err(SeriesError::Indefinite));
}

#[test]
fn sturm_bounds() {
    assert_eq!(sturm_bound(60, 2), 25);
    assert_eq!(sturm_bound(1, 2), 1);
    assert_eq!(sturm_bound(30, 2), 13);
    assert_eq!(f30().level(), 30);
    assert_eq!(f17().level(), 68);
}

#[test]
fn density_of_zero_series() {
    let p = density_profile(&FormalQSeries::zero(0, 100), 100, 10).unwrap();
    assert!(p.densities.iter().all(|&d| d == 0.0));
    assert!(density_profile(&FormalQSeries::zero(0, 100), 100, 7).is_err());
}

#[test]
fn lacunarity_small_scale() {
    let lac = lacunarity_scan(&EtaExpression::new().with(1, prod(&[1, 2, 9, 18])), 2000, 500).unwrap();
    assert!(lac.last() < lac.first());
    // level 6, no complex multiplication: density stays put
    let dense = lacunarity_scan(&EtaExpression::new().with(1, prod(&[1, 2, 3, 6])), 2000, 500).unwrap();
    assert!((dense.last() - dense.first()).abs() < 0.02 && dense.first() > 0.8, "{dense:?}");
    // e1^4 is the CM form of level 36, so it thins out as well
    let cm = lacunarity_scan(&EtaExpression::new().with(1, mono(&[(1, 4)])), 2000, 500).unwrap();
    assert!(cm.last() < cm.first());
}

fn arb_monomial() -> impl Strategy<Value = EtaMonomial> {
    prop::collection::vec((1u32..8, -2i32..4), 1..4).prop_map(|f| EtaMonomial::new(f).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws(a in arb_monomial(), b in arb_monomial(), c in arb_monomial()) {
        let n = 40;
        let (x, y, z) = (a.expand(n).unwrap(), b.expand(n).unwrap(), c.expand(n).unwrap());
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        if (x.lead24() - y.lead24()) % 24 == 0 {
            let lhs = x.add(&y).unwrap().mul(&z);
            let rhs = x.mul(&z).add(&y.mul(&z)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
        let q = x.mul(&y).div(&y, n).unwrap();
        prop_assert_eq!(q, x.clone());
    }

    #[test]
    fn eta_coefficients_are_units_or_zero(j in 1u32..30, n in 1usize..300) {
        let e = eta_series(j, n);
        prop_assert_eq!(e.order(), n);
        prop_assert!(e.coeffs().iter().all(|c| c.is_zero() || *c == BigInt::one() || *c == -BigInt::one()));
    }

    #[test]
    fn verify_pass_means_identical_arrays(a in arb_monomial()) {
        let x = EtaExpression::new().with(2, a.clone());
        let y = EtaExpression::new().with(1, a.clone()).with(1, a);
        prop_assert!(verify_coefficient_identity(&x, &y, 30).unwrap().is_pass());
        prop_assert_eq!(x.expand(30).unwrap(), y.expand(30).unwrap());
    }
}
