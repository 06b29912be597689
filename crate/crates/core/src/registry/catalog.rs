use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use super::props::Property;
use super::{Check, IdentityRecord, Kind, Params, Relation, Status};
use crate::lattice::{Atom, LatticeSpec, Term, TwoDimSumSpec, TwoDimVariant};
use crate::mahler::{arg_t_real, catalog_argument, MahlerArg};
use crate::series::{EtaExpression, EtaMonomial, IndexRange, LinearWeight, SignPattern, SquareForm, Theta2DFamily};

const PRECISION: u32 = 40;
const TOL: u32 = 25;
/// Cusp-form L-values and three-Mahler-term sides lose digits to cancellation.
const TOL_LOOSE: u32 = 20;
const TOL_CONJECTURE: u32 = 12;

fn r(n: i64, d: i64) -> Ratio<i64> {
    Ratio::new(n, d)
}

fn prod(scales: &[u32]) -> EtaMonomial {
    EtaMonomial::product(scales).expect("positive scales")
}

fn mono(f: &[(u32, i32)]) -> EtaMonomial {
    EtaMonomial::new(f.iter().copied()).expect("positive scales")
}

fn expr(terms: &[(i64, EtaMonomial)]) -> EtaExpression {
    terms.iter().fold(EtaExpression::new(), |x, (c, m)| x.with(*c, m.clone()))
}

/// The weight-two newform of level 30 as a difference of eta products.
pub fn f30() -> EtaExpression {
    expr(&[(1, prod(&[3, 5, 6, 10])), (-1, prod(&[1, 2, 15, 30]))])
}

/// The weight-two newform attached to conductor-17 curves.
pub fn f17() -> EtaExpression {
    expr(&[
        (1, mono(&[(1, 1), (4, 2), (34, 5), (2, -1), (17, -1), (68, -2)])),
        (-1, mono(&[(2, 5), (17, 1), (68, 2), (1, -1), (4, -2), (34, -1)])),
    ])
}

fn f(b: Ratio<i64>, c: Ratio<i64>) -> Atom {
    Atom::F(LatticeSpec::shorthand(b, c).expect("positive"))
}

fn fi(b: i64, c: i64) -> Atom {
    f(r(b, 1), r(c, 1))
}

fn f4(a: i64, b: i64, c: i64, d: i64) -> Atom {
    Atom::F(LatticeSpec::ints(a, b, c, d).expect("positive"))
}

fn arg(label: &str) -> MahlerArg {
    catalog_argument(label).expect("catalogued argument")
}

fn m(label: &str) -> Atom {
    Atom::M(arg(label))
}

fn n(label: &str) -> Atom {
    Atom::N(arg(label))
}

fn g(label: &str) -> Atom {
    Atom::G(arg(label))
}

fn sum2d(v: TwoDimVariant, x: i64) -> Atom {
    Atom::Sum2D(TwoDimSumSpec::new(v, r(x, 1)).expect("positive"))
}

fn three_f_two(z: Ratio<i64>) -> Atom {
    Atom::Hypergeom { num: vec![r(1, 2); 3], den: vec![r(1, 1), r(3, 2)], z }
}

fn t(coeff: Ratio<i64>, pi_power: i32, atom: Atom) -> Term {
    Term::new(coeff, pi_power, atom)
}

fn one(atom: Atom) -> Term {
    Term::int(1, atom)
}

fn rel(lhs: Vec<Term>, rhs: Vec<Term>) -> Relation {
    Relation { lhs, rhs }
}

fn half(coeff: i64, mul: i64, shift: i64) -> SquareForm {
    SquareForm::new(coeff, mul, shift, IndexRange::NonNegative)
}

fn full(coeff: i64, mul: i64, shift: i64) -> SquareForm {
    SquareForm::new(coeff, mul, shift, IndexRange::All)
}

fn theta18() -> Vec<Theta2DFamily> {
    let odd = |coeff, second, divisor, sign| Theta2DFamily {
        coeff,
        sign,
        weight: LinearWeight::TwoNPlusOne,
        first: half(1, 2, 1),
        second,
        divisor,
    };
    vec![
        odd(-1, half(1, 2, 1), 8, SignPattern::First),
        odd(1, half(9, 2, 1), 8, SignPattern::First),
        odd(1, full(9, 2, 0), 4, SignPattern::Both),
    ]
}

fn theta28() -> Vec<Theta2DFamily> {
    vec![
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
    ]
}

struct Builder(Vec<IdentityRecord>);

impl Builder {
    fn push(&mut self, id: &'static str, kind: Kind, anchor: &'static str, summary: &'static str, check: Check, tolerance: u32) {
        let status = if kind == Kind::NumericConjecture { Status::Conjectural } else { Status::Proved };
        let params = Params { precision: PRECISION, n_terms: None, tolerance };
        self.0.push(IdentityRecord { id, kind, status, anchor, summary, check, params });
    }

    fn exact(&mut self, id: &'static str, anchor: &'static str, summary: &'static str, check: Check) {
        self.push(id, Kind::CoefficientExact, anchor, summary, check, 0);
    }

    fn theorem(&mut self, id: &'static str, anchor: &'static str, summary: &'static str, check: Check, tol: u32) {
        self.push(id, Kind::NumericTheorem, anchor, summary, check, tol);
    }

    fn relations(&mut self, id: &'static str, anchor: &'static str, summary: &'static str, rels: Vec<Relation>, tol: u32) {
        self.theorem(id, anchor, summary, Check::Relations(rels), tol);
    }

    fn conjecture(&mut self, id: &'static str, anchor: &'static str, summary: &'static str, rel: Relation) {
        self.push(id, Kind::NumericConjecture, anchor, summary, Check::Relations(vec![rel]), TOL_CONJECTURE);
    }
}

/// Every record, in a fixed order.
pub fn registry_catalog() -> Vec<IdentityRecord> {
    let mut b = Builder(Vec::new());
    coefficient_records(&mut b);
    theorem_records(&mut b);
    conjecture_records(&mut b);
    b.0
}

fn coefficient_records(b: &mut Builder) {
    use Check::{EtaIdentity, Newform, ThetaExpansion};
    b.exact(
        "somos-3term",
        "smallest eta function product identity",
        "e2 e6 e10 e30 = e1 e12 e15 e20 + e3 e4 e5 e60",
        EtaIdentity {
            lhs: expr(&[(1, prod(&[2, 6, 10, 30]))]),
            rhs: expr(&[(1, prod(&[1, 12, 15, 20])), (1, prod(&[3, 4, 5, 60]))]),
        },
    );
    let deg18 = expr(&[(3, prod(&[1, 2, 9, 18]))]);
    b.exact(
        "ramanujan-deg18",
        "By a result of Ramanujan",
        "3 e1 e2 e9 e18 = -e1^2 e2^2 + e1^3 e18^2/e9 + e2^3 e9^2/e18",
        EtaIdentity {
            lhs: deg18.clone(),
            rhs: expr(&[
                (-1, mono(&[(1, 2), (2, 2)])),
                (1, mono(&[(1, 3), (18, 2), (9, -1)])),
                (1, mono(&[(2, 3), (9, 2), (18, -1)])),
            ]),
        },
    );
    b.exact(
        "theta2d-deg18",
        "Substituting classical theta expansions for",
        "3 e1 e2 e9 e18 as three two-dimensional theta families",
        ThetaExpansion { families: theta18(), eta: deg18 },
    );
    let deg28 = expr(&[(28, mono(&[(4, 1), (7, 2), (28, 1)]))]);
    b.exact(
        "somos-deg28",
        "The key modular equation used to prove lacunarity is due to Somos",
        "28 e4 e7^2 e28 = -7 e1 e7^3 - e1^5 e14^2/(e2^2 e7) + 8 e2^5 e14/e1^2",
        EtaIdentity {
            lhs: deg28.clone(),
            rhs: expr(&[
                (-7, mono(&[(1, 1), (7, 3)])),
                (-1, mono(&[(1, 5), (14, 2), (2, -2), (7, -1)])),
                (8, mono(&[(2, 5), (14, 1), (1, -2)])),
            ]),
        },
    );
    b.exact(
        "theta2d-deg28",
        "By classical theta expansions",
        "28 e4 e7^2 e28 as three two-dimensional theta families",
        ThetaExpansion { families: theta28(), eta: deg28 },
    );
    b.exact(
        "somos-deg50",
        "consider the following modular equation",
        "5 e1 e2 e25 e50 + 2 e1^2 e2 e50 + 2 e1 e2^2 e25 = -e1^2 e2^2 + e1^3 e50^2/e25 + e2^3 e25^2/e50",
        EtaIdentity {
            lhs: expr(&[
                (5, prod(&[1, 2, 25, 50])),
                (2, mono(&[(1, 2), (2, 1), (50, 1)])),
                (2, mono(&[(1, 1), (2, 2), (25, 1)])),
            ]),
            rhs: expr(&[
                (-1, mono(&[(1, 2), (2, 2)])),
                (1, mono(&[(1, 3), (50, 2), (25, -1)])),
                (1, mono(&[(2, 3), (25, 2), (50, -1)])),
            ]),
        },
    );
    b.exact(
        "somos-deg45",
        "forty-fifth degree modular equation",
        "6 e1 e5 e9 e45 = -e1^2 e5^2 - 2 e3^2 e15^2 - 9 e9^2 e45^2 + e3^4 + 5 e15^4",
        EtaIdentity {
            lhs: expr(&[(6, prod(&[1, 5, 9, 45]))]),
            rhs: expr(&[
                (-1, mono(&[(1, 2), (5, 2)])),
                (-2, mono(&[(3, 2), (15, 2)])),
                (-9, mono(&[(9, 2), (45, 2)])),
                (1, mono(&[(3, 4)])),
                (5, mono(&[(15, 4)])),
            ]),
        },
    );
    b.exact(
        "somos-4term",
        "four term modular equation which Somos highlighted",
        "e1 e3 e5 e15 + 2 e2 e6 e10 e30 = e1 e2 e15 e30 + e3 e5 e6 e10",
        EtaIdentity {
            lhs: expr(&[(1, prod(&[1, 3, 5, 15])), (2, prod(&[2, 6, 10, 30]))]),
            rhs: expr(&[(1, prod(&[1, 2, 15, 30])), (1, prod(&[3, 5, 6, 10]))]),
        },
    );
    b.exact(
        "f30-integrality",
        "Somos has calculated a basis for the $1$-dimensional space of cusp forms",
        "f30 = e3 e5 e6 e10 - e1 e2 e15 e30 is a normalized integral multiplicative q-series",
        Newform { form: f30() },
    );
    b.exact(
        "f17-integrality",
        "The cusp form associated with conductor $17$ curves is stated in",
        "f17 is a normalized integral multiplicative q-series",
        Newform { form: f17() },
    );
}

fn theorem_records(b: &mut Builder) {
    use Check::Property as P;
    b.theorem(
        "thm21-midway",
        "is equivalent to",
        "three-term identity reduced to u_j at five nomes",
        P(Property::MidwayIdentity),
        TOL,
    );
    b.theorem(
        "entries-11-1-2",
        "The first modular equation we require can be recovered by",
        "product of two degree-15 modular equations equals 1 at five nomes",
        P(Property::ProductOfEntries),
        TOL,
    );
    b.theorem(
        "entry-11-14",
        "it is clear that",
        "1 - (u1u3u5u15)^(1/8) - ((1-u1)(1-u3)(1-u5)(1-u15))^(1/8) = 2^(1/3)(...)^(1/24) at five nomes",
        P(Property::DegreeFifteen),
        TOL,
    );
    b.theorem(
        "eta-inversions",
        "Certain values of the eta function can be",
        "eta(q), eta(q^2), eta(q^4) from u1, z1; eta under t -> 1/t",
        P(Property::EtaInversions),
        TOL,
    );
    b.relations(
        "F12-pair",
        "There are two possible formulas for $F(1,2)$",
        "F(1,2) = pi^2/8 m(2 sqrt 2) = pi^2/16 m(4i)",
        vec![
            rel(vec![one(fi(1, 2))], vec![t(r(1, 8), 2, m("2*sqrt(2)"))]),
            rel(vec![one(fi(1, 2))], vec![t(r(1, 16), 2, m("4i"))]),
        ],
        TOL,
    );
    b.relations(
        "deninger-F35",
        "was conjectured by Deninger",
        "F(3,5) = 4pi^2/15 m(1) = pi^2/15 3F2(1/2,1/2,1/2;1,3/2;1/16)",
        vec![
            rel(vec![one(fi(3, 5))], vec![t(r(1, 15), 2, three_f_two(r(1, 16)))]),
            rel(vec![one(fi(3, 5))], vec![t(r(4, 15), 2, m("1"))]),
        ],
        TOL,
    );
    b.relations(
        "F23",
        "It was proved with difficulty that",
        "F(2,3) = pi^2/6 m(2) = pi^2/12 3F2(1/2,1/2,1/2;1,3/2;1/4)",
        vec![
            rel(vec![one(fi(2, 3))], vec![t(r(1, 12), 2, three_f_two(r(1, 4)))]),
            rel(vec![one(fi(2, 3))], vec![t(r(1, 6), 2, m("2"))]),
        ],
        TOL,
    );
    b.relations(
        "F29-assembly",
        "The remaining calculations parallel those carried out in",
        "3/25 F(2,9) + F(1,2) = 4 odd-odd(9) + odd-even-alt(9)",
        vec![rel(
            vec![t(r(3, 25), 0, fi(2, 9)), one(fi(1, 2))],
            vec![Term::int(4, sum2d(TwoDimVariant::OddOdd, 9)), one(sum2d(TwoDimVariant::OddEvenAlt, 9))],
        )],
        TOL,
    );
    b.relations(
        "F29-theorem",
        "then the following identity is true",
        "144/(25 pi^2) F(2,9) = -3 m(4i) + 2 m((4-2t-2t^2+t^3)/sqrt 2) + m(4i(7+4t+2t^2+t^3))",
        vec![rel(
            vec![t(r(144, 25), -2, fi(2, 9))],
            vec![
                Term::int(-3, m("4i")),
                Term::int(2, m("(4-2t-2t^2+t^3)/sqrt(2), t=12^(1/4)")),
                one(m("4i(7+4t+2t^2+t^3), t=12^(1/4)")),
            ],
        )],
        TOL_LOOSE,
    );
    let mut closed = Vec::new();
    for x in [1, 4, 9] {
        closed.push(rel(vec![one(sum2d(TwoDimVariant::OddOdd, x))], vec![one(Atom::ClosedFormSum(r(x, 1)))]));
    }
    closed.push(rel(
        vec![one(sum2d(TwoDimVariant::OddOdd, 9))],
        vec![t(r(1, 96), 2, m("(4-2t-2t^2+t^3)/sqrt(2), t=12^(1/4)"))],
    ));
    b.relations(
        "closed-form-sum",
        "and hence we obtain",
        "odd-odd(x) = pi^2/(32 sqrt x) m(4 sqrt(alpha_x)) at x = 1, 4, 9, and its x = 9 value",
        closed,
        TOL,
    );
    b.relations(
        "odd-even-alt-x9",
        "is the main ingredient needed",
        "odd-even-alt(9) = pi^2/48 m(4i(7+4t+2t^2+t^3))",
        vec![rel(
            vec![one(sum2d(TwoDimVariant::OddEvenAlt, 9))],
            vec![t(r(1, 48), 2, m("4i(7+4t+2t^2+t^3), t=12^(1/4)"))],
        )],
        TOL,
    );
    b.relations(
        "F2-25-combination",
        "As a result it is possible to prove that",
        "5/169 F(2,25) + 2/81 F(1,1,2,50) + 2/25 F(1,2,2,25) = pi^2/80 (-5 m(4i) + 2 m(4 sqrt a25) + m(4i sqrt((1-a25)/a25)))",
        vec![rel(
            vec![t(r(5, 169), 0, fi(2, 25)), t(r(2, 81), 0, f4(1, 1, 2, 50)), t(r(2, 25), 0, f4(1, 2, 2, 25))],
            vec![
                t(r(-5, 80), 2, m("4i")),
                t(r(2, 80), 2, m("4*sqrt(alpha25)")),
                t(r(1, 80), 2, m("4i*sqrt((1-alpha25)/alpha25)")),
            ],
        )],
        TOL_LOOSE,
    );
    b.relations(
        "F59-linear",
        "leads to a linear dependency between three lattice sums",
        "9 F(5,9) = 45 F(1,1) - 50 F(1,5)",
        vec![rel(vec![Term::int(9, fi(5, 9))], vec![Term::int(45, fi(1, 1)), Term::int(-50, fi(1, 5))])],
        TOL,
    );
    b.relations(
        "F59-theorem",
        "we easily obtain the following theorem",
        "108/(5 pi^2) F(5,9) = 8 n(3 2^(1/3)) - 9 n(2 4^(1/3))",
        vec![rel(
            vec![t(r(108, 5), -2, fi(5, 9))],
            vec![Term::int(8, n("3*2^(1/3)")), Term::int(-9, n("2*4^(1/3)"))],
        )],
        TOL_LOOSE,
    );
    b.relations(
        "F18-integral",
        "to find a formula for $F(1,8)$",
        "F(1,8) = 9 pi 2^(1/4)/128 times a one-dimensional elementary integral",
        vec![rel(vec![one(fi(1, 8))], vec![one(Atom::F18Elementary)])],
        30,
    );
    b.relations(
        "F215-linear",
        "To make this explicit we use two relations",
        "F(2,15) + 4 F(2,5/3) = 8 pi^2/5 m(1)",
        vec![rel(vec![one(fi(2, 15)), Term::int(4, f(r(2, 1), r(5, 3)))], vec![t(r(8, 5), 2, m("1"))])],
        TOL,
    );
    b.theorem(
        "theta32-involution",
        "By the involution for the weight-$3/2$ theta function",
        "weight-3/2 theta series under u -> 1/u at five points",
        P(Property::Theta32Involution),
        TOL,
    );
    b.theorem(
        "second-degree-modular",
        "The second degree modular equation shows that",
        "(1 - sqrt(1-alpha_{x/4}))/(1 + sqrt(1-alpha_{x/4})) = sqrt(alpha_x) at x = 4, 9, 25",
        P(Property::SecondDegree),
        TOL,
    );
    b.relations(
        "alpha9-closed",
        "Setting $n=9$ yields",
        "alpha_9 = (4-2t-2t^2+t^3)^2/32 with t = 12^(1/4)",
        vec![rel(vec![one(Atom::Alpha(r(9, 1)))], vec![t(r(1, 16), 0, Atom::Value(arg_t_real().powi(2)))])],
        TOL,
    );
    b.theorem(
        "cubes-vs-integral",
        "summation by cubes",
        "cube partial sums at radius 40 against the eta-product integral for F(1,1,1,1), F(1,2,2,4), F(1,3,5,15)",
        P(Property::CubesVsIntegral),
        3,
    );
}

fn conjecture_records(b: &mut Builder) {
    let l30 = Atom::CuspL2 { label: "f30".into(), form: f30() };
    let l17 = Atom::CuspL2 { label: "f17".into(), form: f17() };
    b.conjecture(
        "boyd-30-cuspform",
        "Boyd's conjecture becomes",
        "L(f30,2) = 2 pi^2/15 g(3)",
        rel(vec![one(l30)], vec![t(r(2, 15), 2, g("3"))]),
    );
    b.conjecture(
        "conj-F215",
        "The following formulas are numerically true",
        "15/(4 pi^2) F(2,15) = 3 m(1) - g(3)",
        rel(vec![t(r(15, 4), -2, fi(2, 15))], vec![Term::int(3, m("1")), Term::int(-1, g("3"))]),
    );
    b.conjecture(
        "conj-F253",
        "The following formulas are numerically true",
        "15/pi^2 F(2,5/3) = 3 m(1) + g(3)",
        rel(vec![t(r(15, 1), -2, f(r(2, 1), r(5, 3)))], vec![Term::int(3, m("1")), one(g("3"))]),
    );
    b.conjecture(
        "conductor17",
        "via numerical experiments involving elliptic dilogarithms",
        "17/(2 pi^2) L(f17,2) = m((1+sqrt 17)^2/4) - m(sqrt 17)",
        rel(vec![t(r(17, 2), -2, l17)], vec![one(m("(1+sqrt(17))^2/4")), Term::int(-1, m("sqrt(17)"))]),
    );
}
