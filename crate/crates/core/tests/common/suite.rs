use super::*;
use octolie::algebra::{Algebra, AlgebraSpec};
use octolie::e8::{e8_index, E8Basis, Kinds};
use octolie::octonion::{make_table, seven_cycle, AlgebraKind, Alphabet, Octonion, SignedUnit};
use octolie::so8::{action_operator, Side};
use octolie::spin9::natural_action;
use octolie::{RatMatrix, Rational};

const I: usize = 1;
const J: usize = 2;
const K: usize = 3;
const L: usize = 4;
const IL: usize = 5;
const JL: usize = 6;
const KL: usize = 7;

fn p(index: usize) -> SignedUnit {
    SignedUnit::pos(index)
}

fn name(u: usize) -> &'static str {
    Alphabet::K.name(u)
}

fn mul(kind: AlgebraKind, a: SignedUnit, b: SignedUnit) -> SignedUnit {
    make_table(kind).mul_units(a, b)
}

/// Basis elements of one built algebra addressed by label.
struct Labeled {
    spec: AlgebraSpec,
    table: std::sync::Arc<octolie::table::StructureConstants>,
}

impl Labeled {
    fn new(algebra: Algebra, k: AlgebraKind, l: Option<AlgebraKind>) -> Self {
        Labeled {
            spec: AlgebraSpec::new(algebra, k, l).unwrap(),
            table: table(algebra, k, l),
        }
    }

    fn el(&self, label: &str) -> Vec<Rational> {
        self.spec.parse_element(label).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `sign * letter_u` for a signed unit subscript.
    fn signed(&self, letter: &str, u: SignedUnit) -> Vec<Rational> {
        scale(&self.el(&format!("{letter}:{}", name(u.index))), u.sign as i64)
    }

    /// `letter_{u,v}` for signed imaginary units.
    fn pair(&self, letter: &str, u: SignedUnit, v: SignedUnit) -> Vec<Rational> {
        let e = self.el(&format!("{letter}:{},{}", name(u.index), name(v.index)));
        scale(&e, (u.sign * v.sign) as i64)
    }

    fn br(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.table.bracket_vectors(x, y)
    }

    fn zero(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.table.dim()]
    }
}

fn scale(v: &[Rational], s: i64) -> Vec<Rational> {
    v.iter().map(|c| c * &q(s)).collect()
}

fn half(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|c| c * &Rational::new(1, 2)).collect()
}

fn sum(terms: &[(i64, Vec<Rational>)]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); terms[0].1.len()];
    for (c, v) in terms {
        for (o, x) in out.iter_mut().zip(v) {
            *o += &(x * &q(*c));
        }
    }
    out
}

pub fn octonion_units_ij_is_k_and_anti_associate() {
    for kind in AlgebraKind::ALL {
        let t = make_table(kind);
        assert_eq!(t.product(I, J), p(K));
        assert_eq!(t.product(J, I), -p(K));
        assert_eq!(mul(kind, t.product(I, J), p(L)), -mul(kind, p(I), t.product(J, L)));
        for a in 1..8 {
            for b in 1..8 {
                for c in 1..8 {
                    let ab = t.product(a, b);
                    if a == b || b == c || a == c || ab.index == c {
                        continue;
                    }
                    let left = mul(kind, ab, p(c));
                    let right = mul(kind, p(a), t.product(b, c));
                    assert_eq!(left, -right, "({a}{b}){c}");
                }
            }
        }
    }
    for u in 1..8 {
        let split_square = make_table(AlgebraKind::Split).product(u, u);
        assert_eq!(split_square.sign, if u >= L { 1 } else { -1 });
        assert_eq!(make_table(AlgebraKind::Compact).product(u, u), -p(0));
    }
}

/// A signed word of right multiplications `R_{u1} R_{u2} ...`, composed as functions.
type Word = Vec<SignedUnit>;

fn op(kind: AlgebraKind, side: Side, u: SignedUnit) -> RatMatrix {
    action_operator(side, &Octonion::unit(kind, u.index))
        .matrix()
        .scale(&q(u.sign as i64))
}

fn word_matrix(kind: AlgebraKind, side: Side, w: &Word) -> RatMatrix {
    w.iter()
        .fold(RatMatrix::identity(8), |m, &u| m.mul(&op(kind, side, u)).unwrap())
}

/// `Σ (c/2) R-word`.
fn expansion(kind: AlgebraKind, terms: &[(i64, Word)]) -> RatMatrix {
    let mut m = RatMatrix::zeros(8, 8);
    for (c, w) in terms {
        m.add_scaled(&word_matrix(kind, Side::Right, w), &Rational::new(*c, 2));
    }
    m
}

fn cycle(u: SignedUnit) -> SignedUnit {
    seven_cycle(AlgebraKind::Compact, u).unwrap()
}

pub fn left_multiplications_in_right_language_for_all_seven_units() {
    let c = AlgebraKind::Compact;
    let mut lhs = p(L);
    let mut terms: Vec<(i64, Word)> = vec![
        (-1, vec![p(L)]),
        (1, vec![p(I), p(IL)]),
        (1, vec![p(J), p(JL)]),
        (1, vec![p(K), p(KL)]),
    ];
    let mut seen = Vec::new();
    for _ in 0..7 {
        assert_eq!(op(c, Side::Left, lhs), expansion(c, &terms), "L_{}", name(lhs.index));
        seen.push(lhs.index);
        lhs = cycle(lhs);
        for (_, w) in terms.iter_mut() {
            for u in w.iter_mut() {
                *u = cycle(*u);
            }
        }
    }
    seen.sort();
    assert_eq!(seen, (1..8).collect::<Vec<_>>());
}

pub fn recorded_left_to_right_identities() {
    let c = AlgebraKind::Compact;
    let l_i_il = word_matrix(c, Side::Left, &vec![p(I), p(IL)]);
    let want = expansion(
        c,
        &[(-1, vec![p(L)]), (1, vec![p(I), p(IL)]), (-1, vec![p(J), p(JL)]), (-1, vec![p(K), p(KL)])],
    );
    assert_eq!(l_i_il, want);
    let want = expansion(
        c,
        &[(-1, vec![p(I)]), (1, vec![p(IL), p(L)]), (1, vec![p(K), p(J)]), (1, vec![p(JL), p(KL)])],
    );
    assert_eq!(op(c, Side::Left, p(I)), want);
}

pub fn split_left_to_right_identity_for_l_i() {
    let s = AlgebraKind::Split;
    let want = expansion(
        s,
        &[(-1, vec![p(I)]), (-1, vec![p(IL), p(L)]), (1, vec![p(K), p(J)]), (-1, vec![p(JL), p(KL)])],
    );
    assert_eq!(op(s, Side::Left, p(I)), want);
}

pub fn so8_bracket_rules() {
    for kind in AlgebraKind::ALL {
        let g = Labeled::new(Algebra::So8, kind, None);
        let single = |u: usize| g.signed("L", p(u));
        let double = |u: usize, v: usize| g.pair("L", p(u), p(v));
        for a in 1..8 {
            let sq = kind.unit_square(a) as i64;
            for b in (1..8).filter(|&b| b != a) {
                assert_eq!(g.br(&single(a), &single(b)), scale(&double(a, b), 2));
                assert_eq!(g.br(&single(a), &double(a, b)), scale(&single(b), 2 * sq));
                for r in (1..8).filter(|&r| r != a && r != b) {
                    assert_eq!(g.br(&double(r, a), &double(a, b)), scale(&double(r, b), 2 * sq));
                    assert_eq!(g.br(&single(r), &double(a, b)), g.zero());
                    for s in (1..8).filter(|&s| ![a, b, r].contains(&s)) {
                        assert_eq!(g.br(&double(a, b), &double(r, s)), g.zero());
                    }
                }
            }
        }
    }
}

pub fn so9_commutator_rules() {
    for kind in AlgebraKind::ALL {
        let g = Labeled::new(Algebra::So9, kind, None);
        let x = |u: usize| g.signed("X", p(u));
        let d = |u: usize| g.signed("D", p(u));
        let dd = |u: usize, v: usize| g.pair("D", p(u), p(v));
        for a in 1..8 {
            let sq = kind.unit_square(a) as i64;
            assert_eq!(g.br(&x(0), &d(a)), scale(&x(a), -2));
            assert_eq!(g.br(&x(a), &d(a)), scale(&x(0), -2 * sq));
            for b in (1..8).filter(|&b| b != a) {
                assert_eq!(g.br(&x(b), &d(a)), g.zero());
                assert_eq!(g.br(&x(0), &dd(a, b)), g.zero());
                assert_eq!(g.br(&x(a), &dd(a, b)), scale(&x(b), 2 * sq));
                for r in (1..8).filter(|&r| r != a && r != b) {
                    assert_eq!(g.br(&x(r), &dd(a, b)), g.zero());
                }
            }
            for b in 0..8 {
                let t = make_table(kind);
                let rhs = sum(&[(1, g.signed("X", t.product(b, a))), (1, g.signed("X", t.product(a, b)))]);
                assert_eq!(g.br(&d(a), &x(b)), rhs);
            }
        }
    }
}

pub fn so9_natural_representation_values() {
    let c = AlgebraKind::Compact;
    let g = Labeled::new(Algebra::So9, c, None);
    let u = |slot: usize, k: i64| {
        let mut v = vec![Rational::zero(); 9];
        v[slot] = q(k);
        v
    };
    for b in 0..8 {
        let xb = natural_action(c, &g.el(&format!("X:{}", name(b))));
        assert_eq!(xb.apply(&u(0, 1)), u(1 + b, -2));
        assert_eq!(xb.apply(&u(1 + b, 1)), u(0, 2));
        for a in (0..8).filter(|&a| a != b) {
            assert!(xb.apply(&u(1 + a, 1)).iter().all(Rational::is_zero));
        }
    }
    for a in 1..8 {
        for b in (1..8).filter(|&b| b != a) {
            let d = natural_action(c, &g.pair("D", p(a), p(b)));
            assert_eq!(d.apply(&u(1 + a, 1)), u(1 + b, 2));
            assert_eq!(d.apply(&u(1 + b, 1)), u(1 + a, -2));
            for r in (0..8).filter(|&r| r != a && r != b) {
                assert!(d.apply(&u(1 + r, 1)).iter().all(Rational::is_zero));
            }
        }
    }
}

/// `lhs ≡ Σ (c/2) D-term` with one- or two-unit subscripts.
struct Relation {
    lhs: (&'static str, Vec<SignedUnit>),
    rhs: Vec<(i64, Vec<SignedUnit>)>,
}

impl Relation {
    fn element(g: &Labeled, letter: &str, sub: &[SignedUnit]) -> Vec<Rational> {
        match sub {
            [u] => g.signed(letter, *u),
            [u, v] => g.pair(letter, *u, *v),
            _ => unreachable!(),
        }
    }

    fn holds(&self, g: &Labeled) -> bool {
        let lhs = Self::element(g, self.lhs.0, &self.lhs.1);
        let terms: Vec<(i64, Vec<Rational>)> = self
            .rhs
            .iter()
            .map(|(c, sub)| (*c, Self::element(g, "D", sub)))
            .collect();
        lhs == half(&sum(&terms))
    }

    fn cycled(&self) -> Relation {
        let map = |s: &Vec<SignedUnit>| s.iter().map(|&u| cycle(u)).collect();
        Relation {
            lhs: (self.lhs.0, map(&self.lhs.1)),
            rhs: self.rhs.iter().map(|(c, s)| (*c, map(s))).collect(),
        }
    }
}

pub fn f4_triality_relations_and_seven_cycle_images() {
    let g = Labeled::new(Algebra::F4, AlgebraKind::Compact, None);
    let ell_terms = |signs: [i64; 4]| {
        vec![
            (signs[0], vec![p(L)]),
            (signs[1], vec![p(I), p(IL)]),
            (signs[2], vec![p(J), p(JL)]),
            (signs[3], vec![p(K), p(KL)]),
        ]
    };
    let relations = [
        Relation { lhs: ("E", vec![p(L)]), rhs: ell_terms([-1, -1, -1, -1]) },
        Relation { lhs: ("F", vec![p(L)]), rhs: ell_terms([-1, 1, 1, 1]) },
        Relation { lhs: ("E", vec![p(I), p(IL)]), rhs: ell_terms([1, 1, -1, -1]) },
        Relation { lhs: ("F", vec![p(I), p(IL)]), rhs: ell_terms([-1, 1, -1, -1]) },
    ];
    for r in relations {
        let mut r = r;
        for _ in 0..7 {
            assert!(r.holds(&g), "{}_{:?}", r.lhs.0, r.lhs.1);
            r = r.cycled();
        }
    }
}

pub fn f4_y_z_bracket_on_all_unit_pairs() {
    for kind in AlgebraKind::ALL {
        let g = Labeled::new(Algebra::F4, kind, None);
        for b in 0..8 {
            for c in 0..8 {
                let conj_bc = make_table(kind).product(b, c).conj();
                let lhs = g.br(&g.signed("Y", p(b)), &g.signed("Z", p(c)));
                assert_eq!(lhs, scale(&g.signed("X", conj_bc), -1), "{kind} b={b} c={c}");
            }
        }
    }
}

pub fn f4_diagonal_language_identities() {
    let g = Labeled::new(Algebra::F4, AlgebraKind::Compact, None);
    let e_l = g.signed("E", p(L));
    assert_eq!(g.br(&e_l, &g.signed("X", p(I))), scale(&g.signed("X", p(IL)), -1));
    let rhs = sum(&[
        (1, g.pair("D", p(I), p(L))),
        (1, g.pair("E", p(I), p(L))),
        (-1, g.pair("F", p(I), p(L))),
    ]);
    assert_eq!(g.br(&e_l, &g.signed("D", p(I))), rhs);
    for kind in AlgebraKind::ALL {
        let g = Labeled::new(Algebra::F4, kind, None);
        for a in 1..8 {
            for b in (1..8).filter(|&b| b != a) {
                let ab = make_table(kind).product(a, b);
                let lhs = sum(&[(1, g.pair("E", p(a), p(b))), (-1, g.signed("E", ab))]);
                let rhs = sum(&[(1, g.pair("F", p(a), p(b))), (1, g.signed("F", ab))]);
                assert_eq!(lhs, rhs, "{kind} p={a} q={b}");
            }
        }
    }
}

pub fn f4_diagonal_actions_on_y_and_z() {
    for kind in AlgebraKind::ALL {
        let g = Labeled::new(Algebra::F4, kind, None);
        for a in 0..8 {
            for r in 1..8 {
                let d = g.signed("D", p(r));
                let ra = mul(kind, p(r), p(a));
                let ar = mul(kind, p(a), p(r));
                assert_eq!(g.br(&d, &g.signed("Y", p(a))), scale(&g.signed("Y", ra), -1));
                assert_eq!(g.br(&d, &g.signed("Z", p(a))), scale(&g.signed("Z", ar), -1));
                for s in (1..8).filter(|&s| s != r) {
                    let drs = g.pair("D", p(r), p(s));
                    let r_sa = mul(kind, p(r), mul(kind, p(s), p(a)));
                    let ar_s = mul(kind, mul(kind, p(a), p(r)), p(s));
                    assert_eq!(g.br(&g.signed("Y", p(a)), &drs), scale(&g.signed("Y", r_sa), -1));
                    assert_eq!(g.br(&g.signed("Z", p(a)), &drs), g.signed("Z", ar_s));
                }
            }
        }
    }
}

pub fn e8_x_y_bracket_on_all_subscript_pairs() {
    for kinds in KIND_PAIRS {
        let t = e8_table(kinds);
        let Kinds { k, l } = kinds;
        for x in 0..64 {
            let (a, big_a) = (x / 8, x % 8);
            for y in 0..64 {
                let (b, big_b) = (y / 8, y % 8);
                let ab = make_table(k).product(a, b).conj();
                let big_ab = make_table(l).product(big_a, big_b).conj();
                let lhs = t.bracket(
                    e8_index(E8Basis::Off(octolie::albert::Copy3::X, a, big_a)),
                    e8_index(E8Basis::Off(octolie::albert::Copy3::Y, b, big_b)),
                );
                let z = e8_index(E8Basis::Off(octolie::albert::Copy3::Z, ab.index, big_ab.index));
                let sign = -(ab.sign as i64) * big_ab.sign as i64;
                assert_eq!(lhs, vec![(z, q(sign))], "{kinds:?} X_{a}{big_a} Y_{b}{big_b}");
            }
        }
    }
}

/// Every identity check, by name.
pub const ALL: &[(&str, fn())] = &[
    ("octonion_units_ij_is_k_and_anti_associate", octonion_units_ij_is_k_and_anti_associate),
    ("left_multiplications_in_right_language_for_all_seven_units", left_multiplications_in_right_language_for_all_seven_units),
    ("recorded_left_to_right_identities", recorded_left_to_right_identities),
    ("split_left_to_right_identity_for_l_i", split_left_to_right_identity_for_l_i),
    ("so8_bracket_rules", so8_bracket_rules),
    ("so9_commutator_rules", so9_commutator_rules),
    ("so9_natural_representation_values", so9_natural_representation_values),
    ("f4_triality_relations_and_seven_cycle_images", f4_triality_relations_and_seven_cycle_images),
    ("f4_y_z_bracket_on_all_unit_pairs", f4_y_z_bracket_on_all_unit_pairs),
    ("f4_diagonal_language_identities", f4_diagonal_language_identities),
    ("f4_diagonal_actions_on_y_and_z", f4_diagonal_actions_on_y_and_z),
    ("e8_x_y_bracket_on_all_subscript_pairs", e8_x_y_bracket_on_all_subscript_pairs),
];
