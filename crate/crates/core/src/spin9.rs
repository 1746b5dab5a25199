//! `so(9)` and `so(5,4)` on octonion pairs: the 16-dimensional spin action,
//! the 9-dimensional natural action, and the bivector model.

use crate::linalg::{sparse_from_dense, SparseMatrix, SparseVec, SpanSolver};
use crate::octonion::{AlgebraKind, Alphabet, Octonion};
use crate::scalar::Rational;
use crate::so8::{so8_basis, so8_element, UnitMap};
use crate::wedge::{add_pair, Wedge, WedgeModel};

pub const SO9_DIM: usize = 36;
pub const SPINOR_DIM: usize = 16;
pub const NATURAL_DIM: usize = 9;

/// Local index of `X_a`.
pub fn so9_x(a: usize) -> usize {
    a
}

/// Local index of the `so(8)` basis element `i` (`D_p` or `D_{p,q}`).
pub fn so9_d(i: usize) -> usize {
    8 + i
}

fn block(blocks: [[Option<(i64, &UnitMap)>; 2]; 2], n: usize) -> SparseMatrix {
    let mut triplets = Vec::new();
    for (br, row) in blocks.iter().enumerate() {
        for (bc, b) in row.iter().enumerate() {
            if let Some((s, m)) = b {
                for x in 0..n {
                    let img = m.image(x);
                    triplets.push((br * n + img.index, bc * n + x, Rational::from_int(s * img.sign as i64)));
                }
            }
        }
    }
    SparseMatrix::from_triplets(2 * n, 2 * n, triplets)
}

fn conj_sign(a: usize) -> i64 {
    if a == 0 {
        1
    } else {
        -1
    }
}

/// Spin action of one basis element on `(x, y)`.
pub fn spin_basis_action(kind: AlgebraKind, index: usize) -> SparseMatrix {
    let b = so8_basis(kind);
    if index < 8 {
        let l = UnitMap::left(kind, index);
        block([[None, Some((1, &l))], [Some((-conj_sign(index), &l)), None]], 8)
    } else {
        let i = index - 8;
        let m = b.left_map(i);
        let lower = if so8_element(i).1.is_none() { -1 } else { 1 };
        block([[Some((1, m)), None], [None, Some((lower, m))]], 8)
    }
}

/// Spin action of a coordinate vector over the 36-basis.
pub fn spin_action(kind: AlgebraKind, coords: &[Rational]) -> SparseMatrix {
    let mut out = SparseMatrix::zeros(SPINOR_DIM, SPINOR_DIM);
    for (i, c) in coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        out = out.add_scaled(&spin_basis_action(kind, i), c).expect("square");
    }
    out
}

/// Brackets of the 36 spin actions, decomposed by exact solve.
///
/// `None` marks a commutator outside the span.
pub fn spin_brackets(kind: AlgebraKind) -> Vec<Vec<Option<SparseVec>>> {
    let actions: Vec<SparseMatrix> = (0..SO9_DIM).map(|i| spin_basis_action(kind, i)).collect();
    let solver = SpanSolver::new(
        SPINOR_DIM * SPINOR_DIM,
        actions.iter().map(SparseMatrix::flatten).collect(),
    )
    .expect("the 36 spin actions are independent");
    actions
        .iter()
        .map(|a| {
            actions
                .iter()
                .map(|b| {
                    let c = a.commutator(b).expect("square");
                    solver.solve_sparse(&c.flatten()).map(|v| sparse_from_dense(&v))
                })
                .collect()
        })
        .collect()
}

type OctMatrix2 = [[Octonion; 2]; 2];

fn mul2(a: &OctMatrix2, b: &OctMatrix2) -> OctMatrix2 {
    std::array::from_fn(|r| std::array::from_fn(|c| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c])))
}

fn x_matrix(kind: AlgebraKind, a: usize) -> OctMatrix2 {
    let oa = Octonion::unit(kind, a);
    [
        [Octonion::zero(kind), oa.clone()],
        [-&oa.conjugate(), Octonion::zero(kind)],
    ]
}

/// `U_{1'}` (index 0) or `U_a` (index `1 + a`).
fn u_matrix(kind: AlgebraKind, index: usize) -> OctMatrix2 {
    if index == 0 {
        let one = Octonion::unit(kind, 0);
        [[one.clone(), Octonion::zero(kind)], [Octonion::zero(kind), -&one]]
    } else {
        let oa = Octonion::unit(kind, index - 1);
        [[Octonion::zero(kind), oa.clone()], [oa.conjugate(), Octonion::zero(kind)]]
    }
}

/// Coordinates over `U_{1'}, U_1, ..., U_kl` of a traceless Hermitian 2x2 matrix.
fn u_coords(m: &OctMatrix2) -> Vec<Rational> {
    debug_assert!((m[0][0].coord(0) + m[1][1].coord(0)).is_zero());
    let mut v = vec![m[0][0].coord(0).clone()];
    v.extend(m[0][1].coords().iter().cloned());
    v
}

/// Natural action of `X_a` on the 9 coordinates, `U -> X_a U - U X_a`.
pub fn natural_x_action(kind: AlgebraKind, a: usize) -> SparseMatrix {
    let x = x_matrix(kind, a);
    let mut triplets = Vec::new();
    for col in 0..NATURAL_DIM {
        let u = u_matrix(kind, col);
        let (xu, ux) = (mul2(&x, &u), mul2(&u, &x));
        let d: OctMatrix2 = std::array::from_fn(|r| std::array::from_fn(|c| &xu[r][c] - &ux[r][c]));
        for (row, c) in u_coords(&d).into_iter().enumerate() {
            if !c.is_zero() {
                triplets.push((row, col, c));
            }
        }
    }
    SparseMatrix::from_triplets(NATURAL_DIM, NATURAL_DIM, triplets)
}

/// Natural action of one basis element; `D` elements act by half the
/// commutator of the `X` actions that define them.
pub fn natural_basis_action(kind: AlgebraKind, index: usize) -> SparseMatrix {
    if index < 8 {
        return natural_x_action(kind, index);
    }
    let (p, q) = so8_element(index - 8);
    let (a, b) = match q {
        None => (0, p),
        Some(q) => (p, q),
    };
    natural_x_action(kind, a)
        .commutator(&natural_x_action(kind, b))
        .expect("square")
        .scale(&Rational::new(1, 2))
}

pub fn natural_action(kind: AlgebraKind, coords: &[Rational]) -> SparseMatrix {
    let mut out = SparseMatrix::zeros(NATURAL_DIM, NATURAL_DIM);
    for (i, c) in coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        out = out.add_scaled(&natural_basis_action(kind, i), c).expect("square");
    }
    out
}

/// Coordinate names `1', 1, i, ..., kl`.
pub fn natural_labels() -> Vec<String> {
    std::iter::once("1'".to_string())
        .chain((0..8).map(|a| Alphabet::K.name(a).to_string()))
        .collect()
}

/// The bivector model on `1', 1, i, ..., kl`.
pub fn so9_wedge_model(kind: AlgebraKind) -> WedgeModel {
    let norms = std::iter::once(1).chain((0..8).map(|a| kind.unit_norm(a))).collect();
    WedgeModel::new(norms, natural_labels())
}

/// `X_a -> 1'∧a`, `D_p -> 1∧p`, `D_{p,q} -> p∧q`.
pub fn wedge_coords(coords: &[Rational]) -> Wedge {
    let mut w = Wedge::new();
    for (i, c) in coords.iter().enumerate() {
        if i < 8 {
            add_pair(&mut w, 0, 1 + i, c);
        } else {
            let (p, q) = so8_element(i - 8);
            match q {
                None => add_pair(&mut w, 1, 1 + p, c),
                Some(q) => add_pair(&mut w, 1 + p, 1 + q, c),
            }
        }
    }
    w
}
