//! `so(16)`, `so(12,4)` and `so(8,8)` on pairs of `K⊗L` elements: the
//! 128-dimensional spin action and the 16-point bivector model.

use rayon::prelude::*;

use crate::e8::{Kinds, TENSOR_DIM};
use crate::linalg::{sparse_from_dense, SparseMatrix, SparseVec, SpanSolver};
use crate::octonion::{AlgebraKind, Alphabet};
use crate::scalar::Rational;
use crate::so8::{so8_basis, so8_element, UnitMap, SO8_DIM};
use crate::wedge::{add_pair, Wedge, WedgeModel};

pub const SO16_DIM: usize = 120;
pub const SPIN16_DIM: usize = 128;

/// Local index of `X_{aA}`.
pub fn so16_x(a: usize, big_a: usize) -> usize {
    2 * SO8_DIM + a * 8 + big_a
}

fn conj_sign(a: usize) -> i64 {
    if a == 0 {
        1
    } else {
        -1
    }
}

/// Adds `s * (m_k ⊗ m_l)` from column block `from` into row block `to`.
fn push_block(
    triplets: &mut Vec<(usize, usize, Rational)>,
    to: usize,
    from: usize,
    s: i64,
    mk: &UnitMap,
    ml: &UnitMap,
) {
    for a in 0..8 {
        for big_a in 0..8 {
            let (x, y) = (mk.image(a), ml.image(big_a));
            triplets.push((
                to * TENSOR_DIM + x.index * 8 + y.index,
                from * TENSOR_DIM + a * 8 + big_a,
                Rational::from_int(s * (x.sign * y.sign) as i64),
            ));
        }
    }
}

/// Spin action of one basis element on the two `K⊗L` components.
pub fn spin16_basis_action(kinds: Kinds, index: usize) -> SparseMatrix {
    let id = UnitMap::identity();
    let mut t = Vec::with_capacity(2 * TENSOR_DIM);
    if index < 2 * SO8_DIM {
        let (i, on_k) = if index < SO8_DIM { (index, true) } else { (index - SO8_DIM, false) };
        let kind = if on_k { kinds.k } else { kinds.l };
        let m = so8_basis(kind).left_map(i);
        let lower = if so8_element(i).1.is_none() { -1 } else { 1 };
        for (block, s) in [(0, 1), (1, lower)] {
            if on_k {
                push_block(&mut t, block, block, s, m, &id);
            } else {
                push_block(&mut t, block, block, s, &id, m);
            }
        }
    } else {
        let o = index - 2 * SO8_DIM;
        let (a, big_a) = (o / 8, o % 8);
        let (lk, ll) = (UnitMap::left(kinds.k, a), UnitMap::left(kinds.l, big_a));
        push_block(&mut t, 0, 1, 1, &lk, &ll);
        push_block(&mut t, 1, 0, -conj_sign(a) * conj_sign(big_a), &lk, &ll);
    }
    SparseMatrix::from_triplets(SPIN16_DIM, SPIN16_DIM, t)
}

pub fn spin_action16(kinds: Kinds, coords: &[Rational]) -> SparseMatrix {
    let mut out = SparseMatrix::zeros(SPIN16_DIM, SPIN16_DIM);
    for (i, c) in coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        out = out.add_scaled(&spin16_basis_action(kinds, i), c).expect("square");
    }
    out
}

/// Upper-triangle brackets of the 120 spin actions, by exact solve.
///
/// Row `i` holds `[e_i, e_j]` for `j > i`; `None` marks a commutator
/// outside the span.
pub fn spin16_brackets(kinds: Kinds) -> Vec<Vec<Option<SparseVec>>> {
    let actions: Vec<SparseMatrix> = (0..SO16_DIM).map(|i| spin16_basis_action(kinds, i)).collect();
    let solver = SpanSolver::new(
        SPIN16_DIM * SPIN16_DIM,
        actions.iter().map(SparseMatrix::flatten).collect(),
    )
    .expect("the 120 spin actions are independent");
    (0..SO16_DIM)
        .into_par_iter()
        .map(|i| {
            (i + 1..SO16_DIM)
                .map(|j| {
                    let c = actions[i].commutator(&actions[j]).expect("square");
                    solver.solve_sparse(&c.flatten()).map(|v| sparse_from_dense(&v))
                })
                .collect()
        })
        .collect()
}

/// Coordinate names `1, i, ..., kl, 1', I, ..., KL`.
pub fn so16_wedge_names() -> Vec<String> {
    (0..8)
        .map(|a| Alphabet::K.name(a).to_string())
        .chain(std::iter::once("1'".to_string()))
        .chain((1..8).map(|a| Alphabet::L.name(a).to_string()))
        .collect()
}

pub fn so16_wedge_model(kinds: Kinds) -> WedgeModel {
    let norms = (0..8)
        .map(|a| kinds.k.unit_norm(a))
        .chain((0..8).map(|a| kinds.l.unit_norm(a)))
        .collect();
    WedgeModel::new(norms, so16_wedge_names())
}

/// `D_p -> 1∧p`, `D_{p,q} -> p∧q`, the same on the `L` points, and `X_{aA} -> a∧A`.
pub fn wedge_coords16(coords: &[Rational]) -> Wedge {
    let mut w = Wedge::new();
    for (i, c) in coords.iter().enumerate() {
        if i < 2 * SO8_DIM {
            let (offset, j) = if i < SO8_DIM { (0, i) } else { (8, i - SO8_DIM) };
            let (p, q) = so8_element(j);
            match q {
                None => add_pair(&mut w, offset, offset + p, c),
                Some(q) => add_pair(&mut w, offset + p, offset + q, c),
            }
        } else {
            let o = i - 2 * SO8_DIM;
            add_pair(&mut w, o / 8, 8 + o % 8, c);
        }
    }
    w
}

/// Both kind orders for the mixed case.
pub fn mixed_orders() -> [Kinds; 2] {
    [
        Kinds::new(AlgebraKind::Compact, AlgebraKind::Split),
        Kinds::new(AlgebraKind::Split, AlgebraKind::Compact),
    ]
}
