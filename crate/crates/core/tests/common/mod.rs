#![allow(dead_code)]

pub mod suite;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use octolie::albert::{f4_action_brackets, Copy3};
use octolie::algebra::{build_table, Algebra, AlgebraSpec};
use octolie::e8::{e8_index, engine, E8Basis, Factor, Kinds, E8_DIM};
use octolie::linalg::{sparse_to_dense, SparseVec};
use octolie::octonion::AlgebraKind;
use octolie::so16::{so16_wedge_model, spin16_basis_action, spin16_brackets, wedge_coords16, SO16_DIM, SPIN16_DIM};
use octolie::so8::SO8_DIM;
use octolie::spin9::{natural_action, natural_basis_action, so9_wedge_model, spin_brackets, wedge_coords, SO9_DIM};
use octolie::table::StructureConstants;
use octolie::{RatMatrix, Rational};

pub const C: AlgebraKind = AlgebraKind::Compact;
pub const S: AlgebraKind = AlgebraKind::Split;

/// Every ordered pair of kinds.
pub const KIND_PAIRS: [Kinds; 4] = [
    Kinds { k: C, l: C },
    Kinds { k: C, l: S },
    Kinds { k: S, l: C },
    Kinds { k: S, l: S },
];

pub fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Builds (once per process) the table of `algebra` over the given kinds.
pub fn table(algebra: Algebra, k: AlgebraKind, l: Option<AlgebraKind>) -> Arc<StructureConstants> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<StructureConstants>>>> = OnceLock::new();
    let key = format!("{algebra}/{k}/{l:?}");
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&key) {
        return t.clone();
    }
    let spec = AlgebraSpec::new(algebra, k, l).unwrap();
    let t = Arc::new(build_table(&spec).unwrap_or_else(|e| panic!("{key}: {e}")));
    cache.lock().unwrap().insert(key, t.clone());
    t
}

pub fn e8_table(kinds: Kinds) -> Arc<StructureConstants> {
    table(Algebra::E8, kinds.k, Some(kinds.l))
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn dense(v: &SparseVec, n: usize) -> Vec<Rational> {
    sparse_to_dense(v, n)
}

/// Pairs `i < j` whose table bracket differs from the spin-action bracket.
pub fn so9_spin_mismatches(kind: AlgebraKind) -> Vec<(usize, usize)> {
    let t = table(Algebra::So9, kind, None);
    let oracle = spin_brackets(kind);
    let mut bad = Vec::new();
    for (i, row) in oracle.iter().enumerate() {
        for (j, entry) in row.iter().enumerate().skip(i + 1) {
            if entry.as_ref() != Some(&t.bracket(i, j)) {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// Pairs on which the bivector image fails to be a homomorphism.
pub fn so9_wedge_mismatches(kind: AlgebraKind) -> Vec<(usize, usize)> {
    let t = table(Algebra::So9, kind, None);
    let model = so9_wedge_model(kind);
    let mut bad = Vec::new();
    for i in 0..SO9_DIM {
        for j in i + 1..SO9_DIM {
            let lhs = wedge_coords(&dense(&t.bracket(i, j), SO9_DIM));
            let rhs = model.bracket(&wedge_coords(&unit(SO9_DIM, i)), &wedge_coords(&unit(SO9_DIM, j)));
            if lhs != rhs {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// Pairs on which the 9-dimensional action fails to be a homomorphism.
pub fn so9_natural_mismatches(kind: AlgebraKind) -> Vec<(usize, usize)> {
    let t = table(Algebra::So9, kind, None);
    let mut bad = Vec::new();
    for i in 0..SO9_DIM {
        for j in i + 1..SO9_DIM {
            let lhs = natural_action(kind, &dense(&t.bracket(i, j), SO9_DIM));
            let rhs = natural_basis_action(kind, i)
                .commutator(&natural_basis_action(kind, j))
                .unwrap();
            if lhs != rhs {
                bad.push((i, j));
            }
        }
    }
    bad
}

pub fn so16_spin_mismatches(kinds: Kinds) -> Vec<(usize, usize)> {
    let t = table(Algebra::So16, kinds.k, Some(kinds.l));
    let oracle = spin16_brackets(kinds);
    let mut bad = Vec::new();
    for i in 0..SO16_DIM {
        for j in i + 1..SO16_DIM {
            if oracle[i][j - i - 1].as_ref() != Some(&t.bracket(i, j)) {
                bad.push((i, j));
            }
        }
    }
    bad
}

pub fn so16_wedge_mismatches(kinds: Kinds) -> Vec<(usize, usize)> {
    let t = table(Algebra::So16, kinds.k, Some(kinds.l));
    let model = so16_wedge_model(kinds);
    let mut bad = Vec::new();
    for i in 0..SO16_DIM {
        for j in i + 1..SO16_DIM {
            let lhs = wedge_coords16(&dense(&t.bracket(i, j), SO16_DIM));
            let rhs = model.bracket(&wedge_coords16(&unit(SO16_DIM, i)), &wedge_coords16(&unit(SO16_DIM, j)));
            if lhs != rhs {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// Pairs on which the f4 table disagrees with the derivation action on the
/// Albert algebra.
pub fn f4_albert_mismatches(kind: AlgebraKind) -> Vec<(usize, usize)> {
    let t = table(Algebra::F4, kind, None);
    let oracle = f4_action_brackets(kind);
    let mut bad = Vec::new();
    for (i, row) in oracle.iter().enumerate() {
        for (j, entry) in row.iter().enumerate().skip(i + 1) {
            if entry.as_ref() != Some(&t.bracket(i, j)) {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// The 248-index of an f4 label inside e8: `D:p -> D:k:p`, `X:a -> X:a,1`.
pub fn f4_label_in_e8(label: &str) -> String {
    let (head, rest) = label.split_once(':').unwrap();
    if head == "D" {
        format!("D:k:{rest}")
    } else {
        format!("{head}:{rest},1")
    }
}

/// Pairs of `K`-subscript elements on which the e8 table disagrees with
/// the Albert oracle for `kinds.k`, after matching labels.
pub fn e8_f4_restriction_mismatches(kinds: Kinds) -> Vec<(usize, usize)> {
    let e8 = e8_table(kinds);
    let f4_labels = AlgebraSpec::new(Algebra::F4, kinds.k, None).unwrap().labels();
    let idx: Vec<usize> = f4_labels
        .iter()
        .map(|l| e8.index_of(&f4_label_in_e8(l)).unwrap_or_else(|| panic!("no e8 label for {l}")))
        .collect();
    let back: HashMap<usize, usize> = idx.iter().enumerate().map(|(f, &e)| (e, f)).collect();
    let oracle = f4_action_brackets(kinds.k);
    let mut bad = Vec::new();
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            let restricted: Option<SparseVec> = e8
                .bracket(idx[i], idx[j])
                .into_iter()
                .map(|(e, c)| back.get(&e).map(|&f| (f, c)))
                .collect();
            let restricted = restricted.map(|mut v| {
                v.sort_by_key(|(f, _)| *f);
                v
            });
            if restricted != oracle[i][j] {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// Embeds an `so(16)` coordinate vector as the copy of `so(16)` in e8 that
/// uses the off-diagonal position `copy` and the matching diagonal language.
pub fn copy_embedding(kinds: Kinds, copy: Copy3, local: &[Rational]) -> Vec<Rational> {
    let eng = engine(kinds);
    let lang = copy.language();
    let mut out = vec![Rational::zero(); E8_DIM];
    for (factor, offset) in [(Factor::K, 0), (Factor::L, SO8_DIM)] {
        let d = eng.to_d(factor, lang, &local[offset..offset + SO8_DIM]);
        for (i, c) in d.into_iter().enumerate() {
            out[offset + i] = c;
        }
    }
    for a in 0..8 {
        for big_a in 0..8 {
            out[e8_index(E8Basis::Off(copy, a, big_a))] = local[2 * SO8_DIM + a * 8 + big_a].clone();
        }
    }
    out
}

/// Pairs on which the e8 table, read through one copy of `so(16)`,
/// disagrees with the spin-action brackets of `so(16)`.
pub fn so16_copy_mismatches(kinds: Kinds, copy: Copy3) -> Vec<(usize, usize)> {
    let e8 = e8_table(kinds);
    let oracle = spin16_brackets(kinds);
    let images: Vec<Vec<Rational>> = (0..SO16_DIM)
        .map(|i| copy_embedding(kinds, copy, &unit(SO16_DIM, i)))
        .collect();
    let mut bad = Vec::new();
    for i in 0..SO16_DIM {
        for j in i + 1..SO16_DIM {
            let lhs = e8.bracket_vectors(&images[i], &images[j]);
            let ok = oracle[i][j - i - 1]
                .as_ref()
                .is_some_and(|v| copy_embedding(kinds, copy, &dense(v, SO16_DIM)) == lhs);
            if !ok {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// `dim(copy_a ∩ copy_b)` for the pairs `(X,Y)`, `(Y,Z)`, `(Z,X)`.
pub fn copy_intersection_dims(kinds: Kinds) -> [usize; 3] {
    let span = |copy: Copy3| -> Vec<Vec<Rational>> {
        (0..SO16_DIM)
            .map(|i| copy_embedding(kinds, copy, &unit(SO16_DIM, i)))
            .collect()
    };
    let rank = |rows: Vec<Vec<Rational>>| RatMatrix::from_rows(rows).unwrap().rank();
    let (x, y, z) = (span(Copy3::X), span(Copy3::Y), span(Copy3::Z));
    let each = [rank(x.clone()), rank(y.clone()), rank(z.clone())];
    assert_eq!(each, [SO16_DIM; 3]);
    let meet = |a: &[Vec<Rational>], b: &[Vec<Rational>]| {
        2 * SO16_DIM - rank(a.iter().chain(b).cloned().collect())
    };
    [meet(&x, &y), meet(&y, &z), meet(&z, &x)]
}

fn conj_sign(a: usize) -> i64 {
    if a == 0 {
        1
    } else {
        -1
    }
}

/// Spinor coordinates of a `Y ⊕ Z` vector of e8: the column `(x, y)` with
/// `x` the conjugate-negated `Z` entry and `y` the `Y` entry.
pub fn spinor_of(v: &[Rational]) -> Option<Vec<Rational>> {
    let mut out = vec![Rational::zero(); SPIN16_DIM];
    for (e, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        match octolie::e8::e8_basis(e) {
            E8Basis::Off(Copy3::Y, b, big_b) => out[64 + b * 8 + big_b] = c.clone(),
            E8Basis::Off(Copy3::Z, a, big_a) => {
                out[a * 8 + big_a] = c * &q(-conj_sign(a) * conj_sign(big_a));
            }
            _ => return None,
        }
    }
    Some(out)
}

/// `(g, v)` with `g` in the `X` copy of `so(16)` and `v` a `Y`/`Z` basis
/// element where `ad(g)` on e8 differs from the spin action on the column.
pub fn e8_spin_block_mismatches(kinds: Kinds) -> Vec<(usize, usize)> {
    let e8 = e8_table(kinds);
    let spin_part: Vec<usize> = [Copy3::Y, Copy3::Z]
        .into_iter()
        .flat_map(|c| (0..64).map(move |o| e8_index(E8Basis::Off(c, o / 8, o % 8))))
        .collect();
    let mut bad = Vec::new();
    for g in 0..SO16_DIM {
        let action = spin16_basis_action(kinds, g);
        for &v in &spin_part {
            let image = dense(&e8.bracket(g, v), E8_DIM);
            let expected = action.apply(&spinor_of(&unit(E8_DIM, v)).unwrap());
            if spinor_of(&image) != Some(expected) {
                bad.push((g, v));
            }
        }
    }
    bad
}
