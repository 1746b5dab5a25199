//! The Albert algebra of 3x3 Hermitian octonionic matrices, the action of
//! anti-Hermitian generators on it, and the D/E/F triality identifications.
//!
//! Coordinates of `H = [[ρ, γ, β̄], [γ̄, σ, α], [β, ᾱ, τ]]` are ordered
//! `ρ, σ, τ`, then the eight units of `γ`, `α` and `β`.

use std::sync::OnceLock;

use crate::linalg::{sparse_from_dense, RatMatrix, SpanSolver, SparseMatrix, SparseVec};
use crate::octonion::{AlgebraKind, Alphabet, Octonion};
use crate::scalar::Rational;
use crate::so8::{so8_element, SO8_DIM};

pub const ALBERT_DIM: usize = 27;
pub const TRACE_ZERO_DIM: usize = 26;

const GAMMA: usize = 3;
const ALPHA: usize = 11;
const BETA: usize = 19;

/// One of the three off-diagonal positions, and with it one copy of `so(9)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Copy3 {
    X,
    Y,
    Z,
}

impl Copy3 {
    pub const ALL: [Copy3; 3] = [Copy3::X, Copy3::Y, Copy3::Z];

    /// `(row, col)` of the entry holding `a`; the mirror entry holds `-ā`.
    pub fn position(self) -> (usize, usize) {
        match self {
            Copy3::X => (0, 1),
            Copy3::Y => (1, 2),
            Copy3::Z => (2, 0),
        }
    }

    pub fn from_position(r: usize, c: usize) -> Option<(Copy3, bool)> {
        Copy3::ALL.into_iter().find_map(|cp| {
            let (a, b) = cp.position();
            if (a, b) == (r, c) {
                Some((cp, false))
            } else if (b, a) == (r, c) {
                Some((cp, true))
            } else {
                None
            }
        })
    }

    pub fn letter(self) -> char {
        match self {
            Copy3::X => 'X',
            Copy3::Y => 'Y',
            Copy3::Z => 'Z',
        }
    }

    /// The diagonal language whose `so(8)` lives in this copy.
    pub fn language(self) -> Language {
        match self {
            Copy3::X => Language::D,
            Copy3::Y => Language::E,
            Copy3::Z => Language::F,
        }
    }
}

/// Which copy of `so(8)` names a diagonal matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Language {
    D,
    E,
    F,
}

impl Language {
    pub const ALL: [Language; 3] = [Language::D, Language::E, Language::F];

    pub fn copy(self) -> Copy3 {
        match self {
            Language::D => Copy3::X,
            Language::E => Copy3::Y,
            Language::F => Copy3::Z,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Language::D => 'D',
            Language::E => 'E',
            Language::F => 'F',
        }
    }

    /// Slot signs for singles and doubles: `D_p = diag(p, -p, 0)`,
    /// `D_{p,q} = diag(p∘q, p∘q, 0)`, rotated for `E` and `F`.
    pub fn slot_pattern(self) -> ([i8; 3], [i8; 3]) {
        match self {
            Language::D => ([1, -1, 0], [1, 1, 0]),
            Language::E => ([0, 1, -1], [0, 1, 1]),
            Language::F => ([-1, 0, 1], [1, 0, 1]),
        }
    }
}

type OctMatrix3 = [[Octonion; 3]; 3];

fn zero3(kind: AlgebraKind) -> OctMatrix3 {
    std::array::from_fn(|_| std::array::from_fn(|_| Octonion::zero(kind)))
}

fn mul3(a: &OctMatrix3, b: &OctMatrix3) -> OctMatrix3 {
    let kind = a[0][0].kind();
    let mut out = zero3(kind);
    for r in 0..3 {
        for c in 0..3 {
            for k in 0..3 {
                if a[r][k].is_zero() || b[k][c].is_zero() {
                    continue;
                }
                out[r][c] = &out[r][c] + &(&a[r][k] * &b[k][c]);
            }
        }
    }
    out
}

fn sub3(a: &OctMatrix3, b: &OctMatrix3) -> OctMatrix3 {
    std::array::from_fn(|r| std::array::from_fn(|c| &a[r][c] - &b[r][c]))
}

/// An element of the Albert algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlbertElement {
    kind: AlgebraKind,
    coords: Vec<Rational>,
}

impl AlbertElement {
    pub fn zero(kind: AlgebraKind) -> Self {
        AlbertElement {
            kind,
            coords: vec![Rational::zero(); ALBERT_DIM],
        }
    }

    pub fn basis(kind: AlgebraKind, index: usize) -> Self {
        let mut h = AlbertElement::zero(kind);
        h.coords[index] = Rational::one();
        h
    }

    pub fn from_coords(kind: AlgebraKind, coords: Vec<Rational>) -> Self {
        assert_eq!(coords.len(), ALBERT_DIM);
        AlbertElement { kind, coords }
    }

    pub fn identity(kind: AlgebraKind) -> Self {
        let mut h = AlbertElement::zero(kind);
        for i in 0..3 {
            h.coords[i] = Rational::one();
        }
        h
    }

    pub fn diag(kind: AlgebraKind, rho: i64, sigma: i64, tau: i64) -> Self {
        let mut h = AlbertElement::zero(kind);
        h.coords[0] = Rational::from_int(rho);
        h.coords[1] = Rational::from_int(sigma);
        h.coords[2] = Rational::from_int(tau);
        h
    }

    pub fn u0(kind: AlgebraKind) -> Self {
        AlbertElement::diag(kind, 1, -1, 0)
    }

    pub fn v0(kind: AlgebraKind) -> Self {
        AlbertElement::diag(kind, 0, 1, -1)
    }

    pub fn w0(kind: AlgebraKind) -> Self {
        AlbertElement::diag(kind, -1, 0, 1)
    }

    /// `U_a`: `γ = a`.
    pub fn u(kind: AlgebraKind, a: usize) -> Self {
        AlbertElement::basis(kind, GAMMA + a)
    }

    /// `V_a`: `α = a`.
    pub fn v(kind: AlgebraKind, a: usize) -> Self {
        AlbertElement::basis(kind, ALPHA + a)
    }

    /// `W_a`: `β = a`.
    pub fn w(kind: AlgebraKind, a: usize) -> Self {
        AlbertElement::basis(kind, BETA + a)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn scale(&self, s: &Rational) -> Self {
        AlbertElement {
            kind: self.kind,
            coords: self.coords.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        AlbertElement {
            kind: self.kind,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        &self.coords[0] + &self.coords[1] + &self.coords[2]
    }

    fn octonion_at(&self, offset: usize) -> Octonion {
        Octonion::from_coords(self.kind, std::array::from_fn(|i| self.coords[offset + i].clone()))
    }

    pub fn to_matrix(&self) -> OctMatrix3 {
        let k = self.kind;
        let gamma = self.octonion_at(GAMMA);
        let alpha = self.octonion_at(ALPHA);
        let beta = self.octonion_at(BETA);
        let d = |i: usize| Octonion::real(k, self.coords[i].clone());
        [
            [d(0), gamma.clone(), beta.conjugate()],
            [gamma.conjugate(), d(1), alpha.clone()],
            [beta, alpha.conjugate(), d(2)],
        ]
    }

    /// Reads the Hermitian data off a matrix; the caller guarantees Hermiticity.
    pub fn from_matrix(m: &OctMatrix3) -> Self {
        let kind = m[0][0].kind();
        let mut coords = vec![Rational::zero(); ALBERT_DIM];
        for i in 0..3 {
            debug_assert!(m[i][i].coords()[1..].iter().all(Rational::is_zero));
            coords[i] = m[i][i].coord(0).clone();
        }
        for (offset, (r, c)) in [(GAMMA, (0, 1)), (ALPHA, (1, 2)), (BETA, (2, 0))] {
            debug_assert_eq!(m[c][r], m[r][c].conjugate());
            for i in 0..8 {
                coords[offset + i] = m[r][c].coord(i).clone();
            }
        }
        AlbertElement { kind, coords }
    }

    /// Coordinates over `U_0, V_0, U_a, V_a, W_a` for a trace-zero element.
    pub fn trace_zero_coords(&self) -> Option<Vec<Rational>> {
        if !self.trace().is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(TRACE_ZERO_DIM);
        out.push(self.coords[0].clone());
        out.push(-&self.coords[2]);
        out.extend_from_slice(&self.coords[3..]);
        Some(out)
    }
}

/// Label of an Albert coordinate.
pub fn albert_label(index: usize) -> String {
    let k = Alphabet::K;
    match index {
        0 => "rho".into(),
        1 => "sigma".into(),
        2 => "tau".into(),
        i if i < ALPHA => format!("gamma:{}", k.name(i - GAMMA)),
        i if i < BETA => format!("alpha:{}", k.name(i - ALPHA)),
        i => format!("beta:{}", k.name(i - BETA)),
    }
}

/// Label of a trace-zero basis element.
pub fn trace_zero_label(index: usize) -> String {
    let k = Alphabet::K;
    match index {
        0 => "U:0".into(),
        1 => "V:0".into(),
        i if i < 10 => format!("U:{}", k.name(i - 2)),
        i if i < 18 => format!("V:{}", k.name(i - 10)),
        i => format!("W:{}", k.name(i - 18)),
    }
}

/// `(H1 H2 + H2 H1) / 2`.
pub fn jordan_product(h1: &AlbertElement, h2: &AlbertElement) -> AlbertElement {
    assert_eq!(h1.kind, h2.kind);
    let (a, b) = (h1.to_matrix(), h2.to_matrix());
    let ab = mul3(&a, &b);
    let ba = mul3(&b, &a);
    let half = Rational::new(1, 2);
    let sum: OctMatrix3 =
        std::array::from_fn(|r| std::array::from_fn(|c| (&ab[r][c] + &ba[r][c]).scale(&half)));
    AlbertElement::from_matrix(&sum)
}

/// The anti-Hermitian matrix with `a` in the copy's slot and `-ā` mirrored.
pub fn off_diagonal_matrix(copy: Copy3, a: &Octonion) -> OctMatrix3 {
    let mut m = zero3(a.kind());
    let (r, c) = copy.position();
    m[r][c] = a.clone();
    m[c][r] = -&a.conjugate();
    m
}

/// `H -> AH - HA` for the off-diagonal generator.
pub fn apply_off_diagonal(copy: Copy3, a: &Octonion, h: &AlbertElement) -> AlbertElement {
    let m = off_diagonal_matrix(copy, a);
    let hm = h.to_matrix();
    AlbertElement::from_matrix(&sub3(&mul3(&m, &hm), &mul3(&hm, &m)))
}

fn action_matrix(kind: AlgebraKind, f: impl Fn(&AlbertElement) -> AlbertElement) -> SparseMatrix {
    let mut triplets = Vec::new();
    for col in 0..ALBERT_DIM {
        let image = f(&AlbertElement::basis(kind, col));
        for (row, c) in image.coords.into_iter().enumerate() {
            if !c.is_zero() {
                triplets.push((row, col, c));
            }
        }
    }
    SparseMatrix::from_triplets(ALBERT_DIM, ALBERT_DIM, triplets)
}

/// Actions on the 27-dimensional algebra for one kind: the 24 off-diagonal
/// generators and the three languages of diagonal generators, each
/// defined as half a commutator of off-diagonal actions.
#[derive(Debug)]
pub struct AlbertRep {
    kind: AlgebraKind,
    off: [Vec<SparseMatrix>; 3],
    diag: [Vec<SparseMatrix>; 3],
}

impl AlbertRep {
    fn build(kind: AlgebraKind) -> Self {
        let off: [Vec<SparseMatrix>; 3] = Copy3::ALL.map(|copy| {
            (0..8)
                .map(|a| {
                    let oa = Octonion::unit(kind, a);
                    action_matrix(kind, |h| apply_off_diagonal(copy, &oa, h))
                })
                .collect()
        });
        let half = Rational::new(1, 2);
        let diag = [0, 1, 2].map(|c| {
            (0..SO8_DIM)
                .map(|index| {
                    let (p, q) = so8_element(index);
                    let (a, b) = match q {
                        None => (0, p),
                        Some(q) => (p, q),
                    };
                    off[c][a]
                        .commutator(&off[c][b])
                        .expect("square")
                        .scale(&half)
                })
                .collect()
        });
        AlbertRep { kind, off, diag }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// Action of the off-diagonal generator with unit `a` in `copy`.
    pub fn off_diagonal(&self, copy: Copy3, a: usize) -> &SparseMatrix {
        &self.off[copy as usize][a]
    }

    /// Action of the `so(8)` basis element `index` written in `lang`.
    pub fn diagonal(&self, lang: Language, index: usize) -> &SparseMatrix {
        &self.diag[lang.copy() as usize][index]
    }
}

/// The cached representation for `kind`.
pub fn albert_rep(kind: AlgebraKind) -> &'static AlbertRep {
    static COMPACT: OnceLock<AlbertRep> = OnceLock::new();
    static SPLIT: OnceLock<AlbertRep> = OnceLock::new();
    match kind {
        AlgebraKind::Compact => COMPACT.get_or_init(|| AlbertRep::build(kind)),
        AlgebraKind::Split => SPLIT.get_or_init(|| AlbertRep::build(kind)),
    }
}

/// Restriction of a 27x27 action to the trace-zero basis `U_0, V_0, U_a, V_a, W_a`.
pub fn trace_zero_action(m: &SparseMatrix, kind: AlgebraKind) -> RatMatrix {
    let basis: Vec<AlbertElement> = (0..TRACE_ZERO_DIM)
        .map(|i| match i {
            0 => AlbertElement::u0(kind),
            1 => AlbertElement::v0(kind),
            i => AlbertElement::basis(kind, i + 1),
        })
        .collect();
    let mut out = RatMatrix::zeros(TRACE_ZERO_DIM, TRACE_ZERO_DIM);
    for (col, b) in basis.iter().enumerate() {
        let image = AlbertElement::from_coords(kind, m.apply(b.coords()));
        let coords = image
            .trace_zero_coords()
            .expect("derivations preserve the trace");
        for (row, c) in coords.into_iter().enumerate() {
            out.set(row, col, c);
        }
    }
    out
}

/// Conversions of `E`- and `F`-language coordinates to `D` coordinates and back.
///
/// Row `x` of `to_d[E]` holds the D-coordinates of `E_x`, found by solving
/// its Albert action in the span of the 28 D actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialityMaps {
    kind: AlgebraKind,
    to_d: [Vec<Vec<Rational>>; 3],
    from_d: [Vec<Vec<Rational>>; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{lang:?}-language element {index} has no {target:?}-language expression")]
pub struct TrialitySolveError {
    pub lang: Language,
    pub target: Language,
    pub index: usize,
}

fn solve_language(
    rep: &AlbertRep,
    from: Language,
    to: Language,
) -> Result<Vec<Vec<Rational>>, TrialitySolveError> {
    let flat = |m: &SparseMatrix| m.flatten();
    let solver = SpanSolver::new(
        ALBERT_DIM * ALBERT_DIM,
        (0..SO8_DIM).map(|i| flat(rep.diagonal(to, i))).collect(),
    )
    .expect("the 28 diagonal actions of one language are independent");
    (0..SO8_DIM)
        .map(|index| {
            solver
                .solve_sparse(&flat(rep.diagonal(from, index)))
                .ok_or(TrialitySolveError {
                    lang: from,
                    target: to,
                    index,
                })
        })
        .collect()
}

impl TrialityMaps {
    pub fn compute(kind: AlgebraKind) -> Result<Self, TrialitySolveError> {
        let rep = albert_rep(kind);
        let mut to_d: [Vec<Vec<Rational>>; 3] = Default::default();
        let mut from_d: [Vec<Vec<Rational>>; 3] = Default::default();
        for lang in Language::ALL {
            to_d[lang as usize] = solve_language(rep, lang, Language::D)?;
            from_d[lang as usize] = solve_language(rep, Language::D, lang)?;
        }
        Ok(TrialityMaps { kind, to_d, from_d })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// D-coordinates of the basis element `index` of `lang`.
    pub fn row(&self, lang: Language, index: usize) -> &[Rational] {
        &self.to_d[lang as usize][index]
    }

    /// Rewrites `lang` coordinates as D coordinates.
    pub fn to_d(&self, lang: Language, coords: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); SO8_DIM];
        for (x, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (y, t) in self.to_d[lang as usize][x].iter().enumerate() {
                if !t.is_zero() {
                    out[y] += &(c * t);
                }
            }
        }
        out
    }

    /// Rewrites D coordinates in `lang`.
    pub fn from_d(&self, lang: Language, coords: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); SO8_DIM];
        for (x, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (y, t) in self.from_d[lang as usize][x].iter().enumerate() {
                if !t.is_zero() {
                    out[y] += &(c * t);
                }
            }
        }
        out
    }
}

/// The cached maps for `kind`; a failed solve means the multiplication
/// table convention is broken, so it aborts.
pub fn triality_maps(kind: AlgebraKind) -> &'static TrialityMaps {
    static COMPACT: OnceLock<TrialityMaps> = OnceLock::new();
    static SPLIT: OnceLock<TrialityMaps> = OnceLock::new();
    let init = || TrialityMaps::compute(kind).unwrap_or_else(|e| panic!("triality solve: {e}"));
    match kind {
        AlgebraKind::Compact => COMPACT.get_or_init(init),
        AlgebraKind::Split => SPLIT.get_or_init(init),
    }
}

pub const F4_DIM: usize = 52;

/// Actions of the 52 basis elements `D (28), X (8), Y (8), Z (8)`.
pub fn f4_actions(kind: AlgebraKind) -> Vec<&'static SparseMatrix> {
    let rep = albert_rep(kind);
    let mut out: Vec<&SparseMatrix> = (0..SO8_DIM).map(|i| rep.diagonal(Language::D, i)).collect();
    for copy in Copy3::ALL {
        out.extend((0..8).map(|a| rep.off_diagonal(copy, a)));
    }
    out
}

/// Structure constants of the 52 actions, by commutator and exact solve.
///
/// Entry `[i][j]` holds sparse coordinates of `[e_i, e_j]`. `None` in the
/// result marks a commutator outside the span.
pub fn f4_action_brackets(kind: AlgebraKind) -> Vec<Vec<Option<SparseVec>>> {
    use rayon::prelude::*;
    let actions = f4_actions(kind);
    let solver = SpanSolver::new(
        ALBERT_DIM * ALBERT_DIM,
        actions.iter().map(|m| m.flatten()).collect(),
    )
    .expect("the 52 actions are independent");
    (0..F4_DIM)
        .into_par_iter()
        .map(|i| {
            (0..F4_DIM)
                .map(|j| {
                    let c = actions[i].commutator(actions[j]).expect("square");
                    solver
                        .solve_sparse(&c.flatten())
                        .map(|v| sparse_from_dense(&v))
                })
                .collect()
        })
        .collect()
}
