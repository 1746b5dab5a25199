//! Left, right and bi-multiplication operators and the 28-dimensional
//! operator algebra `so(8)` (compact kind) or `so(4,4)` (split kind).
//!
//! Basis order: the seven singles `L_p` (index `p - 1`), then the 21 doubles
//! `L_p L_q` with `p < q` in lexicographic order. Composition follows the
//! function convention: `L_p L_q` applies `L_q` first.

use std::fmt;
use std::sync::OnceLock;

use crate::linalg::{sparse_from_dense, RatMatrix, SpanSolver, SparseVec};
use crate::octonion::{make_table, AlgebraKind, Alphabet, Octonion, OctonionError, SignedUnit};
use crate::scalar::Rational;
use crate::wedge::{self, Wedge, WedgeModel};

pub const SO8_DIM: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum So8Error {
    #[error("operator has no left-multiplication word to convert")]
    MissingWord,
    #[error("right form needs a word of left multiplications, found {0:?}")]
    NotLeftWord(Side),
    #[error("invalid so(8) label {0:?}")]
    BadLabel(String),
    #[error(transparent)]
    Octonion(#[from] OctonionError),
}

/// `(p, None)` for the single `L_p`, `(p, Some(q))` for `L_p L_q`.
pub fn so8_element(index: usize) -> (usize, Option<usize>) {
    assert!(index < SO8_DIM);
    if index < 7 {
        return (index + 1, None);
    }
    let mut k = index - 7;
    for p in 1..7 {
        let run = 7 - p;
        if k < run {
            return (p, Some(p + 1 + k));
        }
        k -= run;
    }
    unreachable!()
}

/// Inverse of [`so8_element`]; requires `p < q`.
pub fn so8_index(p: usize, q: Option<usize>) -> usize {
    match q {
        None => {
            assert!((1..8).contains(&p));
            p - 1
        }
        Some(q) => {
            assert!(1 <= p && p < q && q < 8);
            7 + (1..p).map(|r| 7 - r).sum::<usize>() + (q - p - 1)
        }
    }
}

/// Label of a basis element: `"i"` or `"i,jl"`.
pub fn so8_label(index: usize, alphabet: Alphabet) -> String {
    match so8_element(index) {
        (p, None) => alphabet.name(p).to_string(),
        (p, Some(q)) => format!("{},{}", alphabet.name(p), alphabet.name(q)),
    }
}

/// Parses `"p"` or `"p,q"` in either order; the returned sign is `-1` when
/// the pair had to be swapped.
pub fn parse_so8_label(s: &str, alphabet: Alphabet) -> Result<(i8, usize), So8Error> {
    let bad = || So8Error::BadLabel(s.to_string());
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [p] => {
            let p = alphabet.parse(p.trim()).map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            Ok((1, so8_index(p, None)))
        }
        [p, q] => {
            let p = alphabet.parse(p.trim()).map_err(|_| bad())?;
            let q = alphabet.parse(q.trim()).map_err(|_| bad())?;
            if p == 0 || q == 0 || p == q {
                return Err(bad());
            }
            if p < q {
                Ok((1, so8_index(p, Some(q))))
            } else {
                Ok((-1, so8_index(q, Some(p))))
            }
        }
        _ => Err(bad()),
    }
}

/// A signed permutation of the eight basis units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnitMap([SignedUnit; 8]);

impl UnitMap {
    pub fn identity() -> Self {
        UnitMap(std::array::from_fn(SignedUnit::pos))
    }

    pub fn left(kind: AlgebraKind, p: usize) -> Self {
        let t = make_table(kind);
        UnitMap(std::array::from_fn(|x| t.product(p, x)))
    }

    pub fn right(kind: AlgebraKind, p: usize) -> Self {
        let t = make_table(kind);
        UnitMap(std::array::from_fn(|x| t.product(x, p)))
    }

    pub fn image(&self, x: usize) -> SignedUnit {
        self.0[x]
    }

    pub fn apply(&self, u: SignedUnit) -> SignedUnit {
        let v = self.0[u.index];
        SignedUnit::new(v.sign * u.sign, v.index)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &UnitMap) -> UnitMap {
        UnitMap(std::array::from_fn(|x| self.apply(other.0[x])))
    }

    pub fn matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(8, 8);
        for (x, img) in self.0.iter().enumerate() {
            m.set(img.index, x, Rational::from_int(img.sign as i64));
        }
        m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    Bi,
}

/// An 8x8 operator on one octonion factor, optionally remembering the word
/// of unit multiplications it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctonionOperator {
    matrix: RatMatrix,
    kind: AlgebraKind,
    word: Option<Vec<(Side, usize)>>,
}

impl OctonionOperator {
    pub fn from_matrix(kind: AlgebraKind, matrix: RatMatrix) -> Self {
        assert_eq!((matrix.rows(), matrix.cols()), (8, 8));
        OctonionOperator {
            matrix,
            kind,
            word: None,
        }
    }

    pub fn identity(kind: AlgebraKind) -> Self {
        OctonionOperator {
            matrix: RatMatrix::identity(8),
            kind,
            word: Some(Vec::new()),
        }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn word(&self) -> Option<&[(Side, usize)]> {
        self.word.as_deref()
    }

    pub fn apply(&self, x: &Octonion) -> Octonion {
        assert_eq!(x.kind(), self.kind);
        let v = self.matrix.apply(x.coords()).expect("8-vector");
        Octonion::from_coords(self.kind, std::array::from_fn(|i| v[i].clone()))
    }

    /// `self ∘ other`, concatenating words when both are known.
    pub fn compose(&self, other: &Self) -> Self {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        OctonionOperator {
            matrix: self.matrix.mul(&other.matrix).expect("8x8"),
            kind: self.kind,
            word,
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        OctonionOperator::from_matrix(
            self.kind,
            self.matrix.commutator(&other.matrix).expect("8x8"),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        OctonionOperator::from_matrix(self.kind, self.matrix.scale(s))
    }

    pub fn add(&self, other: &Self) -> Self {
        OctonionOperator::from_matrix(self.kind, self.matrix.add(&other.matrix).expect("8x8"))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Antisymmetry `M^T G + G M = 0` for the metric `G = diag(N(e_x))`.
    pub fn preserves_norm(&self) -> bool {
        let g = RatMatrix::diagonal(
            &(0..8)
                .map(|x| Rational::from_int(self.kind.unit_norm(x) as i64))
                .collect::<Vec<_>>(),
        );
        let a = self.matrix.transpose().mul(&g).expect("8x8");
        let b = g.mul(&self.matrix).expect("8x8");
        a.add(&b).expect("8x8").is_zero()
    }
}

/// Matrix of `x -> ax`, `x -> xa` or `x -> -ax - xa`.
pub fn action_operator(side: Side, a: &Octonion) -> OctonionOperator {
    let kind = a.kind();
    let t = make_table(kind);
    let mut m = RatMatrix::zeros(8, 8);
    for x in 0..8 {
        for u in 0..8 {
            let c = a.coord(u);
            if c.is_zero() {
                continue;
            }
            let mut add = |p: SignedUnit, s: i64| {
                let v = Rational::from_int(p.sign as i64 * s) * c;
                *m.entry_mut(p.index, x) += &v;
            };
            match side {
                Side::Left => add(t.product(u, x), 1),
                Side::Right => add(t.product(x, u), 1),
                Side::Bi => {
                    add(t.product(u, x), -1);
                    add(t.product(x, u), -1);
                }
            }
        }
    }
    let unit = (0..8).find(|&u| a.coord(u).is_one() && (0..8).all(|v| v == u || a.coord(v).is_zero()));
    OctonionOperator {
        matrix: m,
        kind,
        word: unit.map(|u| vec![(side, u)]),
    }
}

/// `L_p` for a basis unit.
pub fn left_unit(kind: AlgebraKind, p: usize) -> OctonionOperator {
    action_operator(Side::Left, &Octonion::unit(kind, p))
}

/// The operator `a -> a·(word)`: a left word `L_p L_q` becomes `a -> (ap)q`.
pub fn right_form(op: &OctonionOperator) -> Result<OctonionOperator, So8Error> {
    let word = op.word().ok_or(So8Error::MissingWord)?;
    let mut out = OctonionOperator::identity(op.kind());
    for &(side, u) in word {
        if side != Side::Left {
            return Err(So8Error::NotLeftWord(side));
        }
        let r = action_operator(Side::Right, &Octonion::unit(op.kind(), u));
        out = r.compose(&out);
    }
    Ok(out)
}

/// The 28 operators `L_p`, `L_p L_q`, their right forms and bracket table.
#[derive(Debug)]
pub struct So8Basis {
    kind: AlgebraKind,
    operators: Vec<OctonionOperator>,
    left: Vec<UnitMap>,
    right: Vec<UnitMap>,
    solver: SpanSolver,
    brackets: Vec<Vec<SparseVec>>,
}

fn flatten(m: &RatMatrix) -> SparseVec {
    sparse_from_dense(m.as_slice())
}

impl So8Basis {
    fn build(kind: AlgebraKind) -> Self {
        let mut operators = Vec::with_capacity(SO8_DIM);
        let mut left = Vec::with_capacity(SO8_DIM);
        let mut right = Vec::with_capacity(SO8_DIM);
        for index in 0..SO8_DIM {
            let (p, q) = so8_element(index);
            let (op, lmap, rmap) = match q {
                None => (
                    left_unit(kind, p),
                    UnitMap::left(kind, p),
                    UnitMap::right(kind, p),
                ),
                Some(q) => (
                    left_unit(kind, p).compose(&left_unit(kind, q)),
                    UnitMap::left(kind, p).compose(&UnitMap::left(kind, q)),
                    UnitMap::right(kind, q).compose(&UnitMap::right(kind, p)),
                ),
            };
            debug_assert_eq!(op.matrix(), &lmap.matrix());
            operators.push(op);
            left.push(lmap);
            right.push(rmap);
        }
        let solver = SpanSolver::new(64, operators.iter().map(|o| flatten(o.matrix())).collect())
            .expect("the 28 so(8) operators are independent");
        let brackets = (0..SO8_DIM)
            .map(|i| {
                (0..SO8_DIM)
                    .map(|j| {
                        let c = operators[i].commutator(&operators[j]);
                        let coords = solver
                            .solve_sparse(&flatten(c.matrix()))
                            .expect("so(8) operators close under commutation");
                        sparse_from_dense(&coords)
                    })
                    .collect()
            })
            .collect();
        So8Basis {
            kind,
            operators,
            left,
            right,
            solver,
            brackets,
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        SO8_DIM
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn operator(&self, index: usize) -> &OctonionOperator {
        &self.operators[index]
    }

    pub fn left_map(&self, index: usize) -> &UnitMap {
        &self.left[index]
    }

    pub fn right_map(&self, index: usize) -> &UnitMap {
        &self.right[index]
    }

    /// `d(1)` for the basis operator `d`.
    pub fn value(&self, index: usize) -> SignedUnit {
        self.left[index].image(0)
    }

    pub fn label(&self, index: usize, alphabet: Alphabet) -> String {
        so8_label(index, alphabet)
    }

    /// Coordinates of an 8x8 matrix in the basis, if it lies in the span.
    pub fn decompose(&self, m: &RatMatrix) -> Option<Vec<Rational>> {
        self.solver.solve_sparse(&flatten(m))
    }

    /// `[e_i, e_j]` as sparse basis coordinates.
    pub fn bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.brackets[i][j]
    }

    /// Matrix of `Σ c_i e_i`.
    pub fn combine(&self, coords: &[Rational]) -> RatMatrix {
        let mut m = RatMatrix::zeros(8, 8);
        for (c, op) in coords.iter().zip(&self.operators) {
            m.add_scaled(op.matrix(), c);
        }
        m
    }
}

/// The cached basis for `kind`.
pub fn so8_basis(kind: AlgebraKind) -> &'static So8Basis {
    static COMPACT: OnceLock<So8Basis> = OnceLock::new();
    static SPLIT: OnceLock<So8Basis> = OnceLock::new();
    match kind {
        AlgebraKind::Compact => COMPACT.get_or_init(|| So8Basis::build(kind)),
        AlgebraKind::Split => SPLIT.get_or_init(|| So8Basis::build(kind)),
    }
}

/// Coordinates `1, i, ..., kl` with their norms, for the bivector model.
pub fn so8_wedge_model(kind: AlgebraKind) -> WedgeModel {
    WedgeModel::new(
        (0..8).map(|x| kind.unit_norm(x)).collect(),
        (0..8).map(|x| Alphabet::K.name(x).to_string()).collect(),
    )
}

/// `L_p -> 1∧p`, `L_p L_q -> p∧q`.
pub fn so8_wedge(coords: &[Rational]) -> Wedge {
    let mut w = Wedge::new();
    for (index, c) in coords.iter().enumerate() {
        let (p, q) = so8_element(index);
        match q {
            None => wedge::add_pair(&mut w, 0, p, c),
            Some(q) => wedge::add_pair(&mut w, p, q, c),
        }
    }
    w
}

/// Which multiplication family a triality term belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    L,
    R,
    B,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::L, Family::R, Family::B];

    fn letter(self) -> char {
        match self {
            Family::L => 'L',
            Family::R => 'R',
            Family::B => 'B',
        }
    }

    fn side(self) -> Side {
        match self {
            Family::L => Side::Left,
            Family::R => Side::Right,
            Family::B => Side::Bi,
        }
    }
}

/// `F_p`, or the double `F_p F_q := [F_p, F_q]/2` with `p < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub family: Family,
    pub index: usize,
}

impl Term {
    pub fn new(family: Family, index: usize) -> Self {
        Term { family, index }
    }

    pub fn matrix(&self, kind: AlgebraKind) -> RatMatrix {
        family_matrix(kind, self.family, self.index)
    }

    /// Number of subscripts that contain `l`.
    pub fn ell_count(&self) -> usize {
        let (p, q) = so8_element(self.index);
        (p >= 4) as usize + q.map_or(0, |q| (q >= 4) as usize)
    }

    pub fn display(&self, alphabet: Alphabet) -> String {
        let f = self.family.letter();
        match so8_element(self.index) {
            (p, None) => format!("{f}_{}", alphabet.name(p)),
            (p, Some(q)) => format!("{f}_{}{f}_{}", alphabet.name(p), alphabet.name(q)),
        }
    }
}

fn family_matrix(kind: AlgebraKind, family: Family, index: usize) -> RatMatrix {
    let single = |p: usize| action_operator(family.side(), &Octonion::unit(kind, p));
    match so8_element(index) {
        (p, None) => single(p).matrix().clone(),
        (p, Some(q)) => single(p)
            .commutator(&single(q))
            .matrix()
            .scale(&Rational::new(1, 2)),
    }
}

fn family_solver(kind: AlgebraKind, family: Family) -> &'static SpanSolver {
    static CELLS: [OnceLock<SpanSolver>; 6] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let slot = (kind as usize) * 3 + family as usize;
    CELLS[slot].get_or_init(|| {
        let vectors = (0..SO8_DIM)
            .map(|i| flatten(&family_matrix(kind, family, i)))
            .collect();
        SpanSolver::new(64, vectors).expect("each family spans so(8)")
    })
}

/// `lhs = Σ c · term`, checked by matrix equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub kind: AlgebraKind,
    pub lhs: Term,
    pub terms: Vec<(Rational, Term)>,
}

impl Expansion {
    pub fn coefficient(&self, term: Term) -> Rational {
        self.terms
            .iter()
            .find(|(_, t)| *t == term)
            .map_or_else(Rational::zero, |(c, _)| c.clone())
    }

    pub fn display(&self, alphabet: Alphabet) -> String {
        let rhs: Vec<String> = self
            .terms
            .iter()
            .map(|(c, t)| format!("{c} {}", t.display(alphabet)))
            .collect();
        format!("{} = {}", self.lhs.display(alphabet), rhs.join(" + "))
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Alphabet::K))
    }
}

/// Writes basis element `index` of family `from` in the family `to`.
pub fn triality_expand(kind: AlgebraKind, from: Family, to: Family, index: usize) -> Expansion {
    let lhs = family_matrix(kind, from, index);
    let coords = family_solver(kind, to)
        .solve_sparse(&flatten(&lhs))
        .expect("every family spans the same so(8)");
    Expansion {
        kind,
        lhs: Term::new(from, index),
        terms: coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, Term::new(to, i)))
            .collect(),
    }
}

/// All 28 expansions of `from` in `to`.
pub fn triality_table(kind: AlgebraKind, from: Family, to: Family) -> Vec<Expansion> {
    (0..SO8_DIM)
        .map(|i| triality_expand(kind, from, to, i))
        .collect()
}
