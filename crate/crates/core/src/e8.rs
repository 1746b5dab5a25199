//! Symbolic 3x3 matrices over `K⊗L` and the 248-dimensional bracket.
//!
//! Diagonal entries are `so(8)` operators on each factor, stored as basis
//! coordinates slot by slot. Off-diagonal entries are elements of `K⊗L`.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::albert::{triality_maps, Copy3, Language, TrialityMaps};
use crate::linalg::{sparse_from_dense, SparseVec};
use crate::octonion::{make_table, AlgebraKind, Alphabet};
use crate::scalar::Rational;
use crate::so8::{so8_basis, so8_element, so8_label, So8Basis, UnitMap, SO8_DIM};

pub const E8_DIM: usize = 248;
pub const TENSOR_DIM: usize = 64;
const OFF_START: usize = 2 * SO8_DIM;

/// The kinds of the two octonion factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Kinds {
    pub k: AlgebraKind,
    pub l: AlgebraKind,
}

impl Kinds {
    pub fn new(k: AlgebraKind, l: AlgebraKind) -> Self {
        Kinds { k, l }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    K,
    L,
}

/// A basis element of the 248-dimensional space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum E8Basis {
    Diag(Factor, usize),
    Off(Copy3, usize, usize),
}

pub fn e8_basis(index: usize) -> E8Basis {
    assert!(index < E8_DIM, "e8 index {index} out of range");
    match index {
        i if i < SO8_DIM => E8Basis::Diag(Factor::K, i),
        i if i < OFF_START => E8Basis::Diag(Factor::L, i - SO8_DIM),
        i => {
            let o = i - OFF_START;
            let copy = Copy3::ALL[o / TENSOR_DIM];
            E8Basis::Off(copy, (o % TENSOR_DIM) / 8, o % 8)
        }
    }
}

pub fn e8_index(b: E8Basis) -> usize {
    match b {
        E8Basis::Diag(Factor::K, i) => i,
        E8Basis::Diag(Factor::L, i) => SO8_DIM + i,
        E8Basis::Off(copy, a, big_a) => OFF_START + copy as usize * TENSOR_DIM + a * 8 + big_a,
    }
}

/// Label such as `D:k:i,il`, `D:l:I`, or `Y:j,KL`.
pub fn e8_label(index: usize) -> String {
    match e8_basis(index) {
        E8Basis::Diag(Factor::K, i) => format!("D:k:{}", so8_label(i, Alphabet::K)),
        E8Basis::Diag(Factor::L, i) => format!("D:l:{}", so8_label(i, Alphabet::L)),
        E8Basis::Off(copy, a, big_a) => format!(
            "{}:{},{}",
            copy.letter(),
            Alphabet::K.name(a),
            Alphabet::L.name(big_a)
        ),
    }
}

fn unit_conj_sign(x: usize) -> i64 {
    if x == 0 {
        1
    } else {
        -1
    }
}

/// An element `Σ c[a][A] a⊗A` of `K⊗L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorValue {
    coeffs: Vec<Rational>,
}

impl Default for TensorValue {
    fn default() -> Self {
        TensorValue::zero()
    }
}

impl TensorValue {
    pub fn zero() -> Self {
        TensorValue {
            coeffs: vec![Rational::zero(); TENSOR_DIM],
        }
    }

    pub fn unit(a: usize, big_a: usize, c: Rational) -> Self {
        let mut t = TensorValue::zero();
        t.coeffs[a * 8 + big_a] = c;
        t
    }

    pub fn get(&self, a: usize, big_a: usize) -> &Rational {
        &self.coeffs[a * 8 + big_a]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i / 8, i % 8, c))
    }

    fn add_at(&mut self, a: usize, big_a: usize, c: &Rational) {
        self.coeffs[a * 8 + big_a] += c;
    }

    pub fn add_scaled(&mut self, other: &TensorValue, s: &Rational) {
        for (a, b, c) in other.nonzeros() {
            self.coeffs[a * 8 + b] += &(c * s);
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TensorValue {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Factorwise conjugation `conj(a)⊗conj(A)`.
    pub fn conj(&self) -> Self {
        let mut out = TensorValue::zero();
        for (a, b, c) in self.nonzeros() {
            out.coeffs[a * 8 + b] = c * &Rational::from_int(unit_conj_sign(a) * unit_conj_sign(b));
        }
        out
    }

    /// Factorwise product `(a⊗A)(b⊗B) = ab⊗AB`.
    pub fn product(&self, other: &TensorValue, kinds: Kinds) -> TensorValue {
        let (tk, tl) = (make_table(kinds.k), make_table(kinds.l));
        let mut out = TensorValue::zero();
        for (a, big_a, x) in self.nonzeros() {
            for (b, big_b, y) in other.nonzeros() {
                let (s, t) = (tk.product(a, b), tl.product(big_a, big_b));
                let c = x * y * Rational::from_int((s.sign * t.sign) as i64);
                out.add_at(s.index, t.index, &c);
            }
        }
        out
    }

    /// Adds `coeff * (m ⊗ 1)(self)` or `coeff * (1 ⊗ m)(self)` into `out`.
    fn map_into(&self, factor: Factor, m: &UnitMap, coeff: &Rational, out: &mut TensorValue) {
        for (a, big_a, c) in self.nonzeros() {
            let v = c * coeff;
            match factor {
                Factor::K => {
                    let img = m.image(a);
                    out.add_at(img.index, big_a, &(v * Rational::from_int(img.sign as i64)));
                }
                Factor::L => {
                    let img = m.image(big_a);
                    out.add_at(a, img.index, &(v * Rational::from_int(img.sign as i64)));
                }
            }
        }
    }

    pub fn display(&self) -> String {
        let terms: Vec<String> = self
            .nonzeros()
            .map(|(a, b, c)| format!("{c} {}⊗{}", Alphabet::K.name(a), Alphabet::L.name(b)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Diagonal operator data: per slot, `so(8)` coordinates on each factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSlots {
    pub lang: Language,
    pub k: [Vec<Rational>; 3],
    pub l: [Vec<Rational>; 3],
}

fn zero_slots() -> [Vec<Rational>; 3] {
    std::array::from_fn(|_| vec![Rational::zero(); SO8_DIM])
}

/// Places `coords` of one language into the three slots.
fn spread(lang: Language, coords: &[Rational]) -> [Vec<Rational>; 3] {
    let (single, double) = lang.slot_pattern();
    let mut slots = zero_slots();
    for (i, c) in coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let pattern = if so8_element(i).1.is_none() { single } else { double };
        for (s, &sign) in pattern.iter().enumerate() {
            if sign != 0 {
                slots[s][i] = c * &Rational::from_int(sign as i64);
            }
        }
    }
    slots
}

impl DiagonalSlots {
    pub fn zero(lang: Language) -> Self {
        DiagonalSlots {
            lang,
            k: zero_slots(),
            l: zero_slots(),
        }
    }

    /// The diagonal matrix with `k` and `l` coordinates written in `lang`.
    pub fn from_language(lang: Language, k: &[Rational], l: &[Rational]) -> Self {
        DiagonalSlots {
            lang,
            k: spread(lang, k),
            l: spread(lang, l),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.k.iter().chain(&self.l).all(|s| s.iter().all(Rational::is_zero))
    }

    fn slot(&self, factor: Factor, s: usize) -> &[Rational] {
        match factor {
            Factor::K => &self.k[s],
            Factor::L => &self.l[s],
        }
    }
}

/// A 3x3 matrix with operator diagonal and `K⊗L` off-diagonal entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix3 {
    pub kinds: Kinds,
    pub diag: DiagonalSlots,
    off: Vec<TensorValue>,
}

impl SymbolicMatrix3 {
    pub fn zero(kinds: Kinds, lang: Language) -> Self {
        SymbolicMatrix3 {
            kinds,
            diag: DiagonalSlots::zero(lang),
            off: vec![TensorValue::zero(); 9],
        }
    }

    pub fn entry(&self, r: usize, c: usize) -> &TensorValue {
        assert_ne!(r, c, "diagonal entries are operators");
        &self.off[r * 3 + c]
    }

    fn entry_mut(&mut self, r: usize, c: usize) -> &mut TensorValue {
        &mut self.off[r * 3 + c]
    }

    /// Puts `v` in the copy's slot and `-conj(v)` in the mirror slot.
    pub fn add_off_diagonal(&mut self, copy: Copy3, v: &TensorValue) {
        let (r, c) = copy.position();
        self.entry_mut(r, c).add_scaled(v, &Rational::one());
        self.entry_mut(c, r).add_scaled(&v.conj(), &Rational::from_int(-1));
    }

    /// First off-diagonal position violating `entry(c, r) = -conj(entry(r, c))`.
    pub fn anti_hermitian_violation(&self) -> Option<(usize, usize)> {
        for copy in Copy3::ALL {
            let (r, c) = copy.position();
            let mut sum = self.entry(c, r).clone();
            sum.add_scaled(&self.entry(r, c).conj(), &Rational::one());
            if !sum.is_zero() {
                return Some((r, c));
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("diagonal languages {0:?} and {1:?} are mixed")]
    MixedLanguages(Language, Language),
    #[error("internal error: commutator is not anti-Hermitian at ({row}, {col})")]
    NotAntiHermitian { row: usize, col: usize },
    #[error("closure violation: slot {slot} has a K⊗L cross term")]
    CrossTerm { slot: usize },
    #[error("closure violation: slot {slot} has an identity term")]
    IdentityTerm { slot: usize },
    #[error("closure violation: single {index} on factor {factor:?} is not traceless across slots")]
    NotTraceless { factor: Factor, index: usize },
}

/// Per-factor data used by the evaluation rules.
struct FactorData {
    basis: &'static So8Basis,
    maps: &'static TrialityMaps,
    /// `x -> x d(1)` for each basis operator `d`.
    value_right: Vec<(Rational, UnitMap)>,
    /// `L_a L_b` over `I` (index 0) and the 28 basis operators.
    words: Vec<SparseVec>,
}

impl FactorData {
    fn new(kind: AlgebraKind) -> Self {
        let basis = so8_basis(kind);
        let value_right = (0..SO8_DIM)
            .map(|i| {
                let v = basis.value(i);
                (Rational::from_int(v.sign as i64), UnitMap::right(kind, v.index))
            })
            .collect();
        let mut words = Vec::with_capacity(TENSOR_DIM);
        for a in 0..8 {
            for b in 0..8 {
                let m = UnitMap::left(kind, a).compose(&UnitMap::left(kind, b));
                let id = (0..8).all(|x| m.image(x).index == x && m.image(x).sign == m.image(0).sign);
                let word = if id {
                    vec![(0, Rational::from_int(m.image(0).sign as i64))]
                } else {
                    let coords = basis
                        .decompose(&m.matrix())
                        .expect("L_a L_b lies in the span of I and so(8)");
                    sparse_from_dense(&coords)
                        .into_iter()
                        .map(|(i, c)| (i + 1, c))
                        .collect()
                };
                words.push(word);
            }
        }
        FactorData {
            basis,
            maps: triality_maps(kind),
            value_right,
            words,
        }
    }

    /// D coordinates of raw slot data, or the first single that is not traceless.
    fn canonicalize(&self, factor: Factor, slots: &[Vec<Rational>; 3]) -> Result<Vec<Rational>, EngineError> {
        let half = Rational::new(1, 2);
        let mut alpha = vec![Rational::zero(); SO8_DIM];
        let mut beta = vec![Rational::zero(); SO8_DIM];
        let mut gamma = vec![Rational::zero(); SO8_DIM];
        for i in 0..SO8_DIM {
            let (s0, s1, s2) = (&slots[0][i], &slots[1][i], &slots[2][i]);
            if so8_element(i).1.is_none() {
                if !(s0 + s1 + s2).is_zero() {
                    return Err(EngineError::NotTraceless { factor, index: i });
                }
                alpha[i] = s0.clone();
                beta[i] = -s2;
            } else {
                alpha[i] = (s0 + s1 - s2) * &half;
                beta[i] = (s1 + s2 - s0) * &half;
                gamma[i] = (s0 + s2 - s1) * &half;
            }
        }
        let e = self.maps.to_d(Language::E, &beta);
        let f = self.maps.to_d(Language::F, &gamma);
        Ok((0..SO8_DIM).map(|i| &alpha[i] + &e[i] + &f[i]).collect())
    }
}

/// The evaluation engine for one pair of kinds.
pub struct Engine {
    kinds: Kinds,
    k: FactorData,
    l: FactorData,
    basis: OnceLock<Vec<SymbolicMatrix3>>,
}

/// The cached engine for `kinds`.
pub fn engine(kinds: Kinds) -> &'static Engine {
    static CELLS: [OnceLock<Engine>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = (kinds.k as usize) * 2 + kinds.l as usize;
    CELLS[slot].get_or_init(|| Engine {
        kinds,
        k: FactorData::new(kinds.k),
        l: FactorData::new(kinds.l),
        basis: OnceLock::new(),
    })
}

/// Raw commutator data before decomposition.
struct Raw {
    k: [Vec<Rational>; 3],
    l: [Vec<Rational>; 3],
    words: [HashMap<(usize, usize), Rational>; 3],
    off: SymbolicMatrix3,
}

impl Engine {
    pub fn kinds(&self) -> Kinds {
        self.kinds
    }

    fn factor(&self, f: Factor) -> &FactorData {
        match f {
            Factor::K => &self.k,
            Factor::L => &self.l,
        }
    }

    /// The D-language matrix of `coords` over the 248-basis.
    pub fn realize(&self, coords: &[Rational]) -> SymbolicMatrix3 {
        assert_eq!(coords.len(), E8_DIM);
        let mut m = SymbolicMatrix3::zero(self.kinds, Language::D);
        m.diag = DiagonalSlots::from_language(Language::D, &coords[..SO8_DIM], &coords[SO8_DIM..OFF_START]);
        for copy in Copy3::ALL {
            let start = OFF_START + copy as usize * TENSOR_DIM;
            let v = TensorValue {
                coeffs: coords[start..start + TENSOR_DIM].to_vec(),
            };
            if !v.is_zero() {
                m.add_off_diagonal(copy, &v);
            }
        }
        m
    }

    /// A diagonal matrix written in `lang` on both factors.
    pub fn realize_language(&self, lang: Language, k: &[Rational], l: &[Rational]) -> SymbolicMatrix3 {
        let mut m = SymbolicMatrix3::zero(self.kinds, lang);
        m.diag = DiagonalSlots::from_language(lang, k, l);
        m
    }

    /// Realizations of the 248 basis elements.
    pub fn basis_matrices(&self) -> &[SymbolicMatrix3] {
        self.basis.get_or_init(|| {
            (0..E8_DIM)
                .map(|i| {
                    let mut e = vec![Rational::zero(); E8_DIM];
                    e[i] = Rational::one();
                    self.realize(&e)
                })
                .collect()
        })
    }

    /// `sign * d_r(v)` into `out`, with `d_r` acting by its left form.
    fn left_apply(&self, diag: &DiagonalSlots, r: usize, v: &TensorValue, sign: &Rational, out: &mut TensorValue) {
        for f in [Factor::K, Factor::L] {
            let fd = self.factor(f);
            for (i, c) in diag.slot(f, r).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                v.map_into(f, fd.basis.left_map(i), &(c * sign), out);
            }
        }
    }

    /// `sign * (v d_c)` into `out`: right multiplication by `d_c(1)` when the
    /// language belongs to this copy, otherwise the right form of `d_c`.
    fn right_apply(
        &self,
        diag: &DiagonalSlots,
        c: usize,
        two_sided: bool,
        v: &TensorValue,
        sign: &Rational,
        out: &mut TensorValue,
    ) {
        for f in [Factor::K, Factor::L] {
            let fd = self.factor(f);
            for (i, x) in diag.slot(f, c).iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                if two_sided {
                    let (s, m) = &fd.value_right[i];
                    v.map_into(f, m, &(x * sign * s), out);
                } else {
                    v.map_into(f, fd.basis.right_map(i), &(x * sign), out);
                }
            }
        }
    }

    /// Adds `sign * (U V)` for the parts of the product that involve an
    /// off-diagonal entry.
    fn add_product(&self, u: &SymbolicMatrix3, v: &SymbolicMatrix3, sign: &Rational, raw: &mut Raw) {
        for r in 0..3 {
            for c in 0..3 {
                if r == c {
                    continue;
                }
                let two_sided = Copy3::from_position(r, c)
                    .map(|(cp, _)| cp.language())
                    .expect("off-diagonal position");
                let ve = v.entry(r, c);
                if !ve.is_zero() {
                    self.left_apply(&u.diag, r, ve, sign, raw.off.entry_mut(r, c));
                }
                let ue = u.entry(r, c);
                if !ue.is_zero() {
                    let lang = v.diag.lang;
                    self.right_apply(&v.diag, c, two_sided == lang, ue, sign, raw.off.entry_mut(r, c));
                }
            }
        }
        for r in 0..3 {
            for m in 0..3 {
                if m == r {
                    continue;
                }
                let ue = u.entry(r, m);
                if ue.is_zero() {
                    continue;
                }
                for t in 0..3 {
                    if t == m {
                        continue;
                    }
                    let ve = v.entry(m, t);
                    if ve.is_zero() {
                        continue;
                    }
                    if r != t {
                        let p = ue.product(ve, self.kinds);
                        raw.off.entry_mut(r, t).add_scaled(&p, sign);
                    } else {
                        self.add_words(ue, ve, sign, &mut raw.words[r]);
                    }
                }
            }
        }
    }

    /// Adds `sign * (L_a L_b ⊗ L_A L_B)` word coordinates for entry products.
    fn add_words(&self, u: &TensorValue, v: &TensorValue, sign: &Rational, grid: &mut HashMap<(usize, usize), Rational>) {
        for (a, big_a, x) in u.nonzeros() {
            for (b, big_b, y) in v.nonzeros() {
                let xy = x * y * sign;
                for (wk, ck) in &self.k.words[a * 8 + b] {
                    for (wl, cl) in &self.l.words[big_a * 8 + big_b] {
                        let e = grid.entry((*wk, *wl)).or_default();
                        *e += &(&xy * ck * cl);
                    }
                }
            }
        }
    }

    fn raw_commutator(&self, u: &SymbolicMatrix3, v: &SymbolicMatrix3) -> Result<Raw, EngineError> {
        let mut raw = Raw {
            k: zero_slots(),
            l: zero_slots(),
            words: Default::default(),
            off: SymbolicMatrix3::zero(self.kinds, Language::D),
        };
        if !u.diag.is_zero() && !v.diag.is_zero() {
            if u.diag.lang != v.diag.lang {
                return Err(EngineError::MixedLanguages(u.diag.lang, v.diag.lang));
            }
            for (f, out) in [(Factor::K, &mut raw.k), (Factor::L, &mut raw.l)] {
                let basis = self.factor(f).basis;
                for (s, slot) in out.iter_mut().enumerate() {
                    let (us, vs) = (u.diag.slot(f, s), v.diag.slot(f, s));
                    for (i, x) in us.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                        for (j, y) in vs.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                            let xy = x * y;
                            for (k, c) in basis.bracket(i, j) {
                                slot[*k] += &(&xy * c);
                            }
                        }
                    }
                }
            }
        }
        self.add_product(u, v, &Rational::one(), &mut raw);
        self.add_product(v, u, &Rational::from_int(-1), &mut raw);
        Ok(raw)
    }

    fn decompose_raw(&self, mut raw: Raw) -> Result<Vec<Rational>, EngineError> {
        if let Some((row, col)) = raw.off.anti_hermitian_violation() {
            return Err(EngineError::NotAntiHermitian { row, col });
        }
        for (slot, grid) in raw.words.iter().enumerate() {
            for (&(wk, wl), c) in grid {
                if c.is_zero() {
                    continue;
                }
                match (wk, wl) {
                    (0, 0) => return Err(EngineError::IdentityTerm { slot }),
                    (0, wl) => raw.l[slot][wl - 1] += c,
                    (wk, 0) => raw.k[slot][wk - 1] += c,
                    _ => return Err(EngineError::CrossTerm { slot }),
                }
            }
        }
        let mut out = self.k.canonicalize(Factor::K, &raw.k)?;
        out.extend(self.l.canonicalize(Factor::L, &raw.l)?);
        for copy in Copy3::ALL {
            let (r, c) = copy.position();
            out.extend_from_slice(raw.off.entry(r, c).coeffs());
        }
        Ok(out)
    }

    /// 248-coordinates of a matrix in any diagonal language.
    pub fn decompose(&self, m: &SymbolicMatrix3) -> Result<Vec<Rational>, EngineError> {
        let mut out = self.k.canonicalize(Factor::K, &m.diag.k)?;
        out.extend(self.l.canonicalize(Factor::L, &m.diag.l)?);
        if let Some((row, col)) = m.anti_hermitian_violation() {
            return Err(EngineError::NotAntiHermitian { row, col });
        }
        for copy in Copy3::ALL {
            let (r, c) = copy.position();
            out.extend_from_slice(m.entry(r, c).coeffs());
        }
        Ok(out)
    }

    /// `[U, V] = UV - VU` decomposed over the 248-basis.
    pub fn commutator(&self, u: &SymbolicMatrix3, v: &SymbolicMatrix3) -> Result<Vec<Rational>, EngineError> {
        self.decompose_raw(self.raw_commutator(u, v)?)
    }

    /// Bracket of dense 248-coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, EngineError> {
        self.commutator(&self.realize(x), &self.realize(y))
    }

    /// Bracket of two basis elements as sparse coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Result<SparseVec, EngineError> {
        let b = self.basis_matrices();
        self.commutator(&b[i], &b[j]).map(|v| sparse_from_dense(&v))
    }

    /// D coordinates of `coords` written in `lang` on `factor`.
    pub fn to_d(&self, factor: Factor, lang: Language, coords: &[Rational]) -> Vec<Rational> {
        self.factor(factor).maps.to_d(lang, coords)
    }

    /// `lang` coordinates of D-coordinates on `factor`.
    pub fn from_d(&self, factor: Factor, lang: Language, coords: &[Rational]) -> Vec<Rational> {
        self.factor(factor).maps.from_d(lang, coords)
    }

    /// The same element with its diagonal rewritten in `lang`.
    pub fn translate(&self, m: &SymbolicMatrix3, lang: Language) -> Result<SymbolicMatrix3, EngineError> {
        let k = self.k.canonicalize(Factor::K, &m.diag.k)?;
        let l = self.l.canonicalize(Factor::L, &m.diag.l)?;
        let mut out = m.clone();
        out.diag = DiagonalSlots::from_language(
            lang,
            &self.k.maps.from_d(lang, &k),
            &self.l.maps.from_d(lang, &l),
        );
        Ok(out)
    }
}

/// Dense unit vector of length `n`.
pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
