//! Compact and split octonions over the rationals.
//!
//! The basis is `1, i, j, k, l, il, jl, kl` (indices 0..7); the second
//! alphabet `1, I, J, K, L, IL, JL, KL` shares the same indices and table.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use crate::scalar::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    Compact,
    Split,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 2] = [AlgebraKind::Compact, AlgebraKind::Split];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraKind::Compact => "compact",
            AlgebraKind::Split => "split",
        }
    }

    /// Square of the imaginary unit at `index`, as a sign.
    pub fn unit_square(self, index: usize) -> i8 {
        match (self, index) {
            (_, 0) => 1,
            (AlgebraKind::Split, 4..=7) => 1,
            _ => -1,
        }
    }

    /// `N(e_index)`: `+1` for the unit, `-(e^2)` otherwise.
    pub fn unit_norm(self, index: usize) -> i8 {
        if index == 0 {
            1
        } else {
            -self.unit_square(index)
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraKind {
    type Err = OctonionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "compact" => Ok(AlgebraKind::Compact),
            "split" => Ok(AlgebraKind::Split),
            other => Err(OctonionError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OctonionError {
    #[error("cannot combine {0} and {1} octonions")]
    KindMismatch(AlgebraKind, AlgebraKind),
    #[error("the seven-cycle is a symmetry of the compact octonions only")]
    NoSevenCycle,
    #[error("unit {0} is not imaginary")]
    NotImaginary(usize),
    #[error("unknown octonion kind {0:?} (expected compact or split)")]
    UnknownKind(String),
    #[error("unknown octonion unit {0:?}")]
    UnknownUnit(String),
}

/// Which letter set is used to print unit names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    K,
    L,
}

const K_NAMES: [&str; 8] = ["1", "i", "j", "k", "l", "il", "jl", "kl"];
const L_NAMES: [&str; 8] = ["1", "I", "J", "K", "L", "IL", "JL", "KL"];

impl Alphabet {
    pub fn name(self, index: usize) -> &'static str {
        match self {
            Alphabet::K => K_NAMES[index],
            Alphabet::L => L_NAMES[index],
        }
    }

    pub fn parse(self, name: &str) -> Result<usize, OctonionError> {
        let names = match self {
            Alphabet::K => &K_NAMES,
            Alphabet::L => &L_NAMES,
        };
        let normalized = name.replace('ℓ', "l");
        names
            .iter()
            .position(|n| *n == normalized)
            .ok_or_else(|| OctonionError::UnknownUnit(name.to_string()))
    }
}

/// `± e_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedUnit {
    pub sign: i8,
    pub index: usize,
}

impl SignedUnit {
    pub fn new(sign: i8, index: usize) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        debug_assert!(index < 8);
        SignedUnit { sign, index }
    }

    pub fn pos(index: usize) -> Self {
        SignedUnit::new(1, index)
    }

    pub fn conj(self) -> Self {
        if self.index == 0 {
            self
        } else {
            -self
        }
    }

    pub fn display(self, alphabet: Alphabet) -> String {
        let name = alphabet.name(self.index);
        if self.sign < 0 {
            format!("-{name}")
        } else {
            name.to_string()
        }
    }
}

impl Neg for SignedUnit {
    type Output = SignedUnit;

    fn neg(self) -> SignedUnit {
        SignedUnit {
            sign: -self.sign,
            index: self.index,
        }
    }
}

/// Products of basis units for one kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTable {
    kind: AlgebraKind,
    products: [[SignedUnit; 8]; 8],
}

const QUAT: [[(i8, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

fn quat(a: SignedUnit, b: SignedUnit) -> SignedUnit {
    let (s, i) = QUAT[a.index][b.index];
    SignedUnit::new(s * a.sign * b.sign, i)
}

/// One Cayley-Dickson doubling `(a,b)(c,d) = (ac + g d̄b, da + bc̄)` with
/// `l^2 = g`; `flip` relabels `l -> -l`.
fn doubled(kind: AlgebraKind, flip: bool) -> [[SignedUnit; 8]; 8] {
    let gamma: i8 = match kind {
        AlgebraKind::Compact => -1,
        AlgebraKind::Split => 1,
    };
    let relabel = |u: SignedUnit| {
        if flip && u.index >= 4 {
            -u
        } else {
            u
        }
    };
    let mut out = [[SignedUnit::pos(0); 8]; 8];
    for (u, row) in out.iter_mut().enumerate() {
        for (v, cell) in row.iter_mut().enumerate() {
            let x = relabel(SignedUnit::pos(u));
            let y = relabel(SignedUnit::pos(v));
            let (xa, xb) = (x.index < 4, x.index >= 4);
            let q = |s: SignedUnit| SignedUnit::new(s.sign, s.index % 4);
            let (xq, yq) = (q(x), q(y));
            let prod = match (xa, y.index < 4) {
                (true, true) => quat(xq, yq),
                (true, false) => {
                    let r = quat(yq, xq);
                    SignedUnit::new(r.sign, r.index + 4)
                }
                (false, true) => {
                    let r = quat(xq, yq.conj());
                    SignedUnit::new(r.sign, r.index + 4)
                }
                (false, false) => {
                    debug_assert!(xb);
                    let r = quat(yq.conj(), xq);
                    SignedUnit::new(r.sign * gamma, r.index)
                }
            };
            *cell = relabel(prod);
        }
    }
    out
}

/// The seven-fold symmetry `i -> j -> l -> k -> jl -> -kl -> il -> i`.
const SEVEN_CYCLE: [(i8, usize); 8] = [
    (1, 0),
    (1, 2),
    (1, 4),
    (1, 6),
    (1, 3),
    (1, 1),
    (-1, 7),
    (-1, 5),
];

fn cycle_image(u: SignedUnit) -> SignedUnit {
    let (s, i) = SEVEN_CYCLE[u.index];
    SignedUnit::new(s * u.sign, i)
}

impl MultiplicationTable {
    fn from_products(kind: AlgebraKind, products: [[SignedUnit; 8]; 8]) -> Self {
        MultiplicationTable { kind, products }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn product(&self, a: usize, b: usize) -> SignedUnit {
        self.products[a][b]
    }

    pub fn mul_units(&self, a: SignedUnit, b: SignedUnit) -> SignedUnit {
        let p = self.products[a.index][b.index];
        SignedUnit::new(p.sign * a.sign * b.sign, p.index)
    }

    /// Every failed pinning identity, by name.
    pub fn pinning_failures(&self) -> Vec<&'static str> {
        let mut failures = Vec::new();
        let u = SignedUnit::pos;
        let m = |a, b| self.mul_units(a, b);
        let (i, j, k, l) = (u(1), u(2), u(3), u(4));
        if (0..8).any(|x| self.product(0, x) != u(x) || self.product(x, 0) != u(x)) {
            failures.push("unit is a two-sided identity");
        }
        if (1..8).any(|x| self.product(x, x) != SignedUnit::new(self.kind.unit_square(x), 0)) {
            failures.push("unit squares");
        }
        if (1..8).any(|x| (1..8).any(|y| x != y && self.product(x, y) != -self.product(y, x))) {
            failures.push("imaginary units anticommute");
        }
        if m(i, j) != k {
            failures.push("ij = k");
        }
        if m(m(i, j), l) != -m(i, m(j, l)) {
            failures.push("(ij)l = -i(jl)");
        }
        let alternative = (0..8).all(|x| {
            (0..8).all(|y| {
                m(m(u(x), u(x)), u(y)) == m(u(x), m(u(x), u(y)))
                    && m(m(u(x), u(y)), u(y)) == m(u(x), m(u(y), u(y)))
            })
        });
        if !alternative {
            failures.push("alternativity");
        }
        if self.kind == AlgebraKind::Compact {
            let automorphism = (1..8).all(|x| {
                (1..8).all(|y| {
                    cycle_image(self.product(x, y)) == m(cycle_image(u(x)), cycle_image(u(y)))
                })
            });
            if !automorphism {
                failures.push("seven-cycle is an automorphism");
            }
        }
        failures
    }

    /// Signed-index grid, one row per line, for display.
    pub fn render(&self, alphabet: Alphabet) -> String {
        let mut out = String::new();
        let width = 4;
        out.push_str(&format!("{:>width$}", ""));
        for b in 0..8 {
            out.push_str(&format!("{:>width$}", alphabet.name(b)));
        }
        out.push('\n');
        for a in 0..8 {
            out.push_str(&format!("{:>width$}", alphabet.name(a)));
            for b in 0..8 {
                out.push_str(&format!("{:>width$}", self.product(a, b).display(alphabet)));
            }
            out.push('\n');
        }
        out
    }

    /// `[[sign * index, ...], ...]` with index offset by one so the sign of 1 survives.
    pub fn signed_indices(&self) -> [[i64; 8]; 8] {
        let mut out = [[0i64; 8]; 8];
        for (a, row) in out.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                let p = self.product(a, b);
                *cell = p.sign as i64 * (p.index as i64 + 1);
            }
        }
        out
    }
}

fn build_table(kind: AlgebraKind) -> MultiplicationTable {
    for flip in [false, true] {
        let table = MultiplicationTable::from_products(kind, doubled(kind, flip));
        if table.pinning_failures().is_empty() {
            return table;
        }
    }
    panic!("no doubling convention satisfies the pinning identities for {kind}");
}

/// The validated table for `kind`; built once and shared.
pub fn make_table(kind: AlgebraKind) -> &'static MultiplicationTable {
    static COMPACT: OnceLock<MultiplicationTable> = OnceLock::new();
    static SPLIT: OnceLock<MultiplicationTable> = OnceLock::new();
    match kind {
        AlgebraKind::Compact => COMPACT.get_or_init(|| build_table(kind)),
        AlgebraKind::Split => SPLIT.get_or_init(|| build_table(kind)),
    }
}

/// Image of an imaginary signed unit under the compact seven-cycle.
pub fn seven_cycle(kind: AlgebraKind, unit: SignedUnit) -> Result<SignedUnit, OctonionError> {
    if kind != AlgebraKind::Compact {
        return Err(OctonionError::NoSevenCycle);
    }
    if unit.index == 0 {
        return Err(OctonionError::NotImaginary(0));
    }
    Ok(cycle_image(unit))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Octonion {
    coords: [Rational; 8],
    kind: AlgebraKind,
}

impl Octonion {
    pub fn zero(kind: AlgebraKind) -> Self {
        Octonion {
            coords: std::array::from_fn(|_| Rational::zero()),
            kind,
        }
    }

    pub fn unit(kind: AlgebraKind, index: usize) -> Self {
        let mut o = Octonion::zero(kind);
        o.coords[index] = Rational::one();
        o
    }

    pub fn signed_unit(kind: AlgebraKind, u: SignedUnit) -> Self {
        let mut o = Octonion::zero(kind);
        o.coords[u.index] = Rational::from_int(u.sign as i64);
        o
    }

    pub fn from_coords(kind: AlgebraKind, coords: [Rational; 8]) -> Self {
        Octonion { coords, kind }
    }

    pub fn from_ints(kind: AlgebraKind, coords: [i64; 8]) -> Self {
        Octonion {
            coords: coords.map(Rational::from_int),
            kind,
        }
    }

    pub fn real(kind: AlgebraKind, r: Rational) -> Self {
        let mut o = Octonion::zero(kind);
        o.coords[0] = r;
        o
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn coords(&self) -> &[Rational; 8] {
        &self.coords
    }

    pub fn coord(&self, index: usize) -> &Rational {
        &self.coords[index]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Octonion {
            coords: std::array::from_fn(|i| &self.coords[i] * s),
            kind: self.kind,
        }
    }

    pub fn conjugate(&self) -> Self {
        Octonion {
            coords: std::array::from_fn(|i| {
                if i == 0 {
                    self.coords[0].clone()
                } else {
                    -&self.coords[i]
                }
            }),
            kind: self.kind,
        }
    }

    fn check_kind(&self, other: &Self) -> Result<(), OctonionError> {
        if self.kind != other.kind {
            return Err(OctonionError::KindMismatch(self.kind, other.kind));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, OctonionError> {
        self.check_kind(other)?;
        let table = make_table(self.kind);
        let mut out = Octonion::zero(self.kind);
        for a in 0..8 {
            if self.coords[a].is_zero() {
                continue;
            }
            for b in 0..8 {
                if other.coords[b].is_zero() {
                    continue;
                }
                let p = table.product(a, b);
                let t = &self.coords[a] * &other.coords[b];
                if p.sign > 0 {
                    out.coords[p.index] += &t;
                } else {
                    out.coords[p.index] -= &t;
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, OctonionError> {
        self.check_kind(other)?;
        Ok(Octonion {
            coords: std::array::from_fn(|i| &self.coords[i] + &other.coords[i]),
            kind: self.kind,
        })
    }

    /// `x x̄`, whose imaginary part always vanishes.
    pub fn norm(&self) -> Rational {
        let p = self.multiply(&self.conjugate()).expect("same kind");
        debug_assert!(p.coords[1..].iter().all(Rational::is_zero));
        p.coords[0].clone()
    }

    pub fn display(&self, alphabet: Alphabet) -> String {
        let mut out = String::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.signum() < 0;
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if i == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(alphabet.name(i));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Alphabet::K))
    }
}

impl Add for &Octonion {
    type Output = Octonion;

    /// Panics on kind mismatch; use [`Octonion::try_add`] to recover.
    fn add(self, rhs: &Octonion) -> Octonion {
        self.try_add(rhs).expect("octonion kinds differ")
    }
}

impl Sub for &Octonion {
    type Output = Octonion;

    fn sub(self, rhs: &Octonion) -> Octonion {
        self.try_add(&-rhs).expect("octonion kinds differ")
    }
}

impl Neg for &Octonion {
    type Output = Octonion;

    fn neg(self) -> Octonion {
        Octonion {
            coords: std::array::from_fn(|i| -&self.coords[i]),
            kind: self.kind,
        }
    }
}

impl Mul for &Octonion {
    type Output = Octonion;

    /// Panics on kind mismatch; use [`Octonion::multiply`] to recover.
    fn mul(self, rhs: &Octonion) -> Octonion {
        self.multiply(rhs).expect("octonion kinds differ")
    }
}
