//! The five algebras, their labeled bases as subsets of the 248-basis, and
//! table construction through the symbolic engine.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::albert::{Copy3, Language};
use crate::e8::{e8_basis, e8_index, engine, E8Basis, EngineError, Factor, Kinds, E8_DIM};
use crate::linalg::SparseVec;
use crate::octonion::{AlgebraKind, Alphabet};
use crate::scalar::Rational;
use crate::so8::{parse_so8_label, so8_basis, so8_label, SO8_DIM};
use crate::table::StructureConstants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    So8,
    So9,
    So16,
    F4,
    E8,
}

impl Algebra {
    pub const ALL: [Algebra; 5] = [Algebra::So8, Algebra::So9, Algebra::So16, Algebra::F4, Algebra::E8];

    pub fn as_str(self) -> &'static str {
        match self {
            Algebra::So8 => "so8",
            Algebra::So9 => "so9",
            Algebra::So16 => "so16",
            Algebra::F4 => "f4",
            Algebra::E8 => "e8",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Algebra::So8 => 28,
            Algebra::So9 => 36,
            Algebra::So16 => 120,
            Algebra::F4 => 52,
            Algebra::E8 => 248,
        }
    }

    /// Whether the algebra uses a second octonion factor.
    pub fn uses_l(self) -> bool {
        matches!(self, Algebra::So16 | Algebra::E8)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("{0} needs an L kind")]
    MissingL(Algebra),
    #[error("{0} takes no L kind")]
    UnexpectedL(Algebra),
    #[error("unknown label {label:?} for {algebra}")]
    UnknownLabel { algebra: Algebra, label: String },
    #[error("closure violation in [{x}, {y}]: {source}")]
    Engine {
        x: String,
        y: String,
        #[source]
        source: EngineError,
    },
    #[error("closure violation: [{x}, {y}] leaves the span at {outside}")]
    OutsideSpan { x: String, y: String, outside: String },
}

impl FromStr for Algebra {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algebra::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| AlgebraError::UnknownAlgebra(s.to_string()))
    }
}

/// An algebra together with the kinds of its factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    pub algebra: Algebra,
    pub k: AlgebraKind,
    pub l: Option<AlgebraKind>,
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.l {
            Some(l) => write!(f, "{} ({}, {})", self.algebra, self.k, l),
            None => write!(f, "{} ({})", self.algebra, self.k),
        }
    }
}

impl AlgebraSpec {
    pub fn new(algebra: Algebra, k: AlgebraKind, l: Option<AlgebraKind>) -> Result<Self, AlgebraError> {
        match (algebra.uses_l(), l) {
            (true, None) => Err(AlgebraError::MissingL(algebra)),
            (false, Some(_)) => Err(AlgebraError::UnexpectedL(algebra)),
            _ => Ok(AlgebraSpec { algebra, k, l }),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Engine kinds; a missing L factor only ever carries the unit 1.
    pub fn kinds(&self) -> Kinds {
        Kinds::new(self.k, self.l.unwrap_or(AlgebraKind::Compact))
    }

    /// Positions of the basis inside the 248-basis, in canonical order.
    ///
    /// `so(8)` has no such embedding and returns `None`.
    pub fn embedding(&self) -> Option<Vec<usize>> {
        let k_diag = 0..SO8_DIM;
        let off_k = |copy: Copy3| (0..8).map(move |a| e8_index(E8Basis::Off(copy, a, 0)));
        match self.algebra {
            Algebra::So8 => None,
            Algebra::So9 => Some(off_k(Copy3::X).chain(k_diag).collect()),
            Algebra::So16 => Some((0..120).collect()),
            Algebra::F4 => Some(
                k_diag
                    .chain(off_k(Copy3::X))
                    .chain(off_k(Copy3::Y))
                    .chain(off_k(Copy3::Z))
                    .collect(),
            ),
            Algebra::E8 => Some((0..E8_DIM).collect()),
        }
    }

    /// Local label of the 248-basis element `e8`, which must be in the embedding.
    fn local_label(&self, e8: usize) -> String {
        match (self.algebra.uses_l(), e8_basis(e8)) {
            (true, _) => crate::e8::e8_label(e8),
            (false, E8Basis::Diag(Factor::K, i)) => format!("D:{}", so8_label(i, Alphabet::K)),
            (false, E8Basis::Off(copy, a, 0)) => format!("{}:{}", copy.letter(), Alphabet::K.name(a)),
            (false, b) => unreachable!("{b:?} is not in a single-factor basis"),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        match self.embedding() {
            None => (0..SO8_DIM).map(|i| format!("L:{}", so8_label(i, Alphabet::K))).collect(),
            Some(idx) => idx.into_iter().map(|e| self.local_label(e)).collect(),
        }
    }

    /// Dense 248-coordinates of a local coordinate vector.
    pub fn to_e8(&self, local: &[Rational]) -> Vec<Rational> {
        let idx = self.embedding().expect("so(8) has no 248-embedding");
        let mut out = vec![Rational::zero(); E8_DIM];
        for (c, &e) in local.iter().zip(&idx) {
            out[e] = c.clone();
        }
        out
    }

    /// Local coordinates of a 248-vector, or the first coordinate outside the subset.
    pub fn from_e8(&self, v: &[Rational]) -> Result<Vec<Rational>, usize> {
        let idx = self.embedding().expect("so(8) has no 248-embedding");
        let mut inside = vec![false; E8_DIM];
        for &e in &idx {
            inside[e] = true;
        }
        if let Some(e) = (0..E8_DIM).find(|&e| !inside[e] && !v[e].is_zero()) {
            return Err(e);
        }
        Ok(idx.iter().map(|&e| v[e].clone()).collect())
    }

    /// Parses a basis label or an `E`/`F` alias into local coordinates.
    ///
    /// Grammar: `L:p[,q]` for `so8`; `D:p[,q]`, `X:a` (and `Y:a`, `Z:a` for
    /// `f4`) for the single-factor algebras; `D:k:p[,q]`, `D:l:P[,Q]` and
    /// `X:a,A` (with `Y`, `Z` for `e8`) otherwise. Where Y and Z exist,
    /// `E` and `F` may replace `D`. A leading `-` negates.
    pub fn parse_element(&self, label: &str) -> Result<Vec<Rational>, AlgebraError> {
        let bad = || AlgebraError::UnknownLabel {
            algebra: self.algebra,
            label: label.to_string(),
        };
        let (sign, body) = match label.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, label),
        };
        let labels = self.labels();
        if let Some(i) = labels.iter().position(|l| l == body) {
            let mut v = vec![Rational::zero(); labels.len()];
            v[i] = Rational::from_int(sign);
            return Ok(v);
        }
        if self.algebra == Algebra::So8 {
            let (s, i) = body
                .strip_prefix("L:")
                .and_then(|r| parse_so8_label(r, Alphabet::K).ok())
                .ok_or_else(bad)?;
            let mut v = vec![Rational::zero(); SO8_DIM];
            v[i] = Rational::from_int(sign * s as i64);
            return Ok(v);
        }
        let (head, rest) = body.split_once(':').ok_or_else(bad)?;
        let lang = match head {
            "D" => Some(Language::D),
            "E" | "F" if matches!(self.algebra, Algebra::F4 | Algebra::E8) => {
                Some(if head == "E" { Language::E } else { Language::F })
            }
            _ => None,
        };
        let lang = lang.ok_or_else(bad)?;
        let (factor, alphabet, so8) = if self.algebra.uses_l() {
            match rest.split_once(':') {
                Some(("k", s)) => (Factor::K, Alphabet::K, s),
                Some(("l", s)) => (Factor::L, Alphabet::L, s),
                _ => return Err(bad()),
            }
        } else {
            (Factor::K, Alphabet::K, rest)
        };
        let (s, i) = parse_so8_label(so8, alphabet).map_err(|_| bad())?;
        let mut c = vec![Rational::zero(); SO8_DIM];
        c[i] = Rational::from_int(sign * s as i64);
        let eng = engine(self.kinds());
        let d = eng.to_d(factor, lang, &c);
        let mut v = vec![Rational::zero(); E8_DIM];
        let offset = if factor == Factor::K { 0 } else { SO8_DIM };
        for (j, x) in d.into_iter().enumerate() {
            v[offset + j] = x;
        }
        self.from_e8(&v).map_err(|_| bad())
    }

    /// `[x, y]` in local coordinates, evaluated by the engine or, for
    /// `so(8)`, by operator commutators.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        if self.algebra == Algebra::So8 {
            let b = so8_basis(self.k);
            let m = b.combine(x).commutator(&b.combine(y)).expect("square");
            return Ok(b.decompose(&m).expect("so(8) is closed"));
        }
        let eng = engine(self.kinds());
        let labels = self.labels();
        let name = |v: &[Rational]| {
            v.iter()
                .position(|c| !c.is_zero())
                .map(|i| labels[i].clone())
                .unwrap_or_else(|| "0".into())
        };
        let r = eng
            .bracket(&self.to_e8(x), &self.to_e8(y))
            .map_err(|source| AlgebraError::Engine {
                x: name(x),
                y: name(y),
                source,
            })?;
        self.from_e8(&r).map_err(|e| AlgebraError::OutsideSpan {
            x: name(x),
            y: name(y),
            outside: crate::e8::e8_label(e),
        })
    }
}

/// All `C(n, 2)` basis brackets, computed in parallel and merged in order.
pub fn build_table(spec: &AlgebraSpec) -> Result<StructureConstants, AlgebraError> {
    let labels = spec.labels();
    let n = labels.len();
    let rows: Vec<Vec<SparseVec>> = match spec.embedding() {
        None => {
            let b = so8_basis(spec.k);
            (0..n)
                .map(|i| (i + 1..n).map(|j| b.bracket(i, j).clone()).collect())
                .collect()
        }
        Some(idx) => {
            let eng = engine(spec.kinds());
            let mut local = vec![None; E8_DIM];
            for (i, &e) in idx.iter().enumerate() {
                local[e] = Some(i);
            }
            eng.basis_matrices();
            (0..n)
                .into_par_iter()
                .map(|i| {
                    (i + 1..n)
                        .map(|j| {
                            let pair = || (labels[i].clone(), labels[j].clone());
                            let v = eng.bracket_basis(idx[i], idx[j]).map_err(|source| {
                                let (x, y) = pair();
                                AlgebraError::Engine { x, y, source }
                            })?;
                            v.into_iter()
                                .map(|(k, c)| match local[k] {
                                    Some(l) => Ok((l, c)),
                                    None => {
                                        let (x, y) = pair();
                                        Err(AlgebraError::OutsideSpan {
                                            x,
                                            y,
                                            outside: crate::e8::e8_label(k),
                                        })
                                    }
                                })
                                .collect::<Result<SparseVec, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?
        }
    };
    let mut table = StructureConstants::new(spec.algebra.as_str(), spec.k, spec.l, labels)
        .expect("canonical labels are distinct");
    for (i, row) in rows.into_iter().enumerate() {
        for (d, v) in row.into_iter().enumerate() {
            table.set(i, i + d + 1, v).expect("pair in range");
        }
    }
    Ok(table)
}
