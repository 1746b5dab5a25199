//! Exact structure constants of a Lie algebra over a labeled basis.

use std::collections::HashMap;

use crate::linalg::{Accumulator, SparseMatrix, SparseVec};
use crate::octonion::AlgebraKind;
use crate::scalar::Rational;

/// Brackets `[e_i, e_j]` for `i < j`, each a sparse coordinate list sorted
/// by basis index. Other orders follow by antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    algebra: String,
    k_kind: AlgebraKind,
    l_kind: Option<AlgebraKind>,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    upper: Vec<Vec<SparseVec>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("bracket pair ({i}, {j}) is not i < j < {dim}")]
    BadPair { i: usize, j: usize, dim: usize },
    #[error("bracket ({i}, {j}) has entry index {k} outside 0..{dim}")]
    BadEntry { i: usize, j: usize, k: usize, dim: usize },
    #[error("bracket ({i}, {j}) is given twice")]
    DuplicatePair { i: usize, j: usize },
}

impl StructureConstants {
    /// An abelian table on `labels`; brackets are filled in with [`Self::set`].
    pub fn new(
        algebra: impl Into<String>,
        k_kind: AlgebraKind,
        l_kind: Option<AlgebraKind>,
        labels: Vec<String>,
    ) -> Result<Self, TableError> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(TableError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(StructureConstants {
            algebra: algebra.into(),
            k_kind,
            l_kind,
            labels,
            index,
            upper: (0..n).map(|i| vec![Vec::new(); n - i - 1]).collect(),
        })
    }

    pub fn algebra(&self) -> &str {
        &self.algebra
    }

    pub fn k_kind(&self) -> AlgebraKind {
        self.k_kind
    }

    pub fn l_kind(&self) -> Option<AlgebraKind> {
        self.l_kind
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<(), TableError> {
        if i < j && j < self.dim() {
            Ok(())
        } else {
            Err(TableError::BadPair { i, j, dim: self.dim() })
        }
    }

    /// Stores `[e_i, e_j]` for `i < j`, dropping zeros and sorting by index.
    pub fn set(&mut self, i: usize, j: usize, mut v: SparseVec) -> Result<(), TableError> {
        self.check_pair(i, j)?;
        v.retain(|(_, c)| !c.is_zero());
        v.sort_by_key(|(k, _)| *k);
        if let Some(&(k, _)) = v.iter().find(|(k, _)| *k >= self.dim()) {
            return Err(TableError::BadEntry { i, j, k, dim: self.dim() });
        }
        self.upper[i][j - i - 1] = v;
        Ok(())
    }

    /// Adds `delta` to the coefficient of `e_k` in `[e_i, e_j]`, `i < j`.
    pub fn add_to(&mut self, i: usize, j: usize, k: usize, delta: &Rational) -> Result<(), TableError> {
        self.check_pair(i, j)?;
        if k >= self.dim() {
            return Err(TableError::BadEntry { i, j, k, dim: self.dim() });
        }
        let entry = &mut self.upper[i][j - i - 1];
        match entry.binary_search_by_key(&k, |(k, _)| *k) {
            Ok(pos) => {
                entry[pos].1 += delta;
                if entry[pos].1.is_zero() {
                    entry.remove(pos);
                }
            }
            Err(pos) => {
                if !delta.is_zero() {
                    entry.insert(pos, (k, delta.clone()));
                }
            }
        }
        Ok(())
    }

    /// Stored bracket for `i < j`.
    pub fn stored(&self, i: usize, j: usize) -> &SparseVec {
        &self.upper[i][j - i - 1]
    }

    /// `[e_i, e_j]` for any order.
    pub fn bracket(&self, i: usize, j: usize) -> SparseVec {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.stored(i, j).clone(),
            Equal => Vec::new(),
            Greater => self.stored(j, i).iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    /// `[x, y]` by bilinearity over dense coordinates.
    pub fn bracket_vectors(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut acc = Accumulator::new(self.dim());
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                if i == j {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.bracket(i, j) {
                    acc.add(k, &(&ab * &c));
                }
            }
        }
        let mut out = vec![Rational::zero(); self.dim()];
        for (k, c) in acc.take() {
            out[k] = c;
        }
        out
    }

    /// Nonzero stored pairs `(i, j, [e_i, e_j])` with `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> + '_ {
        self.upper.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_empty())
                .map(move |(d, v)| (i, i + d + 1, v))
        })
    }

    pub fn nonzero_pairs(&self) -> usize {
        self.entries().count()
    }

    /// `ad(e_i)`: column `j` holds `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> SparseMatrix {
        let n = self.dim();
        let mut triplets = Vec::new();
        for j in 0..n {
            for (k, c) in self.bracket(i, j) {
                triplets.push((k, j, c));
            }
        }
        SparseMatrix::from_triplets(n, n, triplets)
    }

    /// `ad(x)` for dense coordinates `x`.
    pub fn ad(&self, x: &[Rational]) -> SparseMatrix {
        let n = self.dim();
        let mut triplets = Vec::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for j in 0..n {
                for (k, c) in self.bracket(i, j) {
                    triplets.push((k, j, a * &c));
                }
            }
        }
        SparseMatrix::from_triplets(n, n, triplets)
    }

    /// Whether every coefficient lies in `(1/2)Z`.
    pub fn half_integral(&self) -> bool {
        self.entries()
            .all(|(_, _, v)| v.iter().all(|(_, c)| c.is_half_integer()))
    }

    /// Renders sparse coordinates as `c label + ...`.
    pub fn render(&self, v: &[(usize, Rational)]) -> String {
        if v.is_empty() {
            return "0".to_string();
        }
        v.iter()
            .map(|(k, c)| format!("{c} {}", self.labels[*k]))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> StructureConstants {
        let labels = ["h", "e", "f"].map(String::from).to_vec();
        let mut t = StructureConstants::new("sl2", AlgebraKind::Compact, None, labels).unwrap();
        let q = Rational::from_int;
        t.set(0, 1, vec![(1, q(2))]).unwrap();
        t.set(0, 2, vec![(2, q(-2))]).unwrap();
        t.set(1, 2, vec![(0, q(1))]).unwrap();
        t
    }

    #[test]
    fn antisymmetric_reads() {
        let t = sl2();
        assert_eq!(t.bracket(1, 0), vec![(1, Rational::from_int(-2))]);
        assert!(t.bracket(2, 2).is_empty());
        assert_eq!(t.nonzero_pairs(), 3);
        assert!(t.half_integral());
    }

    #[test]
    fn ad_columns_are_brackets() {
        let t = sl2();
        let ad_e = t.ad_basis(1);
        assert_eq!(ad_e.get(0, 2), Rational::one());
        assert_eq!(ad_e.get(1, 0), Rational::from_int(-2));
        let x = vec![Rational::one(), Rational::from_int(3), Rational::zero()];
        let y = vec![Rational::zero(), Rational::zero(), Rational::one()];
        let direct = t.bracket_vectors(&x, &y);
        assert_eq!(direct, t.ad(&x).apply(&y));
    }

    #[test]
    fn add_to_edits_one_coefficient() {
        let mut t = sl2();
        t.add_to(1, 2, 0, &Rational::from_int(-1)).unwrap();
        assert!(t.stored(1, 2).is_empty());
        t.add_to(1, 2, 2, &Rational::new(1, 3)).unwrap();
        assert!(!t.half_integral());
        assert!(t.add_to(2, 1, 0, &Rational::one()).is_err());
    }

    #[test]
    fn rejects_duplicate_labels() {
        let labels = vec!["a".to_string(), "a".to_string()];
        assert!(StructureConstants::new("x", AlgebraKind::Compact, None, labels).is_err());
    }
}
