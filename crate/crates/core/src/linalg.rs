//! Exact dense and sparse matrix kernels over [`Rational`].
//!
//! Everything here is exact. Rank uses a multi-modular elimination whose
//! answer is certified by a Hadamard bound, so it is the rank over the
//! rationals and not merely a probabilistic estimate.

use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::scalar::{common_denominator, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("{op}: dimension mismatch ({}x{} vs {}x{})", .left.0, .left.1, .right.0, .right.1)]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{op}: matrix is {rows}x{cols}, expected square")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("inertia: matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("basis vector {index} lies in the span of the previous ones")]
    DependentBasis { index: usize },
    #[error("vector of length {got} does not match ambient dimension {expected}")]
    VectorLength { expected: usize, got: usize },
}

/// Dense rational matrix with immutable dimensions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Builds from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n * m);
        for row in rows {
            if row.len() != m {
                return Err(LinalgError::VectorLength {
                    expected: m,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RatMatrix {
            rows: n,
            cols: m,
            data,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_fn(n, m, |r, c| Rational::from_int(rows[r][c]))
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        RatMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn check_same(&self, other: &Self, op: &'static str) -> Result<(), LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                op,
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same(other, "add")?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_same(other, "sub")?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn add_scaled(&mut self, other: &Self, s: &Rational) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(b * s);
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        *out.entry_mut(r, c) += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::VectorLength {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn commutator(&self, other: &Self) -> Result<Self, LinalgError> {
        mat_commutator(self, other)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            for c in r + 1..self.cols {
                if self.get(r, c) != self.get(c, r) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_dense(self)
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    /// Simultaneous row and column permutation `P M P^T` with `perm[new] = old`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self {
        RatMatrix::from_fn(self.rows, self.cols, |r, c| self.get(perm[r], perm[c]).clone())
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `ab - ba` for square matrices of equal size.
pub fn mat_commutator(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            op: "commutator",
            rows: a.rows,
            cols: a.cols,
        });
    }
    a.check_same(b, "commutator")?;
    a.mul(b)?.sub(&b.mul(a)?)
}

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &[(usize, Rational)], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Dense accumulator that remembers which slots were touched.
pub(crate) struct Accumulator {
    values: Vec<Rational>,
    touched: Vec<usize>,
    seen: Vec<bool>,
}

impl Accumulator {
    pub(crate) fn new(len: usize) -> Self {
        Accumulator {
            values: vec![Rational::zero(); len],
            touched: Vec::new(),
            seen: vec![false; len],
        }
    }

    pub(crate) fn add(&mut self, i: usize, v: &Rational) {
        if v.is_zero() {
            return;
        }
        if !self.seen[i] {
            self.seen[i] = true;
            self.touched.push(i);
        }
        self.values[i] += v;
    }

    /// Drains into a sorted sparse vector and resets.
    pub(crate) fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.seen[i] = false;
            let v = std::mem::take(&mut self.values[i]);
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

/// Row-compressed sparse rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].push((i, Rational::one()));
        }
        m
    }

    pub fn from_dense(d: &RatMatrix) -> Self {
        SparseMatrix {
            rows: d.rows,
            cols: d.cols,
            data: (0..d.rows).map(|r| sparse_from_dense(d.row(r))).collect(),
        }
    }

    /// Sums duplicate entries.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "triplet out of range");
            buckets[r].push((c, v));
        }
        let mut acc = Accumulator::new(cols);
        let data = buckets
            .into_iter()
            .map(|b| {
                for (c, v) in &b {
                    acc.add(*c, v);
                }
                acc.take()
            })
            .collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, Rational)] {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.data[r].binary_search_by_key(&c, |(i, _)| *i) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn to_dense(&self) -> RatMatrix {
        let mut d = RatMatrix::zeros(self.rows, self.cols);
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                d.set(r, *c, v.clone());
            }
        }
        d
    }

    /// All nonzero entries in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix::from_triplets(
            self.cols,
            self.rows,
            self.triplets().map(|(r, c, v)| (c, r, v.clone())),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return SparseMatrix::zeros(self.rows, self.cols);
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect())
                .collect(),
        }
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, other: &Self, s: &Rational) -> Result<Self, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch {
                op: "add",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut acc = Accumulator::new(self.cols);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                for (c, v) in a {
                    acc.add(*c, v);
                }
                for (c, v) in b {
                    acc.add(*c, &(v * s));
                }
                acc.take()
            })
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut acc = Accumulator::new(other.cols);
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (c, b) in &other.data[*k] {
                        acc.add(*c, &(a * b));
                    }
                }
                acc.take()
            })
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn commutator(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                op: "commutator",
                rows: self.rows,
                cols: self.cols,
            });
        }
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Row-major flattening into a sparse vector of length `rows * cols`.
    pub fn flatten(&self) -> SparseVec {
        self.triplets()
            .map(|(r, c, v)| (r * self.cols + c, v.clone()))
            .collect()
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(c, _)| !v[*c].is_zero())
                    .map(|(c, a)| a * &v[*c])
                    .sum()
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }
}

/// Exact coordinates of vectors in the span of a fixed independent basis.
///
/// Construction picks one pivot coordinate per basis vector and inverts the
/// resulting square submatrix; every solve is then confirmed by exact
/// reconstruction, so a returned coordinate vector is always a certificate.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    dim: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
    inverse: RatMatrix,
}

impl SpanSolver {
    pub fn new(dim: usize, basis: Vec<SparseVec>) -> Result<Self, LinalgError> {
        let mut echelon: Vec<(usize, Vec<(usize, Rational)>)> = Vec::with_capacity(basis.len());
        let mut acc = Accumulator::new(dim);
        for (index, b) in basis.iter().enumerate() {
            if let Some((i, _)) = b.iter().find(|(i, _)| *i >= dim) {
                return Err(LinalgError::VectorLength {
                    expected: dim,
                    got: *i + 1,
                });
            }
            let mut v: SparseVec = b.clone();
            for (p, e) in &echelon {
                let coeff = match v.binary_search_by_key(p, |(i, _)| *i) {
                    Ok(k) => v[k].1.clone(),
                    Err(_) => continue,
                };
                let f = &coeff / &e.iter().find(|(i, _)| i == p).expect("pivot entry").1;
                for (i, x) in &v {
                    acc.add(*i, x);
                }
                for (i, x) in e {
                    acc.add(*i, &-(x * &f));
                }
                v = acc.take();
            }
            match v.first() {
                Some((p, _)) => echelon.push((*p, v)),
                None => return Err(LinalgError::DependentBasis { index }),
            }
        }
        let pivots: Vec<usize> = echelon.iter().map(|(p, _)| *p).collect();
        let m = basis.len();
        let mut sub = RatMatrix::zeros(m, m);
        for (j, b) in basis.iter().enumerate() {
            for (i, p) in pivots.iter().enumerate() {
                if let Ok(k) = b.binary_search_by_key(p, |(x, _)| *x) {
                    sub.set(i, j, b[k].1.clone());
                }
            }
        }
        let inverse = invert(&sub).expect("pivot submatrix is invertible by construction");
        Ok(SpanSolver {
            dim,
            basis,
            pivots,
            inverse,
        })
    }

    pub fn from_dense(basis: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let dim = basis.first().map_or(0, Vec::len);
        for b in basis {
            if b.len() != dim {
                return Err(LinalgError::VectorLength {
                    expected: dim,
                    got: b.len(),
                });
            }
        }
        SpanSolver::new(dim, basis.iter().map(|b| sparse_from_dense(b)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    /// Coordinates of `v`, or `None` when `v` is not in the span.
    pub fn solve_sparse(&self, v: &[(usize, Rational)]) -> Option<Vec<Rational>> {
        let m = self.basis.len();
        let mut rhs = vec![Rational::zero(); m];
        for (i, p) in self.pivots.iter().enumerate() {
            if let Ok(k) = v.binary_search_by_key(p, |(x, _)| *x) {
                rhs[i] = v[k].1.clone();
            }
        }
        let coords = self.inverse.apply(&rhs).expect("square inverse");
        let mut acc = Accumulator::new(self.dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (i, x) in b {
                acc.add(*i, &(x * c));
            }
        }
        for (i, x) in v {
            acc.add(*i, &-x);
        }
        if acc.take().is_empty() {
            Some(coords)
        } else {
            None
        }
    }

    pub fn solve(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        if v.len() != self.dim {
            return Err(LinalgError::VectorLength {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(self.solve_sparse(&sparse_from_dense(v)))
    }

    /// `Σ c_i basis_i` as a dense vector.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (i, x) in b {
                out[*i] += &(x * c);
            }
        }
        out
    }
}

/// Exact coordinates of `v` in `basis`, or `Ok(None)` for "not in span".
pub fn solve_in_span(
    v: &[Rational],
    basis: &[Vec<Rational>],
) -> Result<Option<Vec<Rational>>, LinalgError> {
    if basis.is_empty() {
        return Ok(if v.iter().all(Rational::is_zero) {
            Some(Vec::new())
        } else {
            None
        });
    }
    let solver = SpanSolver::from_dense(basis)?;
    solver.solve(v)
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn invert(m: &RatMatrix) -> Option<RatMatrix> {
    assert!(m.is_square());
    let n = m.rows;
    let mut a: Vec<Vec<Rational>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &d;
        }
        for x in inv[col].iter_mut() {
            *x *= &d;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                if !a[col][c].is_zero() {
                    let t = &a[col][c] * &f;
                    a[r][c] -= &t;
                }
                if !inv[col][c].is_zero() {
                    let t = &inv[col][c] * &f;
                    inv[r][c] -= &t;
                }
            }
        }
    }
    RatMatrix::from_rows(inv).ok()
}

/// Signature triple of a real symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Inertia {
            positive,
            negative,
            zero,
        }
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    /// `n_plus - n_minus`.
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

/// Exact inertia by symmetric (congruence) elimination with pivoting.
///
/// A nonzero diagonal pivot is used when one exists; otherwise a congruence
/// `row_i += row_j, col_i += col_j` on a nonzero off-diagonal entry creates
/// one. Only rows with a nonzero entry in the pivot column are updated, which
/// keeps near-diagonal Killing matrices cheap.
pub fn inertia(m: &RatMatrix) -> Result<Inertia, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            op: "inertia",
            rows: m.rows,
            cols: m.cols,
        });
    }
    if let Some((row, col)) = m.first_asymmetry() {
        return Err(LinalgError::NotSymmetric { row, col });
    }
    let n = m.rows;
    let mut a: Vec<Vec<Rational>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0usize, 0usize);
    loop {
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !a[i][i].is_zero())
            .min_by(|&i, &j| a[i][i].abs().cmp(&a[j][j].abs()).then(i.cmp(&j)));
        let k = match pivot {
            Some(k) => k,
            None => {
                let off = active.iter().find_map(|&i| {
                    active
                        .iter()
                        .find(|&&j| j != i && !a[i][j].is_zero())
                        .map(|&j| (i, j))
                });
                let Some((i, j)) = off else { break };
                // congruence: e_i <- e_i + e_j
                for &c in &active {
                    let t = a[j][c].clone();
                    a[i][c] += &t;
                }
                for &r in &active {
                    let t = a[r][j].clone();
                    a[r][i] += &t;
                }
                i
            }
        };
        let p = a[k][k].clone();
        if p.signum() > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != k);
        let col: Vec<(usize, Rational)> = active
            .iter()
            .filter(|&&i| !a[i][k].is_zero())
            .map(|&i| (i, &a[i][k] / &p))
            .collect();
        for (i, f) in &col {
            for &c in &active {
                if !a[k][c].is_zero() {
                    let t = f * &a[k][c];
                    a[*i][c] -= &t;
                }
            }
        }
    }
    Ok(Inertia::new(pos, neg, n - pos - neg))
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// The first `count` primes below 2^62, descending.
fn large_primes(count: usize) -> Vec<u64> {
    static CACHE: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut primes = cache.lock().expect("prime cache poisoned");
    let mut candidate = primes.last().map_or((1u64 << 62) - 1, |p| p - 2);
    while primes.len() < count {
        if is_prime(candidate) {
            primes.push(candidate);
        }
        candidate -= 2;
    }
    primes[..count].to_vec()
}

fn rank_mod(rows: &[Vec<u64>], cols: usize, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][col], p - 2, p);
        for x in a[rank][col..].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for c in col..cols {
                if pivot_row[c] != 0 {
                    let t = mul_mod(f, pivot_row[c], p);
                    row[c] = if row[c] >= t { row[c] - t } else { row[c] + p - t };
                }
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Exact rank over the rationals.
///
/// The matrix is scaled to integers and reduced modulo enough 62-bit primes
/// that their product exceeds the Hadamard bound on every minor. Any minor
/// that is nonzero over the integers then survives modulo at least one of
/// them, so the maximum modular rank is the rational rank.
pub fn rank(m: &RatMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let den = common_denominator(m.as_slice());
    let ints: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| {
            m.row(r)
                .iter()
                .map(|x| x.numer() * (&den / x.denom()))
                .collect()
        })
        .collect();
    let bound_bits: u64 = ints
        .iter()
        .map(|row| {
            let norm2: BigInt = row.iter().map(|x| x * x).sum();
            if norm2.is_zero() {
                0
            } else {
                norm2.bits().div_ceil(2)
            }
        })
        .sum();
    let primes = large_primes((bound_bits as usize + 2).div_ceil(61).max(1));
    let full = m.rows.min(m.cols);
    primes
        .par_iter()
        .map(|&p| {
            let pb = BigInt::from(p);
            let reduced: Vec<Vec<u64>> = ints
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| {
                            let r = x % &pb;
                            let r = if r.is_negative() { r + &pb } else { r };
                            r.to_u64().expect("residue fits")
                        })
                        .collect()
                })
                .collect();
            rank_mod(&reduced, m.cols, p)
        })
        .max()
        .unwrap_or(0)
        .min(full)
}

/// Dimension of the right kernel.
pub fn kernel_dim(m: &RatMatrix) -> usize {
    m.cols - rank(m)
}

/// Rank of a list of sparse vectors in a common ambient space.
pub fn sparse_rank(dim: usize, vectors: &[SparseVec]) -> usize {
    let mut echelon: Vec<(usize, SparseVec)> = Vec::new();
    let mut acc = Accumulator::new(dim);
    for b in vectors {
        let mut v = b.clone();
        for (p, e) in &echelon {
            let coeff = match v.binary_search_by_key(p, |(i, _)| *i) {
                Ok(k) => v[k].1.clone(),
                Err(_) => continue,
            };
            let f = &coeff / &e.iter().find(|(i, _)| i == p).expect("pivot").1;
            for (i, x) in &v {
                acc.add(*i, x);
            }
            for (i, x) in e {
                acc.add(*i, &-(x * &f));
            }
            v = acc.take();
        }
        if let Some((p, _)) = v.first() {
            echelon.push((*p, v));
        }
    }
    echelon.len()
}
