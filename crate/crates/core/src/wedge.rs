//! The bivector model `x∧y` of an orthogonal Lie algebra with a diagonal metric.

use std::collections::BTreeMap;

use crate::linalg::RatMatrix;
use crate::scalar::Rational;

/// Bivector coordinates keyed by `(a, b)` with `a < b`.
pub type Wedge = BTreeMap<(usize, usize), Rational>;

/// Adds `c * (a∧b)` to `w`, normalizing the order of the pair.
pub fn add_pair(w: &mut Wedge, a: usize, b: usize, c: &Rational) {
    if a == b || c.is_zero() {
        return;
    }
    let (key, c) = if a < b {
        ((a, b), c.clone())
    } else {
        ((b, a), -c)
    };
    let entry = w.entry(key).or_default();
    *entry += &c;
    if entry.is_zero() {
        w.remove(&key);
    }
}

pub fn single(a: usize, b: usize, c: Rational) -> Wedge {
    let mut w = Wedge::new();
    add_pair(&mut w, a, b, &c);
    w
}

/// Bivectors on coordinates with squared lengths `norms`, bracketed by
/// `[x∧y, x∧z] = 2 N(x) y∧z`.
#[derive(Debug, Clone)]
pub struct WedgeModel {
    norms: Vec<i8>,
    names: Vec<String>,
}

impl WedgeModel {
    pub fn new(norms: Vec<i8>, names: Vec<String>) -> Self {
        assert_eq!(norms.len(), names.len());
        WedgeModel { norms, names }
    }

    pub fn dim(&self) -> usize {
        self.norms.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn norm(&self, a: usize) -> i8 {
        self.norms[a]
    }

    /// `[a∧b, c∧d] = 2(η_ac b∧d - η_bc a∧d - η_ad b∧c + η_bd a∧c)`.
    pub fn bracket(&self, x: &Wedge, y: &Wedge) -> Wedge {
        let mut out = Wedge::new();
        let eta = |p: usize, q: usize| if p == q { self.norms[p] as i64 } else { 0 };
        for (&(a, b), u) in x {
            for (&(c, d), v) in y {
                let uv = u * v * Rational::from_int(2);
                for (s, p, q) in [
                    (eta(a, c), b, d),
                    (-eta(b, c), a, d),
                    (-eta(a, d), b, c),
                    (eta(b, d), a, c),
                ] {
                    if s != 0 {
                        add_pair(&mut out, p, q, &(&uv * &Rational::from_int(s)));
                    }
                }
            }
        }
        out
    }

    /// Antisymmetric `n x n` grid with `grid[a][b] = w(a∧b)`.
    pub fn grid(&self, w: &Wedge) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim(), self.dim());
        for (&(a, b), c) in w {
            m.set(a, b, c.clone());
            m.set(b, a, -c);
        }
        m
    }

    pub fn display(&self, w: &Wedge) -> String {
        if w.is_empty() {
            return "0".to_string();
        }
        w.iter()
            .map(|(&(a, b), c)| format!("{c} {}^{}", self.names[a], self.names[b]))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
