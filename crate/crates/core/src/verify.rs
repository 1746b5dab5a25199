//! Exact checks on a structure-constant table: antisymmetry, Jacobi,
//! Killing form and real form, invariance, and a rank probe.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::linalg::{inertia, kernel_dim, Accumulator, Inertia, RatMatrix, SparseMatrix};
use crate::scalar::Rational;
use crate::table::StructureConstants;

const MAX_WITNESSES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Antisym,
    Jacobi,
    Triples,
    Killing,
    Invariance,
    Rank,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Antisym,
        Check::Jacobi,
        Check::Triples,
        Check::Killing,
        Check::Invariance,
        Check::Rank,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Antisym => "antisym",
            Check::Jacobi => "jacobi",
            Check::Triples => "triples",
            Check::Killing => "killing",
            Check::Invariance => "invariance",
            Check::Rank => "rank",
        }
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witnesses: Vec<String>,
    pub elapsed: Duration,
}

impl CheckResult {
    fn new(check: Check, passed: bool, detail: String, witnesses: Vec<String>, start: Instant) -> Self {
        CheckResult {
            name: check.as_str().to_string(),
            passed,
            detail,
            witnesses,
            elapsed: start.elapsed(),
        }
    }
}

/// Results for one table, in the order the checks were requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub algebra: String,
    pub kinds: String,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Timing lines, kept apart from the reproducible report text.
    pub fn timings(&self) -> String {
        self.checks
            .iter()
            .map(|c| format!("{}: {:.3}s\n", c.name, c.elapsed.as_secs_f64()))
            .collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {} kinds {}", self.algebra, self.kinds)?;
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
            for w in &c.witnesses {
                writeln!(f, "  witness {w}")?;
            }
        }
        write!(f, "{}", if self.passed() { "all checks passed" } else { "verification failed" })
    }
}

fn kinds_label(t: &StructureConstants) -> String {
    match t.l_kind() {
        Some(l) => format!("{},{}", t.k_kind(), l),
        None => t.k_kind().to_string(),
    }
}

/// `ad(e_i)` for every basis element.
pub fn ad_matrices(t: &StructureConstants) -> Vec<SparseMatrix> {
    (0..t.dim()).into_par_iter().map(|i| t.ad_basis(i)).collect()
}

fn combine(ads: &[SparseMatrix], v: &[(usize, Rational)], n: usize) -> SparseMatrix {
    let mut triplets = Vec::new();
    for (k, c) in v {
        for (r, col, x) in ads[*k].triplets() {
            triplets.push((r, col, x * c));
        }
    }
    SparseMatrix::from_triplets(n, n, triplets)
}

/// `ad(e_i) e_j = -ad(e_j) e_i` for all pairs, and every coefficient in `(1/2)Z`.
pub fn check_antisym(t: &StructureConstants, ads: &[SparseMatrix]) -> CheckResult {
    let start = Instant::now();
    let n = t.dim();
    let mut witnesses: Vec<String> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i..n).filter_map(move |j| {
                let ok = (0..n).all(|k| (ads[i].get(k, j) + ads[j].get(k, i)).is_zero());
                (!ok).then(|| format!("[{}, {}]", t.label(i), t.label(j)))
            })
        })
        .collect();
    witnesses.truncate(MAX_WITNESSES);
    let half = t.half_integral();
    if !half {
        witnesses.push("a coefficient lies outside (1/2)Z".into());
    }
    let passed = witnesses.is_empty();
    let detail = format!("{} nonzero pairs of {}", t.nonzero_pairs(), n * (n.saturating_sub(1)) / 2);
    CheckResult::new(Check::Antisym, passed, detail, witnesses, start)
}

/// `ad([e_i, e_j]) = [ad e_i, ad e_j]` for all `i < j`.
pub fn check_jacobi(t: &StructureConstants, ads: &[SparseMatrix]) -> CheckResult {
    let start = Instant::now();
    let n = t.dim();
    let mut failures: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..n).filter_map(move |j| {
                let lhs = combine(ads, t.stored(i, j), n);
                let rhs = ads[i].commutator(&ads[j]).expect("square");
                (lhs != rhs).then_some((i, j))
            })
        })
        .collect();
    failures.sort_unstable();
    let count = failures.len();
    let witnesses = failures
        .iter()
        .take(MAX_WITNESSES)
        .map(|&(i, j)| format!("[{}, {}]", t.label(i), t.label(j)))
        .collect();
    let detail = format!("{} pairs, {} failures", n * (n.saturating_sub(1)) / 2, count);
    CheckResult::new(Check::Jacobi, count == 0, detail, witnesses, start)
}

fn bracket_sparse(t: &StructureConstants, i: usize, v: &[(usize, Rational)], acc: &mut Accumulator) {
    for (m, c) in v {
        for (k, x) in t.bracket(i, *m) {
            acc.add(k, &(&x * c));
        }
    }
}

/// The cyclic Jacobi sum on every basis triple `i < j < k`.
pub fn check_jacobi_triples(t: &StructureConstants) -> CheckResult {
    let start = Instant::now();
    let n = t.dim();
    let mut failures: Vec<(usize, usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut acc = Accumulator::new(n);
            let mut out = Vec::new();
            for j in i + 1..n {
                for k in j + 1..n {
                    bracket_sparse(t, i, &t.bracket(j, k), &mut acc);
                    bracket_sparse(t, j, &t.bracket(k, i), &mut acc);
                    bracket_sparse(t, k, &t.bracket(i, j), &mut acc);
                    if !acc.take().is_empty() {
                        out.push((i, j, k));
                    }
                }
            }
            out
        })
        .collect();
    failures.sort_unstable();
    let count = failures.len();
    let witnesses = failures
        .iter()
        .take(MAX_WITNESSES)
        .map(|&(i, j, k)| format!("({}, {}, {})", t.label(i), t.label(j), t.label(k)))
        .collect();
    let triples = if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 };
    let detail = format!("{triples} triples, {count} failures");
    CheckResult::new(Check::Triples, count == 0, detail, witnesses, start)
}

/// `K(i, j) = tr(ad e_i ad e_j)`.
pub fn killing_matrix(ads: &[SparseMatrix]) -> RatMatrix {
    let n = ads.len();
    let transposes: Vec<SparseMatrix> = ads.par_iter().map(SparseMatrix::transpose).collect();
    let rows: Vec<Vec<Rational>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j < i {
                        return Rational::zero();
                    }
                    let mut sum = Rational::zero();
                    for r in 0..n {
                        let (a, b) = (ads[i].row(r), transposes[j].row(r));
                        let (mut x, mut y) = (0, 0);
                        while x < a.len() && y < b.len() {
                            match a[x].0.cmp(&b[y].0) {
                                std::cmp::Ordering::Less => x += 1,
                                std::cmp::Ordering::Greater => y += 1,
                                std::cmp::Ordering::Equal => {
                                    sum += &(&a[x].1 * &b[y].1);
                                    x += 1;
                                    y += 1;
                                }
                            }
                        }
                    }
                    sum
                })
                .collect()
        })
        .collect();
    RatMatrix::from_fn(n, n, |r, c| {
        if r <= c {
            rows[r][c].clone()
        } else {
            rows[c][r].clone()
        }
    })
}

/// The real form named by the Killing inertia, if it is one of the expected ones.
pub fn form_name(algebra: Algebra, inertia: Inertia) -> Option<&'static str> {
    if inertia.zero != 0 {
        return None;
    }
    let (p, n) = (inertia.positive, inertia.negative);
    let name = match (algebra, p, n) {
        (Algebra::So8, 0, 28) => "so(8)",
        (Algebra::So8, 16, 12) => "so(4,4)",
        (Algebra::So9, 0, 36) => "so(9)",
        (Algebra::So9, 20, 16) => "so(5,4)",
        (Algebra::So16, 0, 120) => "so(16)",
        (Algebra::So16, 64, 56) => "so(8,8)",
        (Algebra::So16, 48, 72) => "so(12,4)",
        (Algebra::F4, 0, 52) => "f4 compact",
        (Algebra::F4, 28, 24) => "f4(4)",
        (Algebra::E8, 0, 248) => "e8 compact",
        (Algebra::E8, 128, 120) => "e8(8)",
        (Algebra::E8, 112, 136) => "e8(-24)",
        _ => return None,
    };
    Some(name)
}

/// Killing matrix, its inertia and the form name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillingResult {
    pub matrix: RatMatrix,
    pub inertia: Inertia,
    pub form_name: Option<&'static str>,
}

pub fn killing(t: &StructureConstants, ads: &[SparseMatrix]) -> KillingResult {
    let matrix = killing_matrix(ads);
    let inertia = inertia(&matrix).expect("the Killing matrix is symmetric");
    let form_name = t.algebra().parse::<Algebra>().ok().and_then(|a| form_name(a, inertia));
    KillingResult {
        matrix,
        inertia,
        form_name,
    }
}

fn killing_check(t: &StructureConstants, k: &KillingResult, start: Instant) -> CheckResult {
    let mut witnesses = Vec::new();
    if k.inertia.zero != 0 {
        witnesses.push(format!("not semisimple: kernel dimension {}", k.inertia.zero));
    } else if k.form_name.is_none() {
        witnesses.push(format!("inertia {} names no expected form of {}", k.inertia, t.algebra()));
    }
    let detail = format!(
        "inertia {} signature {} form {}",
        k.inertia,
        k.inertia.signature(),
        k.form_name.unwrap_or("unknown")
    );
    CheckResult::new(Check::Killing, witnesses.is_empty(), detail, witnesses, start)
}

/// `ad(x)^T K + K ad(x) = 0` for every basis element `x`.
pub fn check_invariance(t: &StructureConstants, ads: &[SparseMatrix], k: &RatMatrix) -> CheckResult {
    let start = Instant::now();
    let n = t.dim();
    let failures: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&x| {
            let mut m = RatMatrix::zeros(n, n);
            for (row, col, v) in ads[x].triplets() {
                for r in 0..n {
                    let kv = k.get(r, row);
                    if !kv.is_zero() {
                        *m.entry_mut(r, col) += &(kv * v);
                    }
                }
            }
            !(0..n).all(|r| (r..n).all(|c| (m.get(r, c) + m.get(c, r)).is_zero()))
        })
        .collect();
    let witnesses = failures
        .iter()
        .take(MAX_WITNESSES)
        .map(|&x| format!("ad({})", t.label(x)))
        .collect();
    let detail = format!("{} basis elements, {} failures", n, failures.len());
    CheckResult::new(Check::Invariance, failures.is_empty(), detail, witnesses, start)
}

/// Minimum kernel dimension of `ad(x)` over pseudorandom `x` with
/// coordinates in `[-9, 9]`.
pub fn rank_probe(t: &StructureConstants, samples: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = t.dim();
    let points: Vec<Vec<Rational>> = (0..samples)
        .map(|_| (0..n).map(|_| Rational::from_int(rng.gen_range(-9..=9))).collect())
        .collect();
    points
        .par_iter()
        .map(|x| kernel_dim(&t.ad(x).to_dense()))
        .min()
        .unwrap_or(n)
}

fn rank_check(t: &StructureConstants, samples: usize, seed: u64) -> CheckResult {
    let start = Instant::now();
    let r = rank_probe(t, samples, seed);
    let even = (t.dim() - r).is_multiple_of(2);
    let witnesses = if even {
        Vec::new()
    } else {
        vec![format!("dim - rank = {} is odd", t.dim() - r)]
    };
    let detail = format!("rank {r} from {samples} samples, seed {seed}");
    CheckResult::new(Check::Rank, even, detail, witnesses, start)
}

/// Options for [`run_checks`].
#[derive(Debug, Clone, Copy)]
pub struct ProbeOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions { samples: 5, seed: 0 }
    }
}

/// Runs `checks` in order, sharing ad-matrices and the Killing matrix.
pub fn run_checks(t: &StructureConstants, checks: &[Check], probe: ProbeOptions) -> VerificationReport {
    let ads = ad_matrices(t);
    let mut kill: Option<KillingResult> = None;
    let mut results = Vec::new();
    for &c in checks {
        let start = Instant::now();
        let r = match c {
            Check::Antisym => check_antisym(t, &ads),
            Check::Jacobi => check_jacobi(t, &ads),
            Check::Triples => check_jacobi_triples(t),
            Check::Killing => {
                let k = kill.get_or_insert_with(|| killing(t, &ads));
                killing_check(t, k, start)
            }
            Check::Invariance => {
                let k = kill.get_or_insert_with(|| killing(t, &ads));
                check_invariance(t, &ads, &k.matrix)
            }
            Check::Rank => rank_check(t, probe.samples, probe.seed),
        };
        results.push(r);
    }
    VerificationReport {
        algebra: t.algebra().to_string(),
        kinds: kinds_label(t),
        checks: results,
    }
}
