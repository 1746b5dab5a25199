//! One PASS/FAIL line per acceptance criterion, all by exact equality.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use octolie::albert::{f4_action_brackets, f4_actions, jordan_product, AlbertElement, Copy3, ALBERT_DIM};
use octolie::algebra::{build_table, Algebra, AlgebraSpec};
use octolie::e8::Kinds;
use octolie::export::to_json;
use octolie::linalg::Inertia;
use octolie::octonion::AlgebraKind;
use octolie::so16::{spin16_basis_action, spin16_brackets, SO16_DIM};
use octolie::so8::{so8_basis, SO8_DIM};
use octolie::spin9::{spin_basis_action, spin_brackets, SO9_DIM};
use octolie::table::StructureConstants;
use octolie::verify::{ad_matrices, check_jacobi, check_jacobi_triples, killing, run_checks, Check, ProbeOptions};
use octolie::{RatMatrix, Rational, SparseMatrix};

/// Every (algebra, k, l) that the library builds.
fn all_builds() -> Vec<(Algebra, AlgebraKind, Option<AlgebraKind>)> {
    let mut out = Vec::new();
    for kind in AlgebraKind::ALL {
        out.push((Algebra::So8, kind, None));
        out.push((Algebra::So9, kind, None));
        out.push((Algebra::F4, kind, None));
    }
    for kinds in KIND_PAIRS {
        out.push((Algebra::So16, kinds.k, Some(kinds.l)));
        out.push((Algebra::E8, kinds.k, Some(kinds.l)));
    }
    out
}

fn rank_of_flattened(ms: &[SparseMatrix]) -> usize {
    let rows: Vec<Vec<Rational>> = ms.iter().map(|m| m.to_dense().as_slice().to_vec()).collect();
    RatMatrix::from_rows(rows).unwrap().rank()
}

/// Rank of `e_i -> ([e_i, v_1], [e_i, v_2], [e_i, v_3])` for fixed
/// integer vectors `v_s`; full rank means the basis is independent.
fn bracket_image_rank(t: &StructureConstants) -> usize {
    let n = t.dim();
    let probes: Vec<Vec<Rational>> = (0..3)
        .map(|s| (0..n).map(|i| q(((i * 7 + s * 13) % 19) as i64 - 9)).collect())
        .collect();
    let images: Vec<RatMatrix> = probes.iter().map(|v| t.ad(v).to_dense()).collect();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| images.iter().flat_map(|m| (0..n).map(move |r| m.get(r, i).clone())).collect())
        .collect();
    RatMatrix::from_rows(rows).unwrap().rank()
}

fn dimension_ladder() -> Result<String, String> {
    let mut parts = Vec::new();
    for kind in AlgebraKind::ALL {
        let so8: Vec<SparseMatrix> = (0..SO8_DIM)
            .map(|i| so8_basis(kind).operator(i).matrix().to_sparse())
            .collect();
        let so9: Vec<SparseMatrix> = (0..SO9_DIM).map(|i| spin_basis_action(kind, i)).collect();
        let f4: Vec<SparseMatrix> = f4_actions(kind).into_iter().cloned().collect();
        parts.push((format!("so8 {kind}"), rank_of_flattened(&so8), 28));
        parts.push((format!("so9 {kind}"), rank_of_flattened(&so9), 36));
        parts.push((format!("f4 {kind}"), rank_of_flattened(&f4), 52));
    }
    for kinds in KIND_PAIRS {
        let so16: Vec<SparseMatrix> = (0..SO16_DIM).map(|i| spin16_basis_action(kinds, i)).collect();
        parts.push((format!("so16 {kinds:?}"), rank_of_flattened(&so16), 120));
        parts.push((format!("e8 {kinds:?}"), bracket_image_rank(&e8_table(kinds)), 248));
    }
    let bad: Vec<String> = parts
        .iter()
        .filter(|(_, r, d)| r != d)
        .map(|(n, r, d)| format!("{n}: rank {r} != {d}"))
        .collect();
    if bad.is_empty() {
        Ok(format!("{} ranks 28/36/120/52/248 exact", parts.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn closure() -> Result<String, String> {
    let mut violations = Vec::new();
    let start = Instant::now();
    for (a, k, l) in all_builds() {
        let spec = AlgebraSpec::new(a, k, l).unwrap();
        if let Err(e) = build_table(&spec) {
            violations.push(format!("{a} {k} {l:?}: {e}"));
        }
    }
    let build_secs = start.elapsed().as_secs_f64();
    for kind in AlgebraKind::ALL {
        if spin_brackets(kind).iter().flatten().any(Option::is_none) {
            violations.push(format!("so9 spin action {kind} leaves its span"));
        }
        if f4_action_brackets(kind).iter().flatten().any(Option::is_none) {
            violations.push(format!("f4 Albert action {kind} leaves its span"));
        }
    }
    for kinds in KIND_PAIRS {
        if spin16_brackets(kinds).iter().flatten().any(Option::is_none) {
            violations.push(format!("so16 spin action {kinds:?} leaves its span"));
        }
    }
    if violations.is_empty() {
        Ok(format!("{} builds, 0 closure violations, built in {build_secs:.1}s", all_builds().len()))
    } else {
        Err(violations.join("; "))
    }
}

fn jacobi() -> Result<String, String> {
    let mut bad = Vec::new();
    let mut triples = 0;
    for (a, k, l) in all_builds() {
        let t = table(a, k, l);
        let r = check_jacobi(&t, &ad_matrices(&t));
        if !r.passed {
            bad.push(format!("{a} {k} {l:?}: {}", r.detail));
        }
        if t.dim() <= 52 {
            let r = check_jacobi_triples(&t);
            triples += 1;
            if !r.passed {
                bad.push(format!("{a} {k} {l:?} triples: {}", r.detail));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("ad-homomorphism on {} builds, triple loop on {triples}", all_builds().len()))
    } else {
        Err(bad.join("; "))
    }
}

fn identity_suite() -> Result<String, String> {
    let mut failed = Vec::new();
    for (name, f) in suite::ALL {
        if catch_unwind(AssertUnwindSafe(f)).is_err() {
            failed.push(name.to_string());
        }
    }
    for kind in AlgebraKind::ALL {
        if !so9_spin_mismatches(kind).is_empty() {
            failed.push(format!("so9 symbolic vs action {kind}"));
        }
    }
    for kinds in KIND_PAIRS {
        if !so16_spin_mismatches(kinds).is_empty() {
            failed.push(format!("so16 symbolic vs action {kinds:?}"));
        }
    }
    if failed.is_empty() {
        Ok(format!("{} named identities plus so9/so16 symbolic-vs-action agreement", suite::ALL.len()))
    } else {
        Err(failed.join("; "))
    }
}

fn cross_module_oracles() -> Result<String, String> {
    let mut bad = Vec::new();
    for kinds in KIND_PAIRS {
        let m = e8_f4_restriction_mismatches(kinds);
        if !m.is_empty() {
            bad.push(format!("f4 restriction {kinds:?}: {} pairs", m.len()));
        }
        for copy in Copy3::ALL {
            let m = so16_copy_mismatches(kinds, copy);
            if !m.is_empty() {
                bad.push(format!("so16 copy {copy:?} {kinds:?}: {} pairs", m.len()));
            }
        }
        let dims = copy_intersection_dims(kinds);
        if dims != [56; 3] {
            bad.push(format!("intersections {kinds:?}: {dims:?}"));
        }
    }
    if bad.is_empty() {
        Ok("f4 label-for-label, 3 so16 copies, intersections 56".into())
    } else {
        Err(bad.join("; "))
    }
}

fn killing_signatures() -> Result<String, String> {
    let expected: Vec<(Algebra, AlgebraKind, Option<AlgebraKind>, Inertia)> = vec![
        (Algebra::So9, C, None, Inertia::new(0, 36, 0)),
        (Algebra::So9, S, None, Inertia::new(20, 16, 0)),
        (Algebra::So16, C, Some(C), Inertia::new(0, 120, 0)),
        (Algebra::So16, S, Some(S), Inertia::new(64, 56, 0)),
        (Algebra::So16, C, Some(S), Inertia::new(48, 72, 0)),
        (Algebra::So16, S, Some(C), Inertia::new(48, 72, 0)),
        (Algebra::F4, C, None, Inertia::new(0, 52, 0)),
        (Algebra::F4, S, None, Inertia::new(28, 24, 0)),
        (Algebra::E8, C, Some(C), Inertia::new(0, 248, 0)),
        (Algebra::E8, S, Some(S), Inertia::new(128, 120, 0)),
        (Algebra::E8, C, Some(S), Inertia::new(112, 136, 0)),
        (Algebra::E8, S, Some(C), Inertia::new(112, 136, 0)),
    ];
    let mut bad = Vec::new();
    for (a, k, l, want) in &expected {
        let t = table(*a, *k, *l);
        let r = killing(&t, &ad_matrices(&t));
        if r.inertia != *want || r.form_name.is_none() {
            bad.push(format!("{a} {k} {l:?}: {} ({:?})", r.inertia, r.form_name));
        }
    }
    if bad.is_empty() {
        Ok(format!("{} inertias exact, all nondegenerate", expected.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn derivation_property() -> Result<String, String> {
    let mut failures = 0;
    for kind in AlgebraKind::ALL {
        let basis: Vec<AlbertElement> = (0..ALBERT_DIM).map(|i| AlbertElement::basis(kind, i)).collect();
        for m in f4_actions(kind) {
            let act = |h: &AlbertElement| AlbertElement::from_coords(kind, m.apply(h.coords()));
            for x in &basis {
                for y in &basis {
                    let lhs = act(&jordan_product(x, y));
                    let rhs = jordan_product(&act(x), y).add(&jordan_product(x, &act(y)));
                    if lhs != rhs {
                        failures += 1;
                    }
                }
            }
        }
    }
    if failures == 0 {
        Ok(format!("2 x 52 actions x {} pairs", ALBERT_DIM * ALBERT_DIM))
    } else {
        Err(format!("{failures} failing (action, pair) cases"))
    }
}

fn determinism() -> Result<String, String> {
    let pool = |n: usize| rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
    let (one, four) = (pool(1), pool(4));
    let mut bad = Vec::new();
    for (a, k, l) in all_builds() {
        let spec = AlgebraSpec::new(a, k, l).unwrap();
        let x = one.install(|| to_json(&build_table(&spec).unwrap()));
        let y = four.install(|| to_json(&build_table(&spec).unwrap()));
        if x != y {
            bad.push(format!("{a} {k} {l:?} export"));
        }
    }
    let t = table(Algebra::F4, S, None);
    let checks = [Check::Jacobi, Check::Killing, Check::Rank];
    let probe = ProbeOptions { samples: 5, seed: 3 };
    let r1 = one.install(|| run_checks(&t, &checks, probe).to_string());
    let r4 = four.install(|| run_checks(&t, &checks, probe).to_string());
    if r1 != r4 {
        bad.push("f4 verification report".into());
    }
    if bad.is_empty() {
        Ok(format!("{} exports and a report byte-identical on 1 and 4 threads", all_builds().len()))
    } else {
        Err(bad.join("; "))
    }
}

type Criterion = fn() -> Result<String, String>;

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, Criterion); 8] = [
        ("dimension ladder", dimension_ladder),
        ("closure", closure),
        ("Jacobi", jacobi),
        ("identity suite", identity_suite),
        ("cross-module oracles", cross_module_oracles),
        ("Killing signatures", killing_signatures),
        ("derivation property", derivation_property),
        ("determinism", determinism),
    ];
    let mut all = true;
    for (n, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let line = match outcome {
            Ok(detail) => format!("PASS criterion {} ({title}): {detail} [{secs:.1}s]", n + 1),
            Err(detail) => {
                all = false;
                format!("FAIL criterion {} ({title}): {detail} [{secs:.1}s]", n + 1)
            }
        };
        writeln!(std::io::stdout(), "{line}").unwrap();
    }
    assert!(all, "at least one acceptance criterion failed");
}

#[test]
fn e8_kind_pairs_cover_both_mixed_orders() {
    let mixed: Vec<Kinds> = KIND_PAIRS.into_iter().filter(|k| k.k != k.l).collect();
    assert_eq!(mixed.len(), 2);
}
