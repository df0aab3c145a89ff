//! End-to-end acceptance sweeps. Each test prints one PASS/FAIL line and
//! lists any failing checks above it.

use nilcent_core::report::Check;
use nilcent_core::suites::{self, SuiteOutcome};
use nilcent_core::varieties::nonradical_witness;

const SEED: u64 = 7;

// Sweep sizes and sample counts. Arithmetic is exact, so there are no
// numeric tolerances: every comparison is equality over Q.
const STRUCTURE_MAX_N: usize = 8;
const CENTRE_MAX_N: usize = 9;
const PAIRS_MAX_N: usize = 10;
const INDEX_MAX_N: usize = 8;
const INDEX_SAMPLES: usize = 20;
const CODIM3_MAX_N: usize = 8;
const CODIM3_POINTS: usize = 50;
const CODIM3_SCALINGS: usize = 10;
const INVARIANTS_MAX_N: usize = 8;
const NULLCONE_MAX_N: usize = 8;
const COMMVAR_MAX_N: usize = 8;
const COMMVAR_SOLUTIONS: usize = 100;
const COMMVAR_DEGENERATIONS: usize = 10;
const SUBSPACE_RETRIES: usize = 25;

fn verdict(criterion: u32, title: &str, checks: &[&Check], extra: &[String]) -> bool {
    let failed: Vec<&&Check> = checks.iter().filter(|c| !c.pass).collect();
    for c in &failed {
        println!("  FAIL {} expected={} actual={}", c.name, c.expected, c.actual);
    }
    for line in extra {
        println!("  {line}");
    }
    let ok = !checks.is_empty() && failed.is_empty();
    println!(
        "{} criterion {criterion}: {title} ({} checks, {} failed)",
        if ok { "PASS" } else { "FAIL" },
        checks.len(),
        failed.len()
    );
    ok
}

fn all(outcome: &SuiteOutcome) -> Vec<&Check> {
    outcome.checks.iter().collect()
}

fn guard_lines(outcome: &SuiteOutcome) -> Vec<String> {
    outcome.skipped.iter().map(|s| format!("SKIPPED {}: {}", s.name, s.reason)).collect()
}

#[test]
fn criterion_01_structure_constants() {
    let out = suites::structure_suite(STRUCTURE_MAX_N, SEED);
    let table = out.checks.iter().find(|c| c.name.starts_with("sp (4,2) bracket table"));
    assert!(table.is_some(), "sp (4,2) table check missing");
    assert!(out.skipped.is_empty(), "{:?}", out.skipped);
    assert!(verdict(1, "structure constants match matrix commutators", &all(&out), &[]));
}

#[test]
fn criterion_02_centre() {
    let out = suites::centre_suite(CENTRE_MAX_N, SEED);
    assert!(out.skipped.is_empty(), "{:?}", out.skipped);
    assert!(verdict(2, "centre dimension and extra orthogonal generator", &all(&out), &[]));
}

#[test]
fn criterion_03_commuting_pairs() {
    let out = suites::pairs_suite(PAIRS_MAX_N, SEED);
    assert!(out.skipped.is_empty(), "{:?}", out.skipped);
    assert!(verdict(3, "nilpotent x with dim g_(e,x) = rank", &all(&out), &[]));
}

#[test]
fn criterion_04_index() {
    assert_eq!(suites::INDEX_SAMPLES, INDEX_SAMPLES);
    let out = suites::index_suite(INDEX_MAX_N, SEED);
    assert!(out.skipped.is_empty(), "{:?}", out.skipped);
    assert!(verdict(4, "sampled index equals rank", &all(&out), &[]));
}

#[test]
fn criterion_05_codim3() {
    assert_eq!(suites::CODIM3_POINTS, CODIM3_POINTS);
    assert_eq!(suites::CODIM3_SCALINGS, CODIM3_SCALINGS);
    let out = suites::codim3_suite(CODIM3_MAX_N, SEED);
    assert!(out.skipped.is_empty(), "{:?}", out.skipped);
    assert!(verdict(5, "alpha/beta/gamma plane regular, gamma stabiliser shape, scaling", &all(&out), &[]));
}

#[test]
fn criterion_06_invariants() {
    let out = suites::invariants_suite(INVARIANTS_MAX_N, SEED);
    assert!(out.checks.iter().any(|c| c.name.starts_with("gl (4,2)") && c.name.contains("degrees")));
    assert!(out.skipped.is_empty(), "{:?}", out.skipped);
    assert!(verdict(6, "monomial, slice and Poisson descriptions of the invariants agree", &all(&out), &[]));
}

#[test]
fn criterion_07_nonradical_witness() {
    let w = nonradical_witness().expect("witness computation");
    let check = Check::verdict(
        "gl (4,2) non-radical witness",
        "null-cone ideal is not radical",
        "identity holds, witness not in ideal, square in ideal",
        format!(
            "identity {}, witness normal form {}, square normal form {}",
            w.identity_holds, w.witness_normal_form, w.square_normal_form
        ),
        w.holds(),
    );
    assert!(verdict(7, "non-radical witness", &[&check], &[]));
}

#[test]
fn criterion_08_nullcone_components() {
    let out = suites::nullcone_suite(NULLCONE_MAX_N, SEED);
    let cases = suites::nullcone_cases(NULLCONE_MAX_N);
    let components: Vec<&Check> = out.checks.iter().filter(|c| c.name.ends_with(" null-cone")).collect();
    assert_eq!(components.len(), cases.len());
    let count_skipped = out.skipped.iter().any(|s| s.name.contains("(3,2,1)"));
    let count_checked = out.checks.iter().any(|c| c.name.contains("(3,2,1)") && c.name.contains("components"));
    assert!(count_skipped || count_checked, "(3,2,1) component count neither checked nor skipped");
    let checks: Vec<&Check> = out.checks.iter().filter(|c| !c.name.contains("non-radical")).collect();
    assert!(verdict(8, "null-cone components of hooks and two-block partitions", &checks, &guard_lines(&out)));
}

#[test]
fn criterion_09_commuting_variety() {
    assert_eq!(suites::COMMVAR_SOLUTIONS, COMMVAR_SOLUTIONS);
    assert_eq!(suites::COMMVAR_DEGENERATIONS, COMMVAR_DEGENERATIONS);
    let out = suites::commvar_suite(COMMVAR_MAX_N, SEED);
    assert!((1..=4).all(|n| suites::commvar_cases(COMMVAR_MAX_N).iter().any(|&(_, k)| k == n)));
    assert!(out.skipped.is_empty(), "{:?}", out.skipped);
    assert!(verdict(9, "two-block commuting variety equations and degenerations", &all(&out), &[]));
}

fn regular_sequence_outcome() -> SuiteOutcome {
    assert_eq!(suites::SUBSPACE_RETRIES, SUBSPACE_RETRIES);
    suites::regular_sequence_suite(6, SEED)
}

#[test]
fn criterion_10_regular_sequences() {
    let out = regular_sequence_outcome();
    let checks: Vec<&Check> = out.checks.iter().filter(|c| c.name.ends_with("regular sequence")).collect();
    assert_eq!(checks.len(), suites::regular_sequence_cases().len());
    assert!(verdict(10, "invariants form a regular sequence", &checks, &guard_lines(&out)));
}

#[test]
fn criterion_11_differentials() {
    let out = regular_sequence_outcome();
    let checks: Vec<&Check> = out.checks.iter().filter(|c| c.name.ends_with("differentials")).collect();
    assert_eq!(checks.len(), 1);
    assert!(verdict(11, "differentials of the top sp (4,2) invariant", &checks, &[]));
}
