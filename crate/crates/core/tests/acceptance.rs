//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//!
//! The exhaustive n <= 8 sweep is shared between criteria 1 and 11 through a
//! lazily computed outcome, so it runs once per test process.

use std::time::{Duration, Instant};

use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use signed_nullity::classify::build_cycle;
use signed_nullity::enumerate::{enumerate_trees, enumerate_unicyclic, signed_variants};
use signed_nullity::graph::SignedGraph;
use signed_nullity::harness::{
    self, check_classification_sets, check_cycle_spectrum, check_cycle_table,
    check_joining_theorems, check_pendant_deletion, check_switching_invariance,
    VerificationReport,
};
use signed_nullity::linalg::{adjacency_matrix, char_poly, cycle_eigenvalues, nullity_oracle};
use signed_nullity::matching::{max_matching_forest, tree_nullity};
use signed_nullity::nullity::{
    cycle_nullity, nullity_structural, verify_certificate, CertStep, NullityCertificate,
};

const SEED: u64 = 20260809;

fn criterion(n: u32, desc: &str, ok: bool, detail: &str) {
    println!(
        "criterion {n:2} ({desc}): {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} ({desc}) failed: {detail}");
}

fn fresh_report() -> VerificationReport {
    VerificationReport::empty(9, SEED)
}

struct SweepOutcome {
    graphs: u64,
    signings: u64,
    oracle_mismatches: Vec<String>,
    cert_failures: Vec<String>,
    elapsed: Duration,
}

/// Every connected unicyclic labeled graph on 3..=8 vertices, both switching
/// classes: structural nullity against the oracle, and certificate
/// verification for criterion 11.
static SWEEP: Lazy<SweepOutcome> = Lazy::new(|| {
    let start = Instant::now();
    let mut out = SweepOutcome {
        graphs: 0,
        signings: 0,
        oracle_mismatches: Vec::new(),
        cert_failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for n in 3..=8usize {
        for underlying in enumerate_unicyclic(n, false).expect("n in labeled range") {
            out.graphs += 1;
            let (balanced, unbalanced) = signed_variants(&underlying).expect("unicyclic");
            for signed in [balanced, unbalanced] {
                out.signings += 1;
                let want = nullity_oracle(&signed);
                match nullity_structural(&signed) {
                    Ok((got, cert)) => {
                        if got != want {
                            out.oracle_mismatches.push(format!(
                                "structural {got} oracle {want}: {:?}",
                                signed
                            ));
                        }
                        match verify_certificate(&signed, &cert) {
                            Ok(true) => {}
                            other => out
                                .cert_failures
                                .push(format!("verify -> {other:?}: {:?}", signed)),
                        }
                    }
                    Err(e) => out.oracle_mismatches.push(format!("error {e}: {:?}", signed)),
                }
            }
        }
    }
    out.elapsed = start.elapsed();
    out
});

/// Isomorphism-class sweep to n = 9 behind the four classification
/// set-equality criteria.
static CLASSIFICATION: Lazy<VerificationReport> = Lazy::new(|| {
    let mut report = fresh_report();
    check_classification_sets(&mut report, 9);
    report
});

fn classification_failures(check: &str) -> Vec<String> {
    CLASSIFICATION
        .failures
        .iter()
        .filter(|f| f.check == check)
        .map(|f| format!("{} expected={} got={}", f.check, f.expected, f.got))
        .collect()
}

#[test]
fn criterion_01_oracle_equivalence_exhaustive() {
    let sweep = &*SWEEP;
    let ok = sweep.oracle_mismatches.is_empty()
        && sweep.graphs == 1_508_761
        && sweep.signings == 2 * sweep.graphs
        && sweep.elapsed <= Duration::from_secs(300);
    criterion(
        1,
        "oracle equivalence, all unicyclic n<=8, both classes",
        ok,
        &format!(
            "graphs={} signings={} mismatches={} elapsed={:.1?}",
            sweep.graphs,
            sweep.signings,
            sweep.oracle_mismatches.len(),
            sweep.elapsed
        ),
    );
}

#[test]
fn criterion_02_classification_n2_n3() {
    let mut failures = classification_failures("classification-n2");
    failures.extend(classification_failures("classification-n3"));
    criterion(
        2,
        "nullity n-2 is exactly balanced C4; n-3 exactly C3",
        failures.is_empty(),
        &format!("failures={failures:?}"),
    );
}

#[test]
fn criterion_03_classification_n4() {
    let failures = classification_failures("classification-n4");
    criterion(
        3,
        "nullity n-4 is exactly unbal C4/C6, U1, U2, balanced U3",
        failures.is_empty(),
        &format!("failures={failures:?}"),
    );
}

#[test]
fn criterion_04_classification_n5() {
    let failures = classification_failures("classification-n5");
    criterion(
        4,
        "nullity n-5 is exactly C5 and U4",
        failures.is_empty(),
        &format!("failures={failures:?}"),
    );
}

#[test]
fn criterion_05_cycle_nullity_tables() {
    let mut report = fresh_report();
    let before = report.checks_run;
    check_cycle_table(&mut report, cycle_nullity);
    let cases = report.checks_run - before;
    criterion(
        5,
        "cycle nullity residue rules vs oracle, l=3..12",
        report.failures.is_empty() && cases == 20,
        &format!("cases={cases} failures={}", report.failures.len()),
    );
}

#[test]
fn criterion_06_unbalanced_cycle_spectrum() {
    // Direct residual check for the unbalanced closed form, plus the
    // harness's version over both classes.
    let mut worst: f64 = 0.0;
    for l in 3..=12usize {
        let g = signed_variants(&build_cycle(l)).expect("cycle").1;
        let poly = char_poly(&adjacency_matrix(&g)).expect("within bound");
        for lambda in cycle_eigenvalues(l, false).expect("l >= 3") {
            worst = worst.max(poly.eval_f64(lambda).abs());
        }
    }
    let mut report = fresh_report();
    check_cycle_spectrum(&mut report);
    criterion(
        6,
        "char poly vanishes at 2cos((2k-1)pi/l), l=3..12",
        worst < 1e-9 && report.failures.is_empty(),
        &format!("worst residual={worst:.2e}"),
    );
}

#[test]
fn criterion_07_pendant_deletion_lemma() {
    let mut report = fresh_report();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    check_pendant_deletion(&mut report, &mut rng, 1000);
    criterion(
        7,
        "pendant+neighbor deletion keeps oracle nullity, 1000 random",
        report.failures.is_empty(),
        &format!("failures={}", report.failures.len()),
    );
}

#[test]
fn criterion_08_joining_theorems() {
    let mut report = fresh_report();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    check_joining_theorems(&mut report, &mut rng, 500);
    criterion(
        8,
        "matched and mismatched joining formulas, 500 random each",
        report.failures.is_empty(),
        &format!("failures={}", report.failures.len()),
    );
}

#[test]
fn criterion_09_tree_formula_exhaustive() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let mut trees = 0u64;
    let mut failures = 0u64;
    for n in 1..=9usize {
        for shape in enumerate_trees(n).expect("n in range") {
            trees += 1;
            let mu = max_matching_forest(&shape).expect("tree").size();
            for _ in 0..3 {
                let signed = harness::random_signing(&mut rng, &shape);
                let formula = signed.order() - 2 * mu;
                if formula != nullity_oracle(&signed)
                    || formula != tree_nullity(&signed).expect("tree")
                {
                    failures += 1;
                }
            }
        }
    }
    criterion(
        9,
        "eta(T) = n - 2mu(T) on all trees n<=9, 3 signings each",
        failures == 0 && trees == 5_063_362,
        &format!("trees={trees} failures={failures}"),
    );
}

#[test]
fn criterion_10_switching_invariance() {
    let mut report = fresh_report();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    check_switching_invariance(&mut report, &mut rng, 1000);
    criterion(
        10,
        "oracle nullity invariant under switching, 1000 random",
        report.failures.is_empty(),
        &format!("failures={}", report.failures.len()),
    );
}

/// Mutations that can never produce a valid alternative derivation.
fn mutate(rng: &mut ChaCha8Rng, cert: &NullityCertificate) -> NullityCertificate {
    let mut cert = cert.clone();
    loop {
        match rng.random_range(0..6u8) {
            0 => {
                cert.nullity += 1;
                return cert;
            }
            1 => {
                // Drop the final step; engine certificates end in a base step,
                // so the replay leaves a graph pending.
                cert.steps.pop();
                return cert;
            }
            2 => {
                if let Some(CertStep::ForestBase { contribution, .. }) =
                    pick_step(rng, &mut cert, |s| matches!(s, CertStep::ForestBase { .. }))
                {
                    *contribution += 1;
                    return cert;
                }
            }
            3 => {
                if let Some(CertStep::CycleBase { balanced, .. }) =
                    pick_step(rng, &mut cert, |s| matches!(s, CertStep::CycleBase { .. }))
                {
                    *balanced = !*balanced;
                    return cert;
                }
            }
            4 => {
                if let Some(CertStep::ForestBase { matching_number, .. }) =
                    pick_step(rng, &mut cert, |s| matches!(s, CertStep::ForestBase { .. }))
                {
                    *matching_number += 1;
                    return cert;
                }
            }
            _ => {
                if let Some(CertStep::TypeIIDecompose { parts, .. }) =
                    pick_step(rng, &mut cert, |s| {
                        matches!(s, CertStep::TypeIIDecompose { .. })
                    })
                {
                    parts[0].1 += 1;
                    return cert;
                }
            }
        }
    }
}

fn pick_step<'a>(
    rng: &mut ChaCha8Rng,
    cert: &'a mut NullityCertificate,
    want: impl Fn(&CertStep) -> bool,
) -> Option<&'a mut CertStep> {
    let idx: Vec<usize> = cert
        .steps
        .iter()
        .enumerate()
        .filter(|(_, s)| want(s))
        .map(|(i, _)| i)
        .collect();
    if idx.is_empty() {
        return None;
    }
    let chosen = idx[rng.random_range(0..idx.len())];
    cert.steps.get_mut(chosen)
}

#[test]
fn criterion_11_certificate_soundness() {
    // Every certificate from the criterion-1 sweep verified there.
    let sweep = &*SWEEP;

    // 100 seeded mutations over certificates of the iso-class sweep: none
    // may verify.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 11);
    let mut population: Vec<(SignedGraph, NullityCertificate)> = Vec::new();
    for n in 3..=9usize {
        for underlying in enumerate_unicyclic(n, true).expect("n in iso range") {
            let (balanced, unbalanced) = signed_variants(&underlying).expect("unicyclic");
            for signed in [balanced, unbalanced] {
                let (_, cert) = nullity_structural(&signed).expect("unicyclic input");
                population.push((signed, cert));
            }
        }
    }
    let mut false_accepts = 0usize;
    for _ in 0..100 {
        let (graph, cert) = &population[rng.random_range(0..population.len())];
        let mutated = mutate(&mut rng, cert);
        if mutated == *cert {
            continue;
        }
        if verify_certificate(graph, &mutated) == Ok(true) {
            false_accepts += 1;
        }
    }
    criterion(
        11,
        "all sweep certificates verify; 100 mutations all rejected",
        sweep.cert_failures.is_empty() && false_accepts == 0,
        &format!(
            "cert_failures={} false_accepts={false_accepts}",
            sweep.cert_failures.len()
        ),
    );
}
