//! The evidence engine: seeded random generators and `verify_all`, which
//! batch-checks every structural statement the library relies on against the
//! exact rank oracle and collects failures as replayable data.

use std::collections::HashSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{build_cycle, build_u1, build_u2, build_u3, build_u4};
use crate::enumerate::{canonical_form, enumerate_unicyclic, signed_variants};
use crate::error::Result;
use crate::graph::{k_joining, Sign, SignedGraph};
use crate::graphfile;
use crate::linalg::{adjacency_matrix, char_poly, cycle_eigenvalues, nullity_oracle};
use crate::matching::is_matched_in_tree;
use crate::nullity::{cycle_nullity, nullity_structural};
use crate::switching::{apply_switching, SwitchingFunction};

/// Randomized instance counts, matched to the acceptance thresholds.
pub const JOINING_INSTANCES: usize = 500;
pub const PENDANT_INSTANCES: usize = 1000;
pub const SWITCHING_INSTANCES: usize = 1000;

/// Exhaustive labeled sweeps stop here; n = 9 runs on isomorphism-class
/// representatives (the statements are relabeling-invariant, which is
/// checked separately).
pub const LABELED_SWEEP_BOUND: usize = 8;
pub const MAX_VERIFY_N: usize = 9;
pub const MIN_VERIFY_N: usize = 3;

// ---------------------------------------------------------------------------
// Seeded random generators

/// Uniform labeled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> SignedGraph {
    assert!(n >= 1);
    if n == 1 {
        return SignedGraph::empty(1);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    crate::enumerate::tree_from_prufer(n, &seq)
}

/// All-positive G(n, p) random graph.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SignedGraph::all_positive(n, &edges).expect("generated edges are simple")
}

/// Same underlying graph, signs resampled uniformly.
pub fn random_signing<R: Rng>(rng: &mut R, g: &SignedGraph) -> SignedGraph {
    SignedGraph::new(
        g.order(),
        g.edges().iter().map(|&(u, v, _)| {
            let s = if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus };
            (u, v, s)
        }),
    )
    .expect("resigning keeps the graph valid")
}

/// Random signed graph: G(n, p) underlying with uniform signs.
pub fn random_signed_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SignedGraph {
    let g = random_graph(rng, n, p);
    random_signing(rng, &g)
}

/// Random connected unicyclic graph: a random tree plus one random non-tree
/// edge (all-positive).
pub fn random_unicyclic<R: Rng>(rng: &mut R, n: usize) -> SignedGraph {
    assert!(n >= 3);
    loop {
        let tree = random_tree(rng, n);
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v || tree.has_edge(u, v) {
            continue;
        }
        let mut edges: Vec<(usize, usize)> =
            tree.edges().iter().map(|&(a, b, _)| (a, b)).collect();
        edges.push((u.min(v), u.max(v)));
        return SignedGraph::all_positive(n, &edges).expect("tree plus non-edge is simple");
    }
}

/// Random signed graph of order `n >= 2` guaranteed to have a pendant
/// vertex: a random signed graph on `n - 1` vertices plus a fresh leaf.
pub fn random_graph_with_pendant<R: Rng>(rng: &mut R, n: usize, p: f64) -> SignedGraph {
    assert!(n >= 2);
    let base = random_signed_graph(rng, n - 1, p);
    let anchor = rng.random_range(0..n - 1);
    let sign = if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus };
    let mut edges = base.edges().to_vec();
    edges.push((anchor, n - 1, sign));
    SignedGraph::new(n, edges).expect("fresh leaf keeps the graph simple")
}

/// Uniform switching function on `n` vertices.
pub fn random_switching<R: Rng>(rng: &mut R, n: usize) -> SwitchingFunction {
    SwitchingFunction::new(
        (0..n)
            .map(|_| if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus })
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    pub check: String,
    pub graph: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub max_n: usize,
    pub seed: u64,
    pub graphs_generated: u64,
    pub signings_tested: u64,
    pub checks_run: u64,
    pub failures: Vec<CheckFailure>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    /// Blank report for running individual checks.
    pub fn empty(max_n: usize, seed: u64) -> Self {
        VerificationReport {
            max_n,
            seed,
            graphs_generated: 0,
            signings_tested: 0,
            checks_run: 0,
            failures: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, check: &str, graph: &SignedGraph, expected: String, got: String) {
        self.failures.push(CheckFailure {
            check: check.to_string(),
            graph: graphfile::emit(graph),
            expected,
            got,
        });
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str("verification report\n");
        out.push_str(&format!("  max-n: {}  seed: {}\n", self.max_n, self.seed));
        out.push_str(&format!("  graphs generated: {}\n", self.graphs_generated));
        out.push_str(&format!("  signings tested: {}\n", self.signings_tested));
        out.push_str(&format!("  checks run: {}\n", self.checks_run));
        out.push_str(&format!("  failures: {}\n", self.failures.len()));
        out.push_str(&format!("  elapsed: {} ms\n", self.elapsed_ms));
        for f in &self.failures {
            out.push_str(&format!(
                "FAIL [{}] expected={} got={}\n",
                f.check, f.expected, f.got
            ));
            for line in f.graph.lines() {
                out.push_str(&format!("    {line}\n"));
            }
        }
        out.push_str(if self.passed() { "PASS\n" } else { "FAIL\n" });
        out
    }
}

// ---------------------------------------------------------------------------
// Individual checks

/// Structural nullity equals the rank oracle over every connected unicyclic
/// graph up to `n_max`, both switching classes. Labeled graphs up to
/// [`LABELED_SWEEP_BOUND`], isomorphism representatives beyond. The
/// structural function is injectable so its failure detection can be tested.
pub fn check_oracle_equivalence<F>(report: &mut VerificationReport, n_max: usize, structural: F)
where
    F: Fn(&SignedGraph) -> Result<usize>,
{
    for n in MIN_VERIFY_N..=n_max {
        let up_to_iso = n > LABELED_SWEEP_BOUND;
        let stream = enumerate_unicyclic(n, up_to_iso).expect("n within enumeration bounds");
        for underlying in stream {
            report.graphs_generated += 1;
            let (balanced, unbalanced) = signed_variants(&underlying).expect("unicyclic");
            for signed in [balanced, unbalanced] {
                report.signings_tested += 1;
                report.checks_run += 1;
                let want = nullity_oracle(&signed);
                match structural(&signed) {
                    Ok(got) if got == want => {}
                    Ok(got) => report.fail(
                        "oracle-equivalence",
                        &signed,
                        want.to_string(),
                        got.to_string(),
                    ),
                    Err(e) => report.fail(
                        "oracle-equivalence",
                        &signed,
                        want.to_string(),
                        format!("error: {e}"),
                    ),
                }
            }
        }
    }
}

/// Key identifying a signed unicyclic graph up to isomorphism and switching:
/// canonical underlying form plus balance flag.
type ClassKey = (Vec<u8>, bool);

fn expected_extremal_sets(n_max: usize) -> [HashSet<ClassKey>; 4] {
    let canon = |g: &SignedGraph| canonical_form(g, true).expect("order within bound");
    let mut sets: [HashSet<ClassKey>; 4] = Default::default();
    // nullity n-2: the balanced C4.
    if n_max >= 4 {
        sets[0].insert((canon(&build_cycle(4)), true));
    }
    // nullity n-3: the C3, both classes.
    if n_max >= 3 {
        sets[1].insert((canon(&build_cycle(3)), true));
        sets[1].insert((canon(&build_cycle(3)), false));
    }
    // nullity n-4: unbalanced C4 and C6, all signings of U1/U2, balanced U3.
    if n_max >= 4 {
        sets[2].insert((canon(&build_cycle(4)), false));
    }
    if n_max >= 6 {
        sets[2].insert((canon(&build_cycle(6)), false));
    }
    for r in 1..=n_max.saturating_sub(3) {
        for s in 0..=r {
            if 3 + r + s <= n_max {
                sets[2].insert((canon(&build_u1(r, s)), true));
                sets[2].insert((canon(&build_u1(r, s)), false));
            }
        }
    }
    for r in 1..=n_max.saturating_sub(4) {
        for s in 0..=r {
            if 4 + r + s <= n_max {
                sets[2].insert((canon(&build_u2(r, s)), true));
                sets[2].insert((canon(&build_u2(r, s)), false));
            }
        }
    }
    for r in 1..=n_max.saturating_sub(5) {
        sets[2].insert((canon(&build_u3(r)), true));
    }
    // nullity n-5: C5 both classes, all signings of U4.
    if n_max >= 5 {
        sets[3].insert((canon(&build_cycle(5)), true));
        sets[3].insert((canon(&build_cycle(5)), false));
    }
    for r in 1..=n_max.saturating_sub(4) {
        sets[3].insert((canon(&build_u4(r)), true));
        sets[3].insert((canon(&build_u4(r)), false));
    }
    sets
}

/// Exact set equality between the nullity-(n-k) solution sets (k = 2..5) over all
/// unicyclic signed graphs up to `n_max` (isomorphism classes, both
/// switching classes) and the four characterization statements.
pub fn check_classification_sets(report: &mut VerificationReport, n_max: usize) {
    let expected = expected_extremal_sets(n_max);
    let mut solution: [HashSet<ClassKey>; 4] = Default::default();
    let mut witnesses: Vec<(ClassKey, SignedGraph)> = Vec::new();
    for n in MIN_VERIFY_N..=n_max {
        for underlying in enumerate_unicyclic(n, true).expect("n within iso bounds") {
            report.graphs_generated += 1;
            let key = canonical_form(&underlying, true).expect("order within bound");
            let (balanced, unbalanced) = signed_variants(&underlying).expect("unicyclic");
            for (signed, flag) in [(balanced, true), (unbalanced, false)] {
                report.signings_tested += 1;
                report.checks_run += 1;
                let eta = nullity_oracle(&signed);
                if let Some(k) = n.checked_sub(eta) {
                    if (2..=5).contains(&k) {
                        solution[k - 2].insert((key.clone(), flag));
                        witnesses.push(((key.clone(), flag), signed));
                    }
                }
            }
        }
    }
    for k in 0..4 {
        let class = format!("classification-n{}", k + 2);
        let mut extra: Vec<&ClassKey> = solution[k].difference(&expected[k]).collect();
        extra.sort();
        let mut missing: Vec<&ClassKey> = expected[k].difference(&solution[k]).collect();
        missing.sort();
        for key in extra {
            let graph = witnesses
                .iter()
                .find(|(w, _)| w == key)
                .map(|(_, g)| g.clone())
                .unwrap_or_else(|| SignedGraph::empty(0));
            report.fail(
                &class,
                &graph,
                "not in characterized family".to_string(),
                format!("nullity n-{}", k + 2),
            );
        }
        for key in missing {
            report.fail(
                &class,
                &SignedGraph::empty(0),
                format!("family member with nullity n-{}", k + 2),
                format!("missing: canonical {:02x?} balanced={}", key.0, key.1),
            );
        }
        report.checks_run += 1;
    }
}

/// Sample a tree of order 2..=8 with a vertex in the requested matching
/// state. Retries internally; matched and mismatched vertices both occur
/// with decent probability on small trees.
fn sample_tree_with_vertex<R: Rng>(rng: &mut R, want_matched: bool) -> (SignedGraph, usize) {
    loop {
        let n = rng.random_range(2..=8);
        let shape = random_tree(rng, n);
        let tree = random_signing(rng, &shape);
        let u = rng.random_range(0..n);
        if is_matched_in_tree(&tree, u).expect("generated tree is a tree") == want_matched {
            return (tree, u);
        }
    }
}

pub fn check_joining_theorems<R: Rng>(report: &mut VerificationReport, rng: &mut R, count: usize) {
    // Matched vertex: joining k edges from it adds the nullities.
    for _ in 0..count {
        let (tree, u) = sample_tree_with_vertex(rng, true);
        let partner_order = rng.random_range(1..=6);
        let partner = random_signed_graph(rng, partner_order, 0.45);
        let k = rng.random_range(1..=partner.order());
        let mut targets: Vec<usize> = (0..partner.order()).collect();
        targets.shuffle(rng);
        targets.truncate(k);
        let signs: Vec<Sign> = (0..k)
            .map(|_| if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus })
            .collect();
        let joined = k_joining(&tree, u, &partner, &targets, &signs).expect("valid join");
        report.graphs_generated += 1;
        report.signings_tested += 1;
        report.checks_run += 1;
        let want = nullity_oracle(&tree) + nullity_oracle(&partner);
        let got = nullity_oracle(&joined);
        if got != want {
            report.fail("matched-joining", &joined, want.to_string(), got.to_string());
        }
    }
    // Mismatched vertex: the join's nullity is the tree's plus the
    // partner-with-u subgraph's, minus one.
    for _ in 0..count {
        let (tree, u) = sample_tree_with_vertex(rng, false);
        let partner_order = rng.random_range(1..=6);
        let partner = random_signed_graph(rng, partner_order, 0.45);
        let k = rng.random_range(1..=partner.order());
        let mut targets: Vec<usize> = (0..partner.order()).collect();
        targets.shuffle(rng);
        targets.truncate(k);
        let signs: Vec<Sign> = (0..k)
            .map(|_| if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus })
            .collect();
        let joined = k_joining(&tree, u, &partner, &targets, &signs).expect("valid join");
        // The subgraph of the join induced by the partner's vertices and u.
        let mut keep: Vec<usize> = (tree.order()..tree.order() + partner.order()).collect();
        keep.push(u);
        let (partner_plus_u, _) = joined.induced(&keep).expect("vertices in range");
        report.graphs_generated += 1;
        report.signings_tested += 1;
        report.checks_run += 1;
        let want =
            nullity_oracle(&tree) as i64 + nullity_oracle(&partner_plus_u) as i64 - 1;
        let got = nullity_oracle(&joined) as i64;
        if got != want {
            report.fail(
                "mismatched-joining",
                &joined,
                want.to_string(),
                got.to_string(),
            );
        }
    }
}

pub fn check_pendant_deletion<R: Rng>(report: &mut VerificationReport, rng: &mut R, count: usize) {
    for _ in 0..count {
        let n = rng.random_range(2..=12);
        let g = random_graph_with_pendant(rng, n, 0.3);
        let u = *g
            .pendant_vertices()
            .first()
            .expect("generator guarantees a pendant");
        let w = g.adjacency()[u][0].0;
        let (h, _) = g.delete_vertices(&[u, w]).expect("vertices in range");
        report.graphs_generated += 1;
        report.signings_tested += 1;
        report.checks_run += 1;
        let want = nullity_oracle(&g);
        let got = nullity_oracle(&h);
        if want != got {
            report.fail("pendant-deletion", &g, want.to_string(), got.to_string());
        }
    }
}

pub fn check_switching_invariance<R: Rng>(report: &mut VerificationReport, rng: &mut R, count: usize) {
    for _ in 0..count {
        let n = rng.random_range(1..=10);
        let g = random_signed_graph(rng, n, 0.4);
        let theta = random_switching(rng, n);
        let h = apply_switching(&g, &theta).expect("total switching");
        report.graphs_generated += 1;
        report.signings_tested += 1;
        report.checks_run += 1;
        let want = nullity_oracle(&g);
        let got = nullity_oracle(&h);
        if want != got {
            report.fail("switching-invariance", &g, want.to_string(), got.to_string());
        }
    }
}

fn signed_cycle(l: usize, balanced: bool) -> SignedGraph {
    let g = build_cycle(l);
    if balanced {
        g
    } else {
        signed_variants(&g).expect("cycle is unicyclic").1
    }
}

/// Cycle nullity table against the oracle for 3 <= l <= 12 and both balance
/// classes; the table function is injectable so a tampered table is caught.
pub fn check_cycle_table<F>(report: &mut VerificationReport, table: F)
where
    F: Fn(usize, bool) -> Result<usize>,
{
    for l in 3..=12 {
        for balanced in [true, false] {
            let g = signed_cycle(l, balanced);
            report.graphs_generated += 1;
            report.signings_tested += 1;
            report.checks_run += 1;
            let want = nullity_oracle(&g);
            match table(l, balanced) {
                Ok(got) if got == want => {}
                Ok(got) => report.fail(
                    "cycle-nullity-table",
                    &g,
                    want.to_string(),
                    got.to_string(),
                ),
                Err(e) => report.fail(
                    "cycle-nullity-table",
                    &g,
                    want.to_string(),
                    format!("error: {e}"),
                ),
            }
        }
    }
}

/// The exact characteristic polynomial of each signed cycle vanishes (to
/// 1e-9 in floating evaluation) at every closed-form eigenvalue.
pub fn check_cycle_spectrum(report: &mut VerificationReport) {
    for l in 3..=12 {
        for balanced in [true, false] {
            let g = signed_cycle(l, balanced);
            let poly = char_poly(&adjacency_matrix(&g)).expect("cycle within bound");
            let eigenvalues = cycle_eigenvalues(l, balanced).expect("l >= 3");
            for lambda in eigenvalues {
                report.checks_run += 1;
                let residual = poly.eval_f64(lambda).abs();
                if residual >= 1e-9 {
                    report.fail(
                        "cycle-spectrum-residual",
                        &g,
                        format!("|p({lambda})| < 1e-9"),
                        format!("{residual:e}"),
                    );
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------

/// Runs the full battery: oracle equivalence of the structural nullity over
/// all unicyclic signed graphs up to `n_max`, the four extremal set
/// equalities, both joining theorems, pendant-deletion invariance, switching
/// invariance, and the cycle table and spectrum checks. Deterministic for a
/// fixed seed. `n_max` is clamped to 3..=9.
pub fn verify_all(n_max: usize, seed: u64) -> VerificationReport {
    let n_max = n_max.clamp(MIN_VERIFY_N, MAX_VERIFY_N);
    let start = Instant::now();
    let mut report = VerificationReport::empty(n_max, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    check_oracle_equivalence(&mut report, n_max, |g| nullity_structural(g).map(|(v, _)| v));
    check_classification_sets(&mut report, n_max);
    check_joining_theorems(&mut report, &mut rng, JOINING_INSTANCES);
    check_pendant_deletion(&mut report, &mut rng, PENDANT_INSTANCES);
    check_switching_invariance(&mut report, &mut rng, SWITCHING_INSTANCES);
    check_cycle_table(&mut report, cycle_nullity);
    check_cycle_spectrum(&mut report);
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_all_small_passes() {
        let report = verify_all(4, 7);
        assert!(report.passed(), "failures: {:?}", report.failures);
        assert!(report.checks_run > 0);
        assert_eq!(report.max_n, 4);
    }

    #[test]
    fn verify_all_is_deterministic() {
        let a = verify_all(3, 99);
        let b = verify_all(3, 99);
        assert_eq!(a.graphs_generated, b.graphs_generated);
        assert_eq!(a.signings_tested, b.signings_tested);
        assert_eq!(a.checks_run, b.checks_run);
        assert_eq!(a.failures, b.failures);
    }

    #[test]
    fn tampered_cycle_table_is_detected() {
        let mut report = VerificationReport::empty(9, 0);
        check_cycle_table(&mut report, |l, _balanced| {
            // Wrong residue class for balanced cycles.
            Ok(if l % 4 == 2 { 2 } else { 0 })
        });
        assert!(!report.passed());
        assert!(report
            .failures
            .iter()
            .all(|f| f.check == "cycle-nullity-table"));
    }

    #[test]
    fn tampered_structural_nullity_is_detected() {
        let mut report = VerificationReport::empty(4, 0);
        check_oracle_equivalence(&mut report, 4, |g| {
            nullity_structural(g).map(|(v, _)| v + 1)
        });
        assert!(!report.passed());
    }

    #[test]
    fn report_serializes_and_summarizes() {
        let report = verify_all(3, 1);
        let json = report.to_json();
        assert_eq!(json["max_n"], 3);
        assert!(json["failures"].as_array().unwrap().is_empty());
        let text = report.summary();
        assert!(text.contains("PASS"));
        assert!(text.contains("seed: 1"));
    }

    #[test]
    fn clamps_out_of_range_n() {
        let report = verify_all(1, 7);
        assert_eq!(report.max_n, 3);
    }
}
