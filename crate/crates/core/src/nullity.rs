//! Structural nullity for acyclic and unicyclic signed graphs.
//!
//! The value is derived without any linear algebra: pendant deletions keep
//! the nullity, a matched cycle vertex splits the graph into two forests
//! (Type I), and when no cycle vertex is matched in its pendant tree the
//! cycle separates cleanly from the rest (Type II). Every computation emits
//! a replayable certificate that [`verify_certificate`] checks against the
//! base formulas alone.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::matching::{is_matched_in_tree, max_matching_forest, tree_nullity};
use crate::switching::is_balanced;

/// One replayable reduction step. Vertex ids refer to the original input
/// graph of the certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum CertStep {
    /// Delete a pendant vertex and its neighbor; nullity is unchanged.
    PendantDelete { pendant: usize, neighbor: usize },
    /// Split a unicyclic graph at a cycle vertex matched in its pendant tree.
    TypeISplit {
        witness: usize,
        tree_nullity: usize,
        rest_nullity: usize,
    },
    /// Peel the cycle off a Type II unicyclic graph: per cycle vertex, the
    /// forest its pendant tree leaves behind and that forest's nullity.
    TypeIIDecompose {
        cycle: Vec<usize>,
        parts: Vec<(usize, usize)>,
    },
    /// Base case: a bare cycle, valued from the residue table.
    CycleBase {
        length: usize,
        balanced: bool,
        contribution: usize,
    },
    /// Base case: a forest, valued as `order - 2μ`.
    ForestBase {
        order: usize,
        matching_number: usize,
        contribution: usize,
    },
}

impl std::fmt::Display for CertStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertStep::PendantDelete { pendant, neighbor } => {
                write!(f, "pendant-delete pendant={pendant} neighbor={neighbor}")
            }
            CertStep::TypeISplit { witness, tree_nullity, rest_nullity } => write!(
                f,
                "type-i-split witness={witness} tree-nullity={tree_nullity} rest-nullity={rest_nullity}"
            ),
            CertStep::TypeIIDecompose { cycle, parts } => {
                let cycle_s: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
                let parts_s: Vec<String> =
                    parts.iter().map(|(v, c)| format!("{v}:{c}")).collect();
                write!(
                    f,
                    "type-ii-decompose cycle={} parts={}",
                    cycle_s.join(","),
                    parts_s.join(",")
                )
            }
            CertStep::CycleBase { length, balanced, contribution } => write!(
                f,
                "cycle-base length={length} balanced={balanced} contribution={contribution}"
            ),
            CertStep::ForestBase { order, matching_number, contribution } => write!(
                f,
                "forest-base order={order} matching={matching_number} contribution={contribution}"
            ),
        }
    }
}

/// A machine-checkable derivation of a nullity value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NullityCertificate {
    pub steps: Vec<CertStep>,
    pub nullity: usize,
}

impl NullityCertificate {
    /// Line-oriented text form: one step per line, then the claimed value.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&step.to_string());
            out.push('\n');
        }
        out.push_str(&format!("nullity {}\n", self.nullity));
        out
    }
}

/// Result of exhaustively deleting pendant vertices together with their
/// neighbors. Each deletion preserves nullity.
#[derive(Debug, Clone)]
pub struct PendantReduction {
    /// The pendant-free remainder.
    pub graph: SignedGraph,
    /// Map from remainder ids to ids in the input graph.
    pub orig_ids: Vec<usize>,
    /// The deletions performed, in order, as certificate steps.
    pub steps: Vec<CertStep>,
}

/// Repeatedly removes the smallest pendant vertex (by original id) together
/// with its neighbor until no pendant vertex remains.
pub fn pendant_reduce(g: &SignedGraph) -> PendantReduction {
    let mut graph = g.clone();
    let mut orig_ids: Vec<usize> = (0..g.order()).collect();
    let mut steps = Vec::new();
    loop {
        let pendants = graph.pendant_vertices();
        let u = match pendants
            .iter()
            .copied()
            .min_by_key(|&v| orig_ids[v])
        {
            Some(u) => u,
            None => break,
        };
        let w = graph
            .adjacency()[u]
            .first()
            .map(|&(w, _)| w)
            .expect("pendant vertex has a neighbor");
        steps.push(CertStep::PendantDelete {
            pendant: orig_ids[u],
            neighbor: orig_ids[w],
        });
        let (next, map) = graph
            .delete_vertices(&[u, w])
            .expect("pendant and neighbor are in range");
        orig_ids = map.iter().map(|&mid| orig_ids[mid]).collect();
        graph = next;
    }
    PendantReduction { graph, orig_ids, steps }
}

/// Nullity of a signed cycle from the two residue rules: balanced cycles are
/// singular exactly when `l ≡ 0 (mod 4)`, unbalanced ones when `l ≡ 2 (mod 4)`;
/// the nullity is 2 in the singular cases and 0 otherwise.
pub fn cycle_nullity(l: usize, balanced: bool) -> Result<usize> {
    if l < 3 {
        return Err(Error::CycleTooShort(l));
    }
    let singular_residue = if balanced { 0 } else { 2 };
    Ok(if l % 4 == singular_residue { 2 } else { 0 })
}

/// Type of a connected unicyclic signed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnicyclicType {
    /// Some cycle vertex is matched in its pendant tree; the smallest such
    /// vertex is the witness.
    TypeI { witness: usize },
    /// No cycle vertex is matched in its pendant tree. A bare cycle is
    /// Type II: single-vertex pendant trees are mismatched by convention.
    TypeII,
}

/// Classifies a connected unicyclic graph as Type I (with the smallest
/// matched cycle vertex as witness) or Type II.
pub fn classify_type(g: &SignedGraph) -> Result<UnicyclicType> {
    if !g.is_unicyclic() {
        return Err(Error::NotUnicyclic);
    }
    let cycle = g.find_cycle()?.expect("unicyclic graph has a cycle");
    let mut cycle_vertices = cycle.vertices.clone();
    cycle_vertices.sort_unstable();
    for v in cycle_vertices {
        let t = g.pendant_tree_at(v)?;
        if is_matched_in_tree(&t.graph, t.root)? {
            return Ok(UnicyclicType::TypeI { witness: v });
        }
    }
    Ok(UnicyclicType::TypeII)
}

fn forest_base_step(forest: &SignedGraph) -> (CertStep, usize) {
    let mu = max_matching_forest(forest)
        .expect("forest base case is acyclic")
        .size();
    let contribution = forest.order() - 2 * mu;
    (
        CertStep::ForestBase {
            order: forest.order(),
            matching_number: mu,
            contribution,
        },
        contribution,
    )
}

/// Nullity of a connected unicyclic signed graph by the Type I/II
/// decomposition, with a certificate. `orig_ids` maps local ids to the ids
/// the certificate should record.
fn nullity_unicyclic_mapped(g: &SignedGraph, orig_ids: &[usize]) -> Result<(usize, Vec<CertStep>)> {
    let cycle = g.find_cycle()?.ok_or(Error::NotUnicyclic)?;
    match classify_type(g)? {
        UnicyclicType::TypeI { witness } => {
            let t = g.pendant_tree_at(witness)?;
            let (rest, _) = g.delete_vertices(&t.vertices)?;
            let a = tree_nullity(&t.graph)?;
            let b = tree_nullity(&rest)?;
            let steps = vec![
                CertStep::TypeISplit {
                    witness: orig_ids[witness],
                    tree_nullity: a,
                    rest_nullity: b,
                },
                forest_base_step(&t.graph).0,
                forest_base_step(&rest).0,
            ];
            Ok((a + b, steps))
        }
        UnicyclicType::TypeII => {
            let mut parts = Vec::with_capacity(cycle.len());
            for &v in &cycle.vertices {
                let t = g.pendant_tree_at(v)?;
                let (hanging, _) = t.graph.delete_vertices(&[t.root])?;
                parts.push((orig_ids[v], tree_nullity(&hanging)?));
            }
            let (forest, _) = g.delete_vertices(&cycle.vertices)?;
            let balanced = cycle.sign.is_positive();
            let cyc_contribution = cycle_nullity(cycle.len(), balanced)?;
            let mut steps = vec![CertStep::TypeIIDecompose {
                cycle: cycle.vertices.iter().map(|&v| orig_ids[v]).collect(),
                parts,
            }];
            let mut total = cyc_contribution;
            if forest.order() > 0 {
                let (step, contribution) = forest_base_step(&forest);
                steps.push(step);
                total += contribution;
            }
            steps.push(CertStep::CycleBase {
                length: cycle.len(),
                balanced,
                contribution: cyc_contribution,
            });
            Ok((total, steps))
        }
    }
}

/// Nullity of a connected unicyclic signed graph with its certificate.
pub fn nullity_unicyclic(g: &SignedGraph) -> Result<(usize, NullityCertificate)> {
    if !g.is_unicyclic() {
        return Err(Error::NotUnicyclic);
    }
    let ids: Vec<usize> = (0..g.order()).collect();
    let (nullity, steps) = nullity_unicyclic_mapped(g, &ids)?;
    Ok((nullity, NullityCertificate { steps, nullity }))
}

/// Structural nullity for any signed graph whose components are all acyclic
/// or unicyclic: the per-component formulas summed, certificates
/// concatenated in component order (smallest vertex first).
pub fn nullity_structural(g: &SignedGraph) -> Result<(usize, NullityCertificate)> {
    let mut steps = Vec::new();
    let mut total = 0usize;
    if g.order() == 0 {
        // The empty graph is one empty forest, so its certificate replays.
        steps.push(CertStep::ForestBase { order: 0, matching_number: 0, contribution: 0 });
        return Ok((0, NullityCertificate { steps, nullity: 0 }));
    }
    for comp in g.components() {
        let (sub, map) = g.induced(&comp)?;
        // Each component is connected, so m = n - 1 means acyclic and
        // m = n means unicyclic.
        if sub.edge_count() + 1 == sub.order() || sub.order() == 0 {
            let (step, contribution) = forest_base_step(&sub);
            steps.push(step);
            total += contribution;
        } else if sub.edge_count() == sub.order() {
            let (value, sub_steps) = nullity_unicyclic_mapped(&sub, &map)?;
            steps.extend(sub_steps);
            total += value;
        } else {
            return Err(Error::CycleRankTooHigh(sub.edge_count() + 1 - sub.order()));
        }
    }
    Ok((total, NullityCertificate { steps, nullity: total }))
}

struct Pending {
    graph: SignedGraph,
    orig_ids: Vec<usize>,
    expected: Option<usize>,
}

fn local_id(p: &Pending, orig: usize) -> Option<usize> {
    p.orig_ids.iter().position(|&o| o == orig)
}

fn shape_check(cert: &NullityCertificate) -> Result<()> {
    if cert.steps.is_empty() {
        return Err(Error::MalformedCertificate("no steps".into()));
    }
    for step in &cert.steps {
        if let CertStep::TypeIIDecompose { cycle, parts } = step {
            if cycle.len() < 3 {
                return Err(Error::MalformedCertificate("cycle shorter than 3".into()));
            }
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != cycle.len() {
                return Err(Error::MalformedCertificate("repeated cycle vertex".into()));
            }
            if parts.len() != cycle.len() {
                return Err(Error::MalformedCertificate(
                    "parts do not match cycle vertices".into(),
                ));
            }
            if parts.iter().zip(cycle).any(|(&(v, _), &c)| v != c) {
                return Err(Error::MalformedCertificate(
                    "parts do not match cycle vertices".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Replays a certificate against `g`, checking every side condition and all
/// arithmetic. Only the nullity axioms are used: pendant deletion preserves
/// the value, splits are additive, and base cases come from the tree formula
/// and the cycle table. Returns `Ok(false)` on any semantic mismatch and an
/// error only for certificates that are malformed in themselves.
pub fn verify_certificate(g: &SignedGraph, cert: &NullityCertificate) -> Result<bool> {
    shape_check(cert)?;
    // Components seeded in canonical order; first component on top.
    let mut stack: Vec<Pending> = Vec::new();
    if g.order() == 0 {
        stack.push(Pending { graph: SignedGraph::empty(0), orig_ids: Vec::new(), expected: None });
    }
    for comp in g.components().into_iter().rev() {
        let (sub, map) = g.induced(&comp)?;
        stack.push(Pending { graph: sub, orig_ids: map, expected: None });
    }
    let mut acc = 0usize;
    for step in &cert.steps {
        let top = match stack.pop() {
            Some(p) => p,
            None => return Ok(false),
        };
        match step {
            CertStep::PendantDelete { pendant, neighbor } => {
                let (u, w) = match (local_id(&top, *pendant), local_id(&top, *neighbor)) {
                    (Some(u), Some(w)) => (u, w),
                    _ => return Ok(false),
                };
                if top.graph.degree(u) != 1 || !top.graph.has_edge(u, w) {
                    return Ok(false);
                }
                let (next, map) = top.graph.delete_vertices(&[u, w])?;
                let orig_ids = map.iter().map(|&mid| top.orig_ids[mid]).collect();
                stack.push(Pending { graph: next, orig_ids, expected: top.expected });
            }
            CertStep::TypeISplit { witness, tree_nullity: a, rest_nullity: b } => {
                if !top.graph.is_unicyclic() {
                    return Ok(false);
                }
                let v = match local_id(&top, *witness) {
                    Some(v) => v,
                    None => return Ok(false),
                };
                let t = match top.graph.pendant_tree_at(v) {
                    Ok(t) => t,
                    Err(_) => return Ok(false),
                };
                if !is_matched_in_tree(&t.graph, t.root)? {
                    return Ok(false);
                }
                if let Some(e) = top.expected {
                    if e != a + b {
                        return Ok(false);
                    }
                }
                let (rest, rest_map) = top.graph.delete_vertices(&t.vertices)?;
                let rest_ids: Vec<usize> =
                    rest_map.iter().map(|&mid| top.orig_ids[mid]).collect();
                let tree_ids: Vec<usize> =
                    t.vertices.iter().map(|&mid| top.orig_ids[mid]).collect();
                stack.push(Pending { graph: rest, orig_ids: rest_ids, expected: Some(*b) });
                stack.push(Pending { graph: t.graph, orig_ids: tree_ids, expected: Some(*a) });
            }
            CertStep::TypeIIDecompose { cycle, parts } => {
                if !top.graph.is_unicyclic() {
                    return Ok(false);
                }
                let found = top.graph.find_cycle()?.expect("unicyclic graph has a cycle");
                let found_orig: Vec<usize> =
                    found.vertices.iter().map(|&v| top.orig_ids[v]).collect();
                if &found_orig != cycle {
                    return Ok(false);
                }
                // Type II side condition plus the recorded per-vertex forests.
                let mut parts_total = 0usize;
                for (&v_local, &(_, claimed)) in found.vertices.iter().zip(parts) {
                    let t = top.graph.pendant_tree_at(v_local)?;
                    if is_matched_in_tree(&t.graph, t.root)? {
                        return Ok(false);
                    }
                    let (hanging, _) = t.graph.delete_vertices(&[t.root])?;
                    if tree_nullity(&hanging)? != claimed {
                        return Ok(false);
                    }
                    parts_total += claimed;
                }
                let (forest, forest_map) = top.graph.delete_vertices(&found.vertices)?;
                let forest_ids: Vec<usize> =
                    forest_map.iter().map(|&mid| top.orig_ids[mid]).collect();
                let (bare_cycle, cycle_map) = top.graph.induced(&found.vertices)?;
                let cycle_ids: Vec<usize> =
                    cycle_map.iter().map(|&mid| top.orig_ids[mid]).collect();
                let cycle_expected = match top.expected {
                    Some(e) => {
                        if e < parts_total {
                            return Ok(false);
                        }
                        Some(e - parts_total)
                    }
                    None => None,
                };
                stack.push(Pending {
                    graph: bare_cycle,
                    orig_ids: cycle_ids,
                    expected: cycle_expected,
                });
                if forest.order() > 0 {
                    stack.push(Pending {
                        graph: forest,
                        orig_ids: forest_ids,
                        expected: Some(parts_total),
                    });
                } else if parts_total != 0 {
                    return Ok(false);
                }
            }
            CertStep::ForestBase { order, matching_number, contribution } => {
                if !top.graph.is_acyclic() || top.graph.order() != *order {
                    return Ok(false);
                }
                let mu = max_matching_forest(&top.graph)?.size();
                if mu != *matching_number || *contribution != order - 2 * mu {
                    return Ok(false);
                }
                if let Some(e) = top.expected {
                    if e != *contribution {
                        return Ok(false);
                    }
                }
                acc += contribution;
            }
            CertStep::CycleBase { length, balanced, contribution } => {
                let g = &top.graph;
                let two_regular = g.degrees().iter().all(|&d| d == 2);
                if !g.is_connected() || !two_regular || g.order() != *length {
                    return Ok(false);
                }
                if is_balanced(g) != *balanced {
                    return Ok(false);
                }
                if cycle_nullity(*length, *balanced)? != *contribution {
                    return Ok(false);
                }
                if let Some(e) = top.expected {
                    if e != *contribution {
                        return Ok(false);
                    }
                }
                acc += contribution;
            }
        }
    }
    Ok(stack.is_empty() && acc == cert.nullity)
}
