//! Switching, balance, and the canonical representative of a unicyclic
//! signed graph: all-positive when balanced, otherwise exactly one negative
//! edge placed on the lexicographically smallest cycle edge.

use crate::error::{Error, Result};
use crate::graph::{CycleDescriptor, Sign, SignedGraph};

/// A total sign function on the vertices. Applying it twice is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingFunction(Vec<Sign>);

impl SwitchingFunction {
    pub fn new(signs: Vec<Sign>) -> Self {
        SwitchingFunction(signs)
    }

    pub fn all_plus(n: usize) -> Self {
        SwitchingFunction(vec![Sign::Plus; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Sign {
        self.0[v]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&s| s == Sign::Plus)
    }
}

/// Switches `g` by `theta`: every edge sign is multiplied by the signs of its
/// endpoints. The underlying graph is unchanged.
pub fn apply_switching(g: &SignedGraph, theta: &SwitchingFunction) -> Result<SignedGraph> {
    if theta.len() != g.order() {
        return Err(Error::SwitchingSizeMismatch { got: theta.len(), want: g.order() });
    }
    SignedGraph::new(
        g.order(),
        g.edges()
            .iter()
            .map(|&(u, v, s)| (u, v, theta.get(u) * s * theta.get(v))),
    )
}

/// Switching function that makes `g` all-positive, when one exists. Spanning
/// forest propagation: fix a root per component, force each tree edge
/// positive, then check the remaining edges.
pub fn balance_witness(g: &SignedGraph) -> Option<SwitchingFunction> {
    let n = g.order();
    let adj = g.adjacency();
    let mut theta = vec![Sign::Plus; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = vec![root];
        while let Some(v) = queue.pop() {
            for &(w, s) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    theta[w] = theta[v] * s;
                    queue.push(w);
                }
            }
        }
    }
    let theta = SwitchingFunction(theta);
    let switched = apply_switching(g, &theta).expect("witness covers all vertices");
    if switched.edges().iter().all(|&(_, _, s)| s == Sign::Plus) {
        Some(theta)
    } else {
        None
    }
}

/// True iff every cycle of `g` is positive.
pub fn is_balanced(g: &SignedGraph) -> bool {
    balance_witness(g).is_some()
}

/// Sign of a cycle of `g`, after checking that `c` really is one.
pub fn cycle_sign(g: &SignedGraph, c: &CycleDescriptor) -> Result<Sign> {
    let l = c.vertices.len();
    if l < 3 {
        return Err(Error::NotACycleOfGraph);
    }
    let mut distinct = c.vertices.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != l {
        return Err(Error::NotACycleOfGraph);
    }
    let mut sign = Sign::Plus;
    for i in 0..l {
        let a = c.vertices[i];
        let b = c.vertices[(i + 1) % l];
        match g.edge_sign(a, b) {
            Some(s) => sign = sign * s,
            None => return Err(Error::NotACycleOfGraph),
        }
    }
    if sign != c.sign {
        return Err(Error::NotACycleOfGraph);
    }
    Ok(sign)
}

/// Canonical representative of the switching class of a connected unicyclic
/// signed graph, together with the witnessing switching function. Balanced
/// graphs normalize to the all-positive signing; unbalanced ones to the
/// signing whose single negative edge is the smallest cycle edge.
pub fn normalize_unicyclic(g: &SignedGraph) -> Result<(SignedGraph, SwitchingFunction)> {
    if !g.is_unicyclic() {
        return Err(Error::NotUnicyclic);
    }
    let cycle = g.find_cycle()?.expect("unicyclic graph has a cycle");
    let (eu, ev, _) = *cycle
        .edges
        .iter()
        .min_by_key(|&&(u, v, _)| (u, v))
        .expect("cycle has edges");
    // Dropping one cycle edge leaves a spanning tree, which always switches
    // to all-positive; that same switching leaves the dropped edge negative
    // exactly when the cycle is negative.
    let tree_edges: Vec<(usize, usize, Sign)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v, _)| (u, v) != (eu, ev))
        .collect();
    let spanning = SignedGraph::new(g.order(), tree_edges).expect("edge subset of valid graph");
    let theta = balance_witness(&spanning).expect("forests are balanced");
    let normalized = apply_switching(g, &theta)?;
    Ok((normalized, theta))
}

/// True iff some switching maps `g1` to `g2`. Errors if the underlying
/// labeled graphs differ. Equivalent to balance of the edgewise sign ratio.
pub fn switching_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Result<bool> {
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return Err(Error::UnderlyingMismatch);
    }
    let mut ratio = Vec::with_capacity(g1.edge_count());
    for &(u, v, s1) in g1.edges() {
        match g2.edge_sign(u, v) {
            Some(s2) => ratio.push((u, v, s1 * s2)),
            None => return Err(Error::UnderlyingMismatch),
        }
    }
    let ratio_graph = SignedGraph::new(g1.order(), ratio)?;
    Ok(is_balanced(&ratio_graph))
}
