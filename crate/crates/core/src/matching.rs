//! Matching numbers on forests and the matched/mismatched vertex test that
//! drives the joining theorems. Signs never enter here; matchings live on the
//! underlying graph.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Bound for the brute-force matching oracle.
pub const BRUTE_FORCE_BOUND: usize = 16;

/// A matching: pairwise vertex-disjoint edges plus per-vertex coverage flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
    covered: Vec<bool>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn covers(&self, v: usize) -> bool {
        self.covered[v]
    }

    pub fn covered_flags(&self) -> &[bool] {
        &self.covered
    }
}

/// Maximum matching of a forest by leaf pruning: repeatedly match a pendant
/// vertex to its only neighbor and drop both. Greedy is optimal on forests.
pub fn max_matching_forest(forest: &SignedGraph) -> Result<Matching> {
    if !forest.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let n = forest.order();
    let adj = forest.adjacency();
    let mut deg = forest.degrees();
    let mut alive = vec![true; n];
    let mut covered = vec![false; n];
    let mut edges = Vec::new();
    let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(u) = queue.pop() {
        if !alive[u] || deg[u] != 1 {
            continue;
        }
        let w = adj[u]
            .iter()
            .map(|&(x, _)| x)
            .find(|&x| alive[x])
            .expect("pendant vertex has a live neighbor");
        edges.push((u.min(w), u.max(w)));
        covered[u] = true;
        covered[w] = true;
        alive[u] = false;
        alive[w] = false;
        for &(x, _) in &adj[w] {
            if alive[x] {
                deg[x] -= 1;
                if deg[x] == 1 {
                    queue.push(x);
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(Matching { edges, covered })
}

/// Matching number of an arbitrary graph by memoized search over the vertex
/// set; the independent oracle for the forest algorithm. Bound: n <= 16.
pub fn matching_number_bruteforce(g: &SignedGraph) -> Result<usize> {
    let n = g.order();
    if n > BRUTE_FORCE_BOUND {
        return Err(Error::OrderAboveBound { order: n, bound: BRUTE_FORCE_BOUND });
    }
    let mut nbr = vec![0u32; n];
    for &(u, v, _) in g.edges() {
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
    }
    fn go(avail: u32, nbr: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        let mut v = None;
        let mut bits = avail;
        while bits != 0 {
            let cand = bits.trailing_zeros() as usize;
            if nbr[cand] & avail != 0 {
                v = Some(cand);
                break;
            }
            bits &= bits - 1;
        }
        let v = match v {
            Some(v) => v,
            None => return 0,
        };
        if let Some(&hit) = memo.get(&avail) {
            return hit;
        }
        let rest = avail & !(1 << v);
        let mut best = go(rest, nbr, memo);
        let mut mates = nbr[v] & avail;
        while mates != 0 {
            let w = mates.trailing_zeros() as usize;
            best = best.max(1 + go(rest & !(1 << w), nbr, memo));
            mates &= mates - 1;
        }
        memo.insert(avail, best);
        best
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    Ok(go(full, &nbr, &mut HashMap::new()))
}

/// Whether every maximum matching of the tree covers `v`. Decided through the
/// matching-number equivalence: `v` is matched iff `μ(T - v) = μ(T) - 1`.
/// A one-vertex tree is mismatched by convention.
pub fn is_matched_in_tree(tree: &SignedGraph, v: usize) -> Result<bool> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    if v >= tree.order() {
        return Err(Error::VertexOutOfRange { vertex: v, order: tree.order() });
    }
    if tree.order() == 1 {
        return Ok(false);
    }
    let mu = max_matching_forest(tree)?.size();
    let (without, _) = tree.delete_vertices(&[v])?;
    let mu_without = max_matching_forest(&without)?.size();
    debug_assert!(mu_without == mu || mu_without + 1 == mu);
    Ok(mu_without + 1 == mu)
}

/// Nullity of an acyclic signed graph: `n - 2μ`.
pub fn tree_nullity(forest: &SignedGraph) -> Result<usize> {
    let mu = max_matching_forest(forest)?.size();
    Ok(forest.order() - 2 * mu)
}
