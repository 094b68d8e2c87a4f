//! Signed graphs: a simple graph with a ±1 label on every edge, plus the
//! structural surgery the nullity theory needs (vertex deletion, disjoint
//! union, k-joining, cycle and pendant-tree extraction).

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Edge label of a signed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A signed simple graph on vertices `0..n`. Edges are stored sorted with
/// `u < v`, so structural equality and hashing are label-exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<(usize, usize, Sign)>,
}

/// The unique cycle of a unicyclic graph, walked in a deterministic order:
/// starting from the smallest cycle vertex towards its smaller cycle neighbor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDescriptor {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize, Sign)>,
    pub sign: Sign,
}

impl CycleDescriptor {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Maximal induced subtree of a unicyclic graph hanging off one cycle vertex.
/// `vertices[i]` is the id the subgraph vertex `i` had in the host graph;
/// `root` is the local id of the cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantTree {
    pub root: usize,
    pub graph: SignedGraph,
    pub vertices: Vec<usize>,
}

impl PendantTree {
    /// Id of the root in the host graph.
    pub fn root_host_id(&self) -> usize {
        self.vertices[self.root]
    }
}

impl SignedGraph {
    /// Builds a validated signed graph. Edges may come in any order and
    /// orientation; they are normalized to `u < v` and sorted.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, Sign)>) -> Result<Self> {
        let mut norm: Vec<(usize, usize, Sign)> = Vec::new();
        for (a, b, s) in edges {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            for &v in &[a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, order: n });
                }
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            norm.push((u, v, s));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(SignedGraph { n, edges: norm })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        SignedGraph { n, edges: Vec::new() }
    }

    /// All-positive graph from unsigned edge pairs.
    pub fn all_positive(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges.iter().map(|&(u, v)| (u, v, Sign::Plus)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, Sign)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_sign(a, b).is_some()
    }

    pub fn edge_sign(&self, a: usize, b: usize) -> Option<Sign> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .binary_search_by(|&(x, y, _)| (x, y).cmp(&(u, v)))
            .ok()
            .map(|i| self.edges[i].2)
    }

    /// Adjacency lists with edge signs, in ascending neighbor order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v, s) in &self.edges {
            adj[u].push((v, s));
            adj[v].push((u, s));
        }
        for row in &mut adj {
            row.sort_unstable_by_key(|&(w, _)| w);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b, _)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v, _) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Degree-1 vertices in ascending id order.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 1)
            .map(|(v, _)| v)
            .collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Number of independent cycles, `m - n + c`.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.components().len() - self.n
    }

    pub fn is_acyclic(&self) -> bool {
        self.cycle_rank() == 0
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edges.len() == self.n - 1
    }

    /// Connected with exactly one cycle (`m = n`).
    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.edges.len() == self.n
    }

    /// Induced subgraph on `keep` (ascending, deduplicated internally).
    /// Returns the subgraph and the map `new id -> old id`.
    pub fn induced(&self, keep: &[usize]) -> Result<(SignedGraph, Vec<usize>)> {
        let mut map: Vec<usize> = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&v) = map.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        let mut inv = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inv[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v, _)| inv[u] != usize::MAX && inv[v] != usize::MAX)
            .map(|&(u, v, s)| (inv[u], inv[v], s))
            .collect::<Vec<_>>();
        let g = SignedGraph::new(map.len(), edges).expect("induced subgraph of a valid graph");
        Ok((g, map))
    }

    /// Deletes the vertices of `remove` together with all incident edges and
    /// re-indexes the survivors contiguously. Returns the subgraph and the
    /// map `new id -> old id`.
    pub fn delete_vertices(&self, remove: &[usize]) -> Result<(SignedGraph, Vec<usize>)> {
        if let Some(&v) = remove.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        let mut gone = vec![false; self.n];
        for &v in remove {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let offset = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v, s)| (u + offset, v + offset, s)));
        SignedGraph::new(self.n + other.n, edges).expect("disjoint union of valid graphs")
    }

    /// Applies `perm` (old id -> new id) to vertices; used by isomorphism tests.
    pub fn relabel(&self, perm: &[usize]) -> Result<SignedGraph> {
        if perm.len() != self.n {
            return Err(Error::SwitchingSizeMismatch { got: perm.len(), want: self.n });
        }
        SignedGraph::new(
            self.n,
            self.edges.iter().map(|&(u, v, s)| (perm[u], perm[v], s)),
        )
    }

    /// The unique cycle of a connected graph: `None` for trees, the cycle for
    /// unicyclic graphs, an error otherwise.
    pub fn find_cycle(&self) -> Result<Option<CycleDescriptor>> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        if self.edges.len() + 1 == self.n || self.n == 0 {
            return Ok(None);
        }
        let rank = self.edges.len() + 1 - self.n;
        if rank >= 2 {
            return Err(Error::CycleRankTooHigh(rank));
        }
        // Peel leaves; what survives is exactly the cycle.
        let adj = self.adjacency();
        let mut deg = self.degrees();
        let mut alive = vec![true; self.n];
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = queue.pop() {
            alive[v] = false;
            for &(w, _) in &adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        queue.push(w);
                    }
                }
            }
        }
        let start = (0..self.n).find(|&v| alive[v]).expect("unicyclic graph has a cycle");
        let mut vertices = vec![start];
        let mut prev = start;
        let mut cur = adj[start]
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| alive[w])
            .min()
            .expect("cycle vertex has two cycle neighbors");
        while cur != start {
            vertices.push(cur);
            let next = adj[cur]
                .iter()
                .map(|&(w, _)| w)
                .find(|&w| alive[w] && w != prev)
                .expect("cycle walk continues");
            prev = cur;
            cur = next;
        }
        let mut edges = Vec::with_capacity(vertices.len());
        let mut sign = Sign::Plus;
        for i in 0..vertices.len() {
            let a = vertices[i];
            let b = vertices[(i + 1) % vertices.len()];
            let s = self.edge_sign(a, b).expect("consecutive cycle vertices are adjacent");
            sign = sign * s;
            edges.push((a.min(b), a.max(b), s));
        }
        Ok(Some(CycleDescriptor { vertices, edges, sign }))
    }

    /// Pendant tree of a unicyclic graph at cycle vertex `v`: the component of
    /// `G - (V(C) \ {v})` containing `v`, as an induced signed subgraph.
    pub fn pendant_tree_at(&self, v: usize) -> Result<PendantTree> {
        let cycle = self.find_cycle()?.ok_or(Error::NotUnicyclic)?;
        if !cycle.vertices.contains(&v) {
            return Err(Error::NotOnCycle(v));
        }
        let others: Vec<usize> = cycle.vertices.iter().copied().filter(|&w| w != v).collect();
        let (h, map) = self.delete_vertices(&others)?;
        let local_v = map.iter().position(|&old| old == v).expect("v survives deletion");
        let comp = {
            let comps = h.components();
            comps
                .into_iter()
                .find(|c| c.contains(&local_v))
                .expect("v is in some component")
        };
        let (tree, tmap) = h.induced(&comp)?;
        let vertices: Vec<usize> = tmap.iter().map(|&mid| map[mid]).collect();
        let root = vertices.iter().position(|&old| old == v).expect("root kept");
        debug_assert!(tree.is_tree());
        Ok(PendantTree { root, graph: tree, vertices })
    }
}

/// The k-joining of a tree and a second graph: their disjoint union plus
/// `k` signed edges from `u` in the tree to distinct vertices of `g2`. In
/// the result the tree keeps its ids and `g2` is shifted by `tree.order()`.
pub fn k_joining(
    tree: &SignedGraph,
    u: usize,
    g2: &SignedGraph,
    targets: &[usize],
    signs: &[Sign],
) -> Result<SignedGraph> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    if u >= tree.order() {
        return Err(Error::VertexOutOfRange { vertex: u, order: tree.order() });
    }
    let k = targets.len();
    if k < 1 || k > g2.order() {
        return Err(Error::InvalidJoinArity { k, max: g2.order() });
    }
    if signs.len() != k {
        return Err(Error::JoinSignMismatch { k, signs: signs.len() });
    }
    let mut seen = std::collections::HashSet::new();
    for &t in targets {
        if t >= g2.order() {
            return Err(Error::VertexOutOfRange { vertex: t, order: g2.order() });
        }
        if !seen.insert(t) {
            return Err(Error::DuplicateTarget(t));
        }
    }
    let offset = tree.order();
    let mut edges: Vec<(usize, usize, Sign)> = tree.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(a, b, s)| (a + offset, b + offset, s)));
    edges.extend(targets.iter().zip(signs).map(|(&t, &s)| (u, t + offset, s)));
    SignedGraph::new(offset + g2.order(), edges)
}
