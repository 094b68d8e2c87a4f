//! Recognition of the extremal unicyclic families and the nullity class
//! labels n-2, n-3, n-4, n-5.
//!
//! The families (triangle or square with pendant stars, or a star attached
//! through an edge) are recognized purely structurally from the cycle length
//! and the shapes of the pendant trees, plus balance where the
//! characterization demands it.

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::nullity::nullity_unicyclic;
use crate::switching::is_balanced;

/// Extremal families of unicyclic signed graphs. `U3`/`U4` use the star
/// convention K_{1,r+1}: the cycle meets a leaf of the star, so `r` counts
/// the star's remaining leaves and is at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    BalancedC4,
    C3AnySign,
    UnbalancedC4,
    UnbalancedC6,
    U1 { r: usize, s: usize },
    U2 { r: usize, s: usize },
    BalancedU3 { r: usize },
    C5AnySign,
    U4 { r: usize },
    Other,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::BalancedC4 => "BalancedC4",
            Family::C3AnySign => "C3AnySign",
            Family::UnbalancedC4 => "UnbalancedC4",
            Family::UnbalancedC6 => "UnbalancedC6",
            Family::U1 { .. } => "U1",
            Family::U2 { .. } => "U2",
            Family::BalancedU3 { .. } => "BalancedU3",
            Family::C5AnySign => "C5AnySign",
            Family::U4 { .. } => "U4",
            Family::Other => "Other",
        }
    }

    pub fn params(&self) -> (Option<usize>, Option<usize>) {
        match *self {
            Family::U1 { r, s } | Family::U2 { r, s } => (Some(r), Some(s)),
            Family::BalancedU3 { r } | Family::U4 { r } => (Some(r), None),
            _ => (None, None),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Family::U1 { r, s } => write!(f, "U1({r},{s})"),
            Family::U2 { r, s } => write!(f, "U2({r},{s})"),
            Family::BalancedU3 { r } => write!(f, "BalancedU3({r})"),
            Family::U4 { r } => write!(f, "U4({r})"),
            other => f.write_str(other.tag()),
        }
    }
}

/// Nullity class of a unicyclic signed graph relative to its order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NullityClass {
    NMinus2,
    NMinus3,
    NMinus4,
    NMinus5,
    Other,
}

impl NullityClass {
    pub fn from_order_and_nullity(n: usize, nullity: usize) -> NullityClass {
        match n.checked_sub(nullity) {
            Some(2) => NullityClass::NMinus2,
            Some(3) => NullityClass::NMinus3,
            Some(4) => NullityClass::NMinus4,
            Some(5) => NullityClass::NMinus5,
            _ => NullityClass::Other,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            NullityClass::NMinus2 => "n-2",
            NullityClass::NMinus3 => "n-3",
            NullityClass::NMinus4 => "n-4",
            NullityClass::NMinus5 => "n-5",
            NullityClass::Other => "other",
        }
    }
}

impl std::fmt::Display for NullityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Full classification of a connected unicyclic signed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub order: usize,
    pub cycle_len: usize,
    pub balanced: bool,
    pub nullity: usize,
    pub class: NullityClass,
    pub family: Family,
}

/// Shape of one pendant tree, seen from its cycle root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TreeShape {
    /// Only the cycle vertex itself.
    Trivial,
    /// `leaves` pendant edges attached directly to the cycle vertex.
    Star { leaves: usize },
    /// The cycle vertex is a leaf of a star K_{1,r+1}: one edge to the star
    /// center, which carries `r >= 1` further leaves.
    LeafOfStar { r: usize },
    Other,
}

fn tree_shape(t: &crate::graph::PendantTree) -> TreeShape {
    let g = &t.graph;
    let n = g.order();
    if n == 1 {
        return TreeShape::Trivial;
    }
    let root_deg = g.degree(t.root);
    if root_deg == n - 1 {
        return TreeShape::Star { leaves: n - 1 };
    }
    if root_deg == 1 && n >= 3 {
        let center = g.adjacency()[t.root][0].0;
        if g.degree(center) == n - 1 {
            return TreeShape::LeafOfStar { r: n - 2 };
        }
    }
    TreeShape::Other
}

/// Recognizes which extremal family (if any) the underlying shape of `g`
/// belongs to, consulting balance only where the family requires it.
pub fn recognize_family(g: &SignedGraph) -> Result<Family> {
    if !g.is_unicyclic() {
        return Err(Error::NotUnicyclic);
    }
    let cycle = g.find_cycle()?.expect("unicyclic graph has a cycle");
    let l = cycle.len();
    let n = g.order();
    let balanced = is_balanced(g);

    if n == l {
        return Ok(match l {
            3 => Family::C3AnySign,
            4 if balanced => Family::BalancedC4,
            4 => Family::UnbalancedC4,
            5 => Family::C5AnySign,
            6 if !balanced => Family::UnbalancedC6,
            _ => Family::Other,
        });
    }
    if l != 3 && l != 4 {
        return Ok(Family::Other);
    }

    // Position -> shape around the cycle, in cycle order.
    let mut shapes = Vec::with_capacity(l);
    for &v in &cycle.vertices {
        shapes.push(tree_shape(&g.pendant_tree_at(v)?));
    }
    if shapes.iter().any(|s| matches!(s, TreeShape::Other)) {
        return Ok(Family::Other);
    }
    let stars: Vec<(usize, usize)> = shapes
        .iter()
        .enumerate()
        .filter_map(|(i, s)| match s {
            TreeShape::Star { leaves } => Some((i, *leaves)),
            _ => None,
        })
        .collect();
    let attached: Vec<(usize, usize)> = shapes
        .iter()
        .enumerate()
        .filter_map(|(i, s)| match s {
            TreeShape::LeafOfStar { r } => Some((i, *r)),
            _ => None,
        })
        .collect();

    match (l, stars.len(), attached.len()) {
        (3, 1, 0) => Ok(Family::U1 { r: stars[0].1, s: 0 }),
        (3, 2, 0) => {
            let (a, b) = (stars[0].1, stars[1].1);
            Ok(Family::U1 { r: a.max(b), s: a.min(b) })
        }
        (3, 0, 1) => Ok(Family::U4 { r: attached[0].1 }),
        (4, 1, 0) => Ok(Family::U2 { r: stars[0].1, s: 0 }),
        (4, 2, 0) => {
            // The two star positions must be non-adjacent on the square.
            if (stars[0].0 + 2) % 4 != stars[1].0 {
                return Ok(Family::Other);
            }
            let (a, b) = (stars[0].1, stars[1].1);
            Ok(Family::U2 { r: a.max(b), s: a.min(b) })
        }
        (4, 0, 1) => {
            if balanced {
                Ok(Family::BalancedU3 { r: attached[0].1 })
            } else {
                Ok(Family::Other)
            }
        }
        _ => Ok(Family::Other),
    }
}

fn family_matches_class(family: &Family, class: NullityClass) -> bool {
    match class {
        NullityClass::NMinus2 => matches!(family, Family::BalancedC4),
        NullityClass::NMinus3 => matches!(family, Family::C3AnySign),
        NullityClass::NMinus4 => matches!(
            family,
            Family::UnbalancedC4
                | Family::UnbalancedC6
                | Family::U1 { .. }
                | Family::U2 { .. }
                | Family::BalancedU3 { .. }
        ),
        NullityClass::NMinus5 => matches!(family, Family::C5AnySign | Family::U4 { .. }),
        NullityClass::Other => matches!(family, Family::Other),
    }
}

/// Computes the nullity structurally, assigns the class label, recognizes
/// the family, and cross-checks that label and family agree as the
/// characterization demands. A disagreement is an implementation bug and
/// surfaces as an error.
pub fn classify_extremal(g: &SignedGraph) -> Result<ClassificationResult> {
    let (nullity, _) = nullity_unicyclic(g)?;
    let cycle = g.find_cycle()?.expect("unicyclic graph has a cycle");
    let n = g.order();
    let class = NullityClass::from_order_and_nullity(n, nullity);
    let family = recognize_family(g)?;
    if !family_matches_class(&family, class) {
        return Err(Error::ClassificationInconsistency(format!(
            "nullity {nullity} of order-{n} graph gives class {class} but family {family}"
        )));
    }
    Ok(ClassificationResult {
        order: n,
        cycle_len: cycle.len(),
        balanced: is_balanced(g),
        nullity,
        class,
        family,
    })
}

// Reference constructors for the extremal families, used by the harness and
// tests. Cycle vertices come first; pendant vertices follow.

/// Triangle with `r` pendants at vertex 0 and `s` pendants at vertex 1.
pub fn build_u1(r: usize, s: usize) -> SignedGraph {
    assert!(r >= s && r + s >= 1, "U1 requires r >= s >= 0 and r+s >= 1");
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    edges.extend((0..r).map(|i| (0, 3 + i)));
    edges.extend((0..s).map(|i| (1, 3 + r + i)));
    SignedGraph::all_positive(3 + r + s, &edges).expect("valid construction")
}

/// Square with `r` pendants at vertex 0 and `s` pendants at the opposite
/// vertex 2.
pub fn build_u2(r: usize, s: usize) -> SignedGraph {
    assert!(r >= s && r + s >= 1, "U2 requires r >= s >= 0 and r+s >= 1");
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
    edges.extend((0..r).map(|i| (0, 4 + i)));
    edges.extend((0..s).map(|i| (2, 4 + r + i)));
    SignedGraph::all_positive(4 + r + s, &edges).expect("valid construction")
}

/// Square whose vertex 0 is identified with a leaf of a star K_{1,r+1}; the
/// star center is vertex 4 and carries `r >= 1` further leaves.
pub fn build_u3(r: usize) -> SignedGraph {
    assert!(r >= 1, "U3 requires r >= 1");
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)];
    edges.extend((0..r).map(|i| (4, 5 + i)));
    SignedGraph::all_positive(5 + r, &edges).expect("valid construction")
}

/// Triangle whose vertex 0 is identified with a leaf of a star K_{1,r+1};
/// the star center is vertex 3 and carries `r >= 1` further leaves.
pub fn build_u4(r: usize) -> SignedGraph {
    assert!(r >= 1, "U4 requires r >= 1");
    let mut edges = vec![(0, 1), (1, 2), (0, 2), (0, 3)];
    edges.extend((0..r).map(|i| (3, 4 + i)));
    SignedGraph::all_positive(4 + r, &edges).expect("valid construction")
}

/// All-positive cycle of length `l`.
pub fn build_cycle(l: usize) -> SignedGraph {
    assert!(l >= 3);
    SignedGraph::all_positive(l, &(0..l).map(|i| (i, (i + 1) % l)).collect::<Vec<_>>())
        .expect("valid construction")
}
