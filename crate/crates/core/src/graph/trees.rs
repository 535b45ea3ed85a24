//! Deterministic tree families and glueing constructions.

use super::{GraphError, RootedGraph, VertexId, DEFAULT_VERTEX_BUDGET};
use serde::{Deserialize, Serialize};

/// Description of an infinite tree, realised as truncations to a radius.
///
/// `Homogeneous(d)` is the tree with degree `d` at every vertex;
/// `HalfHomogeneous(d)` has root degree `d − 1` and degree `d` elsewhere.
/// `GluedPair` joins the roots of two specs with one edge, `GluedStar`
/// attaches the roots of the components to a fresh hub vertex which becomes
/// the root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TreeSpec {
    Homogeneous { d: u32 },
    HalfHomogeneous { d: u32 },
    GluedPair { left: Box<TreeSpec>, right: Box<TreeSpec> },
    GluedStar { components: Vec<TreeSpec> },
}

impl TreeSpec {
    /// Builds the truncation at radius `r` around the root.
    ///
    /// All vertices at distance < `r` carry their infinite-tree degrees;
    /// the distance-`r` shell is the truncation boundary.
    pub fn realize(&self, r: u32) -> Result<RootedGraph, GraphError> {
        self.realize_with_budget(r, DEFAULT_VERTEX_BUDGET)
    }

    pub fn realize_with_budget(&self, r: u32, budget: usize) -> Result<RootedGraph, GraphError> {
        match self {
            TreeSpec::Homogeneous { d } => homogeneous_tree_with_budget(*d, r, budget),
            TreeSpec::HalfHomogeneous { d } => half_homogeneous_tree_with_budget(*d, r, budget),
            TreeSpec::GluedPair { left, right } => {
                let g1 = left.realize_with_budget(r, budget)?;
                let g2 = right.realize_with_budget(r, budget)?;
                let (r1, r2) = (g1.root(), g2.root());
                glue_two(&g1, r1, &g2, r2)
            }
            TreeSpec::GluedStar { components } => {
                let parts = components
                    .iter()
                    .map(|c| c.realize_with_budget(r, budget).map(|g| {
                        let root = g.root();
                        (g, root)
                    }))
                    .collect::<Result<Vec<_>, _>>()?;
                let refs: Vec<(&RootedGraph, VertexId)> =
                    parts.iter().map(|(g, v)| (g, *v)).collect();
                glue_star(&refs)
            }
        }
    }
}

/// Grows a tree level by level; `child_count(depth, is_root)` gives the
/// number of children to attach below a vertex at that depth.
fn grow_tree(
    radius: u32,
    budget: usize,
    child_count: impl Fn(u32, bool) -> u32,
    d_max: u32,
) -> Result<RootedGraph, GraphError> {
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new()];
    let mut level: Vec<u32> = vec![0];
    for depth in 0..radius {
        let mut next = Vec::new();
        for &v in &level {
            let k = child_count(depth, v == 0);
            for _ in 0..k {
                let c = adj.len() as u32;
                if adj.len() >= budget {
                    return Err(GraphError::SizeOverflow { budget });
                }
                adj.push(vec![VertexId(v)]);
                adj[v as usize].push(VertexId(c));
                next.push(c);
            }
        }
        level = next;
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(RootedGraph::from_adjacency_unchecked(adj, VertexId(0), d_max))
}

/// Truncation at radius `r` of the homogeneous tree with degree `d` at
/// every vertex (root with `d` children, inner vertices with `d − 1`).
///
/// Truncations declare the bound `d + 1`, leaving headroom for one glueing
/// edge — the Appendix-style constructions attach trees to each other at
/// single vertices.
pub fn homogeneous_tree(d: u32, r: u32) -> Result<RootedGraph, GraphError> {
    homogeneous_tree_with_budget(d, r, DEFAULT_VERTEX_BUDGET)
}

pub fn homogeneous_tree_with_budget(d: u32, r: u32, budget: usize) -> Result<RootedGraph, GraphError> {
    assert!(d >= 2, "homogeneous tree needs degree >= 2");
    grow_tree(r, budget, |_, is_root| if is_root { d } else { d - 1 }, d + 1)
}

/// Truncation at radius `r` of the half tree: root degree `d − 1`, all
/// other vertices degree `d`.
pub fn half_homogeneous_tree(d: u32, r: u32) -> Result<RootedGraph, GraphError> {
    half_homogeneous_tree_with_budget(d, r, DEFAULT_VERTEX_BUDGET)
}

pub fn half_homogeneous_tree_with_budget(
    d: u32,
    r: u32,
    budget: usize,
) -> Result<RootedGraph, GraphError> {
    assert!(d >= 2, "half-homogeneous tree needs degree >= 2");
    grow_tree(r, budget, |_, _| d - 1, d + 1)
}

/// Disjoint union of `g1` and `g2` plus the edge `{x1, x2}`.
///
/// Vertices of `g2` are re-indexed with offset `|V1|`; the root is inherited
/// from `g1`. The declared bound of the result is the larger of the two
/// declared bounds, and the new endpoint degrees must respect it.
pub fn glue_two(
    g1: &RootedGraph,
    x1: VertexId,
    g2: &RootedGraph,
    x2: VertexId,
) -> Result<RootedGraph, GraphError> {
    if !g1.contains(x1) {
        return Err(GraphError::InvalidVertex(x1, g1.n_vertices()));
    }
    if !g2.contains(x2) {
        return Err(GraphError::InvalidVertex(x2, g2.n_vertices()));
    }
    let d_max = g1.d_max().max(g2.d_max());
    for (v, g) in [(x1, g1), (x2, g2)] {
        if g.degree(v) + 1 > d_max {
            return Err(GraphError::DegreeBoundExceeded {
                vertex: v,
                degree: g.degree(v) + 1,
                bound: d_max,
            });
        }
    }
    let offset = g1.n_vertices() as u32;
    let mut adj: Vec<Vec<VertexId>> = Vec::with_capacity(g1.n_vertices() + g2.n_vertices());
    for v in g1.vertices() {
        adj.push(g1.neighbors(v).to_vec());
    }
    for v in g2.vertices() {
        adj.push(g2.neighbors(v).iter().map(|w| VertexId(w.0 + offset)).collect());
    }
    let y2 = VertexId(x2.0 + offset);
    adj[x1.index()].push(y2);
    adj[x1.index()].sort_unstable();
    adj[y2.index()].push(x1);
    adj[y2.index()].sort_unstable();
    Ok(RootedGraph::from_adjacency_unchecked(adj, g1.root(), d_max))
}

/// Joins the given `(graph, attachment vertex)` pairs to a fresh hub vertex,
/// which becomes the root (vertex 0 of the result).
///
/// The result keeps the largest declared bound among the components; the hub
/// degree `k` and the bumped attachment degrees must respect it.
pub fn glue_star(components: &[(&RootedGraph, VertexId)]) -> Result<RootedGraph, GraphError> {
    assert!(!components.is_empty(), "glue_star needs at least one component");
    let k = components.len() as u32;
    let d_max = components.iter().map(|(g, _)| g.d_max()).max().unwrap();
    if k > d_max {
        return Err(GraphError::DegreeBoundExceeded {
            vertex: VertexId(0),
            degree: k,
            bound: d_max,
        });
    }
    for (g, y) in components {
        if !g.contains(*y) {
            return Err(GraphError::InvalidVertex(*y, g.n_vertices()));
        }
        if g.degree(*y) + 1 > d_max {
            return Err(GraphError::DegreeBoundExceeded {
                vertex: *y,
                degree: g.degree(*y) + 1,
                bound: d_max,
            });
        }
    }
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new()];
    let mut offset = 1u32;
    for (g, y) in components {
        for v in g.vertices() {
            adj.push(g.neighbors(v).iter().map(|w| VertexId(w.0 + offset)).collect());
        }
        let hub_side = VertexId(y.0 + offset);
        adj[0].push(hub_side);
        adj[hub_side.index()].push(VertexId(0));
        adj[hub_side.index()].sort_unstable();
        offset += g.n_vertices() as u32;
    }
    adj[0].sort_unstable();
    Ok(RootedGraph::from_adjacency_unchecked(adj, VertexId(0), d_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ball;

    fn k1() -> RootedGraph {
        RootedGraph::from_edges(&[], VertexId(0)).unwrap()
    }

    fn k2() -> RootedGraph {
        RootedGraph::from_edges(&[(0, 1)], VertexId(0)).unwrap()
    }

    #[test]
    fn homogeneous_tree_sizes() {
        // star with 4 vertices
        assert_eq!(homogeneous_tree(3, 1).unwrap().n_vertices(), 4);
        // 1 + 3 + 6 + 12
        assert_eq!(homogeneous_tree(3, 3).unwrap().n_vertices(), 22);
        // degree-2 tree is a path
        let p = homogeneous_tree(2, 5).unwrap();
        assert_eq!(p.n_vertices(), 11);
        assert_eq!(p.max_degree(), 2);
    }

    #[test]
    fn homogeneous_tree_degrees() {
        let g = homogeneous_tree(3, 2).unwrap();
        assert_eq!(g.degree(g.root()), 3);
        let dist = g.distances_from(g.root());
        for v in g.vertices() {
            match dist[v.index()].unwrap() {
                2 => assert_eq!(g.degree(v), 1),
                _ => assert_eq!(g.degree(v), 3),
            }
        }
    }

    #[test]
    fn homogeneous_count_formula() {
        // 1 + d((d−1)^R − 1)/(d−2) for d ≥ 3
        for d in 3u32..=4 {
            for r in 0u32..=6 {
                let g = homogeneous_tree(d, r).unwrap();
                let expect = 1 + (d as u64 * ((d as u64 - 1).pow(r) - 1)) / (d as u64 - 2);
                assert_eq!(g.n_vertices() as u64, expect, "d={d} r={r}");
            }
        }
    }

    #[test]
    fn half_homogeneous_sizes() {
        let g = half_homogeneous_tree(3, 1).unwrap();
        assert_eq!(g.n_vertices(), 3);
        assert_eq!(g.degree(g.root()), 2);
        assert_eq!(half_homogeneous_tree(3, 2).unwrap().n_vertices(), 7);
        assert_eq!(half_homogeneous_tree(2, 4).unwrap().n_vertices(), 5);
    }

    #[test]
    fn tree_budget_overflow() {
        let err = homogeneous_tree_with_budget(3, 10, 100).unwrap_err();
        assert!(matches!(err, GraphError::SizeOverflow { .. }));
    }

    #[test]
    fn ball_counts_in_t3() {
        let g = homogeneous_tree(3, 3).unwrap();
        let b1 = ball(&g, g.root(), 1).unwrap();
        assert_eq!(b1.len(), 4);
        let b2 = ball(&g, g.root(), 2).unwrap();
        assert_eq!(b2.len(), 10);
        assert_eq!(b2.boundary.len(), 6);
    }

    #[test]
    fn ball_monotone_and_exhausts() {
        let g = homogeneous_tree(3, 3).unwrap();
        let ecc = g.eccentricity(g.root());
        let mut prev = 0;
        for r in 0..=ecc {
            let b = ball(&g, g.root(), r).unwrap();
            assert!(b.len() >= prev);
            prev = b.len();
        }
        assert_eq!(prev, g.n_vertices());
    }

    #[test]
    fn glue_two_counts() {
        let a = k2();
        let b = k2();
        let g = glue_two(&a, VertexId(0), &b, VertexId(0)).unwrap();
        assert_eq!(g.n_vertices(), 4);
        assert_eq!(g.n_edges(), 3);
        assert_eq!(g.eccentricity(g.root()), 2); // path of 4 rooted at second vertex

        let t1 = homogeneous_tree(3, 2).unwrap();
        let t2 = homogeneous_tree(3, 2).unwrap();
        let glued = glue_two(&t1, t1.root(), &t2, t2.root()).unwrap();
        assert_eq!(glued.n_vertices(), 20);
        assert_eq!(glued.n_edges(), t1.n_edges() + t2.n_edges() + 1);
    }

    #[test]
    fn glue_two_respects_declared_bound() {
        let a = RootedGraph::build(&[(0, 1), (0, 2), (0, 3)], VertexId(0), 3).unwrap();
        let b = RootedGraph::build(&[(0, 1)], VertexId(0), 3).unwrap();
        let err = glue_two(&a, VertexId(0), &b, VertexId(0)).unwrap_err();
        assert!(matches!(err, GraphError::DegreeBoundExceeded { .. }));
    }

    #[test]
    fn glue_star_shapes() {
        let g = glue_star(&[(&k1(), VertexId(0))]).unwrap();
        assert_eq!(g.n_vertices(), 2);
        assert_eq!(g.n_edges(), 1);

        let c = k1();
        let g = glue_star(&[(&c, VertexId(0)), (&c, VertexId(0)), (&c, VertexId(0))]).unwrap();
        assert_eq!(g.n_vertices(), 4);
        assert_eq!(g.degree(g.root()), 3);

        let h = half_homogeneous_tree(3, 2).unwrap();
        let g = glue_star(&[(&h, h.root()), (&h, h.root())]).unwrap();
        assert_eq!(g.degree(g.root()), 2);
        assert_eq!(g.n_vertices(), 15);
        assert!(g.is_tree());
    }

    #[test]
    fn tree_spec_realize() {
        let t = TreeSpec::Homogeneous { d: 3 }.realize(2).unwrap();
        assert_eq!(t.n_vertices(), 10);
        let pair = TreeSpec::GluedPair {
            left: Box::new(TreeSpec::HalfHomogeneous { d: 3 }),
            right: Box::new(TreeSpec::HalfHomogeneous { d: 3 }),
        };
        // two glued half-trees = homogeneous tree, up to truncation shape
        let g = pair.realize(2).unwrap();
        assert_eq!(g.degree(g.root()), 3);
    }
}
