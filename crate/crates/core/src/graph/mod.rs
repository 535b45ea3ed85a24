//! Finite rooted graphs: representation, traversal, balls and paths.
//!
//! A [`RootedGraph`] is a simple, connected, undirected graph with dense
//! integer vertex ids, a distinguished root and a declared degree bound.
//! All heavier machinery (samplers, Hamiltonians, the variational solvers)
//! acts on this one representation.

mod io;
mod iso;
mod trees;

pub use io::{graph_from_json, graph_to_json, load_graph, save_graph, GraphJson};
pub use iso::{ball_subgraph, canonical_tree_code, rooted_isomorphic, rooted_subgraphs_isomorphic};
pub use trees::{glue_star, glue_two, half_homogeneous_tree, homogeneous_tree, TreeSpec};

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

/// Default declared degree bound for graphs built without an explicit one.
///
/// Plays the role of the global `d_max` selecting the graph class; individual
/// constructions may declare a tighter bound.
pub const DEFAULT_D_MAX: u32 = 16;

/// Hard cap on vertices for the deterministic tree builders and samplers.
pub const DEFAULT_VERTEX_BUDGET: usize = 2_000_000;

/// Dense vertex identifier, stable for the lifetime of its graph.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Errors from graph construction and structural queries.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("graph is not connected from the root: {unreached} of {total} vertices unreachable")]
    Disconnected { unreached: usize, total: usize },
    #[error("degree {degree} at vertex {vertex} exceeds declared bound {bound}")]
    DegreeBoundExceeded {
        vertex: VertexId,
        degree: u32,
        bound: u32,
    },
    #[error("construction would exceed the vertex budget of {budget}")]
    SizeOverflow { budget: usize },
    #[error("vertex {0} is not in the graph (|V| = {1})")]
    InvalidVertex(VertexId, usize),
    #[error("graph has no vertices")]
    Empty,
    #[error("isomorphism test limited to {limit} vertices for non-tree graphs (got {got})")]
    SizeLimit { got: usize, limit: usize },
    #[error("path step {0} -> {1} is not an edge")]
    PathNotInGraph(VertexId, VertexId),
    #[error("empty vertex path")]
    EmptyPath,
}

/// Simple connected undirected rooted graph with a declared degree bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    /// Per-vertex sorted neighbor lists.
    adj: Vec<Vec<VertexId>>,
    root: VertexId,
    d_max: u32,
    n_edges: usize,
}

impl RootedGraph {
    /// Builds and validates a graph from an undirected edge list.
    ///
    /// Vertex ids must be dense in `[0, n)` where `n − 1` is the largest id
    /// mentioned; an empty edge list yields the single-vertex graph `{root}`.
    /// Rejects self-loops, duplicate edges, disconnected inputs and degree
    /// bound violations.
    pub fn build(
        edges: &[(u32, u32)],
        root: VertexId,
        d_max: u32,
    ) -> Result<RootedGraph, GraphError> {
        let n = edges
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .max()
            .map(|m| m as usize + 1)
            .unwrap_or(0)
            .max(root.index() + 1);
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(VertexId(a)));
            }
            adj[a as usize].push(VertexId(b));
            adj[b as usize].push(VertexId(a));
        }
        for (i, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(VertexId(i as u32), w[0]));
            }
            if list.len() as u32 > d_max {
                return Err(GraphError::DegreeBoundExceeded {
                    vertex: VertexId(i as u32),
                    degree: list.len() as u32,
                    bound: d_max,
                });
            }
        }
        let g = RootedGraph {
            adj,
            root,
            d_max,
            n_edges: edges.len(),
        };
        if root.index() >= g.n_vertices() {
            return Err(GraphError::InvalidVertex(root, g.n_vertices()));
        }
        let dist = g.distances_from(root);
        let unreached = dist.iter().filter(|d| d.is_none()).count();
        if unreached > 0 {
            return Err(GraphError::Disconnected {
                unreached,
                total: g.n_vertices(),
            });
        }
        Ok(g)
    }

    /// [`RootedGraph::build`] with the crate default degree bound.
    pub fn from_edges(edges: &[(u32, u32)], root: VertexId) -> Result<RootedGraph, GraphError> {
        Self::build(edges, root, DEFAULT_D_MAX)
    }

    /// Internal constructor for prevalidated adjacency (samplers, glueing).
    pub(crate) fn from_adjacency_unchecked(
        adj: Vec<Vec<VertexId>>,
        root: VertexId,
        d_max: u32,
    ) -> RootedGraph {
        let n_edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        RootedGraph {
            adj,
            root,
            d_max,
            n_edges,
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn d_max(&self) -> u32 {
        self.d_max
    }

    pub fn degree(&self, v: VertexId) -> u32 {
        self.adj[v.index()].len() as u32
    }

    pub fn max_degree(&self) -> u32 {
        self.adj.iter().map(|l| l.len() as u32).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.n_vertices()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adj[a.index()].binary_search(&b).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.adj.len() as u32).map(VertexId)
    }

    /// Each undirected edge once, as `(a, b)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, list)| {
            let a = VertexId(i as u32);
            list.iter().filter(move |&&b| a < b).map(move |&b| (a, b))
        })
    }

    /// A connected graph on n vertices is a tree iff it has n − 1 edges.
    pub fn is_tree(&self) -> bool {
        self.n_edges + 1 == self.n_vertices()
    }

    /// BFS distances from `from`; `None` marks unreachable vertices.
    pub fn distances_from(&self, from: VertexId) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n_vertices()];
        let mut queue = VecDeque::new();
        dist[from.index()] = Some(0);
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v.index()].unwrap();
            for &w in self.neighbors(v) {
                if dist[w.index()].is_none() {
                    dist[w.index()] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn eccentricity(&self, from: VertexId) -> u32 {
        self.distances_from(from)
            .into_iter()
            .flatten()
            .max()
            .unwrap_or(0)
    }

    pub fn graph_distance(&self, a: VertexId, b: VertexId) -> Option<u32> {
        self.distances_from(a)[b.index()]
    }
}

/// Closed metric ball `B_r(center) = {x : dist(x, center) ≤ r}`.
///
/// Does not hold a reference to its parent graph; every operation that
/// consumes a ball also takes the graph it was extracted from.
#[derive(Debug, Clone)]
pub struct Ball {
    pub center: VertexId,
    pub radius: u32,
    /// Members sorted by vertex id.
    pub members: Vec<VertexId>,
    /// Vertices at distance exactly `radius`, sorted by vertex id.
    pub boundary: Vec<VertexId>,
    /// Distance to the center, parallel to `members`.
    pub dist: Vec<u32>,
}

impl Ball {
    /// `L_r`, the number of vertices in the ball.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn member_distance(&self, v: VertexId) -> Option<u32> {
        self.members.binary_search(&v).ok().map(|i| self.dist[i])
    }
}

/// BFS-exact ball of radius `r` around `center`.
pub fn ball(g: &RootedGraph, center: VertexId, r: u32) -> Result<Ball, GraphError> {
    if !g.contains(center) {
        return Err(GraphError::InvalidVertex(center, g.n_vertices()));
    }
    let mut dist: Vec<Option<u32>> = vec![None; g.n_vertices()];
    let mut queue = VecDeque::new();
    dist[center.index()] = Some(0);
    queue.push_back(center);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v.index()].unwrap();
        if dv == r {
            continue;
        }
        for &w in g.neighbors(v) {
            if dist[w.index()].is_none() {
                dist[w.index()] = Some(dv + 1);
                queue.push_back(w);
            }
        }
    }
    let mut members = Vec::new();
    let mut dvec = Vec::new();
    let mut boundary = Vec::new();
    for (i, d) in dist.iter().enumerate() {
        if let Some(d) = *d {
            members.push(VertexId(i as u32));
            dvec.push(d);
            if d == r {
                boundary.push(VertexId(i as u32));
            }
        }
    }
    Ok(Ball {
        center,
        radius: r,
        members,
        boundary,
        dist: dvec,
    })
}

/// Nearest-neighbour path `π_0 … π_ℓ`; consecutive vertices are adjacent.
///
/// The length `|π|` is the number of steps `ℓ`, one less than the number of
/// vertices. A single vertex is a valid path of length zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPath {
    vertices: Vec<VertexId>,
}

impl VertexPath {
    pub fn new(g: &RootedGraph, vertices: Vec<VertexId>) -> Result<VertexPath, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyPath);
        }
        for &v in &vertices {
            if !g.contains(v) {
                return Err(GraphError::InvalidVertex(v, g.n_vertices()));
            }
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(GraphError::PathNotInGraph(w[0], w[1]));
            }
        }
        Ok(VertexPath { vertices })
    }

    /// For internal use on slices of an already validated path.
    pub(crate) fn from_validated(vertices: Vec<VertexId>) -> VertexPath {
        debug_assert!(!vertices.is_empty());
        VertexPath { vertices }
    }

    /// Number of steps `ℓ = |π|`.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    /// `supp(π)`: the set of visited vertices, sorted and deduplicated.
    pub fn support(&self) -> Vec<VertexId> {
        let mut s = self.vertices.clone();
        s.sort_unstable();
        s.dedup();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_k2() {
        let g = RootedGraph::from_edges(&[(0, 1)], VertexId(0)).unwrap();
        assert_eq!(g.n_vertices(), 2);
        assert_eq!(g.n_edges(), 1);
        assert_eq!(g.degree(VertexId(0)), 1);
        assert!(g.is_tree());
    }

    #[test]
    fn build_rejects_duplicate_edge() {
        let err = RootedGraph::from_edges(&[(0, 1), (1, 0)], VertexId(0)).unwrap_err();
        assert!(matches!(err, GraphError::DuplicateEdge(..)), "{err}");
    }

    #[test]
    fn build_rejects_self_loop() {
        let err = RootedGraph::from_edges(&[(0, 0)], VertexId(0)).unwrap_err();
        assert!(matches!(err, GraphError::SelfLoop(_)), "{err}");
    }

    #[test]
    fn build_rejects_disconnected() {
        let err = RootedGraph::from_edges(&[(0, 1), (2, 3)], VertexId(0)).unwrap_err();
        assert!(matches!(err, GraphError::Disconnected { unreached: 2, .. }), "{err}");
    }

    #[test]
    fn build_rejects_degree_bound() {
        let err = RootedGraph::build(&[(0, 1), (0, 2), (0, 3)], VertexId(0), 2).unwrap_err();
        assert!(matches!(err, GraphError::DegreeBoundExceeded { .. }), "{err}");
    }

    #[test]
    fn single_vertex_graph() {
        let g = RootedGraph::from_edges(&[], VertexId(0)).unwrap();
        assert_eq!(g.n_vertices(), 1);
        assert_eq!(g.n_edges(), 0);
    }

    #[test]
    fn ball_on_k2() {
        let g = RootedGraph::from_edges(&[(0, 1)], VertexId(0)).unwrap();
        let b = ball(&g, VertexId(0), 0).unwrap();
        assert_eq!(b.members, vec![VertexId(0)]);
        assert_eq!(b.len(), 1);
        assert_eq!(b.boundary, vec![VertexId(0)]);
    }

    #[test]
    fn handshake_identity() {
        let g =
            RootedGraph::from_edges(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], VertexId(0)).unwrap();
        let sum: u32 = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(sum as usize, 2 * g.n_edges());
    }

    #[test]
    fn path_validation() {
        let g = RootedGraph::from_edges(&[(0, 1), (1, 2)], VertexId(0)).unwrap();
        let p = VertexPath::new(&g, vec![VertexId(0), VertexId(1), VertexId(0)]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.support(), vec![VertexId(0), VertexId(1)]);
        let err = VertexPath::new(&g, vec![VertexId(0), VertexId(2)]).unwrap_err();
        assert!(matches!(err, GraphError::PathNotInGraph(..)));
    }
}
