//! Galton-Watson tree sampler, truncated to a radius.

use super::{DegreeLaw, RandomGraphError};
use crate::graph::{GraphError, RootedGraph, VertexId, DEFAULT_VERTEX_BUDGET};
use crate::rng;
use serde::{Deserialize, Serialize};

/// Specification of a truncated Galton-Watson tree.
///
/// The root gets `D_0` children; every later vertex gets `D_g − 1` children,
/// so that its total degree is `D_g`. Construction stops at `radius`; the
/// distance-`radius` shell is flagged as the truncation boundary.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GwSpec {
    pub initial: DegreeLaw,
    pub general: DegreeLaw,
    pub radius: u32,
    pub seed: u64,
    #[serde(default = "default_budget")]
    pub vertex_budget: usize,
}

fn default_budget() -> usize {
    DEFAULT_VERTEX_BUDGET
}

impl GwSpec {
    /// Validates the bounded-degree assumption: `min supp(D_g) ≥ 2` and
    /// `E[D_g] > 2` (so the tree is infinite and expanding), with the
    /// degree bound implicit in the finite support.
    pub fn new(
        initial: DegreeLaw,
        general: DegreeLaw,
        radius: u32,
        seed: u64,
    ) -> Result<GwSpec, RandomGraphError> {
        if general.min_support() < 2 {
            return Err(RandomGraphError::BoundedDegree(format!(
                "min supp(D_g) = {} < 2",
                general.min_support()
            )));
        }
        if general.mean() <= 2.0 {
            return Err(RandomGraphError::BoundedDegree(format!(
                "E[D_g] = {} <= 2",
                general.mean()
            )));
        }
        Ok(GwSpec {
            initial,
            general,
            radius,
            seed,
            vertex_budget: DEFAULT_VERTEX_BUDGET,
        })
    }

    pub fn d_max(&self) -> u32 {
        self.initial.max_support().max(self.general.max_support())
    }
}

/// A truncated Galton-Watson sample.
#[derive(Debug, Clone)]
pub struct GwTree {
    pub graph: RootedGraph,
    /// Distance to the root, per vertex.
    pub depth: Vec<u32>,
    /// Vertices at distance exactly `radius` (truncation boundary).
    pub boundary: Vec<VertexId>,
    pub radius: u32,
}

impl GwTree {
    /// Vertices of the ball `B_r(root)`; requires `r ≤ radius`.
    pub fn ball_members(&self, r: u32) -> Vec<VertexId> {
        assert!(r <= self.radius);
        self.depth
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d <= r)
            .map(|(i, _)| VertexId(i as u32))
            .collect()
    }
}

/// Samples the truncated tree breadth-first. Vertices are numbered in BFS
/// order, so the construction (and its byte representation) is a pure
/// function of `(spec, seed)`.
pub fn sample_gw_tree(spec: &GwSpec) -> Result<GwTree, RandomGraphError> {
    let mut rng = rng::seeded(spec.seed);
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new()];
    let mut depth: Vec<u32> = vec![0];
    let mut level: Vec<u32> = vec![0];
    for d in 0..spec.radius {
        let mut next = Vec::new();
        for &v in &level {
            let children = if d == 0 {
                spec.initial.sample(&mut rng)
            } else {
                spec.general.sample(&mut rng) - 1
            };
            for _ in 0..children {
                if adj.len() >= spec.vertex_budget {
                    return Err(RandomGraphError::Graph(GraphError::SizeOverflow {
                        budget: spec.vertex_budget,
                    }));
                }
                let c = adj.len() as u32;
                adj.push(vec![VertexId(v)]);
                adj[v as usize].push(VertexId(c));
                depth.push(d + 1);
                next.push(c);
            }
        }
        level = next;
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let boundary = depth
        .iter()
        .enumerate()
        .filter(|&(_, &dd)| dd == spec.radius)
        .map(|(i, _)| VertexId(i as u32))
        .collect();
    let graph = RootedGraph::from_adjacency_unchecked(adj, VertexId(0), spec.d_max());
    Ok(GwTree {
        graph,
        depth,
        boundary,
        radius: spec.radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_to_json;

    #[test]
    fn constant_law_is_deterministic_t3() {
        let spec = GwSpec::new(DegreeLaw::delta(3), DegreeLaw::delta(3), 2, 1).unwrap();
        let t = sample_gw_tree(&spec).unwrap();
        assert_eq!(t.graph.n_vertices(), 10);
        assert_eq!(t.graph.degree(t.graph.root()), 3);
        assert_eq!(t.boundary.len(), 6);
        // no randomness consumed beyond structure: a different seed gives the
        // same graph
        let spec2 = GwSpec::new(DegreeLaw::delta(3), DegreeLaw::delta(3), 2, 999).unwrap();
        let t2 = sample_gw_tree(&spec2).unwrap();
        assert_eq!(t.graph, t2.graph);
    }

    #[test]
    fn support_check_on_root_children() {
        let law = DegreeLaw::uniform(&[3, 4]).unwrap();
        let spec = GwSpec::new(law.clone(), law, 1, 42).unwrap();
        let t = sample_gw_tree(&spec).unwrap();
        let k = t.graph.degree(t.graph.root());
        assert!(k == 3 || k == 4);
    }

    #[test]
    fn bd_assumption_rejected() {
        let bad = DegreeLaw::delta(2);
        assert!(GwSpec::new(bad.clone(), bad, 2, 0).is_err());
        let low = DegreeLaw::new(&[(1, 0.5), (5, 0.5)]).unwrap();
        assert!(GwSpec::new(low.clone(), low, 2, 0).is_err());
    }

    #[test]
    fn empirical_mean_ball_one() {
        // E[|B_1|] = 1 + E[D_0] for D_0 = D_g ~ uniform{3,4}
        let law = DegreeLaw::uniform(&[3, 4]).unwrap();
        let n = 10_000;
        let mut sum = 0.0;
        for seed in 0..n {
            let spec = GwSpec::new(law.clone(), law.clone(), 1, seed).unwrap();
            let t = sample_gw_tree(&spec).unwrap();
            sum += t.graph.n_vertices() as f64;
        }
        let mean = sum / n as f64;
        // Var(|B_1|) = Var(D_0) = 1/4, so 3σ of the mean ≈ 0.015
        assert!((mean - 4.5).abs() < 0.015 * 3.0, "mean = {mean}");
    }

    #[test]
    fn same_seed_same_bytes() {
        let law = DegreeLaw::uniform(&[3, 4]).unwrap();
        let spec = GwSpec::new(law.clone(), law, 5, 7).unwrap();
        let a = graph_to_json(&sample_gw_tree(&spec).unwrap().graph);
        let b = graph_to_json(&sample_gw_tree(&spec).unwrap().graph);
        assert_eq!(a, b);
    }

    #[test]
    fn budget_enforced() {
        let law = DegreeLaw::delta(3);
        let mut spec = GwSpec::new(law.clone(), law, 20, 0).unwrap();
        spec.vertex_budget = 1000;
        assert!(matches!(
            sample_gw_tree(&spec),
            Err(RandomGraphError::Graph(GraphError::SizeOverflow { .. }))
        ));
    }
}
