//! Configuration model: uniform half-edge matching, multigraph bookkeeping,
//! and the uniform simple graph via rejection.

use super::{DegreeLaw, RandomGraphError};
use crate::graph::{RootedGraph, VertexId};
use crate::rng;
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

/// Prescribed degree sequence `d_1, …, d_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<u32>) -> DegreeSequence {
        DegreeSequence { degrees }
    }

    /// Constant sequence `d, …, d` of length `n`.
    pub fn constant(n: usize, d: u32) -> DegreeSequence {
        DegreeSequence {
            degrees: vec![d; n],
        }
    }

    /// One degree per line; blank lines and `#` comments ignored.
    pub fn from_csv(text: &str) -> Result<DegreeSequence, RandomGraphError> {
        let mut degrees = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let d: u32 = line
                .parse()
                .map_err(|e| RandomGraphError::InvalidLaw(format!("bad degree line {line:?}: {e}")))?;
            degrees.push(d);
        }
        Ok(DegreeSequence { degrees })
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn total_degree(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }

    /// Empirical law of the degree of a uniformly chosen vertex.
    pub fn empirical_law(&self) -> DegreeLaw {
        let n = self.n() as f64;
        let mut counts: std::collections::BTreeMap<u32, usize> = Default::default();
        for &d in &self.degrees {
            *counts.entry(d).or_default() += 1;
        }
        let pairs: Vec<(u32, f64)> = counts
            .into_iter()
            .map(|(k, c)| (k, c as f64 / n))
            .collect();
        DegreeLaw::new(&pairs).expect("empirical law is always valid")
    }

    /// Checks the standing assumptions for the configuration model: even
    /// total degree, `2 ≤ d_i`, all degrees within the limit law's bound,
    /// and `min supp(D) ≥ 3` for the limit law.
    pub fn validate_cm(&self, limit: &DegreeLaw) -> Result<(), RandomGraphError> {
        let total = self.total_degree();
        if total % 2 == 1 {
            return Err(RandomGraphError::OddTotalDegree(total));
        }
        if let Some(&d) = self.degrees.iter().find(|&&d| d < 2) {
            return Err(RandomGraphError::BoundedDegree(format!("degree {d} < 2")));
        }
        if let Some(&d) = self.degrees.iter().find(|&&d| d > limit.max_support()) {
            return Err(RandomGraphError::BoundedDegree(format!(
                "degree {d} above limit-law bound {}",
                limit.max_support()
            )));
        }
        if limit.min_support() < 3 {
            return Err(RandomGraphError::BoundedDegree(format!(
                "limit law min support {} < 3",
                limit.min_support()
            )));
        }
        Ok(())
    }
}

/// Total variation distance between the empirical degree law of the sequence
/// and a limit law.
pub fn tv_distance(ds: &DegreeSequence, limit: &DegreeLaw) -> f64 {
    let emp = ds.empirical_law();
    let mut keys: Vec<u32> = emp.support().to_vec();
    keys.extend_from_slice(limit.support());
    keys.sort_unstable();
    keys.dedup();
    0.5 * keys
        .iter()
        .map(|&k| (emp.prob_of(k) - limit.prob_of(k)).abs())
        .sum::<f64>()
}

/// `Φ_n = (1/n ∨ d_TV(d_{O_n}, D))^{-1}`, evaluated exactly.
pub fn phi_n(ds: &DegreeSequence, limit: &DegreeLaw) -> f64 {
    let tv = tv_distance(ds, limit);
    1.0 / tv.max(1.0 / ds.n() as f64)
}

/// Rooted multigraph produced by one half-edge matching.
#[derive(Debug, Clone)]
pub struct MultiGraph {
    pub n: usize,
    /// Matched edges, including self-loops and parallel repeats.
    pub edges: Vec<(u32, u32)>,
    pub root: VertexId,
    pub loops: usize,
    pub multi_edges: usize,
}

impl MultiGraph {
    pub fn is_simple(&self) -> bool {
        self.loops == 0 && self.multi_edges == 0
    }

    /// Converts a simple matching outcome to a validated rooted graph,
    /// keeping only the root's connected component out of consideration —
    /// the graph may be disconnected, in which case `None` is returned
    /// unless `allow_disconnected_root_component` is set by the caller via
    /// [`MultiGraph::root_component`].
    pub fn to_rooted_graph(&self, d_max: u32) -> Option<RootedGraph> {
        if !self.is_simple() {
            return None;
        }
        RootedGraph::build(&self.edges, self.root, d_max).ok()
    }

    /// The root's connected component as a rooted graph with dense ids
    /// (vertex ids re-indexed in BFS order from the root).
    pub fn root_component(&self, d_max: u32) -> Option<RootedGraph> {
        if !self.is_simple() {
            return None;
        }
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a as usize].push(VertexId(b));
            adj[b as usize].push(VertexId(a));
        }
        let mut local = vec![u32::MAX; self.n];
        let mut order: Vec<u32> = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        local[self.root.index()] = 0;
        order.push(self.root.0);
        queue.push_back(self.root.0);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v as usize] {
                if local[w.index()] == u32::MAX {
                    local[w.index()] = order.len() as u32;
                    order.push(w.0);
                    queue.push_back(w.0);
                }
            }
        }
        let mut sub: Vec<Vec<VertexId>> = vec![Vec::new(); order.len()];
        for (new_id, &old) in order.iter().enumerate() {
            sub[new_id] = adj[old as usize]
                .iter()
                .map(|w| VertexId(local[w.index()]))
                .collect();
            sub[new_id].sort_unstable();
        }
        Some(RootedGraph::from_adjacency_unchecked(
            sub,
            VertexId(0),
            d_max,
        ))
    }
}

/// Outcome bookkeeping for one sampling call.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SampleReport {
    /// Number of matchings drawn (1 for the raw configuration model).
    pub attempts: u32,
    pub simple: bool,
    pub connected: bool,
}

fn connectivity(n: usize, edges: &[(u32, u32)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a != b {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
    }
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[0] = true;
    queue.push_back(0u32);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}

fn match_half_edges(ds: &DegreeSequence, rng: &mut impl rand::Rng) -> MultiGraph {
    let mut half_edges: Vec<u32> = Vec::with_capacity(ds.total_degree() as usize);
    for (i, &d) in ds.degrees().iter().enumerate() {
        for _ in 0..d {
            half_edges.push(i as u32);
        }
    }
    // A uniformly random permutation paired off consecutively is a uniform
    // perfect matching of the half-edges.
    half_edges.shuffle(rng);
    let mut edges = Vec::with_capacity(half_edges.len() / 2);
    let mut loops = 0usize;
    for pair in half_edges.chunks_exact(2) {
        let (a, b) = (pair[0], pair[1]);
        if a == b {
            loops += 1;
        }
        edges.push((a, b));
    }
    let mut key: Vec<(u32, u32)> = edges
        .iter()
        .filter(|&&(a, b)| a != b)
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    key.sort_unstable();
    let multi_edges = key.windows(2).filter(|w| w[0] == w[1]).count();
    let root = VertexId(rng.random_range(0..ds.n() as u32));
    MultiGraph {
        n: ds.n(),
        edges,
        root,
        loops,
        multi_edges,
    }
}

/// One uniform half-edge matching with a uniformly drawn root.
///
/// The result may have self-loops and parallel edges; the report records
/// simplicity and connectivity of the outcome.
pub fn sample_configuration_model(
    ds: &DegreeSequence,
    seed: u64,
) -> Result<(MultiGraph, SampleReport), RandomGraphError> {
    let total = ds.total_degree();
    if total % 2 == 1 {
        return Err(RandomGraphError::OddTotalDegree(total));
    }
    let mut rng = rng::seeded(seed);
    let mg = match_half_edges(ds, &mut rng);
    let report = SampleReport {
        attempts: 1,
        simple: mg.is_simple(),
        connected: mg.is_simple() && connectivity(mg.n, &mg.edges),
    };
    Ok((mg, report))
}

/// Rejection sampler for the uniform simple graph with the prescribed
/// degrees: repeat the half-edge matching until the outcome is simple
/// (and connected, when `require_connected` is set).
pub fn sample_uniform_simple_graph(
    ds: &DegreeSequence,
    seed: u64,
    max_attempts: u32,
    require_connected: bool,
) -> Result<(MultiGraph, SampleReport), RandomGraphError> {
    let total = ds.total_degree();
    if total % 2 == 1 {
        return Err(RandomGraphError::OddTotalDegree(total));
    }
    let mut rng = rng::seeded(seed);
    for attempt in 1..=max_attempts {
        let mg = match_half_edges(ds, &mut rng);
        if !mg.is_simple() {
            continue;
        }
        let connected = connectivity(mg.n, &mg.edges);
        if require_connected && !connected {
            continue;
        }
        let report = SampleReport {
            attempts: attempt,
            simple: true,
            connected,
        };
        return Ok((mg, report));
    }
    Err(RandomGraphError::MaxAttemptsExceeded(max_attempts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_always_simple() {
        let ds = DegreeSequence::new(vec![1, 1]);
        for seed in 0..20 {
            let (mg, rep) = sample_configuration_model(&ds, seed).unwrap();
            assert!(rep.simple);
            assert!(rep.connected);
            assert_eq!(mg.edges.len(), 1);
        }
    }

    #[test]
    fn odd_total_degree_rejected() {
        let ds = DegreeSequence::new(vec![1, 2]);
        assert!(matches!(
            sample_configuration_model(&ds, 0),
            Err(RandomGraphError::OddTotalDegree(3))
        ));
    }

    #[test]
    fn two_deg2_vertices_enumeration() {
        // 3 pairings of 4 half-edges: one gives two loops, two give a double
        // edge. Check the 1/3 - 2/3 split empirically.
        let ds = DegreeSequence::new(vec![2, 2]);
        let trials = 30_000;
        let mut loops2 = 0;
        let mut doubled = 0;
        for seed in 0..trials {
            let (mg, rep) = sample_configuration_model(&ds, seed).unwrap();
            assert!(!rep.simple);
            if mg.loops == 2 {
                loops2 += 1;
            } else {
                assert_eq!(mg.multi_edges, 1);
                doubled += 1;
            }
        }
        assert_eq!(loops2 + doubled, trials);
        let f = loops2 as f64 / trials as f64;
        let sigma = ((1.0 / 3.0) * (2.0 / 3.0) / trials as f64).sqrt();
        assert!(
            (f - 1.0 / 3.0).abs() < 3.0 * sigma,
            "two-loop frequency {f} vs 1/3 ± {}",
            3.0 * sigma
        );
    }

    #[test]
    fn uniform_simple_keeps_degrees() {
        let ds = DegreeSequence::new(vec![3, 3, 2, 2, 2]);
        let (mg, rep) = sample_uniform_simple_graph(&ds, 11, 1000, false).unwrap();
        assert!(rep.simple);
        let mut degs = vec![0u32; ds.n()];
        for &(a, b) in &mg.edges {
            degs[a as usize] += 1;
            degs[b as usize] += 1;
        }
        assert_eq!(degs, ds.degrees());
    }

    #[test]
    fn degrees_11_is_immediate() {
        let ds = DegreeSequence::new(vec![1, 1]);
        let (_, rep) = sample_uniform_simple_graph(&ds, 0, 10, false).unwrap();
        assert_eq!(rep.attempts, 1);
    }

    #[test]
    fn unique_cubic_graph_on_four_vertices_is_k4() {
        // K4 is the unique simple 3-regular graph on 4 vertices.
        let ds = DegreeSequence::constant(4, 3);
        let (mg, _) = sample_uniform_simple_graph(&ds, 5, 10_000, false).unwrap();
        let g = mg.to_rooted_graph(3).unwrap();
        assert_eq!(g.n_edges(), 6);
        for v in g.vertices() {
            assert_eq!(g.degree(v), 3);
        }
    }

    #[test]
    fn phi_n_constant_degrees() {
        let ds = DegreeSequence::constant(100, 3);
        let limit = DegreeLaw::delta(3);
        assert_eq!(phi_n(&ds, &limit), 100.0);
        ds.validate_cm(&limit).unwrap();
    }

    #[test]
    fn phi_n_with_tv_gap() {
        // half threes, half fours against limit = delta_3: TV = 1/2
        let mut degs = vec![3u32; 50];
        degs.extend(vec![4u32; 50]);
        let ds = DegreeSequence::new(degs);
        let limit = DegreeLaw::delta(3);
        assert!((tv_distance(&ds, &limit) - 0.5).abs() < 1e-12);
        assert!((phi_n(&ds, &limit) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn csv_parse() {
        let ds = DegreeSequence::from_csv("# header\n3\n3\n4\n\n").unwrap();
        assert_eq!(ds.degrees(), &[3, 3, 4]);
    }
}
