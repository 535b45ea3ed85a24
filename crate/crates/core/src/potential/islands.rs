//! High-exceedance sets, islands and path peak statistics.
//!
//! For a ball `B_r` and a threshold level `A`, the exceedance set is
//! `Π = {z ∈ B_r : ξ(z) > a_{L_r} − 2A}`, the island region is its
//! `S_r`-neighbourhood `D` inside the ball with `S_r = (log r)^α`, and the
//! islands are the connected components of `D`.

use super::{a_scale, Potential};
use crate::graph::{Ball, GraphError, RootedGraph, VertexId, VertexPath};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Parameters of the landscape decomposition.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LandscapeConfig {
    /// Exceedance depth `A`: the threshold is `a_{L_r} − 2A`.
    pub a: f64,
    /// Neighbourhood exponent `α ∈ (0,1)` in `S_r = (log r)^α`.
    pub alpha: f64,
    /// Peak level `ε ∈ (0,1)`: intermediate peaks exceed `(1−ε) a_{L_r}`.
    pub epsilon: f64,
    /// Diagnostic cap on `|C ∩ Π|` used by the island-statistics report.
    pub m_a: usize,
}

impl Default for LandscapeConfig {
    fn default() -> Self {
        LandscapeConfig {
            a: 1.0,
            alpha: 0.5,
            epsilon: 0.1,
            m_a: 8,
        }
    }
}

/// One connected component of the island region `D`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Island {
    /// Sorted member vertices.
    pub vertices: Vec<VertexId>,
    /// Argmax of the potential on the island (smallest id on ties).
    pub peak: VertexId,
    pub peak_value: f64,
}

/// The landscape decomposition of a ball: `Π ⊆ D ⊆ B_r` and the islands.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IslandDecomposition {
    /// High-exceedance vertices, sorted.
    pub pi: Vec<VertexId>,
    /// `S_r`-neighbourhood of `Π` within the ball, sorted.
    pub d: Vec<VertexId>,
    pub islands: Vec<Island>,
    pub s_r: f64,
    pub a_l: f64,
    /// The exceedance threshold `a_{L_r} − 2A`.
    pub threshold: f64,
    /// Exceedance depth `A` the decomposition was computed with.
    pub a: f64,
    pub radius: u32,
    pub ball_size: usize,
}

impl IslandDecomposition {
    pub fn in_pi(&self, v: VertexId) -> bool {
        self.pi.binary_search(&v).is_ok()
    }

    pub fn in_d(&self, v: VertexId) -> bool {
        self.d.binary_search(&v).is_ok()
    }
}

/// Computes `Π`, `D` and the islands for a ball of radius `r ≥ 3`.
pub fn decompose_islands(
    g: &RootedGraph,
    xi: &Potential,
    b: &Ball,
    cfg: &LandscapeConfig,
) -> Result<IslandDecomposition, GraphError> {
    assert!(b.radius >= 3, "decompose_islands needs radius >= 3 so log r > 0");
    assert!(cfg.alpha > 0.0 && cfg.alpha < 1.0);
    assert!(cfg.a > 0.0);
    let a_l = a_scale(b.len(), xi.rho);
    let threshold = a_l - 2.0 * cfg.a;
    let s_r = (b.radius as f64).ln().powf(cfg.alpha);
    let s_cap = s_r.floor() as u32;

    let pi: Vec<VertexId> = b
        .members
        .iter()
        .copied()
        .filter(|&v| xi.value(v) > threshold)
        .collect();

    // D = S_r-neighbourhood of Π in G, intersected with the ball:
    // multi-source BFS from Π capped at depth floor(S_r).
    let mut depth = vec![u32::MAX; g.n_vertices()];
    let mut queue = VecDeque::new();
    for &v in &pi {
        depth[v.index()] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        let dv = depth[v.index()];
        if dv == s_cap {
            continue;
        }
        for &w in g.neighbors(v) {
            if depth[w.index()] == u32::MAX {
                depth[w.index()] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    let d: Vec<VertexId> = b
        .members
        .iter()
        .copied()
        .filter(|&v| depth[v.index()] != u32::MAX)
        .collect();

    // Islands: connected components of D (edges of G between D-members).
    let mut comp = vec![u32::MAX; g.n_vertices()];
    let mut islands = Vec::new();
    for &start in &d {
        if comp[start.index()] != u32::MAX {
            continue;
        }
        let id = islands.len() as u32;
        let mut members = vec![start];
        comp[start.index()] = id;
        let mut queue = VecDeque::new();
        queue.push_back(start);
        let in_d = |v: VertexId| depth[v.index()] != u32::MAX && b.contains(v);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if in_d(w) && comp[w.index()] == u32::MAX {
                    comp[w.index()] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        let (peak, peak_value) = members
            .iter()
            .map(|&v| (v, xi.value(v)))
            .fold((members[0], f64::NEG_INFINITY), |acc, (v, x)| {
                if x > acc.1 {
                    (v, x)
                } else {
                    acc
                }
            });
        islands.push(Island {
            vertices: members,
            peak,
            peak_value,
        });
    }

    Ok(IslandDecomposition {
        pi,
        d,
        islands,
        s_r,
        a_l,
        threshold,
        a: cfg.a,
        radius: b.radius,
        ball_size: b.len(),
    })
}

/// Per-island size statistics against the landscape bounds.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IslandStats {
    pub size: usize,
    pub peaks_in_pi: usize,
    pub diameter: u32,
    pub peak: VertexId,
    pub peak_value: f64,
    /// `|C ∩ Π| ≤ M_A`?
    pub peaks_ok: bool,
    /// `diam(C) ≤ 2 M_A S_r`?
    pub diameter_ok: bool,
    /// `|C| ≤ M_A d_max^{S_r}`?
    pub size_ok: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IslandStatsReport {
    pub rows: Vec<IslandStats>,
    pub m_a: usize,
    pub s_r: f64,
    pub violations: usize,
}

/// Reports `(|C ∩ Π|, diam C, |C|)` per island against the diagnostic cap
/// `M_A` from the configuration.
pub fn island_stats(
    g: &RootedGraph,
    dec: &IslandDecomposition,
    cfg: &LandscapeConfig,
) -> IslandStatsReport {
    let m_a = cfg.m_a;
    let mut rows = Vec::with_capacity(dec.islands.len());
    for island in &dec.islands {
        let peaks_in_pi = island
            .vertices
            .iter()
            .filter(|&&v| dec.in_pi(v))
            .count();
        let diameter = island_diameter(g, &island.vertices);
        let size_bound = m_a as f64 * (g.d_max() as f64).powf(dec.s_r);
        let row = IslandStats {
            size: island.vertices.len(),
            peaks_in_pi,
            diameter,
            peak: island.peak,
            peak_value: island.peak_value,
            peaks_ok: peaks_in_pi <= m_a,
            diameter_ok: diameter as f64 <= 2.0 * m_a as f64 * dec.s_r,
            size_ok: (island.vertices.len() as f64) <= size_bound,
        };
        rows.push(row);
    }
    let violations = rows
        .iter()
        .filter(|r| !(r.peaks_ok && r.diameter_ok && r.size_ok))
        .count();
    IslandStatsReport {
        rows,
        m_a,
        s_r: dec.s_r,
        violations,
    }
}

/// Exact diameter of a small vertex set in the induced subgraph (BFS from
/// every member).
fn island_diameter(g: &RootedGraph, members: &[VertexId]) -> u32 {
    let mut best = 0;
    for &src in members {
        let mut dist = std::collections::HashMap::new();
        dist.insert(src, 0u32);
        let mut queue = VecDeque::new();
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let dv = dist[&v];
            for &w in g.neighbors(v) {
                if members.binary_search(&w).is_ok() && !dist.contains_key(&w) {
                    dist.insert(w, dv + 1);
                    queue.push_back(w);
                }
            }
        }
        best = best.max(dist.values().copied().max().unwrap_or(0));
    }
    best
}

/// Peak counts seen along a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeakCounts {
    /// `#{z ∈ supp(π) : ξ(z) > (1−ε) a_{L_r}}` (intermediate peaks).
    pub n_eps: usize,
    /// `#{z ∈ supp(π) : ξ(z) > a_{L_r} − 2A}` (high exceedances).
    pub n_high: usize,
    /// `M_π^{r,ε} = #{0 ≤ i < |π| : ξ(π_i) ≤ (1−ε) a_{L_r}}`, the moderately
    /// low steps, last point excluded; 0 for a zero-length path.
    pub m_eps: usize,
}

/// Counts peaks and moderately-low steps of `ξ` along a path, with the
/// scales taken from the ball `b`.
pub fn path_peak_counts(
    g: &RootedGraph,
    xi: &Potential,
    path: &VertexPath,
    b: &Ball,
    cfg: &LandscapeConfig,
) -> Result<PeakCounts, GraphError> {
    for &v in path.vertices() {
        if !g.contains(v) {
            return Err(GraphError::InvalidVertex(v, g.n_vertices()));
        }
    }
    let a_l = a_scale(b.len(), xi.rho);
    let peak_level = (1.0 - cfg.epsilon) * a_l;
    let high_level = a_l - 2.0 * cfg.a;
    let support = path.support();
    let n_eps = support.iter().filter(|&&z| xi.value(z) > peak_level).count();
    let n_high = support.iter().filter(|&&z| xi.value(z) > high_level).count();
    let m_eps = path.vertices()[..path.len()]
        .iter()
        .filter(|&&z| xi.value(z) <= peak_level)
        .count();
    Ok(PeakCounts {
        n_eps,
        n_high,
        m_eps,
    })
}

/// `M_π^{r,ε}` for a path against an explicit level (used by the excursion
/// machinery where the level is fixed once per ball).
pub(crate) fn moderate_low_count(xi: &Potential, path: &VertexPath, peak_level: f64) -> usize {
    path.vertices()[..path.len()]
        .iter()
        .filter(|&&z| xi.value(z) <= peak_level)
        .count()
}
