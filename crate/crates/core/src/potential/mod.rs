//! Random potential fields with double-exponential upper tail, the `a_L`
//! scale, and the high-exceedance landscape (islands, peak statistics).

mod islands;

pub use islands::{
    decompose_islands, island_stats, path_peak_counts, Island, IslandDecomposition, IslandStats,
    IslandStatsReport, LandscapeConfig, PeakCounts,
};

use crate::graph::{Ball, RootedGraph, VertexId};
use crate::rng;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// i.i.d. potential `ξ ≥ 0` on the vertices of a graph.
///
/// The marginal law is `P(ξ > u) = exp(−e^{u/ρ})` for `u ≥ 0`, with the
/// remaining mass `1 − e^{−1}` as an atom at 0 — the exact double-exponential
/// upper tail conditioned to the nonnegative axis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Potential {
    values: Vec<f64>,
    pub rho: f64,
    pub seed: u64,
}

impl Potential {
    pub fn value(&self, v: VertexId) -> f64 {
        self.values[v.index()]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Builds a field from explicit values (planted instances, tests).
    pub fn from_values(values: Vec<f64>, rho: f64) -> Potential {
        assert!(values.iter().all(|&x| x >= 0.0), "potential must be >= 0");
        Potential {
            values,
            rho,
            seed: 0,
        }
    }

    pub fn constant(n: usize, value: f64, rho: f64) -> Potential {
        Potential::from_values(vec![value; n], rho)
    }
}

/// Quantile function of the marginal law at `u ∈ (0, 1]`:
/// the value `x` with `P(ξ > x) = u` on the positive part.
///
/// `u ≥ e^{−1}` lands on the atom at 0.
pub fn double_exp_upper_quantile(u: f64, rho: f64) -> f64 {
    debug_assert!(u > 0.0 && u <= 1.0);
    if u >= (-1.0f64).exp() {
        0.0
    } else {
        // solve exp(−e^{x/ρ}) = u
        rho * (-u.ln()).ln()
    }
}

/// Samples the i.i.d. field on all vertices of `g` by inverse-CDF.
///
/// Values are drawn in vertex-id order, so the field is a pure function of
/// `(|V|, ρ, seed)`.
pub fn sample_double_exponential(g: &RootedGraph, rho: f64, seed: u64) -> Potential {
    assert!(rho > 0.0);
    let mut rng = rng::seeded(seed);
    let values = (0..g.n_vertices())
        .map(|_| {
            let u = 1.0 - rng.random::<f64>(); // (0, 1]
            double_exp_upper_quantile(u, rho)
        })
        .collect();
    Potential { values, rho, seed }
}

/// `a_L = ρ · loglog(L ∨ e^e)`, the leading order of the maximum of `L`
/// i.i.d. double-exponential variables.
pub fn a_scale(l: usize, rho: f64) -> f64 {
    let ee = std::f64::consts::E.exp();
    let x = (l as f64).max(ee);
    rho * x.ln().ln()
}

/// Argmax and maximum of the field on a ball; ties broken towards the
/// smallest vertex id.
pub fn max_in_ball(xi: &Potential, b: &Ball) -> (VertexId, f64) {
    assert!(!b.is_empty(), "ball must be nonempty");
    let mut best = b.members[0];
    let mut best_val = xi.value(best);
    for &v in &b.members[1..] {
        let x = xi.value(v);
        if x > best_val {
            best = v;
            best_val = x;
        }
    }
    (best, best_val)
}
