//! Seeded samplers for bounded-degree random graphs: Galton-Watson trees,
//! the configuration model and the uniform simple graph, plus the derived
//! constants (volume growth rate θ, size-biased law D_⋆, ν, Φ_n).

mod config_model;
mod coupling;
mod gw;

pub use config_model::{
    phi_n, sample_configuration_model, sample_uniform_simple_graph, DegreeSequence, MultiGraph,
    SampleReport,
};
pub use coupling::{coupling_check, CouplingReport};
pub use gw::{sample_gw_tree, GwSpec, GwTree};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RandomGraphError {
    #[error("invalid degree law: {0}")]
    InvalidLaw(String),
    #[error("bounded-degree assumption violated: {0}")]
    BoundedDegree(String),
    #[error("non-expanding offspring law: E[D_g - 1] = {0} <= 1")]
    NonExpanding(f64),
    #[error("total degree {0} is odd; half-edges cannot be matched")]
    OddTotalDegree(u64),
    #[error("no simple graph found within {0} attempts")]
    MaxAttemptsExceeded(u32),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

/// Probability law on integer degrees with finite sorted support.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeLaw {
    support: Vec<u32>,
    probs: Vec<f64>,
}

const PROB_SUM_TOL: f64 = 1e-12;

impl DegreeLaw {
    /// Builds a law from `(degree, probability)` pairs. The probabilities
    /// must be nonnegative and sum to 1 within 1e−12; the support must be
    /// distinct positive integers (sorted internally).
    pub fn new(pairs: &[(u32, f64)]) -> Result<DegreeLaw, RandomGraphError> {
        if pairs.is_empty() {
            return Err(RandomGraphError::InvalidLaw("empty support".into()));
        }
        let mut pairs = pairs.to_vec();
        pairs.sort_by_key(|&(k, _)| k);
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(RandomGraphError::InvalidLaw("repeated support point".into()));
        }
        if pairs.iter().any(|&(k, _)| k == 0) {
            return Err(RandomGraphError::InvalidLaw("degree 0 in support".into()));
        }
        if pairs.iter().any(|&(_, p)| !(p >= 0.0) || !p.is_finite()) {
            return Err(RandomGraphError::InvalidLaw(
                "negative or non-finite probability".into(),
            ));
        }
        let total: f64 = pairs.iter().map(|&(_, p)| p).sum();
        if (total - 1.0).abs() > PROB_SUM_TOL {
            return Err(RandomGraphError::InvalidLaw(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        let (support, probs) = pairs.into_iter().unzip();
        Ok(DegreeLaw { support, probs })
    }

    /// Point mass at `k`.
    pub fn delta(k: u32) -> DegreeLaw {
        DegreeLaw {
            support: vec![k],
            probs: vec![1.0],
        }
    }

    /// Uniform law on a set of degrees.
    pub fn uniform(set: &[u32]) -> Result<DegreeLaw, RandomGraphError> {
        let p = 1.0 / set.len() as f64;
        DegreeLaw::new(&set.iter().map(|&k| (k, p)).collect::<Vec<_>>())
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob_of(&self, k: u32) -> f64 {
        self.support
            .binary_search(&k)
            .map(|i| self.probs[i])
            .unwrap_or(0.0)
    }

    pub fn min_support(&self) -> u32 {
        self.support[0]
    }

    pub fn max_support(&self) -> u32 {
        *self.support.last().unwrap()
    }

    pub fn mean(&self) -> f64 {
        self.support
            .iter()
            .zip(&self.probs)
            .map(|(&k, &p)| k as f64 * p)
            .sum()
    }

    /// E[D(D−1)].
    pub fn second_factorial_moment(&self) -> f64 {
        self.support
            .iter()
            .zip(&self.probs)
            .map(|(&k, &p)| k as f64 * (k as f64 - 1.0) * p)
            .sum()
    }

    /// Is this a point mass?
    pub fn is_deterministic(&self) -> bool {
        self.support.len() == 1
    }

    /// Inverse-CDF draw.
    pub fn sample(&self, rng: &mut impl rand::Rng) -> u32 {
        let u: f64 = rng.random();
        let mut acc = 0.0;
        for (&k, &p) in self.support.iter().zip(&self.probs) {
            acc += p;
            if u < acc {
                return k;
            }
        }
        *self.support.last().unwrap()
    }
}

/// Volume growth rate `θ = log E[D_g − 1]` of the associated tree.
///
/// Errors with `NonExpanding` when `E[D_g − 1] ≤ 1`.
pub fn volume_growth_rate(general: &DegreeLaw) -> Result<f64, RandomGraphError> {
    let mean_offspring = general.mean() - 1.0;
    if mean_offspring <= 1.0 {
        return Err(RandomGraphError::NonExpanding(mean_offspring));
    }
    Ok(mean_offspring.ln())
}

/// Size-biased law `P(D_⋆ = k) = k P(D = k) / E[D]`.
pub fn size_biased_law(law: &DegreeLaw) -> DegreeLaw {
    let mean = law.mean();
    let probs = law
        .support
        .iter()
        .zip(&law.probs)
        .map(|(&k, &p)| k as f64 * p / mean)
        .collect();
    DegreeLaw {
        support: law.support.clone(),
        probs,
    }
}

/// `ν = E[D(D−1)] / E[D]`, the mean forward degree; `θ = log ν` for the
/// configuration model.
pub fn nu(law: &DegreeLaw) -> f64 {
    law.second_factorial_moment() / law.mean()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn law_validation() {
        assert!(DegreeLaw::new(&[(3, 0.5), (4, 0.5)]).is_ok());
        assert!(DegreeLaw::new(&[(3, 0.5), (3, 0.5)]).is_err());
        assert!(DegreeLaw::new(&[(3, 0.6), (4, 0.5)]).is_err());
        assert!(DegreeLaw::new(&[(0, 1.0)]).is_err());
    }

    #[test]
    fn growth_rate_values() {
        let d3 = DegreeLaw::delta(3);
        assert!((volume_growth_rate(&d3).unwrap() - 2f64.ln()).abs() < 1e-15);
        let u34 = DegreeLaw::uniform(&[3, 4]).unwrap();
        assert!((volume_growth_rate(&u34).unwrap() - 2.5f64.ln()).abs() < 1e-15);
        assert!(matches!(
            volume_growth_rate(&DegreeLaw::delta(2)),
            Err(RandomGraphError::NonExpanding(_))
        ));
    }

    #[test]
    fn size_bias_examples() {
        let d3 = DegreeLaw::delta(3);
        assert_eq!(size_biased_law(&d3), d3);

        let u34 = DegreeLaw::uniform(&[3, 4]).unwrap();
        let sb = size_biased_law(&u34);
        assert!((sb.prob_of(3) - 3.0 / 7.0).abs() < 1e-15);
        assert!((sb.prob_of(4) - 4.0 / 7.0).abs() < 1e-15);

        let law = DegreeLaw::new(&[(1, 0.5), (3, 0.5)]).unwrap();
        let sb = size_biased_law(&law);
        assert!((sb.prob_of(1) - 0.25).abs() < 1e-15);
        assert!((sb.prob_of(3) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn size_bias_properties() {
        let law = DegreeLaw::new(&[(2, 0.3), (3, 0.45), (7, 0.25)]).unwrap();
        let sb = size_biased_law(&law);
        let total: f64 = sb.probs().iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
        // mean of D_⋆ equals E[D²]/E[D]
        let m2: f64 = law
            .support()
            .iter()
            .zip(law.probs())
            .map(|(&k, &p)| (k * k) as f64 * p)
            .sum();
        assert!((sb.mean() - m2 / law.mean()).abs() < 1e-12);
    }

    #[test]
    fn nu_examples() {
        assert!((nu(&DegreeLaw::delta(3)) - 2.0).abs() < 1e-15);
        assert!((nu(&DegreeLaw::delta(4)) - 3.0).abs() < 1e-15);
        let u34 = DegreeLaw::uniform(&[3, 4]).unwrap();
        assert!((nu(&u34) - 18.0 / 7.0).abs() < 1e-14);
    }
}
