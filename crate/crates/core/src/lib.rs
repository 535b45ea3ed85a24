//! Numerical laboratory for the parabolic Anderson model (PAM)
//! `∂_t u = Δ_G u + ξ u` on bounded-degree trees and sparse random graphs.
//!
//! The crate is organised around the objects the model is built from:
//!
//! * [`graph`] — finite rooted graphs, balls, deterministic tree families,
//!   glueing constructions and rooted-ball isomorphism.
//! * [`random_graphs`] — seeded samplers for bounded-degree Galton-Watson
//!   trees and the configuration model, with the derived constants
//!   (volume growth rate, size-biased law, ν, Φ_n) and the
//!   tree/graph coupling check.
//! * [`potential`] — double-exponential potential fields, the `a_L` scale,
//!   high-exceedance sets, islands and path peak statistics.
//! * [`spectral`] — Anderson Hamiltonians `Δ_G + q` with Dirichlet boundary,
//!   principal eigenpairs and small-domain spectral solutions.
//! * [`solver`] — total mass `U(t)` by deterministic Krylov propagation and
//!   by Feynman-Kac Monte Carlo, exact path evaluation, excursion
//!   decompositions and the associated inequality checks.
//! * [`variational`] — the characteristic constant `χ_G(ρ)` (primal and dual
//!   forms), boundary-conditioned variants, ball sequences for infinite
//!   trees, and the glueing calculus.
//! * [`experiments`] — config-driven, fully seeded experiment pipelines with
//!   CSV/JSON reports (Lyapunov comparisons, χ catalogs, island statistics,
//!   coupling frequencies, lower-bound certificates).
//!
//! Everything that consumes randomness takes an explicit 64-bit seed and is
//! reproducible bit-for-bit; see [`rng`] for the stream-splitting scheme.

pub mod experiments;
pub mod graph;
pub mod potential;
pub mod random_graphs;
pub mod rng;
pub mod solver;
pub mod spectral;
pub mod variational;
