//! Anderson Hamiltonian `H = Δ_G + q` on a sub-domain with zero Dirichlet
//! boundary conditions, principal eigenpairs, and exact small-domain
//! spectral solutions of the heat equation.
//!
//! In the basis of the domain Λ the matrix has diagonal `q(x) − deg_G(x)`
//! and off-diagonal `+1` between neighbors inside Λ. The degree is always
//! the degree in the full graph: neighbors outside Λ contribute to the
//! diagonal but carry no coupling (functions vanish there).

mod eigen;

pub use eigen::{principal_eigenpair, principal_eigenpair_warm, Eigenpair};

use crate::graph::{GraphError, RootedGraph, VertexId};
use nalgebra::{DMatrix, SymmetricEigen};
use thiserror::Error;

/// Largest domain solved by dense eigendecomposition; larger domains go
/// through the iterative path (and `spectral_solution` refuses them).
pub const DENSE_LIMIT: usize = 512;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("empty domain")]
    EmptyDomain,
    #[error("domain of size {0} exceeds the dense limit {1}")]
    DomainTooLarge(usize, usize),
    #[error("eigensolver did not converge: residual {residual:.3e} after {iterations} iterations")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Sparse symmetric Hamiltonian on a domain, in CSR-like form.
#[derive(Debug, Clone)]
pub struct Hamiltonian {
    /// Domain vertices, sorted by vertex id.
    domain: Vec<VertexId>,
    /// Potential on the domain, parallel to `domain`.
    q: Vec<f64>,
    /// Full-graph degree per domain vertex.
    deg: Vec<u32>,
    /// Diagonal `q(x) − deg_G(x)`.
    diag: Vec<f64>,
    /// CSR offsets/columns of the off-diagonal +1 entries (local indices).
    row_offsets: Vec<usize>,
    cols: Vec<u32>,
    /// Declared degree bound of the parent graph.
    d_max: u32,
}

impl Hamiltonian {
    pub fn dim(&self) -> usize {
        self.domain.len()
    }

    pub fn domain(&self) -> &[VertexId] {
        &self.domain
    }

    pub fn q(&self) -> &[f64] {
        &self.q
    }

    pub fn d_max(&self) -> u32 {
        self.d_max
    }

    pub fn max_q(&self) -> f64 {
        self.q.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Local index of a vertex in the domain basis.
    pub fn local_index(&self, v: VertexId) -> Option<usize> {
        self.domain.binary_search(&v).ok()
    }

    /// `y = H x` in the domain basis.
    pub fn apply(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.dim());
        debug_assert_eq!(y.len(), self.dim());
        for i in 0..self.dim() {
            let mut acc = self.diag[i] * x[i];
            for &j in &self.cols[self.row_offsets[i]..self.row_offsets[i + 1]] {
                acc += x[j as usize];
            }
            y[i] = acc;
        }
    }

    /// Rayleigh quotient `<Hx, x> / <x, x>`.
    pub fn rayleigh(&self, x: &[f64]) -> f64 {
        let mut hx = vec![0.0; self.dim()];
        self.apply(x, &mut hx);
        let num: f64 = hx.iter().zip(x).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        num / den
    }

    /// Dense symmetric copy of the matrix (small domains only).
    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.diag[i];
            for &j in &self.cols[self.row_offsets[i]..self.row_offsets[i + 1]] {
                m[(i, j as usize)] = 1.0;
            }
        }
        m
    }

    /// Restriction to a sub-domain Γ ⊆ Λ (same q, same full-graph degrees).
    pub fn restrict(&self, gamma: &[VertexId]) -> Result<Hamiltonian, SpectralError> {
        if gamma.is_empty() {
            return Err(SpectralError::EmptyDomain);
        }
        let mut gamma = gamma.to_vec();
        gamma.sort_unstable();
        gamma.dedup();
        let locals: Vec<usize> = gamma
            .iter()
            .map(|&v| {
                self.local_index(v)
                    .ok_or(GraphError::InvalidVertex(v, self.dim()))
            })
            .collect::<Result<_, _>>()?;
        let mut new_local = vec![u32::MAX; self.dim()];
        for (new_i, &old_i) in locals.iter().enumerate() {
            new_local[old_i] = new_i as u32;
        }
        let mut row_offsets = vec![0usize];
        let mut cols = Vec::new();
        for &old_i in &locals {
            for &j in &self.cols[self.row_offsets[old_i]..self.row_offsets[old_i + 1]] {
                if new_local[j as usize] != u32::MAX {
                    cols.push(new_local[j as usize]);
                }
            }
            row_offsets.push(cols.len());
        }
        Ok(Hamiltonian {
            domain: gamma,
            q: locals.iter().map(|&i| self.q[i]).collect(),
            deg: locals.iter().map(|&i| self.deg[i]).collect(),
            diag: locals.iter().map(|&i| self.diag[i]).collect(),
            row_offsets,
            cols,
            d_max: self.d_max,
        })
    }

    /// Connected components of the domain in the coupling graph, each sorted,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.dim();
        let mut comp = vec![u32::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != u32::MAX {
                continue;
            }
            let id = out.len() as u32;
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(start);
            while let Some(i) = queue.pop_front() {
                for &j in &self.cols[self.row_offsets[i]..self.row_offsets[i + 1]] {
                    if comp[j as usize] == u32::MAX {
                        comp[j as usize] = id;
                        members.push(j as usize);
                        queue.push_back(j as usize);
                    }
                }
            }
            members.sort_unstable();
            out.push(members.into_iter().map(|i| self.domain[i]).collect());
        }
        out
    }
}

/// Assembles `Δ_G + q` on the domain with Dirichlet conditions outside.
///
/// `q` is evaluated on domain vertices only.
pub fn assemble(
    g: &RootedGraph,
    domain: &[VertexId],
    q: impl Fn(VertexId) -> f64,
) -> Result<Hamiltonian, SpectralError> {
    if domain.is_empty() {
        return Err(SpectralError::EmptyDomain);
    }
    let mut domain = domain.to_vec();
    domain.sort_unstable();
    domain.dedup();
    for &v in &domain {
        if !g.contains(v) {
            return Err(GraphError::InvalidVertex(v, g.n_vertices()).into());
        }
    }
    let mut local = vec![u32::MAX; g.n_vertices()];
    for (i, &v) in domain.iter().enumerate() {
        local[v.index()] = i as u32;
    }
    let mut qv = Vec::with_capacity(domain.len());
    let mut deg = Vec::with_capacity(domain.len());
    let mut diag = Vec::with_capacity(domain.len());
    let mut row_offsets = vec![0usize];
    let mut cols = Vec::new();
    for &v in &domain {
        let qx = q(v);
        let d = g.degree(v);
        qv.push(qx);
        deg.push(d);
        diag.push(qx - d as f64);
        for &w in g.neighbors(v) {
            if local[w.index()] != u32::MAX {
                cols.push(local[w.index()]);
            }
        }
        row_offsets.push(cols.len());
    }
    Ok(Hamiltonian {
        domain,
        q: qv,
        deg,
        diag,
        row_offsets,
        cols,
        d_max: g.d_max(),
    })
}

/// Full spectrum of a small domain: `(eigenvalues descending, eigenvectors
/// as columns)`.
pub fn full_spectrum(h: &Hamiltonian) -> Result<(Vec<f64>, DMatrix<f64>), SpectralError> {
    if h.dim() > DENSE_LIMIT {
        return Err(SpectralError::DomainTooLarge(h.dim(), DENSE_LIMIT));
    }
    let eig = SymmetricEigen::new(h.to_dense());
    let mut order: Vec<usize> = (0..h.dim()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::zeros(h.dim(), h.dim());
    for (new_col, &old_col) in order.iter().enumerate() {
        vectors.set_column(new_col, &eig.eigenvectors.column(old_col));
    }
    Ok((values, vectors))
}

/// Report of the eigenvalue sandwich
/// `max_Γ q − d_max ≤ λ_Γ ≤ λ_Λ ≤ max_Λ q` for `Γ ⊆ Λ`.
#[derive(Debug, Clone)]
pub struct SandwichReport {
    pub lower: f64,
    pub lambda_gamma: f64,
    pub lambda_lambda: f64,
    pub upper: f64,
    pub holds: bool,
}

/// Evaluates the three sandwich inequalities with tolerance `1e−9`.
pub fn eigenvalue_sandwich_check(
    h: &Hamiltonian,
    gamma: &[VertexId],
) -> Result<SandwichReport, SpectralError> {
    const TOL: f64 = 1e-9;
    let h_gamma = h.restrict(gamma)?;
    let lambda_gamma = principal_eigenpair(&h_gamma, 1e-10)?.lambda;
    let lambda_lambda = principal_eigenpair(h, 1e-10)?.lambda;
    let lower = h_gamma.max_q() - h.d_max() as f64;
    let upper = h.max_q();
    let holds = lower <= lambda_gamma + TOL
        && lambda_gamma <= lambda_lambda + TOL
        && lambda_lambda <= upper + TOL;
    Ok(SandwichReport {
        lower,
        lambda_gamma,
        lambda_lambda,
        upper,
        holds,
    })
}

/// Exact solution of `∂_t u = H u`, `u(·,0) = δ_y`, by full
/// eigendecomposition: `u(x,t) = Σ_k e^{t λ_k} φ_k(y) φ_k(x)`.
///
/// Returns the solution in the domain basis. Only for domains within
/// [`DENSE_LIMIT`].
pub fn spectral_solution(
    h: &Hamiltonian,
    y: VertexId,
    t: f64,
) -> Result<Vec<f64>, SpectralError> {
    assert!(t >= 0.0, "spectral_solution needs t >= 0");
    let iy = h
        .local_index(y)
        .ok_or(GraphError::InvalidVertex(y, h.dim()))?;
    let (values, vectors) = full_spectrum(h)?;
    let n = h.dim();
    let mut u = vec![0.0; n];
    for k in 0..n {
        let w = (t * values[k]).exp() * vectors[(iy, k)];
        for x in 0..n {
            u[x] += w * vectors[(x, k)];
        }
    }
    Ok(u)
}
