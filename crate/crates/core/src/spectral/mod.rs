//! Adjacency spectrum of biregular bipartite graphs.
//!
//! The adjacency matrix of a bipartite graph is `[[0, B], [Bᵀ, 0]]` for the
//! `|X|×|Y|` biadjacency matrix `B`, so its eigenvalues are `±σᵢ` for the
//! singular values `σᵢ` of `B`, padded with `|X| + |Y| - 2·min(|X|,|Y|)` zeros.
//! [`Spectrum`] keeps only the `min(|X|,|Y|)` singular values; `λ₁ = σ₁` and
//! `λ₂ = σ₂`.

mod jacobi;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cross_edges, validate_biregular, BipartiteGraph, Part, VertexSet};

pub use jacobi::{jacobi_eigen, SymmetricEigen, MAX_SWEEPS};

/// Relative off-diagonal tolerance for the Jacobi solve.
pub const JACOBI_TOL: f64 = 1e-12;

/// Slack allowed when testing the mixing inequality in floating point.
pub const MIXING_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub a: usize,
    pub b: usize,
    /// Singular values of the biadjacency matrix, nonincreasing.
    pub sigma: Vec<f64>,
    pub lambda1: f64,
    pub lambda2: f64,
    /// `√(ab) − λ₂`.
    pub gap: f64,
    pub tol: f64,
}

impl Spectrum {
    /// Full adjacency spectrum in nonincreasing order, zeros included.
    pub fn adjacency_eigenvalues(&self, n: usize) -> Vec<f64> {
        let zeros = n - 2 * self.sigma.len();
        let mut out: Vec<f64> = self.sigma.clone();
        out.extend(std::iter::repeat_n(0.0, zeros));
        out.extend(self.sigma.iter().rev().map(|s| -s));
        out
    }
}

/// Singular values of the biadjacency matrix, nonincreasing.
///
/// Diagonalizes the smaller Gram matrix (`BBᵀ` or `BᵀB`) with Jacobi and reads
/// each singular value off as `‖Bᵀv‖` (or `‖Bv‖`) for the unit eigenvector `v`.
/// This equals the square root of the Rayleigh quotient but stays accurate for
/// singular values near zero, where taking the square root of a tiny computed
/// eigenvalue would amplify rounding noise.
pub fn biadjacency_singular_values(g: &BipartiteGraph) -> Result<Vec<f64>> {
    let x_side = g.x_count() <= g.y_count();
    let (rows, cols, part) = if x_side {
        (g.x_count(), g.y_count(), Part::X)
    } else {
        (g.y_count(), g.x_count(), Part::Y)
    };
    let vertex = |i: usize| match part {
        Part::X => crate::Vertex::x(i),
        Part::Y => crate::Vertex::y(i),
    };
    // Gram entry (i, j) = number of common neighbours.
    let mut mark = vec![usize::MAX; cols];
    let mut gram = vec![vec![0.0; rows]; rows];
    for i in 0..rows {
        for &w in g.neighbors(vertex(i)) {
            mark[w] = i;
        }
        for (j, entry) in gram[i].iter_mut().enumerate() {
            *entry = g
                .neighbors(vertex(j))
                .iter()
                .filter(|&&w| mark[w] == i)
                .count() as f64;
        }
    }

    let eigen = jacobi_eigen(gram, JACOBI_TOL)?;
    let mut sigma: Vec<f64> = eigen
        .vectors
        .iter()
        .map(|v| {
            let mut image = vec![0.0; cols];
            for (i, &vi) in v.iter().enumerate() {
                for &w in g.neighbors(vertex(i)) {
                    image[w] += vi;
                }
            }
            image.iter().map(|t| t * t).sum::<f64>().sqrt()
        })
        .collect();
    sigma.sort_by(|p, q| q.total_cmp(p));
    Ok(sigma)
}

pub fn singular_values(g: &BipartiteGraph) -> Result<Spectrum> {
    let profile = validate_biregular(g)?;
    let sigma = biadjacency_singular_values(g)?;
    let lambda1 = sigma[0];
    let lambda2 = sigma.get(1).copied().unwrap_or(0.0);
    let root_ab = ((profile.a * profile.b) as f64).sqrt();
    Ok(Spectrum {
        a: profile.a,
        b: profile.b,
        sigma,
        lambda1,
        lambda2,
        gap: root_ab - lambda2,
        tol: JACOBI_TOL,
    })
}

pub fn lambda2(g: &BipartiteGraph) -> Result<f64> {
    Ok(singular_values(g)?.lambda2)
}

pub fn spectral_gap(g: &BipartiteGraph) -> Result<f64> {
    Ok(singular_values(g)?.gap)
}

/// Both sides of the bipartite expander mixing inequality for one subset pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixingReport {
    /// `|e(A,B) − (√(ab)/√(|X||Y|))·|A|·|B||`
    pub lhs: f64,
    /// `λ₂·√(|A||B|(1−|A|/|X|)(1−|B|/|Y|))`
    pub rhs: f64,
    pub holds: bool,
}

impl MixingReport {
    pub fn slack(&self) -> f64 {
        self.rhs - self.lhs
    }
}

/// Evaluates the bipartite mixing inequality for `A ⊆ X`, `B ⊆ Y` using the
/// precomputed spectrum of `g`.
pub fn mixing_check(
    g: &BipartiteGraph,
    spectrum: &Spectrum,
    a_set: &VertexSet,
    b_set: &VertexSet,
) -> Result<MixingReport> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    let e_ab = cross_edges(g, a_set, b_set)? as f64;
    let (xs, ys) = (g.x_count() as f64, g.y_count() as f64);
    let (na, nb) = (a_set.len() as f64, b_set.len() as f64);
    // √(ab)/√(|X||Y|) = b/|X| because a|X| = b|Y|.
    let density = spectrum.b as f64 / xs;
    let lhs = (e_ab - density * na * nb).abs();
    let rhs = spectrum.lambda2 * (na * nb * (1.0 - na / xs) * (1.0 - nb / ys)).max(0.0).sqrt();
    Ok(MixingReport {
        lhs,
        rhs,
        holds: lhs <= rhs + MIXING_TOL,
    })
}
