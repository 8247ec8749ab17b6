//! Spectra of adjacency matrices and the statistics derived from them.

use serde::Serialize;

use crate::eigen::{jacobi, Eigendecomposition};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrix::DenseSymmetricMatrix;

/// Relative factor for sign and equality classification of eigenvalues.
pub const ZERO_TOLERANCE_FACTOR: f64 = 1e-9;

/// Eigenvalues sorted descending, `λ₁ ≥ … ≥ λ_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    zero_tolerance: f64,
    frobenius_norm: f64,
}

impl Spectrum {
    /// Wraps precomputed eigenvalues (sorted here) for a matrix with the given
    /// Frobenius norm.
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, frobenius_norm: f64) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Spectrum {
            eigenvalues,
            zero_tolerance: ZERO_TOLERANCE_FACTOR * frobenius_norm.max(1.0),
            frobenius_norm,
        }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn zero_tolerance(&self) -> f64 {
        self.zero_tolerance
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm
    }

    /// Largest eigenvalue; 0 for the empty spectrum.
    pub fn lambda1(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    /// Sum of the `t` largest eigenvalues.
    pub fn top_sum(&self, t: usize) -> f64 {
        self.eigenvalues.iter().take(t).sum()
    }

    /// `M_t = Σ λ_i^t`.
    pub fn moment(&self, t: u32) -> f64 {
        self.eigenvalues.iter().map(|x| x.powi(t as i32)).sum()
    }

    /// `Σ |λ_i|^t`, the natural scale for comparing `M_t` across routes.
    pub fn abs_moment(&self, t: u32) -> f64 {
        self.eigenvalues.iter().map(|x| x.abs().powi(t as i32)).sum()
    }

    /// Estrada index `Σ e^{λ_i}`.
    ///
    /// Fails instead of returning infinity once the sum leaves the f64 range
    /// (λ₁ above roughly 709.78).
    pub fn estrada(&self) -> Result<f64> {
        let ee: f64 = self.eigenvalues.iter().map(|x| x.exp()).sum();
        if ee.is_finite() {
            Ok(ee)
        } else {
            Err(Error::EstradaOverflow {
                lambda1: self.lambda1(),
            })
        }
    }

    /// Energy `Σ |λ_i|`.
    pub fn energy(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x.abs()).sum()
    }

    /// θ: eigenvalues below `-zero_tolerance`.
    pub fn negative_count(&self) -> usize {
        self.eigenvalues
            .iter()
            .filter(|&&x| x < -self.zero_tolerance)
            .count()
    }

    pub fn positive_count(&self) -> usize {
        self.eigenvalues
            .iter()
            .filter(|&&x| x > self.zero_tolerance)
            .count()
    }

    pub fn zero_count(&self) -> usize {
        self.len() - self.negative_count() - self.positive_count()
    }

    /// Distinct eigenvalues with multiplicities, descending. Consecutive
    /// eigenvalues closer than the zero tolerance share a cluster; the
    /// cluster value is its mean.
    pub fn distinct_eigenvalues(&self) -> Vec<(f64, usize)> {
        let mut clusters: Vec<(f64, usize, f64)> = Vec::new();
        for &x in &self.eigenvalues {
            match clusters.last_mut() {
                Some((sum, count, last)) if *last - x <= self.zero_tolerance => {
                    *sum += x;
                    *count += 1;
                    *last = x;
                }
                _ => clusters.push((x, 1, x)),
            }
        }
        clusters
            .into_iter()
            .map(|(sum, count, _)| (sum / count as f64, count))
            .collect()
    }

    /// Eigenvalues with those inside the zero tolerance snapped to 0.
    pub fn display_values(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .map(|&x| if x.abs() <= self.zero_tolerance { 0.0 } else { x })
            .collect()
    }

    pub fn summary(&self, moment_orders: impl IntoIterator<Item = u32>) -> Result<SpectralSummary> {
        Ok(SpectralSummary {
            lambda1: self.lambda1(),
            estrada: self.estrada()?,
            energy: self.energy(),
            negative_count: self.negative_count(),
            distinct_count: self.distinct_eigenvalues().len(),
            moments: moment_orders
                .into_iter()
                .map(|t| (t, self.moment(t)))
                .collect(),
        })
    }
}

/// Headline spectral statistics of one matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub lambda1: f64,
    pub estrada: f64,
    pub energy: f64,
    pub negative_count: usize,
    pub distinct_count: usize,
    pub moments: Vec<(u32, f64)>,
}

pub fn eigendecompose(m: &DenseSymmetricMatrix) -> Result<Spectrum> {
    let decomposition = jacobi(m)?;
    Ok(Spectrum::from_eigenvalues(
        decomposition.values,
        m.frobenius_norm(),
    ))
}

/// Spectrum together with eigenvectors, for residual checks.
pub fn eigendecompose_full(m: &DenseSymmetricMatrix) -> Result<(Spectrum, Eigendecomposition)> {
    let decomposition = jacobi(m)?;
    let spectrum = Spectrum::from_eigenvalues(decomposition.values.clone(), m.frobenius_norm());
    Ok((spectrum, decomposition))
}

/// Adjacency spectrum of a hypergraph.
pub fn spectrum(h: &Hypergraph) -> Result<Spectrum> {
    eigendecompose(&DenseSymmetricMatrix::adjacency(h))
}

/// Estrada index of a hypergraph.
pub fn estrada_index(h: &Hypergraph) -> Result<f64> {
    spectrum(h)?.estrada()
}
