//! Cyclic Jacobi eigensolver for dense real symmetric matrices.
//!
//! Each sweep visits every off-diagonal pair (p, q) in row order and applies
//! the plane rotation that annihilates `a_pq`. Iteration stops once the
//! Frobenius norm of the off-diagonal part drops below
//! `1e-14 * max(1, ‖M‖_F)`, or fails after [`MAX_SWEEPS`] sweeps.

use crate::error::{Error, Result};
use crate::matrix::DenseSymmetricMatrix;

pub const MAX_SWEEPS: usize = 100;
pub const CONVERGENCE_FACTOR: f64 = 1e-14;

/// Eigenvalues in descending order with matching eigenvectors.
#[derive(Debug, Clone)]
pub struct Eigendecomposition {
    pub values: Vec<f64>,
    /// Row-major `n × n`; column `j` is the eigenvector of `values[j]`.
    pub vectors: Vec<f64>,
    pub sweeps: usize,
}

impl Eigendecomposition {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// `‖M − QΛQᵀ‖_F`.
    pub fn residual(&self, m: &DenseSymmetricMatrix) -> f64 {
        let n = self.order();
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                let rebuilt: f64 = (0..n)
                    .map(|l| self.vectors[i * n + l] * self.values[l] * self.vectors[j * n + l])
                    .sum();
                let d = m.get(i, j) - rebuilt;
                sum += d * d;
            }
        }
        sum.sqrt()
    }
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

pub fn jacobi(m: &DenseSymmetricMatrix) -> Result<Eigendecomposition> {
    let n = m.order();
    let mut a = m.entries().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = CONVERGENCE_FACTOR * m.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            vectors[r * n + dst] = v[r * n + src];
        }
    }
    Ok(Eigendecomposition {
        values,
        vectors,
        sweeps,
    })
}
