//! Dense matrices: a real symmetric matrix for the eigensolver and an exact
//! integer matrix for walk counting.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Real symmetric matrix in full row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
    entry_min: f64,
    entry_max: f64,
}

impl DenseSymmetricMatrix {
    /// Builds from rows, rejecting asymmetric or non-finite input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::Ragged);
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if !x.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                if j > i && x != rows[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self::from_entries(order, rows.concat()))
    }

    fn from_entries(order: usize, entries: Vec<f64>) -> Self {
        let (entry_min, entry_max) = if entries.is_empty() {
            (0.0, 0.0)
        } else {
            entries
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                    (lo.min(x), hi.max(x))
                })
        };
        DenseSymmetricMatrix {
            order,
            entries,
            entry_min,
            entry_max,
        }
    }

    pub fn zeros(order: usize) -> Self {
        Self::from_entries(order, vec![0.0; order * order])
    }

    /// Pair-multiplicity adjacency: entry (i, j), i ≠ j, counts the edges
    /// containing both i and j.
    pub fn adjacency(h: &Hypergraph) -> Self {
        let n = h.n();
        let mut entries = vec![0.0; n * n];
        for e in h.edges() {
            for &a in e {
                for &b in e {
                    if a != b {
                        entries[a * n + b] += 1.0;
                    }
                }
            }
        }
        Self::from_entries(n, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Smallest entry (including the diagonal).
    pub fn entry_min(&self) -> f64 {
        self.entry_min
    }

    /// Largest entry (including the diagonal).
    pub fn entry_max(&self) -> f64 {
        self.entry_max
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.order.max(1))
            .take(self.order)
            .map(<[f64]>::to_vec)
            .collect()
    }
}

/// Square matrix of `i128` with checked arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<i128>,
}

impl IntMatrix {
    pub fn identity(order: usize) -> Self {
        let mut entries = vec![0; order * order];
        for i in 0..order {
            entries[i * order + i] = 1;
        }
        IntMatrix { order, entries }
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::Ragged);
        }
        Ok(IntMatrix {
            order,
            entries: rows.concat(),
        })
    }

    pub fn adjacency(h: &Hypergraph) -> Self {
        let n = h.n();
        let mut entries = vec![0; n * n];
        for e in h.edges() {
            for &a in e {
                for &b in e {
                    if a != b {
                        entries[a * n + b] += 1;
                    }
                }
            }
        }
        IntMatrix { order: n, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.entries[i * self.order + j]
    }

    pub fn to_dense(&self) -> Result<DenseSymmetricMatrix> {
        let rows: Vec<Vec<f64>> = self
            .entries
            .chunks(self.order.max(1))
            .take(self.order)
            .map(|r| r.iter().map(|&x| x as f64).collect())
            .collect();
        DenseSymmetricMatrix::from_rows(&rows)
    }

    /// Checked product; `None` on overflow.
    pub fn checked_mul(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        let n = self.order;
        let mut entries = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let prod = a.checked_mul(rhs.get(k, j))?;
                    entries[i * n + j] = entries[i * n + j].checked_add(prod)?;
                }
            }
        }
        Some(IntMatrix { order: n, entries })
    }

    /// Row vector times matrix; `None` on overflow.
    pub fn checked_row_mul(&self, row: &[i128]) -> Option<Vec<i128>> {
        let n = self.order;
        let mut out = vec![0i128; n];
        for (k, &a) in row.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                *slot = slot.checked_add(a.checked_mul(self.get(k, j))?)?;
            }
        }
        Some(out)
    }

    pub fn checked_pow(&self, t: usize) -> Result<IntMatrix> {
        let mut acc = IntMatrix::identity(self.order);
        for _ in 0..t {
            acc = acc
                .checked_mul(self)
                .ok_or(Error::WalkOverflow { length: t })?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Option<i128> {
        (0..self.order).try_fold(0i128, |acc, i| acc.checked_add(self.get(i, i)))
    }
}

/// `tr(Mᵗ)` in exact integer arithmetic.
pub fn trace_power(m: &IntMatrix, t: usize) -> Result<i128> {
    m.checked_pow(t)?
        .trace()
        .ok_or(Error::WalkOverflow { length: t })
}
