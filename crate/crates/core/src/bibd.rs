//! Balanced incomplete block design validation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Uniformity};
use crate::matrix::IntMatrix;

/// Parameters of an `(n, k, β)`-BIBD read off a hypergraph whose vertices are
/// points and whose edges are blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BibdCertificate {
    pub n: usize,
    /// Block count.
    pub b: usize,
    pub k: usize,
    /// Number of blocks through every pair of distinct points.
    pub beta: usize,
    /// Replication number `β(n-1)/(k-1)`.
    pub r: usize,
}

/// Returns the design parameters when every pair of distinct vertices lies
/// in the same number `β ≥ 1` of edges, and `None` otherwise.
///
/// Requires a k-uniform hypergraph with `n > k ≥ 2`; an edgeless hypergraph
/// is never a design.
pub fn bibd_validate(h: &Hypergraph) -> Result<Option<BibdCertificate>> {
    let k = match h.uniformity() {
        Uniformity::Uniform(k) => k,
        Uniformity::Vacuous => return Ok(None),
        Uniformity::Mixed => return Err(Error::NonUniform),
    };
    let n = h.n();
    if n <= k {
        return Err(Error::UniformityOutOfRange { k, n });
    }
    let a = IntMatrix::adjacency(h);
    let beta = a.get(0, 1);
    if beta < 1 {
        return Ok(None);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && a.get(i, j) != beta {
                return Ok(None);
            }
        }
    }
    let beta = beta as usize;
    let numerator = beta * (n - 1);
    if !numerator.is_multiple_of(k - 1) {
        return Err(Error::Inconsistent(format!(
            "β(n-1) = {numerator} is not divisible by k-1 = {}",
            k - 1
        )));
    }
    let r = numerator / (k - 1);
    if !h.is_regular(r) || h.m() * k != n * r {
        return Err(Error::Inconsistent(format!(
            "pair-balanced design with β = {beta} is not {r}-regular"
        )));
    }
    Ok(Some(BibdCertificate {
        n,
        b: h.m(),
        k,
        beta,
        r,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_uniform, cycle, fano};

    #[test]
    fn fano_plane() {
        assert_eq!(
            bibd_validate(&fano()).unwrap(),
            Some(BibdCertificate {
                n: 7,
                b: 7,
                k: 3,
                beta: 1,
                r: 3
            })
        );
    }

    #[test]
    fn complete_is_a_design() {
        let c = bibd_validate(&complete_uniform(5, 3).unwrap()).unwrap().unwrap();
        assert_eq!((c.beta, c.r, c.b), (3, 6, 10));
    }

    #[test]
    fn non_designs() {
        assert_eq!(bibd_validate(&cycle(2, 3).unwrap().0), Ok(None));
        assert_eq!(bibd_validate(&Hypergraph::edgeless(5)), Ok(None));
        let mixed = Hypergraph::new(4, [vec![0, 1, 2], vec![0, 3]]).unwrap();
        assert_eq!(bibd_validate(&mixed), Err(Error::NonUniform));
        let single = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        assert!(matches!(
            bibd_validate(&single),
            Err(Error::UniformityOutOfRange { k: 3, n: 3 })
        ));
    }
}
