//! Exact walk counts.
//!
//! A walk of length s is a sequence `v₀ e₁ v₁ … e_s v_s` with
//! `v_{i-1}, v_i ∈ e_i`. Consecutive vertices are taken distinct, so the
//! number of (u, v)-walks of length s is `(Aˢ)_{uv}` for the pair-multiplicity
//! adjacency `A`, and closed-walk totals are `tr(Aˢ)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrix::IntMatrix;

fn check(h: &Hypergraph, v: usize) -> Result<()> {
    if v < h.n() {
        Ok(())
    } else {
        Err(Error::InvalidVertex { vertex: v, n: h.n() })
    }
}

/// `(Aˢ)_{uv}` for every `s` in `0..=s_max`.
pub fn walk_counts(h: &Hypergraph, u: usize, v: usize, s_max: usize) -> Result<Vec<i128>> {
    check(h, u)?;
    check(h, v)?;
    let a = IntMatrix::adjacency(h);
    let mut row = vec![0i128; h.n()];
    row[u] = 1;
    let mut out = Vec::with_capacity(s_max + 1);
    out.push(row[v]);
    for s in 1..=s_max {
        row = a
            .checked_row_mul(&row)
            .ok_or(Error::WalkOverflow { length: s })?;
        out.push(row[v]);
    }
    Ok(out)
}

/// Number of (u, v)-walks of length `s`.
pub fn walk_count(h: &Hypergraph, u: usize, v: usize, s: usize) -> Result<i128> {
    Ok(walk_counts(h, u, v, s)?[s])
}

/// Outcome of comparing two walk-count sequences over `1..=s_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dominance {
    /// Left ≤ right everywhere, strictly somewhere.
    Strict,
    /// Left ≥ right everywhere, strictly somewhere: only the reverse
    /// relation holds.
    Weak,
    /// Each side exceeds the other somewhere.
    Incomparable,
    /// Identical counts.
    Equal,
}

impl Dominance {
    /// Whether left ⪯ right holds on the checked range.
    pub fn is_dominated(self) -> bool {
        matches!(self, Dominance::Strict | Dominance::Equal)
    }

    fn compare(left: &[i128], right: &[i128]) -> Self {
        let less = left.iter().zip(right).any(|(a, b)| a < b);
        let greater = left.iter().zip(right).any(|(a, b)| a > b);
        match (less, greater) {
            (false, false) => Dominance::Equal,
            (true, false) => Dominance::Strict,
            (false, true) => Dominance::Weak,
            (true, true) => Dominance::Incomparable,
        }
    }
}

/// Compares closed-walk counts `M_s(h; u)` against `M_s(h; v)` for
/// `1 ≤ s ≤ s_max`. A finite certificate only: agreement up to `s_max` is a
/// necessary condition for the all-lengths relation.
pub fn walk_dominance(h: &Hypergraph, u: usize, v: usize, s_max: usize) -> Result<Dominance> {
    let left = walk_counts(h, u, u, s_max)?;
    let right = walk_counts(h, v, v, s_max)?;
    Ok(Dominance::compare(&left[1..], &right[1..]))
}

/// Compares `M_s(h; w, u)` against `M_s(h; w, v)` for `1 ≤ s ≤ s_max`.
pub fn pair_walk_dominance(
    h: &Hypergraph,
    w: usize,
    u: usize,
    v: usize,
    s_max: usize,
) -> Result<Dominance> {
    let left = walk_counts(h, w, u, s_max)?;
    let right = walk_counts(h, w, v, s_max)?;
    Ok(Dominance::compare(&left[1..], &right[1..]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c23() -> Hypergraph {
        Hypergraph::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap()
    }

    #[test]
    fn examples() {
        let e = Hypergraph::edgeless(3);
        assert_eq!(walk_count(&e, 0, 1, 3), Ok(0));
        assert_eq!(walk_count(&e, 1, 1, 2), Ok(0));
        assert_eq!(walk_count(&e, 1, 1, 0), Ok(1));
        let single = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(walk_count(&single, 0, 0, 2), Ok(2));
        assert_eq!(walk_count(&c23(), 0, 1, 1), Ok(2));
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(walk_dominance(&c23(), 2, 2, 6), Ok(Dominance::Equal));
        assert_eq!(walk_dominance(&c23(), 2, 3, 6), Ok(Dominance::Equal));
        // X6 = C2(1,0): pendant vertex 4 against its cycle neighbour 0
        let x6 = Hypergraph::new(6, [[0, 1, 2], [0, 1, 3], [0, 4, 5]]).unwrap();
        assert_eq!(walk_dominance(&x6, 4, 0, 8), Ok(Dominance::Strict));
        assert_eq!(walk_dominance(&x6, 0, 4, 8), Ok(Dominance::Weak));
    }

    #[test]
    fn invalid_vertex() {
        assert!(matches!(
            walk_count(&c23(), 0, 9, 1),
            Err(Error::InvalidVertex { vertex: 9, .. })
        ));
    }

    #[test]
    fn overflow_is_reported_not_wrapped() {
        let k = Hypergraph::new(40, crate::hypergraph::KSubsets::new(40, 20).take(2000)).unwrap();
        assert!(matches!(
            walk_count(&k, 0, 0, 40),
            Err(Error::WalkOverflow { .. })
        ));
    }
}
