//! Catalogs of k-uniform unicyclic hypergraphs with `n_over · (k-1)`
//! vertices and `n_over` edges.
//!
//! [`unicyclic_catalog`] emits the structured shapes: every `C_m(n_1..n_m)`,
//! pendant edges placed on auxiliary cycle vertices, and depth-two pendant
//! trees. [`unicyclic_exhaustive`] grows every cycle `C_{m,k}` by attaching
//! pendant edges at arbitrary vertices in every possible order, which reaches
//! every unicyclic k-uniform hypergraph of that order (with repeats).

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{attach_pendant, cycle, unicyclic_cm};
use crate::hypergraph::Hypergraph;

/// Upper limit on the number of hypergraphs [`unicyclic_exhaustive`] builds.
pub const EXHAUSTIVE_LIMIT: u128 = 250_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    /// `C_m(n_1, …, n_m)`.
    Composition,
    /// Pendant edges on cycle vertices, at least one on an auxiliary vertex.
    AuxiliaryAttachment,
    /// A pendant edge hanging from a pendant vertex of another pendant edge.
    DepthTwo,
    /// Output of the exhaustive growth process.
    Grown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: String,
    pub shape: Shape,
    pub hypergraph: Hypergraph,
}

/// All weak compositions of `total` into `parts` parts, lexicographically
/// descending (so `(total, 0, …, 0)` comes first).
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

pub fn cm_label(pendants: &[usize]) -> String {
    let p: Vec<String> = pendants.iter().map(usize::to_string).collect();
    format!("C{}({})", pendants.len(), p.join(","))
}

fn check_params(n_over: usize, k: usize) -> Result<()> {
    if n_over < 2 || k < 2 {
        return Err(Error::FamilyParameters(format!(
            "unicyclic catalog needs n/(k-1) >= 2 and k >= 2, got {n_over}, k={k}"
        )));
    }
    Ok(())
}

fn cycle_lengths(n_over: usize, k: usize) -> impl Iterator<Item = usize> {
    // C_{2,2} would repeat an edge
    let first = if k < 3 { 3 } else { 2 };
    first..=n_over
}

/// Structured sub-catalog of unicyclic hypergraphs with `n_over` edges.
pub fn unicyclic_catalog(n_over: usize, k: usize) -> Result<Vec<CatalogEntry>> {
    check_params(n_over, k)?;
    let mut out = Vec::new();

    for m in cycle_lengths(n_over, k) {
        for pendants in weak_compositions(n_over - m, m) {
            out.push(CatalogEntry {
                label: cm_label(&pendants),
                shape: Shape::Composition,
                hypergraph: unicyclic_cm(k, &pendants)?.0,
            });
        }
    }

    if k >= 3 {
        for m in cycle_lengths(n_over, k) {
            let (base, labeling) = cycle(m, k)?;
            let slots: Vec<(usize, String)> = labeling
                .cycle_vertices
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, format!("v{}", i + 1)))
                .chain(
                    labeling
                        .auxiliary_vertices
                        .iter()
                        .map(|(&(i, j), &u)| (u, format!("u{i}_{j}"))),
                )
                .collect();
            for counts in weak_compositions(n_over - m, slots.len()) {
                if counts[..m].iter().sum::<usize>() == n_over - m {
                    continue;
                }
                let mut h = base.clone();
                let mut parts = Vec::new();
                for ((vertex, name), &c) in slots.iter().zip(&counts) {
                    for _ in 0..c {
                        h = attach_pendant(&h, *vertex, k)?.0;
                    }
                    if c > 0 {
                        parts.push(format!("{name}:{c}"));
                    }
                }
                out.push(CatalogEntry {
                    label: format!("C{m}+{{{}}}", parts.join(",")),
                    shape: Shape::AuxiliaryAttachment,
                    hypergraph: h,
                });
            }
        }
    }

    for m in cycle_lengths(n_over, k) {
        if n_over < m + 2 {
            continue;
        }
        for pendants in weak_compositions(n_over - m - 1, m) {
            let (base, labeling) = unicyclic_cm(k, &pendants)?;
            for (i, edges) in &labeling.pendant_map {
                let at = edges[0][1];
                out.push(CatalogEntry {
                    label: format!("{}+depth2@v{}", cm_label(&pendants), i + 1),
                    shape: Shape::DepthTwo,
                    hypergraph: attach_pendant(&base, at, k)?.0,
                });
            }
        }
    }
    Ok(out)
}

/// Same as [`unicyclic_catalog`], addressed by order `n`; rejects orders not
/// divisible by `k - 1`.
pub fn unicyclic_catalog_for_order(n: usize, k: usize) -> Result<Vec<CatalogEntry>> {
    unicyclic_catalog(crate::families::order_blocks(n, k)?, k)
}

/// Number of growth sequences [`unicyclic_exhaustive`] walks through.
pub fn exhaustive_size(n_over: usize, k: usize) -> u128 {
    cycle_lengths(n_over, k)
        .map(|m| {
            (0..n_over - m)
                .map(|j| ((m + j) * (k - 1)) as u128)
                .product::<u128>()
        })
        .sum()
}

/// Every unicyclic k-uniform hypergraph with `n_over` edges, up to repeats
/// of isomorphic copies; identical labelings are emitted once.
pub fn unicyclic_exhaustive(n_over: usize, k: usize) -> Result<Vec<CatalogEntry>> {
    check_params(n_over, k)?;
    let size = exhaustive_size(n_over, k);
    if size > EXHAUSTIVE_LIMIT {
        return Err(Error::FamilyParameters(format!(
            "exhaustive enumeration would build {size} hypergraphs (limit {EXHAUSTIVE_LIMIT})"
        )));
    }
    fn grow(
        h: Hypergraph,
        remaining: usize,
        k: usize,
        seen: &mut HashSet<Hypergraph>,
        out: &mut Vec<Hypergraph>,
    ) -> Result<()> {
        if remaining == 0 {
            if seen.insert(h.clone()) {
                out.push(h);
            }
            return Ok(());
        }
        for v in 0..h.n() {
            grow(attach_pendant(&h, v, k)?.0, remaining - 1, k, seen, out)?;
        }
        Ok(())
    }
    let mut seen = HashSet::new();
    let mut grown = Vec::new();
    for m in cycle_lengths(n_over, k) {
        grow(cycle(m, k)?.0, n_over - m, k, &mut seen, &mut grown)?;
    }
    Ok(grown
        .into_iter()
        .enumerate()
        .map(|(i, hypergraph)| CatalogEntry {
            label: format!("U#{i}"),
            shape: Shape::Grown,
            hypergraph,
        })
        .collect())
}
