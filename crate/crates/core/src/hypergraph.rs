//! Finite simple hypergraphs on dense vertex indices and the structural
//! operations used by the extremal arguments: complement, shrinking, edge
//! swaps, coalescence and hop distances.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple hypergraph on vertices `0..n`.
///
/// Every edge is a strictly increasing vertex list of length at least two,
/// no edge repeats, and the edge list itself is kept in lexicographic order,
/// so two equal hypergraphs always have identical edge vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        Hypergraph::new(raw.n, raw.edges)
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(h: Hypergraph) -> Self {
        RawHypergraph {
            n: h.n,
            edges: h.edges,
        }
    }
}

/// Result of [`Hypergraph::uniformity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Uniformity {
    /// Every edge has exactly this many vertices.
    Uniform(usize),
    /// No edges, so the hypergraph is k-uniform for every k.
    Vacuous,
    /// Edge sizes differ.
    Mixed,
}

impl Uniformity {
    pub fn admits(self, k: usize) -> bool {
        match self {
            Uniformity::Uniform(u) => u == k,
            Uniformity::Vacuous => true,
            Uniformity::Mixed => false,
        }
    }
}

/// Role labels for a hypergraph built on a cycle `C_{m,k}`.
///
/// Cycle vertex `v_i` (1-based in the usual notation) is `cycle_vertices[i-1]`;
/// the `j`-th auxiliary vertex of cycle edge `e_i` is
/// `auxiliary_vertices[&(i, j)]`, both indices 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FamilyLabeling {
    pub cycle_vertices: Vec<usize>,
    pub auxiliary_vertices: BTreeMap<(usize, usize), usize>,
    /// Pendant edges hanging off each cycle vertex, as vertex sets.
    pub pendant_map: BTreeMap<usize, Vec<Vec<usize>>>,
}

impl FamilyLabeling {
    /// `v_i` with 1-based `i`.
    pub fn v(&self, i: usize) -> usize {
        self.cycle_vertices[i - 1]
    }

    /// `u_{ij}` with 1-based `i` and `j`.
    pub fn u(&self, i: usize, j: usize) -> usize {
        self.auxiliary_vertices[&(i, j)]
    }

    /// The cycle edge `e_i` (1-based), reconstructed from the labels.
    pub fn cycle_edge(&self, i: usize) -> Vec<usize> {
        let m = self.cycle_vertices.len();
        let mut e = vec![self.v(i), self.v(i % m + 1)];
        e.extend(
            self.auxiliary_vertices
                .range((i, 0)..(i + 1, 0))
                .map(|(_, &x)| x),
        );
        e.sort_unstable();
        e
    }
}

fn canonical_edge(edge: &[usize], n: usize) -> Result<Vec<usize>> {
    let set: BTreeSet<usize> = edge.iter().copied().collect();
    let sorted: Vec<usize> = set.into_iter().collect();
    if sorted.len() < 2 {
        return Err(Error::EdgeTooSmall {
            edge: edge.to_vec(),
        });
    }
    if let Some(&vertex) = sorted.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange {
            edge: edge.to_vec(),
            vertex,
            n,
        });
    }
    Ok(sorted)
}

impl Hypergraph {
    /// Builds a validated hypergraph. Vertex lists inside an edge may be given
    /// in any order; repeated vertices inside one edge collapse.
    pub fn new<E>(n: usize, edges: impl IntoIterator<Item = E>) -> Result<Self>
    where
        E: AsRef<[usize]>,
    {
        let mut seen = BTreeSet::new();
        for edge in edges {
            let e = canonical_edge(edge.as_ref(), n)?;
            if !seen.insert(e.clone()) {
                return Err(Error::DuplicateEdge { edge: e });
            }
        }
        Ok(Hypergraph {
            n,
            edges: seen.into_iter().collect(),
        })
    }

    pub fn edgeless(n: usize) -> Self {
        Hypergraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Order (number of vertices).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size (number of edges).
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<&[usize]> {
        self.edges
            .get(index)
            .map(Vec::as_slice)
            .ok_or(Error::InvalidEdgeIndex {
                index,
                m: self.edges.len(),
            })
    }

    /// Position of `edge` in the canonical edge list.
    pub fn edge_index(&self, edge: &[usize]) -> Option<usize> {
        let mut e = edge.to_vec();
        e.sort_unstable();
        e.dedup();
        self.edges.binary_search(&e).ok()
    }

    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        self.edge_index(edge).is_some()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn uniformity(&self) -> Uniformity {
        let mut sizes = self.edges.iter().map(Vec::len);
        match sizes.next() {
            None => Uniformity::Vacuous,
            Some(k) if sizes.all(|s| s == k) => Uniformity::Uniform(k),
            Some(_) => Uniformity::Mixed,
        }
    }

    pub fn require_uniform(&self, k: usize) -> Result<()> {
        if self.uniformity().admits(k) {
            Ok(())
        } else {
            Err(Error::NotUniform { k })
        }
    }

    /// `d(v)` for every vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    pub fn is_regular(&self, r: usize) -> bool {
        self.degrees().iter().all(|&d| d == r)
    }

    /// The hypergraph whose edges are exactly the k-subsets absent from `self`.
    pub fn complement_uniform(&self, k: usize) -> Result<Self> {
        if k < 2 || k > self.n {
            return Err(Error::UniformityOutOfRange { k, n: self.n });
        }
        self.require_uniform(k)?;
        let present: BTreeSet<&[usize]> = self.edges.iter().map(Vec::as_slice).collect();
        let edges: Vec<Vec<usize>> = KSubsets::new(self.n, k)
            .filter(|s| !present.contains(s.as_slice()))
            .collect();
        Ok(Hypergraph { n: self.n, edges })
    }

    /// Removes `v` from edge `edge_index`.
    pub fn shrink(&self, v: usize, edge_index: usize) -> Result<Self> {
        let e = self.edge(edge_index)?;
        if !e.contains(&v) {
            return Err(Error::VertexNotInEdge {
                vertex: v,
                edge: e.to_vec(),
            });
        }
        let reduced: Vec<usize> = e.iter().copied().filter(|&x| x != v).collect();
        if reduced.len() < 2 {
            return Err(Error::EdgeTooSmall { edge: reduced });
        }
        self.replace_edge(edge_index, reduced)
    }

    /// Adds `v` to edge `edge_index`; the inverse of [`Hypergraph::shrink`].
    pub fn grow(&self, v: usize, edge_index: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let e = self.edge(edge_index)?;
        if e.contains(&v) {
            return Err(Error::VertexAlreadyInEdge {
                vertex: v,
                edge: e.to_vec(),
            });
        }
        let mut grown = e.to_vec();
        grown.push(v);
        self.replace_edge(edge_index, grown)
    }

    fn replace_edge(&self, edge_index: usize, replacement: Vec<usize>) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges[edge_index] = replacement;
        Hypergraph::new(self.n, edges)
    }

    /// Moves each edge `e ∪ {from}` (for `e` in `base_sets`) onto `e ∪ {to}`.
    pub fn edge_swap(&self, base_sets: &[Vec<usize>], from: usize, to: usize) -> Result<Self> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        let mut removed = BTreeSet::new();
        let mut inserted = Vec::with_capacity(base_sets.len());
        for e in base_sets {
            if e.contains(&from) || e.contains(&to) {
                return Err(Error::SwapPrecondition(format!(
                    "{e:?} meets {{{from}, {to}}}"
                )));
            }
            let mut old = e.clone();
            old.push(from);
            let idx = self.edge_index(&old).ok_or_else(|| {
                Error::SwapPrecondition(format!("{e:?} + {from} is not an edge"))
            })?;
            removed.insert(idx);
            let mut new = e.clone();
            new.push(to);
            inserted.push(new);
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, e)| e.clone())
            .chain(inserted);
        Hypergraph::new(self.n, edges)
    }

    /// Glues `other` onto `self` by identifying `other`'s vertex `w` with
    /// `self`'s vertex `u`. The remaining vertices of `other` are appended in
    /// increasing order after `self`'s vertices.
    pub fn coalesce(&self, u: usize, other: &Hypergraph, w: usize) -> Result<Self> {
        self.check_vertex(u)?;
        other.check_vertex(w)?;
        let relabel = |x: usize| -> usize {
            match x.cmp(&w) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => self.n + x,
                std::cmp::Ordering::Greater => self.n + x - 1,
            }
        };
        let moved = other
            .edges
            .iter()
            .map(|e| e.iter().map(|&x| relabel(x)).collect::<Vec<_>>());
        Hypergraph::new(
            self.n + other.n - 1,
            self.edges.iter().cloned().chain(moved),
        )
    }

    pub fn add_edge(&self, edge: &[usize]) -> Result<Self> {
        let e = canonical_edge(edge, self.n)?;
        match self.edges.binary_search(&e) {
            Ok(_) => Err(Error::DuplicateEdge { edge: e }),
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, e);
                Ok(Hypergraph { n: self.n, edges })
            }
        }
    }

    pub fn remove_edge(&self, edge: &[usize]) -> Result<Self> {
        let idx = self.edge_index(edge).ok_or_else(|| Error::MissingEdge {
            edge: edge.to_vec(),
        })?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Hypergraph { n: self.n, edges })
    }

    /// Deletes a degree-0 vertex; higher indices shift down by one.
    pub fn remove_isolated_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        if let Some(e) = self.edges.iter().find(|e| e.contains(&v)) {
            return Err(Error::VertexAlreadyInEdge {
                vertex: v,
                edge: e.clone(),
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&x| if x > v { x - 1 } else { x }).collect::<Vec<_>>());
        Hypergraph::new(self.n - 1, edges)
    }

    /// Vertex neighbourhoods (vertices sharing at least one edge).
    pub fn neighbours(&self) -> Vec<BTreeSet<usize>> {
        let mut nb = vec![BTreeSet::new(); self.n];
        for e in &self.edges {
            for &a in e {
                for &b in e {
                    if a != b {
                        nb[a].insert(b);
                    }
                }
            }
        }
        nb
    }

    /// Hop distances; `None` marks unreachable pairs.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        let nb = self.neighbours();
        (0..self.n)
            .map(|src| {
                let mut dist = vec![None; self.n];
                dist[src] = Some(0);
                let mut queue = VecDeque::from([src]);
                while let Some(x) = queue.pop_front() {
                    let dx = dist[x].unwrap_or(0);
                    for &y in &nb[x] {
                        if dist[y].is_none() {
                            dist[y] = Some(dx + 1);
                            queue.push_back(y);
                        }
                    }
                }
                dist
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distance_matrix()[0].iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for row in self.distance_matrix() {
            for d in row {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }
}

/// Lexicographic iterator over the k-subsets of `0..n`.
#[derive(Debug, Clone)]
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        KSubsets {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        // advance the rightmost position that still has room
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c23() -> Hypergraph {
        Hypergraph::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap()
    }

    fn k43() -> Hypergraph {
        Hypergraph::new(4, KSubsets::new(4, 3)).unwrap()
    }

    #[test]
    fn construction_and_errors() {
        let h = Hypergraph::new(3, [[2, 0, 1]]).unwrap();
        assert_eq!(h.m(), 1);
        assert_eq!(h.edges(), &[vec![0, 1, 2]]);
        assert_eq!(
            Hypergraph::new(3, [[0, 1, 2], [0, 1, 2]]),
            Err(Error::DuplicateEdge {
                edge: vec![0, 1, 2]
            })
        );
        assert!(matches!(
            Hypergraph::new(3, [vec![1]]),
            Err(Error::EdgeTooSmall { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, [vec![1, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn canonical_order_is_independent_of_input_order() {
        let a = Hypergraph::new(4, [[0, 1, 3], [0, 1, 2]]).unwrap();
        assert_eq!(a, c23());
    }

    #[test]
    fn uniformity_cases() {
        assert_eq!(
            Hypergraph::new(3, [[0, 1, 2]]).unwrap().uniformity(),
            Uniformity::Uniform(3)
        );
        assert_eq!(
            Hypergraph::new(3, [vec![0, 1, 2], vec![0, 1]])
                .unwrap()
                .uniformity(),
            Uniformity::Mixed
        );
        assert_eq!(Hypergraph::edgeless(5).uniformity(), Uniformity::Vacuous);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(c23().degrees(), vec![2, 2, 1, 1]);
        assert_eq!(k43().degrees(), vec![3, 3, 3, 3]);
        assert!(k43().is_regular(3));
        assert_eq!(Hypergraph::edgeless(3).degrees(), vec![0, 0, 0]);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(k43().complement_uniform(3).unwrap(), Hypergraph::edgeless(4));
        assert_eq!(
            c23().complement_uniform(3).unwrap(),
            Hypergraph::new(4, [[0, 2, 3], [1, 2, 3]]).unwrap()
        );
        assert_eq!(Hypergraph::edgeless(4).complement_uniform(3).unwrap(), k43());
        assert!(matches!(
            Hypergraph::edgeless(2).complement_uniform(3),
            Err(Error::UniformityOutOfRange { .. })
        ));
        assert!(matches!(
            c23().complement_uniform(2),
            Err(Error::NotUniform { k: 2 })
        ));
    }

    #[test]
    fn shrink_and_grow() {
        let h = c23();
        let idx = h.edge_index(&[0, 1, 3]).unwrap();
        let s = h.shrink(3, idx).unwrap();
        assert_eq!(s.edges(), &[vec![0, 1], vec![0, 1, 2]]);
        let back = s.grow(3, s.edge_index(&[0, 1]).unwrap()).unwrap();
        assert_eq!(back, h);

        let two = Hypergraph::new(3, [[0, 1]]).unwrap();
        assert!(matches!(two.shrink(0, 0), Err(Error::EdgeTooSmall { .. })));

        let dup = Hypergraph::new(3, [vec![0, 1], vec![0, 1, 2]]).unwrap();
        let idx = dup.edge_index(&[0, 1, 2]).unwrap();
        assert!(matches!(dup.shrink(2, idx), Err(Error::DuplicateEdge { .. })));
        assert!(matches!(
            h.shrink(2, h.edge_index(&[0, 1, 3]).unwrap()),
            Err(Error::VertexNotInEdge { .. })
        ));
    }

    #[test]
    fn edge_swap_examples() {
        // C2(0,1), k = 3: pendant {1,4,5} at v2 moves to v1
        let h = Hypergraph::new(6, [[0, 1, 2], [0, 1, 3], [1, 4, 5]]).unwrap();
        let moved = h.edge_swap(&[vec![4, 5]], 1, 0).unwrap();
        assert_eq!(
            moved,
            Hypergraph::new(6, [[0, 1, 2], [0, 1, 3], [0, 4, 5]]).unwrap()
        );
        assert_eq!(h.edge_swap(&[], 1, 0).unwrap(), h);
        assert!(matches!(
            h.edge_swap(&[vec![0, 5]], 1, 0),
            Err(Error::SwapPrecondition(_))
        ));
        assert!(matches!(
            h.edge_swap(&[vec![2, 5]], 1, 0),
            Err(Error::SwapPrecondition(_))
        ));
    }

    #[test]
    fn coalesce_examples() {
        let e = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        let star = e.coalesce(0, &e, 0).unwrap();
        assert_eq!(star.n(), 5);
        assert_eq!(star.edges(), &[vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(c23().coalesce(2, &Hypergraph::edgeless(1), 0).unwrap(), c23());
        let glued = c23().coalesce(3, &e, 1).unwrap();
        assert_eq!(glued.edges().last().unwrap(), &vec![3, 4, 5]);
    }

    #[test]
    fn add_and_remove_edge() {
        let h = Hypergraph::edgeless(3).add_edge(&[2, 1, 0]).unwrap();
        assert_eq!(h.m(), 1);
        assert!(matches!(
            k43().add_edge(&[0, 1, 2]),
            Err(Error::DuplicateEdge { .. })
        ));
        let bigger = c23().add_edge(&[0, 2, 3]).unwrap();
        assert_eq!(bigger.m(), 3);
        assert_eq!(bigger.remove_edge(&[0, 2, 3]).unwrap(), c23());
        assert!(matches!(c23().remove_edge(&[1, 2, 3]), Err(Error::MissingEdge { .. })));
    }

    #[test]
    fn isolated_vertex_removal() {
        let h = Hypergraph::new(5, [[0, 2, 3], [0, 2, 4]]).unwrap();
        let r = h.remove_isolated_vertex(1).unwrap();
        assert_eq!(r, c23());
        assert!(h.remove_isolated_vertex(0).is_err());
    }

    #[test]
    fn distances() {
        let x6 = Hypergraph::new(6, [[0, 1, 2], [0, 1, 3], [0, 4, 5]]).unwrap();
        assert_eq!(x6.diameter(), Ok(2));
        assert_eq!(Hypergraph::new(3, [[0, 1, 2]]).unwrap().diameter(), Ok(1));
        assert_eq!(Hypergraph::edgeless(2).diameter(), Err(Error::Disconnected));
        assert!(!Hypergraph::edgeless(2).is_connected());
    }

    #[test]
    fn k_subsets_enumerates_binomial_many() {
        assert_eq!(KSubsets::new(6, 3).count() as u128, binomial(6, 3));
        assert_eq!(KSubsets::new(3, 4).count(), 0);
        assert_eq!(KSubsets::new(4, 0).count(), 1);
    }

    #[test]
    fn serde_roundtrip_validates() {
        let json = r#"{"n":3,"edges":[[0,1,2],[0,1,2]]}"#;
        assert!(serde_json::from_str::<Hypergraph>(json).is_err());
        let h: Hypergraph = serde_json::from_str(r#"{"n":4,"edges":[[0,1,3],[0,1,2]]}"#).unwrap();
        assert_eq!(h, c23());
    }
}
