//! Deterministic generators for the named hypergraph families.
//!
//! Vertex labeling for cycle-based families: `v_1..v_m` take indices
//! `0..m`, then the auxiliary vertices `u_{ij}` follow in `(i, j)` order,
//! then each pendant edge contributes `k - 1` fresh vertices in the order
//! the pendant edges are attached (all of `v_1`'s first, then `v_2`'s, ...).

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{FamilyLabeling, Hypergraph, KSubsets};

fn bad(msg: impl Into<String>) -> Error {
    Error::FamilyParameters(msg.into())
}

/// Complete k-uniform hypergraph `K_n^k`.
pub fn complete_uniform(n: usize, k: usize) -> Result<Hypergraph> {
    if k < 2 || k > n {
        return Err(Error::UniformityOutOfRange { k, n });
    }
    Hypergraph::new(n, KSubsets::new(n, k))
}

pub fn edgeless(n: usize) -> Hypergraph {
    Hypergraph::edgeless(n)
}

/// The k-uniform cycle `C_{m,k}` with edges
/// `e_i = {v_i, v_{i+1}, u_{i1}, …, u_{i(k-2)}}`.
pub fn cycle(m: usize, k: usize) -> Result<(Hypergraph, FamilyLabeling)> {
    if m < 2 || k < 2 {
        return Err(bad(format!("cycle needs m >= 2 and k >= 2, got m={m}, k={k}")));
    }
    let mut labeling = FamilyLabeling {
        cycle_vertices: (0..m).collect(),
        ..Default::default()
    };
    let mut next = m;
    let mut edges = Vec::with_capacity(m);
    for i in 1..=m {
        let mut e = vec![i - 1, i % m];
        for j in 1..=k - 2 {
            labeling.auxiliary_vertices.insert((i, j), next);
            e.push(next);
            next += 1;
        }
        edges.push(e);
    }
    Ok((Hypergraph::new(next, edges)?, labeling))
}

/// Appends a pendant edge at `at` made of `k - 1` fresh vertices.
pub fn attach_pendant(h: &Hypergraph, at: usize, k: usize) -> Result<(Hypergraph, Vec<usize>)> {
    if at >= h.n() {
        return Err(Error::InvalidVertex {
            vertex: at,
            n: h.n(),
        });
    }
    if k < 2 {
        return Err(bad("pendant edges need k >= 2"));
    }
    let n = h.n();
    let mut e = vec![at];
    e.extend(n..n + k - 1);
    let grown = Hypergraph::new(n + k - 1, h.edges().iter().cloned().chain([e.clone()]))?;
    Ok((grown, e))
}

/// `C_m(n_1, …, n_m)`: `C_{m,k}` with `n_i` pendant edges at `v_i`.
pub fn unicyclic_cm(k: usize, pendants: &[usize]) -> Result<(Hypergraph, FamilyLabeling)> {
    let m = pendants.len();
    if m < 2 {
        return Err(bad(format!("C_m needs at least two pendant counts, got {m}")));
    }
    if m == 2 && k < 3 {
        return Err(bad("C_2 needs k >= 3"));
    }
    let (mut h, mut labeling) = cycle(m, k)?;
    for (i, &count) in pendants.iter().enumerate() {
        for _ in 0..count {
            let (next, e) = attach_pendant(&h, i, k)?;
            h = next;
            labeling.pendant_map.entry(i).or_default().push(e);
        }
    }
    Ok((h, labeling))
}

/// `X_n = C_2(n/(k-1) - 2, 0)`.
pub fn x_n(n: usize, k: usize) -> Result<Hypergraph> {
    let blocks = order_blocks(n, k)?;
    Ok(unicyclic_cm(k, &[blocks - 2, 0])?.0)
}

/// `n / (k - 1)` for a unicyclic order, checking divisibility.
pub fn order_blocks(n: usize, k: usize) -> Result<usize> {
    if k < 2 || !n.is_multiple_of(k - 1) || n / (k - 1) < 2 {
        return Err(bad(format!(
            "order {n} is not a positive multiple (>= 2) of k-1 = {}",
            k.saturating_sub(1)
        )));
    }
    Ok(n / (k - 1))
}

/// k-uniform hyperstar with `s` edges meeting exactly in vertex 0.
pub fn hyperstar(k: usize, s: usize) -> Result<Hypergraph> {
    if k < 2 || s < 1 {
        return Err(bad(format!("hyperstar needs k >= 2 and s >= 1, got k={k}, s={s}")));
    }
    let edges = (0..s).map(|i| {
        let start = 1 + i * (k - 1);
        std::iter::once(0).chain(start..start + k - 1).collect::<Vec<_>>()
    });
    Hypergraph::new(1 + s * (k - 1), edges)
}

/// Labels of the three-edge path `P_3^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathLabeling {
    /// `u_0, u_1, u_2, u_3`: the two ends and the two cut vertices.
    pub ends: [usize; 4],
    /// `u_{i,j}` for edge `i ∈ 1..=3`, slot `j ∈ 1..=k-2`.
    pub interior: BTreeMap<(usize, usize), usize>,
}

impl PathLabeling {
    pub fn u(&self, i: usize) -> usize {
        self.ends[i]
    }

    pub fn interior(&self, i: usize, j: usize) -> usize {
        self.interior[&(i, j)]
    }

    /// Edge `e_i` as a vertex set.
    pub fn edge(&self, i: usize) -> Vec<usize> {
        let mut e = vec![self.ends[i - 1], self.ends[i]];
        e.extend(self.interior.range((i, 0)..(i + 1, 0)).map(|(_, &x)| x));
        e.sort_unstable();
        e
    }
}

/// The path `P_3^k`: `e_i = {u_{i-1}, u_{i,1}, …, u_{i,k-2}, u_i}`, labeled
/// left to right so `u_i = i(k-1)` and `u_{i,j} = (i-1)(k-1) + j`.
pub fn path_p3(k: usize) -> Result<(Hypergraph, PathLabeling)> {
    if k < 3 {
        return Err(bad(format!("P_3^k needs k >= 3, got {k}")));
    }
    let step = k - 1;
    let ends = [0, step, 2 * step, 3 * step];
    let mut interior = BTreeMap::new();
    for i in 1..=3 {
        for j in 1..=k - 2 {
            interior.insert((i, j), (i - 1) * step + j);
        }
    }
    let labeling = PathLabeling { ends, interior };
    let h = Hypergraph::new(3 * step + 1, (1..=3).map(|i| labeling.edge(i)))?;
    Ok((h, labeling))
}

/// `C_{2,k}` with one pendant edge attached at the auxiliary vertex `u_{11}`.
pub fn g_star_star(k: usize) -> Result<Hypergraph> {
    if k < 3 {
        return Err(bad(format!("G** needs k >= 3, got {k}")));
    }
    let (c, labeling) = cycle(2, k)?;
    Ok(attach_pendant(&c, labeling.u(1, 1), k)?.0)
}

/// The Fano plane: the (7, 3, 1) design.
pub fn fano() -> Hypergraph {
    Hypergraph::new(
        7,
        [
            [0, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ],
    )
    .expect("fano plane is a valid hypergraph")
}

/// Random k-uniform hypergraph: every k-subset is kept with probability `p`.
pub fn random_uniform<R: Rng + ?Sized>(n: usize, k: usize, p: f64, rng: &mut R) -> Result<Hypergraph> {
    if k < 2 || k > n {
        return Err(Error::UniformityOutOfRange { k, n });
    }
    let edges: Vec<Vec<usize>> = KSubsets::new(n, k).filter(|_| rng.gen_bool(p)).collect();
    Hypergraph::new(n, edges)
}

/// A named family instance, as accepted on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Complete { n: usize, k: usize },
    Edgeless { n: usize },
    Cycle { m: usize, k: usize },
    UnicyclicCm { k: usize, pendants: Vec<usize> },
    Xn { n: usize, k: usize },
    Hyperstar { k: usize, s: usize },
    PathP3 { k: usize },
    GStarStar { k: usize },
    Fano,
    Explicit(Hypergraph),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Hypergraph> {
        match self {
            FamilySpec::Complete { n, k } => complete_uniform(*n, *k),
            FamilySpec::Edgeless { n } => Ok(edgeless(*n)),
            FamilySpec::Cycle { m, k } => Ok(cycle(*m, *k)?.0),
            FamilySpec::UnicyclicCm { k, pendants } => Ok(unicyclic_cm(*k, pendants)?.0),
            FamilySpec::Xn { n, k } => x_n(*n, *k),
            FamilySpec::Hyperstar { k, s } => hyperstar(*k, *s),
            FamilySpec::PathP3 { k } => Ok(path_p3(*k)?.0),
            FamilySpec::GStarStar { k } => g_star_star(*k),
            FamilySpec::Fano => Ok(fano()),
            FamilySpec::Explicit(h) => Ok(h.clone()),
        }
    }

    /// Uniformity the family is built with, if it has one.
    pub fn k(&self) -> Option<usize> {
        match self {
            FamilySpec::Complete { k, .. }
            | FamilySpec::Cycle { k, .. }
            | FamilySpec::UnicyclicCm { k, .. }
            | FamilySpec::Xn { k, .. }
            | FamilySpec::Hyperstar { k, .. }
            | FamilySpec::PathP3 { k }
            | FamilySpec::GStarStar { k } => Some(*k),
            FamilySpec::Fano => Some(3),
            FamilySpec::Edgeless { .. } => None,
            FamilySpec::Explicit(h) => match h.uniformity() {
                crate::hypergraph::Uniformity::Uniform(k) => Some(k),
                _ => None,
            },
        }
    }

    /// Parses `complete:n,k`, `edgeless:n`, `cycle:m,k`, `cm:k:n1,n2,...`,
    /// `xn:n,k`, `star:k,s`, `p3:k`, `gss:k` or `fano`.
    pub fn parse(input: &str) -> Result<Self> {
        let (name, rest) = match input.find(':') {
            Some(pos) => (&input[..pos], Some((&input[pos + 1..], pos + 2))),
            None => (input, None),
        };
        let list = |expected: usize| -> Result<Vec<usize>> {
            let (body, column) = rest.ok_or_else(|| Error::Grammar {
                column: input.len() + 1,
                message: format!("`{name}` expects {expected} parameter(s) after `:`"),
            })?;
            let values = parse_list(body, column)?;
            if values.len() != expected {
                return Err(Error::Grammar {
                    column,
                    message: format!("`{name}` expects {expected} parameter(s), got {}", values.len()),
                });
            }
            Ok(values)
        };
        let spec = match name {
            "complete" => {
                let v = list(2)?;
                FamilySpec::Complete { n: v[0], k: v[1] }
            }
            "edgeless" => FamilySpec::Edgeless { n: list(1)?[0] },
            "cycle" => {
                let v = list(2)?;
                FamilySpec::Cycle { m: v[0], k: v[1] }
            }
            "xn" => {
                let v = list(2)?;
                FamilySpec::Xn { n: v[0], k: v[1] }
            }
            "star" => {
                let v = list(2)?;
                FamilySpec::Hyperstar { k: v[0], s: v[1] }
            }
            "p3" => FamilySpec::PathP3 { k: list(1)?[0] },
            "gss" => FamilySpec::GStarStar { k: list(1)?[0] },
            "fano" => {
                if let Some((_, column)) = rest {
                    return Err(Error::Grammar {
                        column: column - 1,
                        message: "`fano` takes no parameters".into(),
                    });
                }
                FamilySpec::Fano
            }
            "cm" => {
                let (body, column) = rest.ok_or_else(|| Error::Grammar {
                    column: input.len() + 1,
                    message: "`cm` expects `cm:k:n1,n2,...`".into(),
                })?;
                let sep = body.find(':').ok_or_else(|| Error::Grammar {
                    column: column + body.len(),
                    message: "`cm` expects a second `:` before the pendant counts".into(),
                })?;
                let k = parse_list(&body[..sep], column)?;
                if k.len() != 1 {
                    return Err(Error::Grammar {
                        column,
                        message: "`cm` expects a single k".into(),
                    });
                }
                let pendants = parse_list(&body[sep + 1..], column + sep + 1)?;
                FamilySpec::UnicyclicCm { k: k[0], pendants }
            }
            _ => {
                return Err(Error::Grammar {
                    column: 1,
                    message: format!("unknown family `{name}`"),
                })
            }
        };
        Ok(spec)
    }
}

fn parse_list(body: &str, column: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for tok in body.split(',') {
        let trimmed = tok.trim();
        let value = trimmed.parse::<usize>().map_err(|_| Error::Grammar {
            column: column + offset,
            message: format!("expected a non-negative integer, found `{tok}`"),
        })?;
        out.push(value);
        offset += tok.len() + 1;
    }
    Ok(out)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete { n, k } => write!(f, "complete:{n},{k}"),
            FamilySpec::Edgeless { n } => write!(f, "edgeless:{n}"),
            FamilySpec::Cycle { m, k } => write!(f, "cycle:{m},{k}"),
            FamilySpec::UnicyclicCm { k, pendants } => {
                let p: Vec<String> = pendants.iter().map(usize::to_string).collect();
                write!(f, "cm:{k}:{}", p.join(","))
            }
            FamilySpec::Xn { n, k } => write!(f, "xn:{n},{k}"),
            FamilySpec::Hyperstar { k, s } => write!(f, "star:{k},{s}"),
            FamilySpec::PathP3 { k } => write!(f, "p3:{k}"),
            FamilySpec::GStarStar { k } => write!(f, "gss:{k}"),
            FamilySpec::Fano => write!(f, "fano"),
            FamilySpec::Explicit(h) => write!(f, "explicit(n={}, m={})", h.n(), h.m()),
        }
    }
}
