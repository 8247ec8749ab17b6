//! Maximum and second-maximum Estrada index over unicyclic k-uniform
//! hypergraphs of a fixed order.
//!
//! Candidates are grouped by Estrada index (relative tolerance
//! [`CLUSTER_TOLERANCE`]); isomorphic copies always land in the same group.

use std::fmt;

use serde::Serialize;

use crate::catalog::{unicyclic_catalog, unicyclic_exhaustive, CatalogEntry};
use crate::error::{Error, Result};
use crate::families::{cycle, g_star_star, unicyclic_cm, x_n};
use crate::format::to_text;
use crate::hypergraph::Hypergraph;
use crate::report::sig12;
use crate::spectral::estrada_index;

pub const CLUSTER_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    /// Structured catalog: compositions, auxiliary attachments, depth two.
    #[default]
    Catalog,
    /// Every unicyclic hypergraph of the order, grown pendant by pendant.
    Exhaustive,
}

impl Scope {
    pub fn note(self) -> &'static str {
        match self {
            Scope::Catalog => {
                "structured catalog: C_m(n_1..n_m), pendants on auxiliary cycle vertices, \
                 and depth-two pendant trees; not every unicyclic hypergraph of the order"
            }
            Scope::Exhaustive => {
                "exhaustive: every unicyclic k-uniform hypergraph of the order, \
                 reached by attaching pendant edges to C_{m,k} in every order"
            }
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::Catalog => "catalog",
            Scope::Exhaustive => "exhaustive",
        })
    }
}

impl std::str::FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "catalog" => Ok(Scope::Catalog),
            "exhaustive" => Ok(Scope::Exhaustive),
            other => Err(Error::FamilyParameters(format!("unknown scope {other:?}"))),
        }
    }
}

/// One Estrada-index class of candidates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedClass {
    #[serde(serialize_with = "sig12")]
    pub ee: f64,
    pub labels: Vec<String>,
    /// Diameter of the first member.
    pub diameter: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalFailure {
    pub message: String,
    /// Offending hypergraph in the text format, when there is one.
    pub hypergraph: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    pub n_over: usize,
    pub scope: Scope,
    pub scope_note: String,
    pub candidates: usize,
    /// Classes sorted by decreasing Estrada index (top three).
    pub ranking: Vec<RankedClass>,
    /// `X_n`, written as `C2(N-2,0)`.
    pub expected_max: String,
    pub expected_second: String,
    pub max_ok: bool,
    pub second_ok: bool,
    pub diameters_ok: bool,
    pub failures: Vec<ExtremalFailure>,
}

impl ExtremalReport {
    pub fn passed(&self) -> bool {
        self.max_ok && self.second_ok && self.diameters_ok && self.failures.is_empty()
    }
}

fn same(a: f64, b: f64) -> bool {
    (a - b).abs() <= CLUSTER_TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

struct Class<'a> {
    ee: f64,
    members: Vec<&'a CatalogEntry>,
}

fn classes(entries: &[CatalogEntry]) -> Result<Vec<Class<'_>>> {
    let mut scored: Vec<(f64, &CatalogEntry)> = entries
        .iter()
        .map(|e| Ok((estrada_index(&e.hypergraph)?, e)))
        .collect::<Result<_>>()?;
    scored.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut out: Vec<Class> = Vec::new();
    for (ee, e) in scored {
        match out.last_mut() {
            Some(c) if same(c.ee, ee) => c.members.push(e),
            _ => out.push(Class { ee, members: vec![e] }),
        }
    }
    Ok(out)
}

fn failure(message: String, h: Option<&Hypergraph>) -> ExtremalFailure {
    ExtremalFailure {
        message,
        hypergraph: h.map(to_text),
    }
}

/// Checks that `X_n` uniquely maximizes the Estrada index among unicyclic
/// k-uniform hypergraphs with `n_over` edges, that `C_2(N−3, 1)` (or `G**`
/// when `N = 3`) is second, and that their diameters are 2 and 3.
pub fn verify_extremal(n_over: usize, k: usize, scope: Scope) -> Result<ExtremalReport> {
    if n_over < 3 || k < 3 {
        return Err(Error::FamilyParameters(format!(
            "extremal check needs n/(k-1) >= 3 and k >= 3, got {n_over}, k={k}"
        )));
    }
    let n = n_over * (k - 1);
    let entries = match scope {
        Scope::Catalog => unicyclic_catalog(n_over, k)?,
        Scope::Exhaustive => unicyclic_exhaustive(n_over, k)?,
    };
    let ranked = classes(&entries)?;

    let max_h = x_n(n, k)?;
    let (second_label, second_h) = if n_over == 3 {
        ("G**".to_string(), g_star_star(k)?)
    } else {
        let p = [n_over - 3, 1];
        (crate::catalog::cm_label(&p), unicyclic_cm(k, &p)?.0)
    };
    let max_ee = estrada_index(&max_h)?;
    let second_ee = estrada_index(&second_h)?;
    let mut failures = Vec::new();

    let max_ok = ranked.len() >= 2 && same(ranked[0].ee, max_ee);
    if !max_ok {
        let top = ranked.first().map(|c| &c.members[0].hypergraph);
        failures.push(failure(
            format!("top class does not match X_{n} (EE {max_ee})"),
            top,
        ));
    }
    let second_ok = ranked.len() >= 2 && same(ranked[1].ee, second_ee) && !same(max_ee, second_ee);
    if !second_ok {
        let second = ranked.get(1).map(|c| &c.members[0].hypergraph);
        failures.push(failure(
            format!("second class does not match {second_label} (EE {second_ee})"),
            second,
        ));
    }
    if n_over == 3 {
        let c3 = cycle(3, k)?.0;
        let c3_ee = estrada_index(&c3)?;
        let third_ok = ranked.len() >= 3 && same(ranked[2].ee, c3_ee) && c3_ee < second_ee;
        if !third_ok {
            failures.push(failure(
                format!("third class does not match C3,{k} (EE {c3_ee})"),
                Some(&c3),
            ));
        }
    }
    let d_max = max_h.diameter()?;
    let d_second = second_h.diameter()?;
    let diameters_ok = d_max == 2 && d_second == 3;
    if !diameters_ok {
        failures.push(failure(
            format!("diameters are {d_max} and {d_second}, expected 2 and 3"),
            None,
        ));
    }

    let ranking = ranked
        .iter()
        .take(3)
        .map(|c| {
            Ok(RankedClass {
                ee: c.ee,
                labels: c.members.iter().map(|e| e.label.clone()).collect(),
                diameter: c.members[0].hypergraph.diameter()?,
            })
        })
        .collect::<Result<_>>()?;

    Ok(ExtremalReport {
        n,
        k,
        n_over,
        scope,
        scope_note: scope.note().into(),
        candidates: entries.len(),
        ranking,
        expected_max: crate::catalog::cm_label(&[n_over - 2, 0]),
        expected_second: second_label,
        max_ok,
        second_ok,
        diameters_ok,
        failures,
    })
}
