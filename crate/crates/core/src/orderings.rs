//! Strict Estrada-index orderings between pairs of unicyclic hypergraphs.
//!
//! Every instance builds both sides with the structural operations the
//! comparison is about (pendant shifts via [`Hypergraph::edge_swap`], cycle
//! reduction via shrink and re-extension, ...) and records whether
//! `EE(left) < EE(right)` holds strictly at full double precision.

use serde::Serialize;

use crate::catalog::{cm_label, weak_compositions};
use crate::error::{Error, Result};
use crate::families::{cycle, g_star_star, path_p3, unicyclic_cm, x_n};
use crate::hypergraph::{Hypergraph, KSubsets};
use crate::report::sig12;
use crate::spectral::estrada_index;

pub mod ids {
    /// `C_2(n1, n2) < C_2(n1 + 1, n2 − 1)` for `n1 ≥ n2 ≥ 1`.
    pub const C2_PENDANT_SHIFT: &str = "c2-pendant-shift";
    /// `C_3(n1,n2,n3) < C_3(n1+n2,n3,0) < C_3(n1+n2+n3,0,0)`.
    pub const C3_CONSOLIDATION: &str = "c3-consolidation";
    /// `C_3(N−3,0,0) < C_2(N−3,1)`.
    pub const C3_TO_C2: &str = "c3-to-c2";
    /// Cycles of length ≥ 4 shortened by two through `v_1`-shrinking on `e_m`
    /// and re-extension of the shrunk edge by `v_3`.
    pub const LONG_CYCLE_REDUCTION: &str = "long-cycle-reduction";
    /// `C_{3,k} < G**`.
    pub const C3K_VS_GSS: &str = "c3k-vs-gss";
    /// `EE(h) < EE(h + e')`.
    pub const EDGE_ADDITION: &str = "edge-addition";
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingInstance {
    pub left: String,
    pub right: String,
    #[serde(serialize_with = "sig12")]
    pub ee_left: f64,
    #[serde(serialize_with = "sig12")]
    pub ee_right: f64,
    /// `ee_right − ee_left`.
    pub gap: f64,
    pub strict_holds: bool,
}

impl OrderingInstance {
    fn compare(left: String, l: &Hypergraph, right: String, r: &Hypergraph) -> Result<Self> {
        let ee_left = estrada_index(l)?;
        let ee_right = estrada_index(r)?;
        Ok(OrderingInstance {
            left,
            right,
            ee_left,
            ee_right,
            gap: ee_right - ee_left,
            strict_holds: ee_left < ee_right,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingReport {
    pub lemma_id: String,
    pub instances: Vec<OrderingInstance>,
}

impl OrderingReport {
    pub fn all_strict(&self) -> bool {
        self.instances.iter().all(|i| i.strict_holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &OrderingInstance> {
        self.instances.iter().filter(|i| !i.strict_holds)
    }

    /// Smallest gap over all instances.
    pub fn min_gap(&self) -> Option<f64> {
        self.instances.iter().map(|i| i.gap).min_by(f64::total_cmp)
    }
}

/// Moves one pendant edge of `C_2(n1, n2)` from `v_2` to `v_1`.
pub fn c2_pendant_shift(k: usize, n1: usize, n2: usize) -> Result<(Hypergraph, Hypergraph)> {
    let (h, labeling) = unicyclic_cm(k, &[n1, n2])?;
    let pendant = labeling
        .pendant_map
        .get(&labeling.v(2))
        .and_then(|p| p.first())
        .ok_or_else(|| Error::FamilyParameters("v2 has no pendant edge".into()))?;
    let base: Vec<usize> = pendant.iter().copied().filter(|&x| x != labeling.v(2)).collect();
    let shifted = h.edge_swap(&[base], labeling.v(2), labeling.v(1))?;
    Ok((h, shifted))
}

/// `C_m(p)` and its reduction: shrink `v_1` out of `e_m`, then add `v_3` to
/// the shrunk edge, leaving a unicyclic hypergraph with a cycle of length
/// `m − 2`.
pub fn long_cycle_reduction(k: usize, pendants: &[usize]) -> Result<(Hypergraph, Hypergraph)> {
    let m = pendants.len();
    if m < 4 || k < 3 {
        return Err(Error::FamilyParameters(format!(
            "cycle reduction needs m >= 4 and k >= 3, got m={m}, k={k}"
        )));
    }
    let (h, labeling) = unicyclic_cm(k, pendants)?;
    let last = labeling.cycle_edge(m);
    let idx = h.edge_index(&last).expect("cycle edge present");
    let shrunk = h.shrink(labeling.v(1), idx)?;
    let e0: Vec<usize> = last.into_iter().filter(|&x| x != labeling.v(1)).collect();
    let idx = shrunk.edge_index(&e0).expect("shrunk edge present");
    let reduced = shrunk.grow(labeling.v(3), idx)?;
    Ok((h, reduced))
}

/// `C_{3,k}` and `G**` built from `P_3^k`: drop `e_1`, close the cycle with
/// `e_0 ∪ {u_3}` (`e_0 = e_1 ∖ {u_0}`), then move that edge from `u_3` onto
/// `u_{2,1}`. The isolated `u_0` is deleted from both.
pub fn c3k_and_gss_from_path(k: usize) -> Result<(Hypergraph, Hypergraph)> {
    let (p, l) = path_p3(k)?;
    let e1 = l.edge(1);
    let e0: Vec<usize> = e1.iter().copied().filter(|&x| x != l.u(0)).collect();
    let mut closing = e0.clone();
    closing.push(l.u(3));
    let cyc = p.remove_edge(&e1)?.add_edge(&closing)?;
    let gss = cyc.edge_swap(&[e0], l.u(3), l.interior(2, 1))?;
    Ok((
        cyc.remove_isolated_vertex(l.u(0))?,
        gss.remove_isolated_vertex(l.u(0))?,
    ))
}

/// Runs every ordering family for uniformity `k` over all parameterizations
/// whose hypergraphs have at most `size_budget` vertices.
pub fn verify_ordering_lemmas(k: usize, size_budget: usize) -> Result<Vec<OrderingReport>> {
    if k < 3 {
        return Err(Error::FamilyParameters(format!("orderings need k >= 3, got {k}")));
    }
    let fits = |edges: usize| edges * (k - 1) <= size_budget;
    let max_edges = size_budget / (k - 1);
    let mut reports = Vec::new();

    let mut shift = Vec::new();
    for total in 2..=max_edges.saturating_sub(2) {
        for n2 in 1..=total / 2 {
            let n1 = total - n2;
            let (l, r) = c2_pendant_shift(k, n1, n2)?;
            shift.push(OrderingInstance::compare(
                cm_label(&[n1, n2]),
                &l,
                cm_label(&[n1 + 1, n2 - 1]),
                &r,
            )?);
        }
    }
    reports.push(OrderingReport {
        lemma_id: ids::C2_PENDANT_SHIFT.into(),
        instances: shift,
    });

    let mut consolidation = Vec::new();
    for n1 in 1..=max_edges {
        for n2 in 1..=n1 {
            for n3 in 1..=n2 {
                if !fits(3 + n1 + n2 + n3) {
                    continue;
                }
                let a = [n1, n2, n3];
                let b = [n1 + n2, n3, 0];
                let c = [n1 + n2 + n3, 0, 0];
                let ha = unicyclic_cm(k, &a)?.0;
                let hb = unicyclic_cm(k, &b)?.0;
                let hc = unicyclic_cm(k, &c)?.0;
                consolidation.push(OrderingInstance::compare(cm_label(&a), &ha, cm_label(&b), &hb)?);
                consolidation.push(OrderingInstance::compare(cm_label(&b), &hb, cm_label(&c), &hc)?);
            }
        }
    }
    reports.push(OrderingReport {
        lemma_id: ids::C3_CONSOLIDATION.into(),
        instances: consolidation,
    });

    let mut c3_c2 = Vec::new();
    for blocks in 4..=max_edges {
        let c3 = [blocks - 3, 0, 0];
        let c2 = [blocks - 3, 1];
        c3_c2.push(OrderingInstance::compare(
            cm_label(&c3),
            &unicyclic_cm(k, &c3)?.0,
            cm_label(&c2),
            &unicyclic_cm(k, &c2)?.0,
        )?);
    }
    reports.push(OrderingReport {
        lemma_id: ids::C3_TO_C2.into(),
        instances: c3_c2,
    });

    let mut reduction = Vec::new();
    for m in 4..=max_edges {
        for pendants in (0..=max_edges - m).flat_map(|extra| weak_compositions(extra, m)) {
            if pendants[2] != *pendants.iter().max().unwrap_or(&0) {
                continue;
            }
            let (l, r) = long_cycle_reduction(k, &pendants)?;
            reduction.push(OrderingInstance::compare(
                cm_label(&pendants),
                &l,
                format!("{} reduced", cm_label(&pendants)),
                &r,
            )?);
        }
    }
    reports.push(OrderingReport {
        lemma_id: ids::LONG_CYCLE_REDUCTION.into(),
        instances: reduction,
    });

    let mut gss = Vec::new();
    if fits(3) {
        let (c, g) = c3k_and_gss_from_path(k)?;
        gss.push(OrderingInstance::compare(
            format!("C3,{k}"),
            &c,
            "G**".into(),
            &g,
        )?);
    }
    reports.push(OrderingReport {
        lemma_id: ids::C3K_VS_GSS.into(),
        instances: gss,
    });

    let mut bases: Vec<(String, Hypergraph)> = Vec::new();
    for blocks in 2..=max_edges {
        bases.push((format!("X{}", blocks * (k - 1)), x_n(blocks * (k - 1), k)?));
        if blocks >= 3 {
            bases.push((format!("C{blocks},{k}"), cycle(blocks, k)?.0));
        }
        if blocks >= 4 {
            let p = [blocks - 3, 1];
            bases.push((cm_label(&p), unicyclic_cm(k, &p)?.0));
        }
    }
    if fits(3) {
        bases.push(("G**".into(), g_star_star(k)?));
    }
    if 3 * (k - 1) < size_budget {
        bases.push(("P3".into(), path_p3(k)?.0));
    }
    let mut addition = Vec::new();
    for (label, h) in &bases {
        let ee = estrada_index(h)?;
        for e in KSubsets::new(h.n(), k) {
            if h.contains_edge(&e) {
                continue;
            }
            let bigger = h.add_edge(&e)?;
            let ee_bigger = estrada_index(&bigger)?;
            addition.push(OrderingInstance {
                left: label.clone(),
                right: format!("{label}+{e:?}"),
                ee_left: ee,
                ee_right: ee_bigger,
                gap: ee_bigger - ee,
                strict_holds: ee < ee_bigger,
            });
        }
    }
    reports.push(OrderingReport {
        lemma_id: ids::EDGE_ADDITION.into(),
        instances: addition,
    });

    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ee(h: &Hypergraph) -> f64 {
        estrada_index(h).unwrap()
    }

    fn same(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9 * a.abs().max(1.0)
    }

    #[test]
    fn pendant_shift_matches_generated_family() {
        for (n1, n2) in [(1, 1), (2, 1), (3, 2)] {
            let (l, r) = c2_pendant_shift(3, n1, n2).unwrap();
            assert_eq!(l, unicyclic_cm(3, &[n1, n2]).unwrap().0);
            assert!(same(ee(&r), ee(&unicyclic_cm(3, &[n1 + 1, n2 - 1]).unwrap().0)));
            assert!(ee(&l) < ee(&r));
        }
        assert!(c2_pendant_shift(3, 1, 0).is_err());
    }

    #[test]
    fn c2_shift_example() {
        let a = ee(&unicyclic_cm(3, &[2, 1]).unwrap().0);
        let b = ee(&unicyclic_cm(3, &[3, 0]).unwrap().0);
        assert!(a < b);
    }

    #[test]
    fn c3_to_c2_example() {
        let a = ee(&unicyclic_cm(3, &[3, 0, 0]).unwrap().0);
        let b = ee(&unicyclic_cm(3, &[3, 1]).unwrap().0);
        assert!(a < b);
    }

    #[test]
    fn reduction_shortens_the_cycle_by_two() {
        let (l, r) = long_cycle_reduction(3, &[0, 0, 1, 0]).unwrap();
        assert_eq!((l.n(), l.m()), (r.n(), r.m()));
        assert!(r.uniformity().admits(3));
        assert!(r.is_connected());
        // C_4 with one pendant at v3 reduces to a 2-cycle through v3 and v4
        // with v1, v2 hanging off v3 via the old e1, e2
        assert!(r.contains_edge(&[2, 3, 7]));
        assert!(ee(&l) < ee(&r));
        assert!(long_cycle_reduction(3, &[0, 0, 0]).is_err());
    }

    #[test]
    fn path_construction_gives_cycle_and_gss() {
        for k in [3, 4, 5] {
            let (c, g) = c3k_and_gss_from_path(k).unwrap();
            assert!(same(ee(&c), ee(&cycle(3, k).unwrap().0)));
            assert!(same(ee(&g), ee(&g_star_star(k).unwrap())));
            assert_eq!(c.n(), 3 * (k - 1));
            assert!(ee(&c) < ee(&g));
        }
    }

    #[test]
    fn small_budget_suite() {
        let reports = verify_ordering_lemmas(3, 10).unwrap();
        assert_eq!(reports.len(), 6);
        for r in &reports {
            assert!(r.all_strict(), "{}", r.lemma_id);
        }
        let shift = &reports[0];
        assert!(shift
            .instances
            .iter()
            .any(|i| i.left == "C2(2,1)" && i.right == "C2(3,0)"));
        assert!(verify_ordering_lemmas(2, 10).is_err());
    }
}
