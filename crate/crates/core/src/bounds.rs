//! Checkers for the spectral and Estrada-index bounds on k-uniform
//! hypergraphs. Each checker evaluates both sides and reports slack and
//! equality instead of asserting.

use serde::Serialize;

use crate::bibd::{bibd_validate, BibdCertificate};
use crate::error::{Error, Result};
use crate::hypergraph::{binomial, Hypergraph, Uniformity};
use crate::matrix::{DenseSymmetricMatrix, IntMatrix};
use crate::report::sig12;
use crate::spectral::{eigendecompose, spectrum, Spectrum};

/// Relative tolerance for `holds` and `equality`.
pub const BOUND_TOLERANCE: f64 = 1e-9;

pub mod ids {
    pub const SUM_T_MATRIX: &str = "sum-t-largest-matrix";
    pub const SUM_T_MATRIX_THETA_PLUS_ONE: &str = "sum-t-largest-matrix-theta-plus-one";
    pub const SUM_T_HYPERGRAPH: &str = "sum-t-largest-hypergraph";
    pub const MOMENT2: &str = "moment2-two-sided";
    pub const EE_LOWER_LAMBDA1: &str = "ee-lower-lambda1";
    pub const EE_LOWER_EDGES: &str = "ee-lower-edges";
    pub const EE_UPPER_EDGES: &str = "ee-upper-edges";
    pub const EE_UPPER_ENERGY_MOMENT: &str = "ee-upper-energy-moment";
    pub const EE_UPPER_ENERGY_EXP: &str = "ee-upper-energy-exp";
    pub const EE_NORDHAUS_GADDUM: &str = "ee-nordhaus-gaddum";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `lhs ≤ rhs`.
    Upper,
    /// `lhs ≥ rhs`.
    Lower,
}

/// The lower side of a two-sided bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerSide {
    #[serde(serialize_with = "sig12")]
    pub rhs: f64,
    #[serde(serialize_with = "sig12")]
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound_id: String,
    pub direction: Direction,
    #[serde(serialize_with = "sig12")]
    pub lhs: f64,
    #[serde(serialize_with = "sig12")]
    pub rhs: f64,
    /// Signed distance to the bound; negative means violated.
    #[serde(serialize_with = "sig12")]
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
    pub n: usize,
    pub m: usize,
    pub k: Option<usize>,
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<LowerSide>,
    /// Named intermediate quantities (θ, entry range, normalized forms, ...).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub extras: Vec<(String, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn tolerance(lhs: f64, rhs: f64) -> f64 {
    BOUND_TOLERANCE * lhs.abs().max(rhs.abs()).max(1.0)
}

impl BoundReport {
    fn new(id: &str, direction: Direction, lhs: f64, rhs: f64, n: usize, m: usize) -> Self {
        let slack = match direction {
            Direction::Upper => rhs - lhs,
            Direction::Lower => lhs - rhs,
        };
        let tol = tolerance(lhs, rhs);
        BoundReport {
            bound_id: id.to_string(),
            direction,
            lhs,
            rhs,
            slack,
            holds: slack >= -tol,
            equality: slack.abs() <= tol,
            n,
            m,
            k: None,
            t: None,
            lower: None,
            extras: Vec::new(),
            note: None,
        }
    }

    fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    fn with_t(mut self, t: usize) -> Self {
        self.t = Some(t);
        self
    }

    fn extra(mut self, name: &str, value: f64) -> Self {
        self.extras.push((name.to_string(), value));
        self
    }

    /// Adds a lower side `lhs ≥ rhs_lower`; `holds` then covers both sides.
    fn with_lower(mut self, rhs_lower: f64) -> Self {
        let slack = self.lhs - rhs_lower;
        let tol = tolerance(self.lhs, rhs_lower);
        let side = LowerSide {
            rhs: rhs_lower,
            slack,
            holds: slack >= -tol,
            equality: slack.abs() <= tol,
        };
        self.holds &= side.holds;
        self.lower = Some(side);
        self
    }
}

/// Which denominator the sum-of-largest-eigenvalues bound uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SumBoundVariant {
    /// `2θ + 1`.
    #[default]
    AsWritten,
    /// `2(θ + 1)`, the form known for simple graphs.
    ThetaPlusOne,
}

impl SumBoundVariant {
    fn factor(self, theta: usize, t: usize) -> f64 {
        let th = theta as f64;
        let t = t as f64;
        let numerator = th + (th * (th * t + t - 1.0)).sqrt();
        match self {
            SumBoundVariant::AsWritten => numerator / (2.0 * th + 1.0),
            SumBoundVariant::ThetaPlusOne => numerator / (2.0 * (th + 1.0)),
        }
    }
}

fn check_t(t: usize, n: usize) -> Result<()> {
    if t < 2 || t > n {
        Err(Error::TOutOfRange { t, n })
    } else {
        Ok(())
    }
}

fn require_uniform(h: &Hypergraph, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::UniformityOutOfRange { k, n: h.n() });
    }
    h.require_uniform(k)
}

/// Sum of the t largest eigenvalues of a symmetric matrix with entries in
/// `[a, b]` against `n[(θ + √(θ(tθ + t − 1)))(b − a)/D + max{0, a}]`, with
/// θ the number of negative eigenvalues and `D` set by `variant`.
pub fn check_sum_t_largest_matrix(
    m: &DenseSymmetricMatrix,
    t: usize,
    variant: SumBoundVariant,
) -> Result<BoundReport> {
    let n = m.order();
    check_t(t, n)?;
    let s = eigendecompose(m)?;
    Ok(sum_t_matrix_report(m, &s, t, variant))
}

fn sum_t_matrix_report(
    m: &DenseSymmetricMatrix,
    s: &Spectrum,
    t: usize,
    variant: SumBoundVariant,
) -> BoundReport {
    let n = m.order();
    let (a, b) = (m.entry_min(), m.entry_max());
    let theta = s.negative_count();
    let rhs_for = |v: SumBoundVariant| n as f64 * (v.factor(theta, t) * (b - a) + a.max(0.0));
    let as_written = rhs_for(SumBoundVariant::AsWritten);
    let plus_one = rhs_for(SumBoundVariant::ThetaPlusOne);
    let id = match variant {
        SumBoundVariant::AsWritten => ids::SUM_T_MATRIX,
        SumBoundVariant::ThetaPlusOne => ids::SUM_T_MATRIX_THETA_PLUS_ONE,
    };
    let lhs = s.top_sum(t);
    let rhs = rhs_for(variant);
    let mut report = BoundReport::new(id, Direction::Upper, lhs, rhs, n, 0)
        .with_t(t)
        .extra("theta", theta as f64)
        .extra("entry_min", a)
        .extra("entry_max", b)
        .extra("tau_lhs", lhs / n as f64)
        .extra("tau_rhs", rhs / n as f64)
        .extra("rhs_as_written", as_written)
        .extra("rhs_theta_plus_one", plus_one);
    if plus_one < as_written {
        report.note = Some(
            "denominators 2θ+1 and 2(θ+1) disagree; the 2(θ+1) form is tighter".to_string(),
        );
    }
    report
}

/// Hypergraph form of the t-largest bound, with `b = C(n-2, k-2)` and `a = 0`.
pub fn check_sum_t_largest_hypergraph(h: &Hypergraph, k: usize, t: usize) -> Result<BoundReport> {
    require_uniform(h, k)?;
    check_t(t, h.n())?;
    Ok(sum_t_hypergraph_report(h, &spectrum(h)?, k, t))
}

fn sum_t_hypergraph_report(h: &Hypergraph, s: &Spectrum, k: usize, t: usize) -> BoundReport {
    let n = h.n();
    let theta = s.negative_count();
    let cap = binomial(n.saturating_sub(2), k - 2) as f64;
    let rhs = n as f64 * cap * SumBoundVariant::AsWritten.factor(theta, t);
    BoundReport::new(ids::SUM_T_HYPERGRAPH, Direction::Upper, s.top_sum(t), rhs, n, h.m())
        .with_k(k)
        .with_t(t)
        .extra("theta", theta as f64)
        .extra("pair_cap", cap)
}

/// `k(k−1)m ≤ Σλ_i² ≤ (k−1)m(m(k−2)+2)`.
pub fn check_moment2_bounds(h: &Hypergraph, k: usize) -> Result<BoundReport> {
    require_uniform(h, k)?;
    Ok(moment2_report(h, &spectrum(h)?, k))
}

fn moment2_upper(k: usize, m: usize) -> f64 {
    let (k, m) = (k as f64, m as f64);
    (k - 1.0) * m * (m * (k - 2.0) + 2.0)
}

fn moment2_report(h: &Hypergraph, s: &Spectrum, k: usize) -> BoundReport {
    let m = h.m();
    let lower = (k * (k - 1) * m) as f64;
    BoundReport::new(ids::MOMENT2, Direction::Upper, s.moment(2), moment2_upper(k, m), h.n(), m)
        .with_k(k)
        .with_lower(lower)
}

/// `EE ≥ e^{λ₁} + (n − 1) − λ₁`.
pub fn check_ee_lower_spectral(h: &Hypergraph) -> Result<BoundReport> {
    let s = spectrum(h)?;
    ee_lower_spectral_report(h, &s)
}

fn ee_lower_spectral_report(h: &Hypergraph, s: &Spectrum) -> Result<BoundReport> {
    let l1 = s.lambda1();
    let rhs = l1.exp() + (h.n() as f64 - 1.0) - l1;
    Ok(
        BoundReport::new(ids::EE_LOWER_LAMBDA1, Direction::Lower, s.estrada()?, rhs, h.n(), h.m())
            .extra("lambda1", l1),
    )
}

/// `EE ≥ √(n² + 4k(k−1)m/2)`.
pub fn check_ee_lower_edges(h: &Hypergraph, k: usize) -> Result<BoundReport> {
    require_uniform(h, k)?;
    ee_lower_edges_report(h, &spectrum(h)?, k)
}

fn ee_lower_edges_report(h: &Hypergraph, s: &Spectrum, k: usize) -> Result<BoundReport> {
    let n = h.n() as f64;
    let term = 4.0 * (k * (k - 1) * h.m()) as f64 / 2.0;
    let rhs = (n * n + term).sqrt();
    Ok(BoundReport::new(ids::EE_LOWER_EDGES, Direction::Lower, s.estrada()?, rhs, h.n(), h.m()).with_k(k))
}

fn moment2_root(k: usize, m: usize) -> f64 {
    moment2_upper(k, m).sqrt()
}

/// `EE ≤ n − 1 + e^{√((k−1)m(m(k−2)+2))}`.
pub fn check_ee_upper_edges(h: &Hypergraph, k: usize) -> Result<BoundReport> {
    require_uniform(h, k)?;
    ee_upper_edges_report(h, &spectrum(h)?, k)
}

fn ee_upper_edges_report(h: &Hypergraph, s: &Spectrum, k: usize) -> Result<BoundReport> {
    let root = moment2_root(k, h.m());
    let rhs = h.n() as f64 - 1.0 + root.exp();
    Ok(BoundReport::new(ids::EE_UPPER_EDGES, Direction::Upper, s.estrada()?, rhs, h.n(), h.m())
        .with_k(k)
        .extra("moment2_root", root))
}

/// The two energy-based upper bounds:
/// `EE ≤ n + E − 1 − S + e^S` with `S = √((k−1)m(m(k−2)+2))`, and
/// `EE ≤ n − 1 + e^E`.
pub fn check_ee_upper_energy(h: &Hypergraph, k: usize) -> Result<[BoundReport; 2]> {
    require_uniform(h, k)?;
    ee_upper_energy_reports(h, &spectrum(h)?, k)
}

fn ee_upper_energy_reports(h: &Hypergraph, s: &Spectrum, k: usize) -> Result<[BoundReport; 2]> {
    let ee = s.estrada()?;
    let energy = s.energy();
    let n = h.n() as f64;
    let root = moment2_root(k, h.m());
    let with_moment = n + energy - 1.0 - root + root.exp();
    let with_exp = n - 1.0 + energy.exp();
    Ok([
        BoundReport::new(ids::EE_UPPER_ENERGY_MOMENT, Direction::Upper, ee, with_moment, h.n(), h.m())
            .with_k(k)
            .extra("energy", energy)
            .extra("moment2_root", root),
        BoundReport::new(ids::EE_UPPER_ENERGY_EXP, Direction::Upper, ee, with_exp, h.n(), h.m())
            .with_k(k)
            .extra("energy", energy),
    ])
}

/// `EE(h) + EE(h̄) ≥ 2e^{(n−1)/2} + 2(n−1)e^{−1/2}` with `h̄` the k-uniform
/// complement. Equality is reported, not asserted.
pub fn check_nordhaus_gaddum(h: &Hypergraph, k: usize) -> Result<BoundReport> {
    require_uniform(h, k)?;
    nordhaus_gaddum_report(h, &spectrum(h)?, k)
}

fn nordhaus_gaddum_report(h: &Hypergraph, s: &Spectrum, k: usize) -> Result<BoundReport> {
    let complement = h.complement_uniform(k)?;
    let ee = s.estrada()?;
    let ee_bar = spectrum(&complement)?.estrada()?;
    let rhs = nordhaus_gaddum_rhs(h.n());
    Ok(BoundReport::new(ids::EE_NORDHAUS_GADDUM, Direction::Lower, ee + ee_bar, rhs, h.n(), h.m())
        .with_k(k)
        .extra("ee", ee)
        .extra("ee_complement", ee_bar)
        .extra("complement_edges", complement.m() as f64))
}

/// Options for [`check_bounds_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    /// `t` for the t-largest bounds; ignored when `all_t` is set.
    pub t: usize,
    /// Sweep every `t` in `2..=n`.
    pub all_t: bool,
    /// Also run the matrix-level t-largest bound in both denominator forms.
    pub matrix_variants: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            t: 2,
            all_t: false,
            matrix_variants: false,
        }
    }
}

/// The eight hypergraph-level bound reports at `t = 2`, ordered by id.
pub fn check_all_bounds(h: &Hypergraph, k: usize) -> Result<Vec<BoundReport>> {
    check_bounds_with(h, k, SuiteOptions::default())
}

pub fn check_bounds_with(h: &Hypergraph, k: usize, opts: SuiteOptions) -> Result<Vec<BoundReport>> {
    require_uniform(h, k)?;
    let a = DenseSymmetricMatrix::adjacency(h);
    let s = eigendecompose(&a)?;
    let n = h.n();
    let ts: Vec<usize> = if opts.all_t {
        (2..=n).collect()
    } else {
        check_t(opts.t, n)?;
        vec![opts.t]
    };

    let mut reports = Vec::new();
    for &t in &ts {
        reports.push(sum_t_hypergraph_report(h, &s, k, t));
        if opts.matrix_variants {
            for v in [SumBoundVariant::AsWritten, SumBoundVariant::ThetaPlusOne] {
                let mut r = sum_t_matrix_report(&a, &s, t, v);
                r.m = h.m();
                reports.push(r);
            }
        }
    }
    reports.push(moment2_report(h, &s, k));
    reports.push(ee_lower_spectral_report(h, &s)?);
    reports.push(ee_lower_edges_report(h, &s, k)?);
    reports.push(ee_upper_edges_report(h, &s, k)?);
    reports.extend(ee_upper_energy_reports(h, &s, k)?);
    reports.push(nordhaus_gaddum_report(h, &s, k)?);
    reports.sort_by(|x, y| x.bound_id.cmp(&y.bound_id).then(x.t.cmp(&y.t)));
    Ok(reports)
}

/// A hypergraph with exactly two distinct adjacency eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwoEigenvalueWitness {
    pub beta: usize,
    pub certificate: BibdCertificate,
    #[serde(serialize_with = "sig12")]
    pub lambda1: f64,
    #[serde(serialize_with = "sig12")]
    pub lambda_rest: f64,
}

/// Two distinct eigenvalues, BIBD pair balance and `A = β(J − I)` are
/// evaluated independently; any disagreement is an [`Error::Inconsistent`].
/// Returns the design when all three hold.
pub fn classify_two_eigenvalue(h: &Hypergraph) -> Result<Option<TwoEigenvalueWitness>> {
    let k = match h.uniformity() {
        Uniformity::Uniform(k) => k,
        Uniformity::Vacuous => return Ok(None),
        Uniformity::Mixed => return Err(Error::NonUniform),
    };
    let n = h.n();
    let s = spectrum(h)?;
    let distinct = s.distinct_eigenvalues();
    let two = distinct.len() == 2;
    let certificate = bibd_validate(h)?;
    let beta_jminusi = constant_pair_multiplicity(h);

    if two != certificate.is_some() || certificate.is_some() != beta_jminusi.is_some() {
        return Err(Error::Inconsistent(format!(
            "two eigenvalues: {two}, design: {}, A = β(J-I): {}",
            certificate.is_some(),
            beta_jminusi.is_some()
        )));
    }
    let (Some(certificate), Some(beta)) = (certificate, beta_jminusi) else {
        return Ok(None);
    };
    if certificate.beta != beta {
        return Err(Error::Inconsistent(format!(
            "design β = {} but adjacency β = {beta}",
            certificate.beta
        )));
    }
    let top = (beta * (n - 1)) as f64;
    let rest = -(beta as f64);
    let tol = s.zero_tolerance().max(1e-9 * top);
    let spectrum_ok = (distinct[0].0 - top).abs() <= tol
        && distinct[0].1 == 1
        && (distinct[1].0 - rest).abs() <= tol
        && distinct[1].1 == n - 1;
    if !spectrum_ok {
        return Err(Error::Inconsistent(format!(
            "spectrum {distinct:?} is not ({top}, {rest} x {})",
            n - 1
        )));
    }
    let r = beta * (n - 1) / (k - 1);
    if !h.is_regular(r) {
        return Err(Error::Inconsistent(format!("degrees differ from r = {r}")));
    }
    Ok(Some(TwoEigenvalueWitness {
        beta,
        certificate,
        lambda1: distinct[0].0,
        lambda_rest: distinct[1].0,
    }))
}

/// `Some(β)` when every off-diagonal adjacency entry equals the same `β ≥ 1`.
pub fn constant_pair_multiplicity(h: &Hypergraph) -> Option<usize> {
    let n = h.n();
    if n < 2 {
        return None;
    }
    let a = IntMatrix::adjacency(h);
    let beta = a.get(0, 1);
    let constant = (0..n).all(|i| (0..n).all(|j| i == j || a.get(i, j) == beta));
    (constant && beta >= 1).then_some(beta as usize)
}

/// Right-hand side of the Nordhaus–Gaddum bound for order `n`.
pub fn nordhaus_gaddum_rhs(n: usize) -> f64 {
    let n1 = n as f64 - 1.0;
    2.0 * (n1 / 2.0).exp() + 2.0 * n1 * (-0.5f64).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_uniform, cycle, fano};
    use std::f64::consts::E;

    fn single() -> Hypergraph {
        Hypergraph::new(3, [[0, 1, 2]]).unwrap()
    }
    fn c23() -> Hypergraph {
        cycle(2, 3).unwrap().0
    }
    fn k43() -> Hypergraph {
        complete_uniform(4, 3).unwrap()
    }
    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn sum_t_matrix_examples() {
        let r = check_sum_t_largest_matrix(&DenseSymmetricMatrix::zeros(4), 2, SumBoundVariant::AsWritten).unwrap();
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
        assert!(r.holds && r.equality);

        // path graph P4 as a 2-uniform hypergraph
        let p4 = Hypergraph::new(4, [[0, 1], [1, 2], [2, 3]]).unwrap();
        let a = DenseSymmetricMatrix::adjacency(&p4);
        let r = check_sum_t_largest_matrix(&a, 2, SumBoundVariant::ThetaPlusOne).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(close(r.lhs, golden + 1.0 / golden, 1e-12));
        assert!(r.holds);

        let a = DenseSymmetricMatrix::adjacency(&c23());
        let r = check_sum_t_largest_matrix(&a, 2, SumBoundVariant::AsWritten).unwrap();
        assert!(close(r.lhs, 1.0 + 5f64.sqrt(), 1e-12));
        assert!(close(r.rhs, 4.0 * 0.2 * (2.0 + 10f64.sqrt()) * 2.0, 1e-12));
        assert!(close(r.rhs, 8.260, 1e-3));
        assert!(r.holds && !r.equality);
        assert!(r.note.is_some());

        assert!(matches!(
            check_sum_t_largest_matrix(&a, 1, SumBoundVariant::AsWritten),
            Err(Error::TOutOfRange { t: 1, n: 4 })
        ));
        assert!(check_sum_t_largest_matrix(&a, 5, SumBoundVariant::AsWritten).is_err());
    }

    #[test]
    fn sum_t_hypergraph_examples() {
        let r = check_sum_t_largest_hypergraph(&Hypergraph::edgeless(5), 3, 2).unwrap();
        assert!(r.equality && r.rhs == 0.0);
        let r = check_sum_t_largest_hypergraph(&c23(), 3, 2).unwrap();
        assert!(close(r.rhs, 8.0 / 5.0 * (2.0 + 10f64.sqrt()), 1e-12));
        assert!(r.holds);
        let r = check_sum_t_largest_hypergraph(&k43(), 3, 2).unwrap();
        assert!(close(r.lhs, 6.0 - 2.0, 1e-10));
        assert!(close(r.rhs, 8.0 / 7.0 * (3.0 + 21f64.sqrt()), 1e-12));
        assert!(r.holds);
        assert!(matches!(
            check_sum_t_largest_hypergraph(&c23(), 4, 2),
            Err(Error::NotUniform { k: 4 })
        ));
    }

    #[test]
    fn moment2_examples() {
        let r = check_moment2_bounds(&single(), 3).unwrap();
        assert!(close(r.lhs, 6.0, 1e-12) && r.rhs == 6.0);
        assert!(r.equality && r.lower.as_ref().unwrap().equality);
        let r = check_moment2_bounds(&c23(), 3).unwrap();
        assert!(close(r.lhs, 16.0, 1e-10) && r.equality);
        let low = r.lower.unwrap();
        assert!(low.rhs == 12.0 && !low.equality && low.holds);
        let r = check_moment2_bounds(&k43(), 3).unwrap();
        assert!(close(r.lhs, 48.0, 1e-10) && r.rhs == 48.0 && r.lower.unwrap().rhs == 24.0);
    }

    #[test]
    fn ee_lower_examples() {
        let r = check_ee_lower_spectral(&Hypergraph::edgeless(4)).unwrap();
        assert!(r.equality && r.lhs == 4.0);
        let r = check_ee_lower_spectral(&single()).unwrap();
        assert!(close(r.rhs, E * E, 1e-12) && r.holds && !r.equality);
        let r = check_ee_lower_spectral(&k43()).unwrap();
        assert!(close(r.rhs, 6f64.exp() - 3.0, 1e-9));

        let r = check_ee_lower_edges(&Hypergraph::edgeless(5), 3).unwrap();
        assert!(r.equality && r.rhs == 5.0);
        let r = check_ee_lower_edges(&single(), 3).unwrap();
        assert!(close(r.rhs, 21f64.sqrt(), 1e-12) && !r.equality);
        assert_eq!(check_ee_lower_edges(&k43(), 3).unwrap().rhs, 8.0);
    }

    #[test]
    fn ee_upper_examples() {
        let r = check_ee_upper_edges(&Hypergraph::edgeless(5), 3).unwrap();
        assert!(r.equality && r.rhs == 5.0);
        let r = check_ee_upper_edges(&c23(), 3).unwrap();
        assert!(close(r.rhs, 3.0 + 4f64.exp(), 1e-12) && r.holds);
        let r = check_ee_upper_edges(&single(), 3).unwrap();
        assert!(close(r.rhs, 2.0 + 6f64.sqrt().exp(), 1e-12));

        let [a, b] = check_ee_upper_energy(&Hypergraph::edgeless(4), 3).unwrap();
        assert!(a.equality && b.equality && a.rhs == 4.0 && b.rhs == 4.0);
        let [a, _] = check_ee_upper_energy(&c23(), 3).unwrap();
        assert!(close(a.rhs, 4.0 + 2.0 * (1.0 + 5f64.sqrt()) - 1.0 - 4.0 + 4f64.exp(), 1e-10));
        assert!(close(a.rhs, 60.07, 0.01));
        let [_, b] = check_ee_upper_energy(&single(), 3).unwrap();
        assert!(close(b.rhs, 2.0 + 4f64.exp(), 1e-10));
    }

    #[test]
    fn nordhaus_gaddum_examples() {
        let r = check_nordhaus_gaddum(&c23(), 3).unwrap();
        assert!(close(r.lhs, 53.72, 0.01));
        assert!(close(r.rhs, 12.603, 1e-3));
        assert!(close(r.rhs, nordhaus_gaddum_rhs(4), 1e-12));
        let r = check_nordhaus_gaddum(&Hypergraph::edgeless(4), 3).unwrap();
        assert!(close(r.lhs, 4.0 + 6f64.exp() + 3.0 * (-2f64).exp(), 1e-9));
        let r = check_nordhaus_gaddum(&fano(), 3).unwrap();
        let want = 6f64.exp() + 6.0 * (-1f64).exp() + 24f64.exp() + 6.0 * (-4f64).exp();
        assert!(close(r.lhs, want, want * 1e-12));
        assert!(r.holds && !r.equality);
    }

    #[test]
    fn all_bounds_c23() {
        let reports = check_all_bounds(&c23(), 3).unwrap();
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(|r| r.holds));
        let mut ids: Vec<&str> = reports.iter().map(|r| r.bound_id.as_str()).collect();
        let sorted = {
            let mut s = ids.clone();
            s.sort();
            s
        };
        assert_eq!(ids, sorted);
        ids.dedup();
        assert_eq!(ids.len(), 8);
    }

    #[test]
    fn all_bounds_edgeless_equalities() {
        for r in check_all_bounds(&Hypergraph::edgeless(5), 3).unwrap() {
            assert!(r.holds, "{}", r.bound_id);
            if [ids::EE_LOWER_EDGES, ids::EE_UPPER_EDGES, ids::EE_UPPER_ENERGY_EXP].contains(&r.bound_id.as_str()) {
                assert!(r.equality, "{}", r.bound_id);
            }
        }
    }

    #[test]
    fn full_suite_sweeps_t() {
        let opts = SuiteOptions {
            all_t: true,
            matrix_variants: true,
            ..Default::default()
        };
        let reports = check_bounds_with(&k43(), 3, opts).unwrap();
        // 3 values of t with three t-reports each, plus seven others (the
        // energy check reports two bounds)
        assert_eq!(reports.len(), 3 * 3 + 7);
        assert!(reports.iter().all(|r| r.holds));
    }

    #[test]
    fn two_eigenvalue_examples() {
        let w = classify_two_eigenvalue(&fano()).unwrap().unwrap();
        assert_eq!(w.beta, 1);
        assert!(close(w.lambda1, 6.0, 1e-9) && close(w.lambda_rest, -1.0, 1e-9));
        let w = classify_two_eigenvalue(&k43()).unwrap().unwrap();
        assert_eq!((w.beta, w.certificate.r), (2, 3));
        assert!(close(w.lambda1, 6.0, 1e-9) && close(w.lambda_rest, -2.0, 1e-9));
        assert_eq!(classify_two_eigenvalue(&c23()), Ok(None));
        assert_eq!(classify_two_eigenvalue(&Hypergraph::edgeless(4)), Ok(None));
    }
}
