//! Numerical checks of the product-energy bound, the ℓ∞ delocalization bound
//! for near-bipartite eigenvectors, the two-step walk identities, and the
//! cut-vector upper bound on the bottom of the signless spectrum.
//!
//! Every check returns a [`BoundReport`] carrying both sides of the
//! inequality (or identity), the tolerance used and the verdict.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, VertexFunction};
use crate::product::hadamard;
use crate::spectra::{
    decompose_signless, dirichlet_energy, is_numerically_zero, rayleigh_quotient, signless_energy,
    Operator,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// `⟨φψ, L φψ⟩ ≤ 2ε(‖φ‖∞²‖ψ‖₂² + ‖φ‖₂²‖ψ‖∞²)`
    Thm1ProofForm,
    /// The same inequality divided through by `‖φψ‖₂²`.
    Thm1Normalized,
    /// `‖φ‖∞ ≤ (d/(d-ε))^{2k} ‖(AD⁻¹)^{2k} δ_m‖₂ ‖φ‖₂`
    Thm2,
    /// `‖φ - (AD⁻¹)²φ‖₂ = (ε/d)(2 - ε/d)‖φ‖₂`
    Corollary,
    /// `‖φ - AD⁻¹φ‖₂ = (2 - ε/d)‖φ‖₂`
    OneStep,
    /// `λ_min(D + A) ≤ ⟨χ, (D+A)χ⟩ / ‖χ‖²`
    RayleighRitzCut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// `lhs ≤ rhs + tolerance`
    AtMost,
    /// `|lhs - rhs| ≤ tolerance`
    Equal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem: Theorem,
    pub relation: Relation,
    pub inputs: String,
    /// Signless Rayleigh quotient of each input vector.
    pub epsilon: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub tolerance: f64,
    pub satisfied: bool,
    pub diagnostics: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub related: Vec<BoundReport>,
}

impl BoundReport {
    fn new(
        theorem: Theorem,
        relation: Relation,
        inputs: String,
        epsilon: Vec<f64>,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
    ) -> Self {
        let satisfied = match relation {
            Relation::AtMost => lhs <= rhs + tolerance,
            Relation::Equal => (lhs - rhs).abs() <= tolerance,
        };
        Self {
            theorem,
            relation,
            inputs,
            epsilon,
            lhs,
            rhs,
            slack: rhs - lhs,
            tolerance,
            satisfied,
            diagnostics: BTreeMap::new(),
            related: Vec::new(),
        }
    }

    fn diag(mut self, key: &str, value: f64) -> Self {
        self.diagnostics.insert(key.to_owned(), value);
        self
    }

    /// Replaces the input description, here and in related reports.
    pub fn with_inputs(mut self, inputs: impl Into<String>) -> Self {
        let inputs = inputs.into();
        for r in &mut self.related {
            r.inputs = inputs.clone();
        }
        self.inputs = inputs;
        self
    }

    /// This verdict and every related one.
    pub fn all_satisfied(&self) -> bool {
        self.satisfied && self.related.iter().all(BoundReport::all_satisfied)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckTolerances {
    /// Slack allowed on inequalities, relative to the magnitude of the terms.
    pub slack_rel: f64,
    /// Allowed `|lhs - rhs|` on identities, relative to `‖φ‖₂`.
    pub equality_rel: f64,
    /// Allowed `‖(D+A)φ - εφ‖₂`, relative to `‖φ‖₂`.
    pub eigen_residual_rel: f64,
}

impl Default for CheckTolerances {
    fn default() -> Self {
        Self {
            slack_rel: 1e-9,
            equality_rel: 1e-8,
            eigen_residual_rel: 1e-8,
        }
    }
}

impl CheckTolerances {
    /// Every tolerance set to `tol`.
    pub fn uniform(tol: f64) -> Self {
        Self {
            slack_rel: tol,
            equality_rel: tol,
            eigen_residual_rel: tol,
        }
    }
}

fn describe(g: &Graph) -> String {
    format!("graph n={} m={}", g.n(), g.edge_count())
}

fn signless_quotient_or_zero(g: &Graph, f: &VertexFunction) -> Result<f64> {
    if is_numerically_zero(f) {
        Ok(0.0)
    } else {
        rayleigh_quotient(g, f, Operator::Signless)
    }
}

/// Product-energy bound for arbitrary `φ, ψ`.
///
/// `ε` is the larger of the two signless quotients, the smallest value for
/// which both hypotheses hold. The top-level report is the unnormalized
/// inequality; when `φψ` is nonzero, the normalized form (both sides over
/// `‖φψ‖₂²`) is attached in `related`. The diagnostic `rhs_first_power`
/// records the right side divided by `‖φψ‖₂` instead.
pub fn theorem1_check(
    g: &Graph,
    phi: &VertexFunction,
    psi: &VertexFunction,
    tol: &CheckTolerances,
) -> Result<BoundReport> {
    g.check_len(phi)?;
    g.check_len(psi)?;
    let eps_phi = signless_quotient_or_zero(g, phi)?;
    let eps_psi = signless_quotient_or_zero(g, psi)?;
    let eps = eps_phi.max(eps_psi);

    let (phi_l2, psi_l2) = (phi.norm_sq(), psi.norm_sq());
    let (phi_inf, psi_inf) = (phi.norm_inf().powi(2), psi.norm_inf().powi(2));
    let mixed = phi_inf * psi_l2 + phi_l2 * psi_inf;

    let product = hadamard(phi, psi)?;
    let lhs = dirichlet_energy(g, &product)?;
    let rhs = 2.0 * eps * mixed;
    let scale = (g.max_degree() as f64 * mixed).max(lhs).max(rhs);
    let tolerance = tol.slack_rel * scale;

    let mut report = BoundReport::new(
        Theorem::Thm1ProofForm,
        Relation::AtMost,
        describe(g),
        vec![eps_phi, eps_psi],
        lhs,
        rhs,
        tolerance,
    )
    .diag("phi_l2_sq", phi_l2)
    .diag("psi_l2_sq", psi_l2)
    .diag("phi_linf_sq", phi_inf)
    .diag("psi_linf_sq", psi_inf)
    .diag("epsilon_max", eps);

    if !is_numerically_zero(&product) {
        let p2 = product.norm_sq();
        report = report
            .diag("product_l2_sq", p2)
            .diag("rhs_first_power", rhs / p2.sqrt());
        let normalized = BoundReport::new(
            Theorem::Thm1Normalized,
            Relation::AtMost,
            report.inputs.clone(),
            vec![eps_phi, eps_psi],
            lhs / p2,
            rhs / p2,
            tolerance / p2,
        );
        report.related.push(normalized);
    } else {
        report = report.diag("product_l2_sq", product.norm_sq());
    }
    Ok(report)
}

/// `(AD⁻¹)^steps δ_start`.
pub fn walk_distribution(g: &Graph, start: usize, steps: usize) -> Result<VertexFunction> {
    if start >= g.n() {
        return Err(Error::InvalidParameter(format!(
            "start vertex {start} outside 0..{}",
            g.n()
        )));
    }
    let mut w = VertexFunction::delta(g.n(), start);
    if g.degrees().contains(&0) {
        // the walk is undefined even for zero steps
        g.apply_walk(&w)?;
    }
    for _ in 0..steps {
        w = g.apply_walk(&w)?;
    }
    Ok(w)
}

struct SignlessEigenpair {
    degree: usize,
    epsilon: f64,
    residual: f64,
}

/// Validates that `g` is regular and `φ` is an eigenvector of `D + A`, with
/// the eigenvalue estimated by the signless Rayleigh quotient.
fn signless_eigenpair(
    g: &Graph,
    phi: &VertexFunction,
    tol: &CheckTolerances,
) -> Result<SignlessEigenpair> {
    let degree = g.is_regular().ok_or(Error::RegularityRequired)?;
    g.check_len(phi)?;
    let epsilon = rayleigh_quotient(g, phi, Operator::Signless)?;
    let residual = g.apply_signless(phi)?.plus_scaled(-epsilon, phi).norm();
    let allowed = tol.eigen_residual_rel * phi.norm();
    if residual > allowed {
        return Err(Error::NotAnEigenvector { residual, allowed });
    }
    Ok(SignlessEigenpair {
        degree,
        epsilon,
        residual,
    })
}

/// Position of the largest `|φ(v)|`, lowest index among exact ties.
pub fn argmax_abs(phi: &VertexFunction) -> usize {
    let mut best = 0;
    for (v, x) in phi.iter().enumerate() {
        if x.abs() > phi[best].abs() {
            best = v;
        }
    }
    best
}

/// ℓ∞ bound for an eigenvector of `D + A` on a d-regular graph, with walk
/// length `2k` started at the maximizing vertex `m`.
///
/// The diagnostic `rhs_max_form` replaces `‖(AD⁻¹)^{2k} δ_m‖₂` by its
/// maximum over all start vertices.
pub fn theorem2_check(
    g: &Graph,
    phi: &VertexFunction,
    k: usize,
    tol: &CheckTolerances,
) -> Result<BoundReport> {
    let pair = signless_eigenpair(g, phi, tol)?;
    let d = pair.degree as f64;
    if pair.epsilon >= d {
        return Err(Error::BoundInapplicable {
            epsilon: pair.epsilon,
            degree: pair.degree,
        });
    }
    let m = argmax_abs(phi);
    let steps = 2 * k;
    let walk_norm = walk_distribution(g, m, steps)?.norm();
    let factor = (d / (d - pair.epsilon)).powi(steps as i32);
    let lhs = phi.norm_inf();
    let rhs = factor * walk_norm * phi.norm();

    let mut worst_walk: f64 = 0.0;
    for v in 0..g.n() {
        worst_walk = worst_walk.max(walk_distribution(g, v, steps)?.norm());
    }

    let tolerance = tol.slack_rel * lhs.max(rhs);
    Ok(BoundReport::new(
        Theorem::Thm2,
        Relation::AtMost,
        describe(g),
        vec![pair.epsilon],
        lhs,
        rhs,
        tolerance,
    )
    .diag("degree", d)
    .diag("k", k as f64)
    .diag("argmax_vertex", m as f64)
    .diag("walk_l2", walk_norm)
    .diag("growth_factor", factor)
    .diag("phi_l2", phi.norm())
    .diag("eigen_residual", pair.residual)
    .diag("rhs_max_form", factor * worst_walk * phi.norm()))
}

/// Two-step and one-step walk identities for an eigenvector of `D + A` on a
/// d-regular graph. The one-step identity is attached in `related`; the
/// diagnostic `walk_relation_defect` is `‖(AD⁻¹)²φ - (1 - ε/d)²φ‖₂ / ‖φ‖₂`.
pub fn corollary_check(
    g: &Graph,
    phi: &VertexFunction,
    tol: &CheckTolerances,
) -> Result<BoundReport> {
    let pair = signless_eigenpair(g, phi, tol)?;
    let d = pair.degree as f64;
    let ratio = pair.epsilon / d;
    let norm = phi.norm();
    let one = g.apply_walk(phi)?;
    let two = g.apply_walk(&one)?;
    let tolerance = tol.equality_rel * norm;

    let one_step = BoundReport::new(
        Theorem::OneStep,
        Relation::Equal,
        describe(g),
        vec![pair.epsilon],
        phi.minus(&one).norm(),
        (2.0 - ratio) * norm,
        tolerance,
    );
    let defect = two.plus_scaled(-(1.0 - ratio).powi(2), phi).norm() / norm;
    let mut report = BoundReport::new(
        Theorem::Corollary,
        Relation::Equal,
        describe(g),
        vec![pair.epsilon],
        phi.minus(&two).norm(),
        ratio * (2.0 - ratio) * norm,
        tolerance,
    )
    .diag("degree", d)
    .diag("phi_l2", norm)
    .diag("eigen_residual", pair.residual)
    .diag("walk_relation_defect", defect);
    report.related.push(one_step);
    Ok(report)
}

/// Bottom of the signless spectrum against the quotient of the cut vector
/// `χ = +1 on A, -1 on B`, which is `4 · (#edges inside a part) / n`.
pub fn rayleigh_ritz_cut(
    g: &Graph,
    part_a: &[usize],
    part_b: &[usize],
    tol: &CheckTolerances,
) -> Result<BoundReport> {
    let partition = Bipartition::from_parts(g.n(), part_a, part_b)?;
    let chi = partition.cut_vector();
    let rhs = signless_energy(g, &chi)? / chi.norm_sq();
    let spectrum = decompose_signless(g)?;
    let lhs = *spectrum.eigenvalues.last().expect("nonempty graph");
    let within = partition.within_edges(g);
    Ok(BoundReport::new(
        Theorem::RayleighRitzCut,
        Relation::AtMost,
        describe(g),
        vec![rhs],
        lhs,
        rhs,
        tol.slack_rel * rhs.max(1.0),
    )
    .diag("within_edges", within as f64)
    .diag("part_a", part_a.len() as f64)
    .diag("part_b", part_b.len() as f64))
}
