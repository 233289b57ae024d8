//! The invertibility theorem for the quintet construction: tau is invertible
//! iff phi is; delta iff K preserves F-pullbacks and phi is monic; mu iff G
//! preserves H-pushouts and phi is epic; chi iff phi is invertible, K sends
//! F-pullbacks to quasi-pullbacks, G sends H-pushouts to quasi-pushouts, and
//! the limit-colimit exchange is invertible. All predicates are decided by
//! enumeration over probes, so every quantifier here is a bounded
//! under-approximation; the probe set automatically includes the kernel- and
//! cokernel-pair configurations that drive the converse directions.

use super::scphi::{FSpan, HCosp, ScCell, ScPhi};
use crate::core::report::LawReport;
use crate::core::{test_invertible, Intercategory, Verdict};
use crate::doublecat::base::CompCat;
use crate::Result;

/// Probe data for the theorem checker.
#[derive(Debug, Clone)]
pub struct ScProbes<C: CompCat> {
    pub objs: Vec<C::O>,
    pub hars: Vec<FSpan<C::O, C::M>>,
    pub vars: Vec<HCosp<C::O, C::M>>,
    pub grids: Vec<[ScCell<C::O, C::M>; 4]>,
}

/// Computed condition predicates and interchanger verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScTheoremReport {
    pub phi_iso: bool,
    pub phi_mono: bool,
    pub phi_epi: bool,
    pub k_preserves_pullbacks: bool,
    pub g_preserves_pushouts: bool,
    pub k_quasi_pullbacks: bool,
    pub g_quasi_pushouts: bool,
    pub theta_iso: bool,
    pub tau_all_invertible: bool,
    pub delta_all_invertible: bool,
    pub mu_all_invertible: bool,
    pub chi_all_invertible: bool,
    /// iff agreements: (1) tau, (2) delta, (3) mu, and the chi composite
    pub agreement: LawReport,
}

impl ScTheoremReport {
    pub fn all_agreements_hold(&self) -> bool {
        self.agreement.passed()
    }
}

/// Decides the four conditions and checks both directions of each iff
/// against the computed interchangers.
pub fn sc_phi_theorem<C: CompCat>(sc: &ScPhi<C>, probes: &ScProbes<C>) -> Result<ScTheoremReport> {
    let q = &sc.q;
    let mut agreement = LawReport::new();

    let mut phi_iso = true;
    let mut phi_mono = true;
    let mut phi_epi = true;
    for a in &probes.objs {
        let comp = q.phi.at(a);
        phi_iso &= q.d.is_iso(&comp);
        phi_mono &= q.d.is_mono(&comp);
        phi_epi &= q.d.is_epi(&comp);
    }

    // tau agreement: tau_A invertible iff phi_A invertible, per object
    let mut tau_all = true;
    for a in &probes.objs {
        let tau = sc.tau(a);
        let (v, _) = test_invertible(sc, &tau);
        let inv = matches!(v, Verdict::Identity | Verdict::Invertible);
        tau_all &= inv;
        agreement.check(
            "thm.tau.pointwise",
            format!("{a:?}"),
            inv == q.d.is_iso(&q.phi.at(a)),
        );
    }
    agreement.check("thm.tau", "aggregate", tau_all == phi_iso);

    // delta probes: composable pairs of F-spans, plus the kernel-pair
    // configuration (identity-legged spans) at every probe object
    let mut delta_pairs: Vec<(FSpan<C::O, C::M>, FSpan<C::O, C::M>)> = Vec::new();
    for h in &probes.hars {
        for k in &probes.hars {
            if h.tgt == k.src {
                delta_pairs.push((h.clone(), k.clone()));
            }
        }
    }
    for a in &probes.objs {
        let idh = sc.h_id_obj(a);
        delta_pairs.push((idh.clone(), idh));
    }
    let mut k_preserves = true;
    let mut k_quasi = true;
    for (h, k) in &delta_pairs {
        let kappa = sc.kappa_for(&h.right, &k.left)?;
        k_preserves &= q.d.is_iso(&kappa);
        k_quasi &= q.d.is_epi(&kappa);
    }
    let mut delta_all = true;
    for (h, k) in &delta_pairs {
        let delta = sc.delta(h, k)?;
        let (v, _) = test_invertible(sc, &delta);
        delta_all &= matches!(v, Verdict::Identity | Verdict::Invertible);
    }
    agreement.check("thm.delta", "aggregate", delta_all == (k_preserves && phi_mono));

    // mu probes: composable pairs of H-cospans plus cokernel-pair
    // configurations
    let mut mu_pairs: Vec<(HCosp<C::O, C::M>, HCosp<C::O, C::M>)> = Vec::new();
    for v in &probes.vars {
        for w in &probes.vars {
            if v.tgt == w.src {
                mu_pairs.push((v.clone(), w.clone()));
            }
        }
    }
    for a in &probes.objs {
        let idv = sc.v_id_obj(a);
        mu_pairs.push((idv.clone(), idv));
    }
    let mut g_preserves = true;
    let mut g_quasi = true;
    for (v, w) in &mu_pairs {
        let gammahat = sc.gammahat_for(&v.right, &w.left)?;
        g_preserves &= q.d.is_iso(&gammahat);
        g_quasi &= q.d.is_mono(&gammahat);
    }
    let mut mu_all = true;
    for (v, w) in &mu_pairs {
        let mu = sc.mu(v, w)?;
        let (vd, _) = test_invertible(sc, &mu);
        mu_all &= matches!(vd, Verdict::Identity | Verdict::Invertible);
    }
    agreement.check("thm.mu", "aggregate", mu_all == (g_preserves && phi_epi));

    // chi: factor through the trace and compare on every grid
    let mut theta_iso = true;
    let mut chi_all = true;
    for [alpha, beta, abar, bbar] in &probes.grids {
        let (chi, trace) = sc.chi_trace(alpha, beta, abar, bbar)?;
        let (v, _) = test_invertible(sc, &chi);
        let chi_inv = matches!(v, Verdict::Identity | Verdict::Invertible);
        chi_all &= chi_inv;
        theta_iso &= q.d.is_iso(&trace.theta);
        // the factored composite equals chi's middle morphism
        let composite = q.d.then(
            &q.d.then(&q.d.then(&trace.kappa_step, &trace.theta)?, &trace.psi_step)?,
            &trace.gamma_step,
        )?;
        agreement.check(
            "thm.chi.trace",
            format!("{:?}", alpha.mid),
            composite == chi.dmor,
        );
        // chi invertible iff every factor is
        let per_factor = q.d.is_iso(&trace.kappa_step)
            && q.d.is_iso(&trace.theta)
            && q.d.is_iso(&trace.psi_step)
            && q.d.is_iso(&trace.gamma_step);
        agreement.check("thm.chi.factors", format!("{:?}", alpha.mid), chi_inv == per_factor);
    }
    // probe-checkable directions of (4): the conjunction of (a)-(d) forces
    // chi invertible on every probed grid
    if phi_iso && k_quasi && g_quasi && theta_iso {
        agreement.check("thm.chi.forward", "aggregate", chi_all);
    }
    // and a failed tau already witnesses a non-invertible chi instance
    if !phi_iso && !probes.objs.is_empty() {
        let mut some_noninv = !tau_all;
        if !probes.grids.is_empty() {
            some_noninv |= !chi_all;
        }
        agreement.check("thm.chi.converse.tau", "aggregate", some_noninv);
    }

    Ok(ScTheoremReport {
        phi_iso,
        phi_mono,
        phi_epi,
        k_preserves_pullbacks: k_preserves,
        g_preserves_pushouts: g_preserves,
        k_quasi_pullbacks: k_quasi,
        g_quasi_pushouts: g_quasi,
        theta_iso,
        tau_all_invertible: tau_all,
        delta_all_invertible: delta_all,
        mu_all_invertible: mu_all,
        chi_all_invertible: chi_all,
        agreement,
    })
}
