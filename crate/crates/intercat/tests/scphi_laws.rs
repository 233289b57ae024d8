//! The quintet construction: law suite on the identity quintet, tau = phi,
//! the chi trace factorization, the degeneration to spans of cospans, and
//! the invertibility theorem across the generated quintet family.

use intercat::constructions::fixtures::{finset_quintets, sc_probes, spancosp};
use intercat::constructions::{sc_phi, sc_phi_theorem, ScQuintet};
use intercat::core::{check_laws, test_invertible, IntercatProbes, Intercategory, Verdict};
use intercat::doublecat::FinSetCat;
use intercat::finset::{FinFn, FinSetObj};
use std::collections::BTreeSet;

#[test]
fn identity_quintet_law_suite() {
    let sc = sc_phi(
        ScQuintet::identity(FinSetCat::new(), "identity"),
        &[FinSetObj::point()],
    )
    .unwrap();
    let p = sc_probes(&sc);
    let mut probes = IntercatProbes {
        objs: p.objs.clone(),
        tars: vec![FinFn::constant(
            FinSetObj::from_labels(["x", "y"]),
            FinSetObj::point(),
            intercat::finset::Elem::from("*"),
        )],
        hars: p.hars.clone(),
        vars: p.vars.clone(),
        hcells: vec![],
        vcells: vec![],
        bcells: p.grids.iter().flat_map(|g| g.iter().cloned()).collect(),
        cubes: vec![],
    };
    probes.saturate(&sc);
    let report = check_laws(&sc, &probes, &BTreeSet::new());
    assert!(report.passed(), "{report}");
}

#[test]
fn tau_is_phi_componentwise() {
    for quintet in finset_quintets() {
        let label = quintet.label.clone();
        let sc = sc_phi(quintet, &[FinSetObj::point(), FinSetObj::from_labels(["x", "y"])]).unwrap();
        for obj in [FinSetObj::point(), FinSetObj::from_labels(["x", "y"])] {
            let tau = sc.tau(&obj);
            assert_eq!(tau.dmor, sc.q.phi.at(&obj), "tau != phi for {label}");
        }
    }
}

#[test]
fn chi_trace_composite_equals_chi() {
    for quintet in finset_quintets() {
        let label = quintet.label.clone();
        let sc = sc_phi(quintet, &[FinSetObj::point()]).unwrap();
        let p = sc_probes(&sc);
        for [a, b, abar, bbar] in &p.grids {
            let (chi, trace) = sc.chi_trace(a, b, abar, bbar).unwrap();
            let composite = trace
                .kappa_step
                .then(&trace.theta)
                .and_then(|x| x.then(&trace.psi_step))
                .and_then(|x| x.then(&trace.gamma_step))
                .unwrap();
            assert_eq!(composite, chi.dmor, "trace mismatch for {label}");
        }
    }
}

#[test]
fn theorem_agreement_across_family() {
    let quintets = finset_quintets();
    assert!(quintets.len() >= 20, "family too small: {}", quintets.len());
    for quintet in quintets {
        let label = quintet.label.clone();
        let sc = sc_phi(quintet, &[FinSetObj::point()]).unwrap();
        let probes = sc_probes(&sc);
        let report = sc_phi_theorem(&sc, &probes).unwrap();
        assert!(
            report.all_agreements_hold(),
            "theorem disagreement for {label}: {}",
            report.agreement
        );
    }
}

#[test]
fn collapsing_k_makes_delta_noninvertible() {
    let quintet = finset_quintets().into_iter().find(|q| q.label == "k-double").unwrap();
    let sc = sc_phi(quintet, &[FinSetObj::point()]).unwrap();
    let probes = sc_probes(&sc);
    let report = sc_phi_theorem(&sc, &probes).unwrap();
    assert!(!report.phi_mono);
    assert!(!report.delta_all_invertible);
    assert!(report.phi_epi);
}

#[test]
fn non_surjective_phi_makes_mu_noninvertible() {
    let quintet = finset_quintets().into_iter().find(|q| q.label == "g-addpt").unwrap();
    let sc = sc_phi(quintet, &[FinSetObj::point()]).unwrap();
    let probes = sc_probes(&sc);
    let report = sc_phi_theorem(&sc, &probes).unwrap();
    assert!(report.phi_mono);
    assert!(!report.phi_epi);
    assert!(!report.mu_all_invertible);
    assert!(!report.tau_all_invertible);
}

#[test]
fn identity_quintet_coincides_with_spancosp() {
    // sort-for-sort comparison with spans of cospans over the same base
    let sc = sc_phi(ScQuintet::identity(FinSetCat::new(), "identity"), &[]).unwrap();
    let scosp = spancosp();
    let p = sc_probes(&sc);

    let tr_har = |h: &intercat::constructions::scphi::FSpan<FinSetObj, FinFn>| {
        intercat::constructions::span::HSpan {
            left: h.left.clone(),
            right: h.right.clone(),
        }
    };
    let tr_var = |v: &intercat::constructions::scphi::HCosp<FinSetObj, FinFn>| {
        intercat::doublecat::cosp::CospV {
            left: v.left.clone(),
            right: v.right.clone(),
        }
    };
    let tr_bcell = |b: &intercat::constructions::scphi::ScCell<FinSetObj, FinFn>| {
        let mid = intercat::doublecat::cosp::CospV {
            left: b.kb1.clone(),
            right: b.kb2.clone(),
        };
        intercat::constructions::span::BSpan {
            lcell: intercat::doublecat::cosp::CospCell {
                top: b.north.left.clone(),
                bot: b.south.left.clone(),
                west: mid.clone(),
                east: tr_var(&b.west),
                mid: b.gc1.clone(),
            },
            rcell: intercat::doublecat::cosp::CospCell {
                top: b.north.right.clone(),
                bot: b.south.right.clone(),
                west: mid,
                east: tr_var(&b.east),
                mid: b.gc2.clone(),
            },
        }
    };

    // objects and arrows translate on the nose
    for h in &p.hars {
        let th = tr_har(h);
        assert_eq!(sc.har_src(h), scosp.har_src(&th));
        for k in &p.hars {
            if sc.har_tgt(h) != sc.har_src(k) {
                continue;
            }
            let composed = sc.h_then_har(h, k).unwrap();
            let tcomposed = scosp.h_then_har(&tr_har(h), &tr_har(k)).unwrap();
            assert_eq!(tr_har(&composed), tcomposed, "har composition differs");
        }
    }
    for v in &p.vars {
        for w in &p.vars {
            if sc.var_tgt(v) != sc.var_src(w) {
                continue;
            }
            let composed = sc.v_then_var(v, w).unwrap();
            let tcomposed = scosp.v_then_var(&tr_var(v), &tr_var(w)).unwrap();
            assert_eq!(tr_var(&composed), tcomposed, "var composition differs");
        }
    }
    // basic cells: identities and both compositions
    for h in &p.hars {
        assert_eq!(tr_bcell(&sc.v_id_har(h)), scosp.v_id_har(&tr_har(h)));
    }
    for v in &p.vars {
        assert_eq!(tr_bcell(&sc.h_id_var(v)), scosp.h_id_var(&tr_var(v)));
    }
    for [a, b, abar, bbar] in &p.grids {
        let hcomp = sc.h_then_bcell(a, b).unwrap();
        assert_eq!(
            tr_bcell(&hcomp),
            scosp.h_then_bcell(&tr_bcell(a), &tr_bcell(b)).unwrap(),
            "bcell horizontal composition differs"
        );
        let vcomp = sc.v_then_bcell(a, abar).unwrap();
        assert_eq!(
            tr_bcell(&vcomp),
            scosp.v_then_bcell(&tr_bcell(a), &tr_bcell(abar)).unwrap(),
            "bcell vertical composition differs"
        );
        let chi = sc.chi(a, b, abar, bbar).unwrap();
        let tchi = scosp.chi(&tr_bcell(a), &tr_bcell(b), &tr_bcell(abar), &tr_bcell(bbar)).unwrap();
        assert_eq!(tr_bcell(&sc.cube_src(&chi)), scosp.cube_src(&tchi));
        assert_eq!(tr_bcell(&sc.cube_tgt(&chi)), scosp.cube_tgt(&tchi));
        assert_eq!(chi.dmor, tchi.c2.mid, "chi middle maps differ");
    }
    // tau is the identity here, matching spancosp
    for o in &p.objs {
        let (v, _) = test_invertible(&sc, &sc.tau(o));
        assert_eq!(v, Verdict::Identity);
    }
}
