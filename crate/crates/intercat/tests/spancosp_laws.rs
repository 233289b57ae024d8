//! SpanCosp(FinSet): the law suite passes, mu/delta/tau are invertible on
//! every probe, and chi fails to be invertible on an explicit 2x2 cell grid
//! where the pushout-of-pullbacks and pullback-of-pushouts have different
//! cardinalities.

use intercat::constructions::fixtures::{spancosp, spancosp_chi_counterexample, spancosp_probes};
use intercat::core::{check_laws, chirality, test_invertible, Intercategory, Verdict};
use std::collections::BTreeSet;

#[test]
fn spancosp_full_law_suite_passes() {
    let a = spancosp();
    let probes = spancosp_probes(&a, 3);
    let report = check_laws(&a, &probes, &BTreeSet::new());
    assert!(report.passed(), "{report}");
    assert!(report.len() > 100, "law suite too thin: {}", report.len());
}

#[test]
fn spancosp_degenerate_interchangers_invertible() {
    let a = spancosp();
    let probes = spancosp_probes(&a, 3);
    for v in &probes.vars {
        for w in &probes.vars {
            if a.var_tgt(v) != a.var_src(w) {
                continue;
            }
            let (verdict, _) = test_invertible(&a, &a.mu(v, w).unwrap());
            assert!(matches!(verdict, Verdict::Identity | Verdict::Invertible), "mu: {verdict:?}");
        }
    }
    for h in &probes.hars {
        for k in &probes.hars {
            if a.har_tgt(h) != a.har_src(k) {
                continue;
            }
            let (verdict, _) = test_invertible(&a, &a.delta(h, k).unwrap());
            assert!(matches!(verdict, Verdict::Identity | Verdict::Invertible), "delta: {verdict:?}");
        }
    }
    for o in &probes.objs {
        let (verdict, _) = test_invertible(&a, &a.tau(o));
        assert!(matches!(verdict, Verdict::Identity), "tau: {verdict:?}");
    }
    let verdict = chirality(&a, &probes);
    assert!(!verdict.strict);
}

#[test]
fn spancosp_chi_not_invertible_on_grid() {
    let a = spancosp();
    let (alpha, beta, abar, bbar) = spancosp_chi_counterexample(&a);
    let chi = a.chi(&alpha, &beta, &abar, &bbar).unwrap();
    // middle nadirs: pushout of pullbacks has 2 elements, pullback of
    // pushouts has 4
    let src_mid = a.cube_src(&chi);
    let tgt_mid = a.cube_tgt(&chi);
    let src_nadir = src_mid.lcell.west.left.cod.len();
    let tgt_nadir = tgt_mid.lcell.west.left.cod.len();
    assert_eq!(src_nadir, 2, "pushout of pullbacks");
    assert_eq!(tgt_nadir, 4, "pullback of pushouts");
    let (verdict, _) = test_invertible(&a, &chi);
    assert_eq!(verdict, Verdict::NotInvertible);
}
