//! The intercategory of sets (spans of spans of finite sets) passes the full
//! law suite, is chiral but not strict, and every interchanger probe is
//! invertible.

use intercat::constructions::fixtures::{set2, set2_non_normal, set2_probes};
use intercat::core::{check_laws, chirality, is_identity_cube, test_invertible, Intercategory, Verdict};
use std::collections::BTreeSet;

#[test]
fn span2_full_law_suite_passes() {
    let a = set2();
    let probes = set2_probes(&a, 3);
    let report = check_laws(&a, &probes, &BTreeSet::new());
    assert!(report.len() > 140, "law suite too thin: {} instances", report.len());
    assert!(report.passed(), "{report}");
}

#[test]
fn span2_interchangers_all_invertible() {
    let a = set2();
    let probes = set2_probes(&a, 3);
    let mut chis = 0;
    for x in &probes.bcells {
        for y in &probes.bcells {
            if a.bcell_east(x) != a.bcell_west(y) {
                continue;
            }
            for xb in &probes.bcells {
                if a.bcell_south(x) != a.bcell_north(xb) {
                    continue;
                }
                for yb in &probes.bcells {
                    if a.bcell_east(xb) != a.bcell_west(yb) || a.bcell_south(y) != a.bcell_north(yb) {
                        continue;
                    }
                    let chi = a.chi(x, y, xb, yb).unwrap();
                    let (verdict, _) = test_invertible(&a, &chi);
                    assert!(
                        matches!(verdict, Verdict::Identity | Verdict::Invertible),
                        "chi not invertible"
                    );
                    chis += 1;
                }
            }
        }
    }
    assert!(chis > 0, "no chi probes");
    // mu and tau are literal identities
    for v in &probes.vars {
        for w in &probes.vars {
            if a.var_tgt(v) != a.var_src(w) {
                continue;
            }
            assert!(is_identity_cube(&a, &a.mu(v, w).unwrap()));
        }
    }
    for o in &probes.objs {
        assert!(is_identity_cube(&a, &a.tau(o)));
    }
    // delta is an identity in the normal regime
    for h in &probes.hars {
        for k in &probes.hars {
            if a.har_tgt(h) != a.har_src(k) {
                continue;
            }
            assert!(is_identity_cube(&a, &a.delta(h, k).unwrap()));
        }
    }
}

#[test]
fn span2_chiral_not_strict() {
    let a = set2();
    let probes = set2_probes(&a, 3);
    let verdict = chirality(&a, &probes);
    assert!(verdict.chiral);
    assert!(!verdict.strict, "pair relabeling should keep chi away from the identity");
}

#[test]
fn span2_non_normal_delta_is_invertible_but_not_identity() {
    let a = set2_non_normal();
    let probes = set2_probes(&a, 3);
    let mut nontrivial = 0;
    for h in &probes.hars {
        for k in &probes.hars {
            if a.har_tgt(h) != a.har_src(k) {
                continue;
            }
            let delta = a.delta(h, k).unwrap();
            let (verdict, _) = test_invertible(&a, &delta);
            match verdict {
                Verdict::Identity => {}
                Verdict::Invertible => nontrivial += 1,
                other => panic!("delta verdict {other:?}"),
            }
        }
    }
    assert!(nontrivial > 0, "expected a nontrivial delta in the non-normal regime");
    // the rest of the law suite still holds
    let report = check_laws(&a, &probes, &BTreeSet::new());
    assert!(report.passed(), "{report}");
}
