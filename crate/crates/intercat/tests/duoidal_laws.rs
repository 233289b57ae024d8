//! Duoidal categories as one-object intercategories: the (FinSet, x, 1, +, 0)
//! instance passes the law suite, its chi/mu/tau fail invertibility on
//! suitable probes, and the trivial table duoidal yields a strict triple
//! category.

use intercat::constructions::duoidal::FinSetDuoidal;
use intercat::constructions::{duoidal_intercat, DuoidalIntercat, TableDuoidal};
use intercat::core::{check_laws, chirality, test_invertible, IntercatProbes, Intercategory, Verdict};
use intercat::finset::FinSetObj;
use std::collections::BTreeSet;

fn fs(labels: &[&str]) -> FinSetObj {
    FinSetObj::from_labels(labels.iter().copied())
}

fn finset_duoidal_probes(a: &DuoidalIntercat<FinSetDuoidal>) -> IntercatProbes<DuoidalIntercat<FinSetDuoidal>> {
    let mut probes = IntercatProbes::<DuoidalIntercat<FinSetDuoidal>> {
        objs: vec![()],
        tars: vec![],
        hars: vec![],
        vars: vec![],
        hcells: vec![],
        vcells: vec![],
        bcells: vec![fs(&["a"]), fs(&["b0", "b1"]), FinSetObj::empty()],
        cubes: vec![],
    };
    probes.saturate(a);
    probes
}

#[test]
fn finset_duoidal_law_suite_passes() {
    let a = DuoidalIntercat::new(FinSetDuoidal, "duoidal(finset)");
    let probes = finset_duoidal_probes(&a);
    let report = check_laws(&a, &probes, &BTreeSet::new());
    assert!(report.passed(), "{report}");
}

#[test]
fn finset_duoidal_interchangers_fail_invertibility() {
    let a = DuoidalIntercat::new(FinSetDuoidal, "duoidal(finset)");
    // chi at (a, b, c, d) with two-element sets is injective but not
    // surjective
    let two = fs(&["0", "1"]);
    let chi = a.chi(&two, &two, &two, &two).unwrap();
    let (v, _) = test_invertible(&a, &chi);
    assert_eq!(v, Verdict::NotInvertible);
    // chi degenerates to an iso when the arguments are the units in the
    // unit-cell pattern (first-tensor units on top, second-tensor units
    // below); at (1,1,1,1) it is the 2 -> 4 comparison and fails
    let pt = FinSetObj::point();
    let zero = FinSetObj::empty();
    let chi_unit = a.chi(&pt, &pt, &zero, &zero).unwrap();
    let (v, _) = test_invertible(&a, &chi_unit);
    assert!(matches!(v, Verdict::Invertible | Verdict::Identity));
    let chi_all_pts = a.chi(&pt, &pt, &pt, &pt).unwrap();
    assert_eq!(chi_all_pts.dom.len(), 2);
    assert_eq!(chi_all_pts.cod.len(), 4);
    let (v, _) = test_invertible(&a, &chi_all_pts);
    assert_eq!(v, Verdict::NotInvertible);
    // mu : 1 + 1 -> 1 is not injective
    let (v, _) = test_invertible(&a, &a.mu(&(), &()).unwrap());
    assert_eq!(v, Verdict::NotInvertible);
    // tau : 0 -> 1 is not surjective
    let (v, _) = test_invertible(&a, &a.tau(&()));
    assert_eq!(v, Verdict::NotInvertible);
    // delta : 0 -> 0 x 0 is an iso for this structure
    let (v, _) = test_invertible(&a, &a.delta(&(), &()).unwrap());
    assert!(matches!(v, Verdict::Invertible | Verdict::Identity));
}

#[test]
fn trivial_duoidal_is_strict_triple_category() {
    let a = duoidal_intercat(TableDuoidal::trivial()).unwrap();
    let mut probes = IntercatProbes {
        objs: vec![()],
        tars: vec![],
        hars: vec![],
        vars: vec![],
        hcells: vec![],
        vcells: vec![],
        bcells: vec!["*".to_string()],
        cubes: vec![],
    };
    probes.saturate(&a);
    let report = check_laws(&a, &probes, &BTreeSet::new());
    assert!(report.passed(), "{report}");
    let verdict = chirality(&a, &probes);
    assert!(verdict.chiral && verdict.strict);
}
