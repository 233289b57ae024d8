//! Cylinder and quintet views of a double category: law suites, cylinder
//! existence as an equation, the property (*) verdicts, and the quintets of
//! the span double category.

use intercat::constructions::fixtures::{set2, set2_probes};
use intercat::constructions::{property_star, CylinderIntercat, QuintetIntercat};
use intercat::core::{check_laws, chirality, is_identity_cube, IntercatProbes, Intercategory};
use intercat::doublecat::{DoubleCat, FinDblData, FinSetCat, SpanDouble};
use std::collections::BTreeSet;

fn monoid_squares() -> FinDblData {
    FinDblData::monoid_squares(
        &["e", "a"],
        "e",
        &[("e", "e", "e"), ("e", "a", "a"), ("a", "e", "a"), ("a", "a", "e")],
    )
}

#[test]
fn cylinders_of_trivial_double_category_are_strict() {
    let a = CylinderIntercat::new(FinDblData::trivial(), "cyl(trivial)");
    let mut probes = IntercatProbes {
        objs: vec!["*".to_string()],
        tars: vec![],
        hars: vec![],
        vars: vec![],
        hcells: vec![],
        vcells: vec![],
        bcells: vec!["c*".to_string()],
        cubes: vec![],
    };
    probes.saturate(&a);
    let report = check_laws(&a, &probes, &BTreeSet::new());
    assert!(report.passed(), "{report}");
    let verdict = chirality(&a, &probes);
    assert!(verdict.chiral && verdict.strict);
}

#[test]
fn cylinders_of_monoid_squares_pass_laws_and_star() {
    let d = monoid_squares();
    let a = CylinderIntercat::new(d.clone(), "cyl(monoid)");
    let mut probes = IntercatProbes {
        objs: d.objects.clone(),
        tars: vec![],
        hars: d.harrs.iter().map(|(h, _, _)| h.clone()).collect(),
        vars: d.varrs.iter().map(|(v, _, _)| v.clone()).collect(),
        hcells: vec![],
        vcells: vec![],
        bcells: d.cells.iter().map(|(c, _, _, _, _)| c.clone()).collect(),
        cubes: vec![],
    };
    probes.saturate(&a);
    let report = check_laws(&a, &probes, &BTreeSet::new());
    assert!(report.passed(), "{report}");
    // the special cells of a commuting-square double category are all
    // identities, so lifts are unique: property (*) holds on this corpus
    let star = property_star(&a, &probes).unwrap();
    assert!(star.holds(), "{star:?}");
    assert!(star.checked > 0);
}

#[test]
fn cylinder_existence_matches_direct_equation_in_set() {
    use intercat::doublecat::span::{SpanCell, SpanV};
    use intercat::finset::{Elem, FinFn, FinSetObj};
    let d = SpanDouble::new(FinSetCat::new());
    let a = CylinderIntercat::new(d.clone(), "cyl(set)");
    let two = FinSetObj::from_labels(["x", "y"]);
    let fold = FinFn::constant(two.clone(), two.clone(), Elem::from("x"));
    // both legs fold: every endomap of the apex is a special cell here
    let u = SpanV {
        left: fold.clone(),
        right: fold.clone(),
    };
    let swap = FinFn::new(
        two.clone(),
        two.clone(),
        [
            (Elem::from("x"), Elem::from("y")),
            (Elem::from("y"), Elem::from("x")),
        ],
    )
    .unwrap();
    let sigma: SpanCell<FinFn> = d
        .mk_cell(FinFn::identity(&two), FinFn::identity(&two), u.clone(), u.clone(), FinFn::identity(&two))
        .unwrap();
    let tau_cell: SpanCell<FinFn> = d
        .mk_cell(FinFn::identity(&two), FinFn::identity(&two), u.clone(), u.clone(), swap.clone())
        .unwrap();
    // cubes sigma -> tau with special faces exist exactly when the cylinder
    // equation holds; enumerate and cross-check against the direct equation
    use intercat::core::Enumerable;
    let cubes = a.cubes_between(&sigma, &tau_cell).unwrap();
    for c in &cubes {
        let lhs = d.cell_h_then(&c.west, &tau_cell).unwrap();
        let rhs = d.cell_h_then(&sigma, &c.east).unwrap();
        assert_eq!(lhs, rhs);
    }
    // alpha ; swap = id ; beta pins beta to alpha ; swap, so there are as
    // many cylinders as special cells u -> u, i.e. |two|^|two| = 4
    assert_eq!(cubes.len(), 4);
}

#[test]
fn quintets_of_monoid_squares_pass_laws() {
    let d = monoid_squares();
    let a = QuintetIntercat::new(d.clone(), "q(monoid)");
    let mut probes = IntercatProbes {
        objs: d.objects.clone(),
        tars: d.harrs.iter().map(|(h, _, _)| h.clone()).collect(),
        hars: d.varrs.iter().map(|(v, _, _)| v.clone()).collect(),
        vars: d.varrs.iter().map(|(v, _, _)| v.clone()).collect(),
        hcells: vec![],
        vcells: vec![],
        bcells: vec![],
        cubes: vec![],
    };
    // quintets: all squares with content; the double category is flat so
    // contents are unique per boundary
    for (c, _, _, w, e) in &d.cells {
        let n = d.cell_top(c);
        let s = d.cell_bot(c);
        let _ = (n, s, w, e);
    }
    for n in probes.hars.clone() {
        for w in probes.hars.clone() {
            for e in probes.hars.clone() {
                for s in probes.hars.clone() {
                    let ne = match d.v_then(&n, &e) {
                        Ok(x) => x,
                        Err(_) => continue,
                    };
                    let ws = match d.v_then(&w, &s) {
                        Ok(x) => x,
                        Err(_) => continue,
                    };
                    if ne != ws {
                        continue;
                    }
                    let content = d.cell_h_id(&ne);
                    if let Ok(q) = a.mk_bcell(n.clone(), w.clone(), e.clone(), s.clone(), content) {
                        probes.bcells.push(q);
                    }
                }
            }
        }
    }
    probes.saturate(&a);
    let report = check_laws(&a, &probes, &BTreeSet::new());
    assert!(report.passed(), "{report}");
    let verdict = chirality(&a, &probes);
    assert!(verdict.chiral);
}

#[test]
fn quintet_pasting_agrees_with_direct_evaluation_in_set() {
    // Q(Set): build quintets from spans and verify the composite contents
    // against directly pasted cells
    let d = SpanDouble::new(FinSetCat::new());
    let a = QuintetIntercat::new(d.clone(), "q(set)");
    use intercat::finset::{FinFn, FinSetObj};
    let one = FinSetObj::point();
    let v = intercat::doublecat::span::SpanV {
        left: FinFn::identity(&one),
        right: FinFn::identity(&one),
    };
    let idq = a.h_id_var(&v);
    let composite = a.h_then_bcell(&idq, &idq).unwrap();
    // both contents are structural; composing with the identity quintet
    // keeps the content structural and the cube to the identity exists
    let mu = a.mu(&v, &v).unwrap();
    assert_eq!(a.cube_src(&mu), composite_src(&a, &v));
    let _ = composite;

    fn composite_src(
        a: &QuintetIntercat<SpanDouble<FinSetCat>>,
        v: &intercat::doublecat::span::SpanV<FinFn>,
    ) -> intercat::constructions::verity::Quintet<intercat::doublecat::span::SpanV<FinFn>, intercat::doublecat::span::SpanCell<FinFn>> {
        a.v_then_bcell(&a.h_id_var(v), &a.h_id_var(v)).unwrap()
    }
}

#[test]
fn span2_fails_property_star() {
    let a = set2();
    let probes = set2_probes(&a, 2);
    let star = property_star(&a, &probes);
    // span2 has non-identity transversal arrows in its probes, so the
    // checker refuses; restrict to an identity-transversal sub-probe
    assert!(star.is_err());
    let mut restricted = probes.clone();
    restricted.tars.retain(|f| *f == a.t_id_obj(&a.tar_src(f)));
    let star = property_star(&a, &restricted).unwrap();
    assert!(!star.holds(), "cube sets over a base datum are not singletons in span2");
}
