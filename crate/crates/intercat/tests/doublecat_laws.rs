//! Law suites for the built double category instances, plus the chosen
//! pullback structure: boundary compatibility, normality detection and the
//! comparison cell gamma.

use intercat::doublecat::span::{SpanCell, SpanV};
use intercat::doublecat::{
    check_double_laws, gamma, pullback_structure, CatDouble, CospDouble, DblProbes, DoubleCat,
    FinSetCat, SpanDouble,
};
use intercat::fincat::{FinCatData, FunctorData, ProfData};
use intercat::finset::{Elem, FinFn, FinSetObj};

fn fs(labels: &[&str]) -> FinSetObj {
    FinSetObj::from_labels(labels.iter().copied())
}

fn f(dom: &FinSetObj, cod: &FinSetObj, pairs: &[(&str, &str)]) -> FinFn {
    FinFn::new(
        dom.clone(),
        cod.clone(),
        pairs.iter().map(|(a, b)| (Elem::from(*a), Elem::from(*b))),
    )
    .unwrap()
}

fn set_probes(d: &SpanDouble<FinSetCat>) -> DblProbes<SpanDouble<FinSetCat>> {
    let a = fs(&["a0", "a1"]);
    let b = fs(&["b0"]);
    let c = fs(&["c0", "c1"]);
    let h1 = f(&a, &b, &[("a0", "b0"), ("a1", "b0")]);
    let h2 = f(&b, &c, &[("b0", "c0")]);
    // spans a -|-> b and b -|-> c and an endo-span on b
    let v1 = SpanV {
        left: f(&fs(&["m0", "m1"]), &a, &[("m0", "a0"), ("m1", "a1")]),
        right: f(&fs(&["m0", "m1"]), &b, &[("m0", "b0"), ("m1", "b0")]),
    };
    let v2 = SpanV {
        left: f(&fs(&["n0"]), &b, &[("n0", "b0")]),
        right: f(&fs(&["n0"]), &c, &[("n0", "c0")]),
    };
    let v3 = SpanV {
        left: f(&fs(&["k0", "k1"]), &c, &[("k0", "c0"), ("k1", "c0")]),
        right: f(&fs(&["k0", "k1"]), &c, &[("k0", "c1"), ("k1", "c0")]),
    };
    let cell1 = d
        .mk_cell(
            h1.clone(),
            h2.clone(),
            v1.clone(),
            v2.clone(),
            f(v1.apex(), v2.apex(), &[("m0", "n0"), ("m1", "n0")]),
        )
        .unwrap();
    let cell2 = d.cell_h_id(&v2);
    let idc = d.cell_v_id(&h2);
    DblProbes {
        objs: vec![a.clone(), b.clone(), c.clone()],
        hars: vec![FinFn::identity(&a), h1, h2],
        vars: vec![v1, v2.clone(), v3, d.v_id(&b)],
        cells: vec![cell1, cell2, idc],
    }
}

trait ApexExt {
    fn apex(&self) -> &FinSetObj;
}
impl ApexExt for SpanV<FinFn> {
    fn apex(&self) -> &FinSetObj {
        &self.left.dom
    }
}

#[test]
fn span_double_of_finset_is_lawful() {
    let d = SpanDouble::new(FinSetCat::new());
    let probes = set_probes(&d);
    let report = check_double_laws(&d, &probes);
    assert!(report.passed(), "{report}");
}

#[test]
fn span_double_associator_is_componentwise_bijection() {
    let d = SpanDouble::new(FinSetCat::new());
    let probes = set_probes(&d);
    for u in &probes.vars {
        for v in &probes.vars {
            for w in &probes.vars {
                if d.v_tgt(u) != d.v_src(v) || d.v_tgt(v) != d.v_src(w) {
                    continue;
                }
                let a = d.v_assoc(u, v, w).unwrap();
                assert!(a.mid.is_bijective(), "associator not bijective");
            }
        }
    }
}

#[test]
fn cosp_double_of_finset_is_lawful() {
    use intercat::doublecat::cosp::CospV;
    let d = CospDouble::new(FinSetCat::new());
    let a = fs(&["a0", "a1"]);
    let b = fs(&["b0"]);
    let v1 = CospV {
        left: f(&a, &fs(&["n0", "n1"]), &[("a0", "n0"), ("a1", "n0")]),
        right: f(&b, &fs(&["n0", "n1"]), &[("b0", "n1")]),
    };
    let v2 = CospV {
        left: f(&b, &fs(&["p0"]), &[("b0", "p0")]),
        right: f(&a, &fs(&["p0"]), &[("a0", "p0"), ("a1", "p0")]),
    };
    let probes = DblProbes::<CospDouble<FinSetCat>> {
        objs: vec![a.clone(), b.clone()],
        hars: vec![FinFn::identity(&a), f(&a, &b, &[("a0", "b0"), ("a1", "b0")])],
        vars: vec![v1.clone(), v2.clone(), d.v_id(&a), d.v_id(&b)],
        cells: vec![d.cell_h_id(&v1), d.cell_h_id(&v2), d.cell_v_id(&FinFn::identity(&a))],
    };
    let report = check_double_laws(&d, &probes);
    assert!(report.passed(), "{report}");
}

#[test]
fn finset_span_pullback_structure_normality_tracks_choice() {
    let normal = SpanDouble::new(FinSetCat::new());
    let probes = set_probes(&normal);
    let (info, report) = pullback_structure(&normal, &probes);
    assert!(report.passed(), "{report}");
    assert!(info.normal, "componentwise canonical choice is normal");

    let skew = SpanDouble::non_normal(FinSetCat::new());
    let probes = set_probes(&skew);
    let (info, report) = pullback_structure(&skew, &probes);
    assert!(report.passed(), "{report}");
    assert!(!info.normal, "swapped apex labels break normality");
}

#[test]
fn gamma_is_bijective_for_finset_spans_even_when_non_normal() {
    for dd in [SpanDouble::new(FinSetCat::new()), SpanDouble::non_normal(FinSetCat::new())] {
        let probes = set_probes(&dd);
        let mut checked = 0;
        for xi in &probes.cells {
            for up in &probes.cells {
                if dd.cell_east(xi) != dd.cell_east(up) {
                    continue;
                }
                for xib in &probes.cells {
                    for upb in &probes.cells {
                        if dd.cell_east(xib) != dd.cell_east(upb)
                            || dd.cell_bot(xi) != dd.cell_top(xib)
                            || dd.cell_bot(up) != dd.cell_top(upb)
                        {
                            continue;
                        }
                        let g: SpanCell<FinFn> = gamma(&dd, xi, up, xib, upb).unwrap();
                        assert!(g.mid.is_bijective(), "gamma not bijective for spans of sets");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 0, "no gamma probes found");
    }
}

#[test]
fn cat_double_pullback_choice_is_normal() {
    let d = CatDouble;
    let one = FinCatData::terminal();
    let arrow = FinCatData::from_graph(&["0", "1"], &[("a", "0", "1")], &[]).unwrap();
    let idc = d.cell_v_id(&FunctorData::identity(&arrow));
    let probes = DblProbes::<CatDouble> {
        objs: vec![one.clone(), arrow.clone()],
        hars: vec![FunctorData::identity(&arrow)],
        vars: vec![ProfData::hom_of(&arrow)],
        cells: vec![idc],
    };
    let (info, report) = pullback_structure(&d, &probes);
    assert!(report.passed(), "{report}");
    assert!(info.normal, "the pairs choice of pullbacks in Cat is unitary");
}
