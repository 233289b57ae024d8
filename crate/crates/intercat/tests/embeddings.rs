//! The conjoint embeddings: duoidal into matrices (morphism suites plus the
//! two triangle equations), the span-squared adjunction, and the three
//! morphisms between the product-coproduct duoidal category and spans of
//! cospans.

use intercat::constructions::embed::{SmF, SmG};
use intercat::constructions::fixtures::set2_probes;
use intercat::constructions::scphi::CatArrow;
use intercat::constructions::{sm_embedding, span2_map_conjoint, spancosp_morphisms};
use intercat::core::{IntercatMorphism, Intercategory};
use intercat::doublecat::matrix::split_pair;
use intercat::finset::{pair_label, Elem, FinFn, FinSetObj};

fn fs(labels: &[&str]) -> FinSetObj {
    FinSetObj::from_labels(labels.iter().copied())
}

#[test]
fn sm_embedding_conjoint_equations() {
    let f = SmF::new();
    let probe_objects = vec![FinSetObj::point(), fs(&["a", "b"]), FinSetObj::empty()];
    // probe cells of the matrix intercategory: images of the duoidal probes
    // plus one genuinely rectangular cell
    let mut probe_cells: Vec<_> = probe_objects.iter().map(|x| f.on_bcell(x)).collect();
    probe_cells.push(rect_cell());
    let report = sm_embedding(&probe_objects, &probe_cells).unwrap();
    assert!(report.passed(), "{report}");
    assert!(report.count_for("conjoint.triangle.F") >= 3);
    assert!(report.count_for("conjoint.triangle.G") >= 4);
}

// a 2x1-indexed span of matrices
fn rect_cell() -> intercat::constructions::span::BSpan<intercat::doublecat::matrix::MatCell<FinSetObj, FinFn>> {
    use intercat::doublecat::matrix::{MatCell, MatV};
    use std::collections::BTreeMap;
    let rows = fs(&["r0", "r1"]);
    let cols = fs(&["c0"]);
    let entries: BTreeMap<(Elem, Elem), FinSetObj> = BTreeMap::from([
        ((Elem::from("r0"), Elem::from("c0")), fs(&["v0", "v1"])),
        ((Elem::from("r1"), Elem::from("c0")), fs(&["w0"])),
    ]);
    let mid = MatV { rows: rows.clone(), cols: cols.clone(), entries };
    intercat::constructions::span::BSpan {
        lcell: MatCell {
            top: FinFn::identity(&rows),
            bot: FinFn::identity(&cols),
            west: mid.clone(),
            east: mid.clone(),
            comps: mid
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), FinFn::identity(v)))
                .collect(),
        },
        rcell: MatCell {
            top: FinFn::identity(&rows),
            bot: FinFn::identity(&cols),
            west: mid.clone(),
            east: mid.clone(),
            comps: mid
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), FinFn::identity(v)))
                .collect(),
        },
    }
}

#[test]
fn sm_g_sends_identity_matrix_to_codiagonal_shape() {
    let g = SmG::new();
    let s = fs(&["x", "y"]);
    let idmat = g.sm.v_id_obj(&s);
    // G(Id_S) = Sum_S I -> I: the codiagonal has a 2-element domain here
    let idbcell = g.sm.h_id_var(&idmat);
    let total = g.sum_of(&idbcell);
    // diagonal entries are singletons, off-diagonal empty: |domain| = |S|
    assert_eq!(total.len(), 2);
    let nabla = g.v_unit_har(&g.sm.h_id_obj(&s));
    assert_eq!(nabla.dom.len(), 2);
    assert_eq!(nabla.cod.len(), 1);
    assert!(nabla.is_surjective());
}

#[test]
fn span2_adjunction_conjoint() {
    // F = (-) x S with S two elements, U = (-)^S
    let s = fs(&["s0", "s1"]);
    let s2 = s.clone();
    let f: CatArrow<intercat::doublecat::FinSetCat> = CatArrow::new(
        "timesS",
        {
            let s = s.clone();
            move |x: &FinSetObj| {
                FinSetObj::new(
                    x.elems()
                        .iter()
                        .flat_map(|e| s.elems().iter().map(move |t| pair_label(e, t))),
                )
            }
        },
        {
            let s = s2.clone();
            move |m: &FinFn| {
                let on = |x: &FinSetObj| {
                    FinSetObj::new(
                        x.elems()
                            .iter()
                            .flat_map(|e| s.elems().iter().map(move |t| pair_label(e, t))),
                    )
                };
                FinFn::from_rule(on(&m.dom), on(&m.cod), |e| {
                    let (x, t) = split_pair(e);
                    pair_label(m.apply(&x), &t)
                })
            }
        },
    );
    let u: CatArrow<intercat::doublecat::FinSetCat> = CatArrow::new(
        "powS",
        |x: &FinSetObj| {
            FinSetObj::new(
                x.elems()
                    .iter()
                    .flat_map(|a| x.elems().iter().map(move |b| pair_label(a, b))),
            )
        },
        |m: &FinFn| {
            let on = |x: &FinSetObj| {
                FinSetObj::new(
                    x.elems()
                        .iter()
                        .flat_map(|a| x.elems().iter().map(move |b| pair_label(a, b))),
                )
            };
            FinFn::from_rule(on(&m.dom), on(&m.cod), |e| {
                let (a, b) = split_pair(e);
                pair_label(m.apply(&a), m.apply(&b))
            })
        },
    );
    let unit = |x: &FinSetObj| -> FinFn {
        // x |-> (s |-> (x, s)) encoded as the pair of values at s0, s1
        let fx = f.o(x);
        let cod = FinSetObj::new(
            fx.elems()
                .iter()
                .flat_map(|a| fx.elems().iter().map(move |b| pair_label(a, b))),
        );
        FinFn::from_rule(x.clone(), cod, |e| {
            pair_label(
                &pair_label(e, &Elem::from("s0")),
                &pair_label(e, &Elem::from("s1")),
            )
        })
    };
    let counit = |x: &FinSetObj| -> FinFn {
        // ((a0,a1), s) |-> a_s
        let dom = f.o(&FinSetObj::new(
            x.elems()
                .iter()
                .flat_map(|a| x.elems().iter().map(move |b| pair_label(a, b))),
        ));
        FinFn::from_rule(dom, x.clone(), |e| {
            let (func, t) = split_pair(e);
            let (a0, a1) = split_pair(&func);
            if t.as_str() == "s0" {
                a0
            } else {
                a1
            }
        })
    };
    let a = intercat::constructions::fixtures::set2();
    let probes = set2_probes(&a, 2);
    let probe_cells: Vec<_> = probes.bcells.iter().take(4).cloned().collect();
    let report = span2_map_conjoint(
        &f,
        &u,
        &unit,
        &counit,
        &[FinSetObj::point(), fs(&["a", "b"])],
        &probe_cells,
    )
    .unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn spancosp_three_morphisms() {
    let report = spancosp_morphisms(&[FinSetObj::point(), fs(&["a", "b"])]).unwrap();
    assert!(report.passed(), "{report}");
}
