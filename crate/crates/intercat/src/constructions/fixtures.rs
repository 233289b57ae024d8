//! Probe fixtures for the shipped instances, used by the law suites, the
//! acceptance checks and the command line driver. Probes are small by
//! design: the engine derives all composable tuples from them, so a handful
//! of well-chosen elements generates hundreds of law instances.

use super::span::{BSpan, HSpan, SpanIntercat};
use crate::core::laws::IntercatProbes;
use crate::core::Intercategory;
use crate::doublecat::cosp::{CospCell, CospV};
use crate::doublecat::span::{SpanCell, SpanV};
use crate::doublecat::{CospDouble, DoubleCat, FinSetCat, SpanDouble};
use crate::finset::{Elem, FinFn, FinSetObj};

pub type Set2 = SpanIntercat<SpanDouble<FinSetCat>>;
pub type SpanCosp = SpanIntercat<CospDouble<FinSetCat>>;

/// The intercategory of sets: spans of spans of finite sets.
pub fn set2() -> Set2 {
    SpanIntercat::named(SpanDouble::new(FinSetCat::new()), "span2(finset)")
}

/// The non-normal variant, exercising the nontrivial delta regime.
pub fn set2_non_normal() -> Set2 {
    SpanIntercat::named(SpanDouble::non_normal(FinSetCat::new()), "span2(finset,non-normal)")
}

fn fs(labels: &[&str]) -> FinSetObj {
    FinSetObj::from_labels(labels.iter().copied())
}

fn func(dom: &FinSetObj, cod: &FinSetObj, pairs: &[(&str, &str)]) -> FinFn {
    FinFn::new(
        dom.clone(),
        cod.clone(),
        pairs.iter().map(|(a, b)| (Elem::from(*a), Elem::from(*b))),
    )
    .unwrap()
}

/// Probes for the intercategory of sets with carrier sets of size up to
/// `bound` (clamped to 1..=3).
pub fn set2_probes(a: &Set2, bound: usize) -> IntercatProbes<Set2> {
    let bound = bound.clamp(1, 3);
    let d = &a.d;
    let obj_a = fs(&["x", "y"][..bound.min(2)]);
    let obj_b = fs(&["z"]);
    let collapse = FinFn::constant(obj_a.clone(), obj_b.clone(), Elem::from("z"));

    // vertical arrows: spans of sets
    let u = SpanV {
        left: func(&fs(&["u0", "u1"][..bound.min(2)]), &obj_a, &[("u0", "x"), ("u1", "y")][..bound.min(2)]),
        right: func(&fs(&["u0", "u1"][..bound.min(2)]), &obj_a, &[("u0", "x"), ("u1", "x")][..bound.min(2)]),
    };
    let w = SpanV {
        left: func(&fs(&["w0"]), &obj_a, &[("w0", "x")]),
        right: func(&fs(&["w0"]), &obj_b, &[("w0", "z")]),
    };
    let id_a_v = d.v_id(&obj_a);
    let id_b_v = d.v_id(&obj_b);

    // horizontal arrows: spans of functions
    let h_set = fs(&["h0"]);
    let h1 = HSpan {
        left: func(&h_set, &obj_a, &[("h0", "x")]),
        right: func(&h_set, &obj_a, if bound >= 2 { &[("h0", "y")] } else { &[("h0", "x")] }),
    };
    let h2 = HSpan {
        left: func(&h_set, &obj_a, &[("h0", "x")]),
        right: func(&h_set, &obj_b, &[("h0", "z")]),
    };

    // a nontrivial basic cell: north h1, south h1, west u, east Id_A
    let mid = d.v_id(&h_set);
    let lcell = a
        .d
        .mk_cell(
            h1.left.clone(),
            h1.left.clone(),
            mid.clone(),
            u.clone(),
            func(&h_set, &fs(&["u0", "u1"][..bound.min(2)]), &[("h0", "u0")]),
        )
        .expect("fixture lcell");
    let rcell = a
        .d
        .mk_cell(
            h1.right.clone(),
            h1.right.clone(),
            mid.clone(),
            id_a_v.clone(),
            h1.right.clone(),
        )
        .expect("fixture rcell");
    let alpha = BSpan { lcell, rcell };

    // a nontrivial vertical cell u => (point span) over the fold map
    let fold = FinFn::constant(obj_a.clone(), obj_a.clone(), Elem::from("x"));
    let pspan = SpanV {
        left: func(&fs(&["p"]), &obj_a, &[("p", "x")]),
        right: func(&fs(&["p"]), &obj_a, &[("p", "x")]),
    };
    let psi: SpanCell<FinFn> = a
        .d
        .mk_cell(
            fold.clone(),
            fold.clone(),
            u.clone(),
            pspan.clone(),
            FinFn::constant(u.left.dom.clone(), fs(&["p"]), Elem::from("p")),
        )
        .expect("fixture psi");

    // a second basic cell with a different east boundary, for grid variety
    let lcell2 = a
        .d
        .mk_cell(
            h2.left.clone(),
            h2.left.clone(),
            mid.clone(),
            u.clone(),
            func(&h_set, &u.left.dom, &[("h0", "u0")]),
        )
        .expect("fixture lcell2");
    let rcell2 = a
        .d
        .mk_cell(
            h2.right.clone(),
            h2.right.clone(),
            mid.clone(),
            d.v_id(&obj_b),
            h2.right.clone(),
        )
        .expect("fixture rcell2");
    let alpha2 = BSpan {
        lcell: lcell2,
        rcell: rcell2,
    };

    let mut probes = IntercatProbes::<Set2> {
        objs: vec![obj_a.clone(), obj_b.clone()],
        tars: vec![collapse, fold],
        hars: vec![h1.clone(), h2.clone()],
        vars: vec![u.clone(), w, pspan.clone(), id_a_v.clone(), id_b_v],
        hcells: vec![],
        vcells: vec![psi.clone()],
        bcells: vec![alpha.clone(), alpha2],
        cubes: vec![a.h_id_vcell(&psi), a.h_lunit_bcell(&alpha), a.v_lunit_bcell(&alpha)],
    };
    probes.saturate(a);
    // one computed interchanger as a cube probe
    let idh = a.h_id_var(&id_a_v);
    if let Ok(chi) = a.chi(&alpha, &idh, &a.v_id_har(&h1), &idh) {
        probes.cubes.push(chi);
    }
    probes
}

/// The intercategory of spans of cospans of finite sets.
pub fn spancosp() -> SpanCosp {
    SpanIntercat::named(CospDouble::new(FinSetCat::new()), "spancosp(finset)")
}

fn cosp(src: &FinSetObj, nadir: &FinSetObj, tgt: &FinSetObj, lp: &[(&str, &str)], rp: &[(&str, &str)]) -> CospV<FinFn> {
    CospV {
        left: func(src, nadir, lp),
        right: func(tgt, nadir, rp),
    }
}

/// The 2x2 cell grid on which chi of SpanCosp(FinSet) fails to be
/// invertible: the pushout of pullbacks has two elements in the middle
/// while the pullback of pushouts has four. Returns the grid
/// `(alpha, beta, alphabar, betabar)`.
pub fn spancosp_chi_counterexample(
    a: &SpanCosp,
) -> (
    <SpanCosp as Intercategory>::BCell,
    <SpanCosp as Intercategory>::BCell,
    <SpanCosp as Intercategory>::BCell,
    <SpanCosp as Intercategory>::BCell,
) {
    let d = &a.d;
    let empty = FinSetObj::empty();
    // middle-row cospans with singleton nadirs and empty bottom feet
    let m_alpha = cosp(&fs(&["p"]), &fs(&["a1"]), &empty, &[("p", "a1")], &[]);
    let m_beta = cosp(&fs(&["r"]), &fs(&["c1"]), &empty, &[("r", "c1")], &[]);
    let e_mid = cosp(&fs(&["q"]), &fs(&["b1"]), &fs(&["e"]), &[("q", "b1")], &[("e", "b1")]);
    let m_abar = cosp(&empty, &fs(&["a2"]), &empty, &[], &[]);
    let m_bbar = cosp(&empty, &fs(&["c2"]), &empty, &[], &[]);
    let e_bar = cosp(&fs(&["e"]), &fs(&["b2"]), &empty, &[("e", "b2")], &[]);

    let xi: CospCell<FinFn> = d
        .mk_cell(
            func(&fs(&["p"]), &fs(&["q"]), &[("p", "q")]),
            func(&empty, &fs(&["e"]), &[]),
            m_alpha.clone(),
            e_mid.clone(),
            func(&fs(&["a1"]), &fs(&["b1"]), &[("a1", "b1")]),
        )
        .expect("xi");
    let upsilon: CospCell<FinFn> = d
        .mk_cell(
            func(&fs(&["r"]), &fs(&["q"]), &[("r", "q")]),
            func(&empty, &fs(&["e"]), &[]),
            m_beta.clone(),
            e_mid.clone(),
            func(&fs(&["c1"]), &fs(&["b1"]), &[("c1", "b1")]),
        )
        .expect("upsilon");
    let xibar: CospCell<FinFn> = d
        .mk_cell(
            func(&empty, &fs(&["e"]), &[]),
            func(&empty, &empty, &[]),
            m_abar.clone(),
            e_bar.clone(),
            func(&fs(&["a2"]), &fs(&["b2"]), &[("a2", "b2")]),
        )
        .expect("xibar");
    let upsbar: CospCell<FinFn> = d
        .mk_cell(
            func(&empty, &fs(&["e"]), &[]),
            func(&empty, &empty, &[]),
            m_bbar.clone(),
            e_bar.clone(),
            func(&fs(&["c2"]), &fs(&["b2"]), &[("c2", "b2")]),
        )
        .expect("upsbar");

    let alpha = BSpan {
        lcell: d.cell_h_id(&m_alpha),
        rcell: xi,
    };
    let beta = BSpan {
        lcell: upsilon,
        rcell: d.cell_h_id(&m_beta),
    };
    let alphabar = BSpan {
        lcell: d.cell_h_id(&m_abar),
        rcell: xibar,
    };
    let betabar = BSpan {
        lcell: upsbar,
        rcell: d.cell_h_id(&m_bbar),
    };
    (alpha, beta, alphabar, betabar)
}

pub type SpanCat = SpanIntercat<crate::doublecat::CatDouble>;

/// The intercategory of spans in the double category of categories,
/// functors and profunctors.
pub fn span_cat() -> SpanCat {
    SpanIntercat::named(crate::doublecat::CatDouble, "span(cat)")
}

/// The profunctor configuration over the one-object and arrow categories
/// whose interchanger chi has empty source and singleton target. Returns the
/// 2x2 basic-cell grid.
pub fn span_cat_counterexample(
    a: &SpanCat,
) -> (
    <SpanCat as Intercategory>::BCell,
    <SpanCat as Intercategory>::BCell,
    <SpanCat as Intercategory>::BCell,
    <SpanCat as Intercategory>::BCell,
) {
    use crate::fincat::{FinCatData, FunctorData, ProfData};
    use std::collections::BTreeMap;
    let one = FinCatData::terminal();
    let two = FinCatData::from_graph(&["0", "1"], &[("u", "0", "1")], &[]).unwrap();
    let pt = FinSetObj::point();
    let d = &a.d;

    let pick = |obj: &str| -> FunctorData {
        FunctorData {
            source: one.clone(),
            target: two.clone(),
            obj_map: BTreeMap::from([("*".to_string(), obj.to_string())]),
            mor_map: BTreeMap::from([("1*".to_string(), format!("1{obj}"))]),
        }
    };
    let idone = FunctorData::identity(&one);

    let r = ProfData::constant(&one, &one, &pt);
    let p = ProfData::constant(&one, &two, &pt);
    let rbar = ProfData::constant(&two, &one, &pt);

    let const_cell = |west: &ProfData, east: &ProfData, top: &FunctorData, bot: &FunctorData| {
        let mut comps = BTreeMap::new();
        for aa in &west.src.objects {
            for bb in &west.tgt.objects {
                for x in west.set(aa, bb).elems() {
                    comps.insert((aa.clone(), bb.clone(), x.clone()), Elem::from("*"));
                }
            }
        }
        d.mk_cell(top.clone(), bot.clone(), west.clone(), east.clone(), comps)
            .expect("span(cat) fixture cell")
    };

    // top row: rho : R -> P over (id, pick 0), sigma : S -> P over (id, pick 1)
    let rho = const_cell(&r, &p, &idone, &pick("0"));
    let sigma = const_cell(&r, &p, &idone, &pick("1"));
    // bottom row, into the constant profunctor the other way around
    let pbar = rbar;
    let rho2 = const_cell(&r, &pbar, &pick("0"), &idone);
    let sigma2 = const_cell(&r, &pbar, &pick("1"), &idone);

    let alpha = BSpan {
        lcell: d.cell_h_id(&r),
        rcell: rho,
    };
    let beta = BSpan {
        lcell: sigma,
        rcell: d.cell_h_id(&r),
    };
    let alphabar = BSpan {
        lcell: d.cell_h_id(&r),
        rcell: rho2,
    };
    let betabar = BSpan {
        lcell: sigma2,
        rcell: d.cell_h_id(&r),
    };
    (alpha, beta, alphabar, betabar)
}

// ---------------------------------------------------------------------------
// quintets over finite sets
// ---------------------------------------------------------------------------

use super::scphi::{CatArrow, NatArrow, ScCell, ScPhi, ScQuintet};
use super::theorem::ScProbes;

fn fsc_id() -> CatArrow<FinSetCat> {
    CatArrow::identity()
}

fn fsc_addpt() -> CatArrow<FinSetCat> {
    let pt = || crate::finset::pair_label(&Elem::from("pt"), &Elem::from("pt"));
    CatArrow::new(
        "addpt",
        move |x: &FinSetObj| {
            FinSetObj::new(
                x.elems()
                    .iter()
                    .map(|e| crate::finset::pair_label(&Elem::from("i"), e))
                    .chain([crate::finset::pair_label(&Elem::from("pt"), &Elem::from("pt"))]),
            )
        },
        move |f: &FinFn| {
            let on = fsc_addpt_obj();
            FinFn::from_rule(on(&f.dom), on(&f.cod), |e| {
                let (tag, x) = crate::doublecat::matrix::split_pair(e);
                if tag.as_str() == "pt" {
                    pt()
                } else {
                    crate::finset::pair_label(&tag, f.apply(&x))
                }
            })
        },
    )
}

fn fsc_addpt_obj() -> impl Fn(&FinSetObj) -> FinSetObj {
    |x: &FinSetObj| {
        FinSetObj::new(
            x.elems()
                .iter()
                .map(|e| crate::finset::pair_label(&Elem::from("i"), e))
                .chain([crate::finset::pair_label(&Elem::from("pt"), &Elem::from("pt"))]),
        )
    }
}

fn fsc_double() -> CatArrow<FinSetCat> {
    let on_o = |x: &FinSetObj| {
        FinSetObj::new(x.elems().iter().flat_map(|e| {
            [
                crate::finset::pair_label(&Elem::from("l"), e),
                crate::finset::pair_label(&Elem::from("r"), e),
            ]
        }))
    };
    CatArrow::new("double", on_o, move |f: &FinFn| {
        FinFn::from_rule(on_o(&f.dom), on_o(&f.cod), |e| {
            let (tag, x) = crate::doublecat::matrix::split_pair(e);
            crate::finset::pair_label(&tag, f.apply(&x))
        })
    })
}

fn fsc_const1() -> CatArrow<FinSetCat> {
    CatArrow::new(
        "const1",
        |_: &FinSetObj| FinSetObj::point(),
        |_: &FinFn| FinFn::identity(&FinSetObj::point()),
    )
}

fn fsc_times2() -> CatArrow<FinSetCat> {
    let s = || fs(&["s0", "s1"]);
    let on_o = move |x: &FinSetObj| {
        FinSetObj::new(
            x.elems()
                .iter()
                .flat_map(|e| s().elems().iter().map(|t| crate::finset::pair_label(e, t)).collect::<Vec<_>>()),
        )
    };
    CatArrow::new("times2", on_o, move |f: &FinFn| {
        FinFn::from_rule(on_o(&f.dom), on_o(&f.cod), |e| {
            let (x, t) = crate::doublecat::matrix::split_pair(e);
            crate::finset::pair_label(f.apply(&x), &t)
        })
    })
}

/// A named family of quintets over finite sets covering the identity,
/// collapsing, non-injective and non-surjective comparison shapes.
pub fn finset_quintets() -> Vec<ScQuintet<FinSetCat>> {
    let base = FinSetCat::new();
    let id = fsc_id;
    let mk = |label: &str,
              f: CatArrow<FinSetCat>,
              h: CatArrow<FinSetCat>,
              k: CatArrow<FinSetCat>,
              g: CatArrow<FinSetCat>,
              phi: NatArrow<FinSetCat>| {
        ScQuintet {
            a: base,
            b: base,
            c: base,
            d: base,
            f,
            h,
            k,
            g,
            phi,
            label: label.to_string(),
        }
    };
    let phi_of = |k: CatArrow<FinSetCat>,
                  g: CatArrow<FinSetCat>,
                  f: CatArrow<FinSetCat>,
                  h: CatArrow<FinSetCat>,
                  rule: Rc<dyn Fn(&FinSetObj) -> BTreeMap<Elem, Elem>>| {
        NatArrow::new("phi", move |x: &FinSetObj| {
            let dom = k.o(&f.o(x));
            let cod = g.o(&h.o(x));
            FinFn::new(dom, cod, rule(x)).expect("phi component")
        })
    };
    use std::collections::BTreeMap;
    use std::rc::Rc;

    let ident_rule: Rc<dyn Fn(&FinSetObj) -> BTreeMap<Elem, Elem>> =
        Rc::new(|x: &FinSetObj| x.elems().iter().map(|e| (e.clone(), e.clone())).collect());
    let incl_rule: Rc<dyn Fn(&FinSetObj) -> BTreeMap<Elem, Elem>> = Rc::new(|x: &FinSetObj| {
        x.elems()
            .iter()
            .map(|e| (e.clone(), crate::finset::pair_label(&Elem::from("i"), e)))
            .collect()
    });
    let inl_rule: Rc<dyn Fn(&FinSetObj) -> BTreeMap<Elem, Elem>> = Rc::new(|x: &FinSetObj| {
        x.elems()
            .iter()
            .map(|e| (e.clone(), crate::finset::pair_label(&Elem::from("l"), e)))
            .collect()
    });
    let codiag_rule: Rc<dyn Fn(&FinSetObj) -> BTreeMap<Elem, Elem>> = Rc::new(|x: &FinSetObj| {
        let dbl = fsc_double();
        dbl.o(x)
            .elems()
            .iter()
            .map(|e| {
                let (_, v) = crate::doublecat::matrix::split_pair(e);
                (e.clone(), v)
            })
            .collect()
    });
    let proj_rule: Rc<dyn Fn(&FinSetObj) -> BTreeMap<Elem, Elem>> = Rc::new(|x: &FinSetObj| {
        let t2 = fsc_times2();
        t2.o(x)
            .elems()
            .iter()
            .map(|e| {
                let (v, _) = crate::doublecat::matrix::split_pair(e);
                (e.clone(), v)
            })
            .collect()
    });
    let to_one_rule: Rc<dyn Fn(&FinSetObj) -> BTreeMap<Elem, Elem>> = Rc::new(|x: &FinSetObj| {
        x.elems().iter().map(|e| (e.clone(), Elem::from("*"))).collect()
    });
    let pair_s0_rule: Rc<dyn Fn(&FinSetObj) -> BTreeMap<Elem, Elem>> = Rc::new(|x: &FinSetObj| {
        x.elems()
            .iter()
            .map(|e| (e.clone(), crate::finset::pair_label(e, &Elem::from("s0"))))
            .collect()
    });
    let times2_to_addpt_rule: Rc<dyn Fn(&FinSetObj) -> BTreeMap<Elem, Elem>> =
        Rc::new(|x: &FinSetObj| {
            let t2 = fsc_times2();
            t2.o(x)
                .elems()
                .iter()
                .map(|e| {
                    let (v, _) = crate::doublecat::matrix::split_pair(e);
                    (e.clone(), crate::finset::pair_label(&Elem::from("i"), &v))
                })
                .collect()
        });
    let times2_to_double_rule: Rc<dyn Fn(&FinSetObj) -> BTreeMap<Elem, Elem>> =
        Rc::new(|x: &FinSetObj| {
            let t2 = fsc_times2();
            t2.o(x)
                .elems()
                .iter()
                .map(|e| {
                    let (v, t) = crate::doublecat::matrix::split_pair(e);
                    let tag = if t.as_str() == "s0" { "l" } else { "r" };
                    (e.clone(), crate::finset::pair_label(&Elem::from(tag), &v))
                })
                .collect()
        });
    let codiag4_rule: Rc<dyn Fn(&FinSetObj) -> BTreeMap<Elem, Elem>> = Rc::new(|x: &FinSetObj| {
        let dbl = fsc_double();
        dbl.o(&dbl.o(x))
            .elems()
            .iter()
            .map(|e| {
                let (_, inner) = crate::doublecat::matrix::split_pair(e);
                let (_, v) = crate::doublecat::matrix::split_pair(&inner);
                (e.clone(), v)
            })
            .collect()
    });

    vec![
        mk("identity", id(), id(), id(), id(), phi_of(id(), id(), id(), id(), Rc::clone(&ident_rule))),
        mk("g-addpt", id(), id(), id(), fsc_addpt(), phi_of(id(), fsc_addpt(), id(), id(), Rc::clone(&incl_rule))),
        mk("k-double", id(), id(), fsc_double(), id(), phi_of(fsc_double(), id(), id(), id(), Rc::clone(&codiag_rule))),
        mk("kg-const", id(), id(), fsc_const1(), fsc_const1(), phi_of(fsc_const1(), fsc_const1(), id(), id(), Rc::new(|_| BTreeMap::from([(Elem::from("*"), Elem::from("*"))])))),
        mk("k-times2", id(), id(), fsc_times2(), id(), phi_of(fsc_times2(), id(), id(), id(), Rc::clone(&proj_rule))),
        mk("kg-addpt", id(), id(), fsc_addpt(), fsc_addpt(), phi_of(fsc_addpt(), fsc_addpt(), id(), id(), Rc::new({
            let a = fsc_addpt();
            move |x: &FinSetObj| a.o(x).elems().iter().map(|e| (e.clone(), e.clone())).collect()
        }))),
        mk("f-double", fsc_double(), id(), id(), id(), phi_of(id(), id(), fsc_double(), id(), Rc::clone(&codiag_rule))),
        mk("h-addpt", id(), fsc_addpt(), id(), id(), phi_of(id(), id(), id(), fsc_addpt(), Rc::clone(&incl_rule))),
        mk("g-const", id(), id(), id(), fsc_const1(), phi_of(id(), fsc_const1(), id(), id(), Rc::clone(&to_one_rule))),
        mk("g-double", id(), id(), id(), fsc_double(), phi_of(id(), fsc_double(), id(), id(), Rc::clone(&inl_rule))),
        mk("g-times2", id(), id(), id(), fsc_times2(), phi_of(id(), fsc_times2(), id(), id(), Rc::clone(&pair_s0_rule))),
        mk("kg-double", id(), id(), fsc_double(), fsc_double(), phi_of(fsc_double(), fsc_double(), id(), id(), Rc::new({
            let dl = fsc_double();
            move |x: &FinSetObj| dl.o(x).elems().iter().map(|e| (e.clone(), e.clone())).collect()
        }))),
        mk("k-times2-g-double", id(), id(), fsc_times2(), fsc_double(), phi_of(fsc_times2(), fsc_double(), id(), id(), Rc::clone(&times2_to_double_rule))),
        mk("f-times2", fsc_times2(), id(), id(), id(), phi_of(id(), id(), fsc_times2(), id(), Rc::clone(&proj_rule))),
        mk("h-double", id(), fsc_double(), id(), id(), phi_of(id(), id(), id(), fsc_double(), Rc::clone(&inl_rule))),
        mk("k-double-g-const", id(), id(), fsc_double(), fsc_const1(), phi_of(fsc_double(), fsc_const1(), id(), id(), Rc::new({
            let dl = fsc_double();
            move |x: &FinSetObj| dl.o(x).elems().iter().map(|e| (e.clone(), Elem::from("*"))).collect()
        }))),
        mk("k-times2-g-addpt", id(), id(), fsc_times2(), fsc_addpt(), phi_of(fsc_times2(), fsc_addpt(), id(), id(), Rc::clone(&times2_to_addpt_rule))),
        mk("fh-addpt", fsc_addpt(), fsc_addpt(), id(), id(), phi_of(id(), id(), fsc_addpt(), fsc_addpt(), Rc::new({
            let a = fsc_addpt();
            move |x: &FinSetObj| a.o(x).elems().iter().map(|e| (e.clone(), e.clone())).collect()
        }))),
        mk("h-times2", id(), fsc_times2(), id(), id(), phi_of(id(), id(), id(), fsc_times2(), Rc::clone(&pair_s0_rule))),
        mk("fk-double", fsc_double(), id(), fsc_double(), id(), phi_of(fsc_double(), id(), fsc_double(), id(), Rc::clone(&codiag4_rule))),
        mk("hk-mix", id(), fsc_addpt(), fsc_times2(), id(), phi_of(fsc_times2(), id(), id(), fsc_addpt(), Rc::clone(&times2_to_addpt_rule))),
    ]
}

/// Standard theorem probes for a quintet over finite sets: objects of sizes
/// 0..=2, one nontrivial F-span and H-cospan, and identity-cell grids.
pub fn sc_probes(sc: &ScPhi<FinSetCat>) -> ScProbes<FinSetCat> {
    let objs = vec![FinSetObj::empty(), FinSetObj::point(), fs(&["x", "y"])];
    let two = fs(&["x", "y"]);
    let one = FinSetObj::point();
    let q = &sc.q;
    // F-span over (two, one): apex two
    let h1 = sc
        .mk_har(
            two.clone(),
            one.clone(),
            FinFn::identity(&q.f.o(&two)),
            FinFn::constant(q.f.o(&two), q.f.o(&one), q.f.o(&one).elems()[0].clone()),
        )
        .expect("sc probe har");
    // H-cospan over (one, two): nadir H(two)
    let v1 = sc
        .mk_var(
            one.clone(),
            two.clone(),
            FinFn::constant(q.h.o(&one), q.h.o(&two), q.h.o(&two).elems()[0].clone()),
            FinFn::identity(&q.h.o(&two)),
        )
        .expect("sc probe var");
    let hars = vec![sc.h_id_obj(&two), h1];
    let vars = vec![sc.v_id_obj(&two), v1];
    let mut grids: Vec<[ScCell<FinSetObj, FinFn>; 4]> = Vec::new();
    use crate::core::Intercategory;
    for h in &hars {
        for k in &hars {
            if h.tgt == k.src {
                let a = sc.v_id_har(h);
                let b = sc.v_id_har(k);
                grids.push([a.clone(), b.clone(), a, b]);
            }
        }
    }
    for v in &vars {
        for w in &vars {
            if v.tgt == w.src {
                let a = sc.h_id_var(v);
                let b = sc.h_id_var(w);
                grids.push([a.clone(), a.clone(), b.clone(), b]);
            }
        }
    }
    ScProbes {
        objs,
        hars,
        vars,
        grids,
    }
}

/// Probes for SpanCosp(FinSet).
pub fn spancosp_probes(a: &SpanCosp, bound: usize) -> IntercatProbes<SpanCosp> {
    let bound = bound.clamp(1, 3);
    let _d = &a.d;
    let obj_a = fs(&["x", "y"][..bound.min(2)]);
    let obj_b = fs(&["z"]);
    let collapse = FinFn::constant(obj_a.clone(), obj_b.clone(), Elem::from("z"));

    // vertical arrows are cospans now
    let u = cosp(
        &obj_a,
        &fs(&["n0", "n1"][..bound.min(2)]),
        &obj_a,
        &[("x", "n0"), ("y", "n1")][..bound.min(2)],
        &[("x", "n0"), ("y", "n0")][..bound.min(2)],
    );
    let w = cosp(&obj_a, &fs(&["n"]), &obj_b, &[("x", "n"), ("y", "n")][..bound.min(2)], &[("z", "n")]);

    // horizontal arrows are spans-of-functions' duals: the double category's
    // vertical arrows, i.e. cospans become vertical; horizontal arrows of the
    // intercategory are cospans of the base? No: for Span(Cosp) they are
    // spans of functions at the cospan-feet level. Horizontal arrows of the
    // intercategory are spans of the double category's horizontal arrows,
    // which are plain functions.
    let h_set = fs(&["h0"]);
    let h1 = HSpan {
        left: func(&h_set, &obj_a, &[("h0", "x")]),
        right: func(&h_set, &obj_a, if bound >= 2 { &[("h0", "y")] } else { &[("h0", "x")] }),
    };

    let (ca, cb, cabar, cbbar) = spancosp_chi_counterexample(a);

    let mut probes = IntercatProbes::<SpanCosp> {
        objs: vec![obj_a.clone(), obj_b.clone()],
        tars: vec![collapse],
        hars: vec![h1],
        vars: vec![u.clone(), w, a.v_id_obj(&obj_a), a.v_id_obj(&obj_b)],
        hcells: vec![],
        vcells: vec![],
        bcells: vec![ca.clone(), cb.clone(), cabar, cbbar],
        cubes: vec![],
    };
    probes.saturate(a);
    if let Ok(chi) = a.chi(
        &probes.bcells[0].clone(),
        &probes.bcells[1].clone(),
        &probes.bcells[2].clone(),
        &probes.bcells[3].clone(),
    ) {
        probes.cubes.push(chi);
    }
    probes
}
