//! True Gray categories as intercategories: all three embeddings pass the
//! law suite and are chiral; the chi-identity conditions hold exhaustively;
//! the companion equations hold in the symmetric embedding; the binding and
//! identity cells classify as commutativity cells; and the wedge/unwedge
//! correspondence round-trips.

use intercat::core::{check_laws, chirality, is_identity_cube, IntercatProbes, Intercategory};
use intercat::fincat::Fin2CatData;
use intercat::gray::{
    commutativity_cell, companions, gray_colax, gray_lax, gray_symmetric, lax_composites, prop52,
    unwedge, GrayFunctor2, LaxTransData, TrueGrayCat, TwoFunctorData, G1, G2,
};
use std::collections::{BTreeMap, BTreeSet};

fn strict() -> TrueGrayCat {
    TrueGrayCat::strict_from_monoid(
        &["e", "w"],
        "e",
        &[("e", "e", "e"), ("e", "w", "w"), ("w", "e", "w"), ("w", "w", "w")],
    )
}

fn lax_probes(a: &intercat::gray::GrayLax) -> IntercatProbes<intercat::gray::GrayLax> {
    let hom = a.g.hom("*", "*");
    let mut probes = IntercatProbes {
        objs: vec!["*".to_string()],
        tars: vec![],
        hars: hom
            .objects
            .iter()
            .map(|f| G1 {
                src: "*".into(),
                tgt: "*".into(),
                f: f.clone(),
            })
            .collect(),
        vars: vec![],
        hcells: vec![],
        vcells: vec![],
        bcells: hom
            .one_cells
            .iter()
            .map(|(m, _, _)| G2 {
                src: "*".into(),
                tgt: "*".into(),
                alpha: m.clone(),
            })
            .collect(),
        cubes: vec![],
    };
    probes.saturate(a);
    probes
}

#[test]
fn gray_lax_strict_family_is_strict_triple_category() {
    let a = gray_lax(strict()).unwrap();
    let probes = lax_probes(&a);
    let report = check_laws(&a, &probes, &BTreeSet::new());
    assert!(report.passed(), "{report}");
    let verdict = chirality(&a, &probes);
    assert!(verdict.chiral && verdict.strict);
}

#[test]
fn gray_lax_walking_interchanger_chiral_not_strict() {
    let a = gray_lax(TrueGrayCat::walking_interchanger()).unwrap();
    let probes = lax_probes(&a);
    let report = check_laws(&a, &probes, &BTreeSet::new());
    assert!(report.passed(), "{report}");
    let verdict = chirality(&a, &probes);
    assert!(verdict.chiral, "delta, mu, tau must be identities");
    assert!(!verdict.strict, "chi at (al, al) is not an identity");
}

#[test]
fn gray_lax_chi_identity_condition() {
    // chi is the identity whenever beta or abar is a vertical identity
    let a = gray_lax(TrueGrayCat::walking_interchanger()).unwrap();
    let probes = lax_probes(&a);
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
                    let hom = a.g.hom("*", "*");
                    let beta_is_id = hom.is_id2(&y.alpha);
                    let abar_is_id = hom.is_id2(&xb.alpha);
                    let chi = a.chi(x, y, xb, yb).unwrap();
                    if beta_is_id || abar_is_id {
                        assert!(
                            is_identity_cube(&a, &chi),
                            "chi must be an identity when beta or abar is Id"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn gray_colax_laws_and_chi_condition() {
    let g = TrueGrayCat::walking_interchanger();
    let a = gray_colax(g).unwrap();
    let hom = a.g.hom("*", "*").clone();
    let mut probes = IntercatProbes {
        objs: vec!["*".to_string()],
        tars: vec![],
        hars: vec![],
        vars: hom
            .objects
            .iter()
            .map(|f| G1 {
                src: "*".into(),
                tgt: "*".into(),
                f: f.clone(),
            })
            .collect(),
        hcells: vec![],
        vcells: vec![],
        bcells: hom
            .one_cells
            .iter()
            .map(|(m, _, _)| G2 {
                src: "*".into(),
                tgt: "*".into(),
                alpha: m.clone(),
            })
            .collect(),
        cubes: vec![],
    };
    probes.saturate(&a);
    let report = check_laws(&a, &probes, &BTreeSet::new());
    assert!(report.passed(), "{report}");
    assert!(chirality(&a, &probes).chiral);
    // chi is the identity when alpha or bbar is a horizontal identity
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
                    if hom.is_id2(&x.alpha) || hom.is_id2(&yb.alpha) {
                        assert!(is_identity_cube(&a, &chi));
                    }
                }
            }
        }
    }
}

#[test]
fn gray_symmetric_laws_companions_and_commutativity() {
    for g in [strict(), TrueGrayCat::walking_interchanger()] {
        let (a, _structure) = gray_symmetric(g).unwrap();
        let hom = a.g.hom("*", "*").clone();
        let g1s: Vec<G1> = hom
            .objects
            .iter()
            .map(|f| G1 {
                src: "*".into(),
                tgt: "*".into(),
                f: f.clone(),
            })
            .collect();
        let mut bcells = Vec::new();
        for v in &g1s {
            bcells.push(a.h_id_var(v));
            bcells.push(a.v_id_har(v));
            bcells.push(a.eps(v));
            bcells.push(a.eta(v));
        }
        // all quintets with every filling 2-cell
        for n in &g1s {
            for w in &g1s {
                for e in &g1s {
                    for s in &g1s {
                        for (c2, _, _) in &hom.one_cells {
                            if let Ok(q) = a.mk_bcell(n.clone(), w.clone(), e.clone(), s.clone(), c2.clone()) {
                                bcells.push(q);
                            }
                        }
                    }
                }
            }
        }
        bcells.sort();
        bcells.dedup();
        let mut probes = IntercatProbes {
            objs: vec!["*".to_string()],
            tars: vec![],
            hars: g1s.clone(),
            vars: g1s.clone(),
            hcells: vec![],
            vcells: vec![],
            bcells,
            cubes: vec![],
        };
        probes.saturate(&a);
        let report = check_laws(&a, &probes, &BTreeSet::new());
        assert!(report.passed(), "{report}");
        assert!(chirality(&a, &probes).chiral);
        let comp = companions(&a);
        assert!(comp.passed(), "{comp}");
        // identity cells and binders are commutativity cells
        for v in &g1s {
            assert!(commutativity_cell(&a, &a.h_id_var(v)).unwrap());
            assert!(commutativity_cell(&a, &a.v_id_har(v)).unwrap());
            assert!(commutativity_cell(&a, &a.eps(v)).unwrap());
            assert!(commutativity_cell(&a, &a.eta(v)).unwrap());
        }
        // chi is the identity when alpha or bbar is a commutativity cell
        for x in probes.bcells.iter() {
            for y in probes.bcells.iter() {
                if a.bcell_east(x) != a.bcell_west(y) {
                    continue;
                }
                for xb in probes.bcells.iter() {
                    if a.bcell_south(x) != a.bcell_north(xb) {
                        continue;
                    }
                    for yb in probes.bcells.iter() {
                        if a.bcell_east(xb) != a.bcell_west(yb)
                            || a.bcell_south(y) != a.bcell_north(yb)
                        {
                            continue;
                        }
                        let chi = a.chi(x, y, xb, yb).unwrap();
                        if commutativity_cell(&a, x).unwrap() || commutativity_cell(&a, yb).unwrap() {
                            assert!(
                                is_identity_cube(&a, &chi),
                                "chi must degenerate on commutativity cells"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn symmetric_nontrivial_chi_exists() {
    let (a, _) = gray_symmetric(TrueGrayCat::walking_interchanger()).unwrap();
    let w = G1 {
        src: "*".into(),
        tgt: "*".into(),
        f: "w".into(),
    };
    let al = a.mk_bcell(w.clone(), w.clone(), w.clone(), w.clone(), "al".to_string()).unwrap();
    let chi = a.chi(&al, &al, &al, &al).unwrap();
    assert!(!is_identity_cube(&a, &chi), "self-interchange of al is mu");
}

#[test]
fn prop52_round_trip_and_decomposition() {
    // a Gray functor of two variables out of the walking interchanger's hom
    let hom = TrueGrayCat::walking_interchanger();
    let h2 = hom.hom("*", "*").clone();
    let g = hom;
    // H : hom x hom -> hom by composition with interchange cells from x
    let mut obj_val = BTreeMap::new();
    let mut right_1 = BTreeMap::new();
    let mut left_1 = BTreeMap::new();
    let mut hcells = BTreeMap::new();
    for f in &h2.objects {
        for k in &h2.objects {
            obj_val.insert((f.clone(), k.clone()), g.then1(f, k).unwrap());
        }
        for (betaid, _, _) in &h2.one_cells {
            right_1.insert((f.clone(), betaid.clone()), g.wl(f, betaid).unwrap());
        }
    }
    for k in &h2.objects {
        for (alphaid, _, _) in &h2.one_cells {
            left_1.insert((alphaid.clone(), k.clone()), g.wr(alphaid, k).unwrap());
        }
    }
    for (alphaid, _, _) in &h2.one_cells {
        for (betaid, _, _) in &h2.one_cells {
            hcells.insert((alphaid.clone(), betaid.clone()), g.x(alphaid, betaid).unwrap());
        }
    }
    let hh = GrayFunctor2 {
        a: h2.clone(),
        b: h2.clone(),
        c: h2.clone(),
        obj_val,
        right_1,
        right_2: BTreeMap::new(),
        left_2: BTreeMap::new(),
        left_1,
        h: hcells,
    };
    assert!(hh.validate().passed(), "{}", hh.validate());
    let (wedge, vee) = prop52(&hh).unwrap();
    // the wedge decomposition H^(f,g) = H(f,B) ; H(A',g)
    for (f, _, fc) in &h2.one_cells {
        let fobj = h2.dom1(f);
        let _ = fobj;
        for (gid, _, _) in &h2.one_cells {
            let lhs = wedge.on_pair_1[&(f.clone(), gid.clone())].clone();
            let rhs = h2
                .then1(
                    &hh.left_1[&(f.clone(), h2.dom1(gid).clone())],
                    &hh.right_1[&(fc.clone(), gid.clone())],
                )
                .unwrap();
            assert_eq!(lhs, rhs, "wedge decomposition");
        }
    }
    let _ = vee;
    // round trip
    let back = unwedge(&wedge).unwrap();
    assert_eq!(back.obj_val, hh.obj_val);
    assert_eq!(back.left_1, hh.left_1);
    assert_eq!(back.right_1, hh.right_1);
    assert_eq!(back.h, hh.h);
}

#[test]
fn lax_composites_top_equals_bottom_for_strict_inputs() {
    let c = Fin2CatData::from_monoid(
        &["e", "a"],
        "e",
        &[("e", "e", "e"), ("e", "a", "a"), ("a", "e", "a"), ("a", "a", "e")],
    );
    let idf = TwoFunctorData::identity(&c);
    let t = LaxTransData::identity(&idf);
    let v = LaxTransData::identity(&idf);
    let (top, bottom, comparison, report) = lax_composites(&t, &v).unwrap();
    assert!(report.passed(), "{report}");
    assert_eq!(top.at_obj, bottom.at_obj);
    assert_eq!(top.at_1, bottom.at_1);
    for m in comparison.values() {
        assert!(c.is_id2(m));
    }
}
