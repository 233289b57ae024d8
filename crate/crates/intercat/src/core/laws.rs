//! The probe-based law engine: strict transversal categories, weak
//! horizontal and vertical structures with coherent associators and unitors,
//! naturality of the four interchangers, the interchanger hexagons, and the
//! degenerate-interchanger unit squares. Each law carries a stable dotted
//! tag so individual reconstructed laws can be disabled.

use super::report::LawReport;
use super::Intercategory;
use std::collections::BTreeSet;

/// Probe data: elements of every sort, drawn from a fixture or enumeration.
/// Composability is derived by the engine from boundaries.
#[derive(Debug, Clone)]
pub struct IntercatProbes<I: Intercategory> {
    pub objs: Vec<I::Obj>,
    pub tars: Vec<I::TAr>,
    pub hars: Vec<I::HAr>,
    pub vars: Vec<I::VAr>,
    pub hcells: Vec<I::HCell>,
    pub vcells: Vec<I::VCell>,
    pub bcells: Vec<I::BCell>,
    pub cubes: Vec<I::Cube>,
}

impl<I: Intercategory> Default for IntercatProbes<I> {
    fn default() -> Self {
        IntercatProbes {
            objs: vec![],
            tars: vec![],
            hars: vec![],
            vars: vec![],
            hcells: vec![],
            vcells: vec![],
            bcells: vec![],
            cubes: vec![],
        }
    }
}

impl<I: Intercategory> IntercatProbes<I> {
    /// Seeds the derived sorts (identities on the given ones) so that the
    /// engine always has degenerate elements available.
    pub fn saturate(&mut self, a: &I) {
        for o in self.objs.clone() {
            push_unique(&mut self.tars, a.t_id_obj(&o));
            push_unique(&mut self.hars, a.h_id_obj(&o));
            push_unique(&mut self.vars, a.v_id_obj(&o));
        }
        for f in self.tars.clone() {
            push_unique(&mut self.hcells, a.h_id_tar(&f));
            push_unique(&mut self.vcells, a.v_id_tar(&f));
        }
        for h in self.hars.clone() {
            push_unique(&mut self.hcells, a.t_id_har(&h));
            push_unique(&mut self.bcells, a.v_id_har(&h));
        }
        for v in self.vars.clone() {
            push_unique(&mut self.vcells, a.t_id_var(&v));
            push_unique(&mut self.bcells, a.h_id_var(&v));
        }
        for b in self.bcells.clone() {
            push_unique(&mut self.cubes, a.t_id_bcell(&b));
        }
    }
}

fn push_unique<T: PartialEq>(v: &mut Vec<T>, x: T) {
    if !v.contains(&x) {
        v.push(x);
    }
}

fn short(s: String) -> String {
    if s.len() > 90 {
        let end = s
            .char_indices()
            .take_while(|(i, _)| *i < 87)
            .map(|(i, c)| i + c.len_utf8())
            .last()
            .unwrap_or(87);
        format!("{}…", &s[..end])
    } else {
        s
    }
}

const GRID_CAP: usize = 80;

/// The verdict of the structural predicates: chiral means the degenerate
/// interchangers are identities on all probes; strict additionally requires
/// chi and every structural cube to be an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureVerdict {
    pub chiral: bool,
    pub strict: bool,
}

/// Runs the full law suite over the probes, skipping any law tag in
/// `disabled`.
pub fn check_laws<I: Intercategory>(
    a: &I,
    probes: &IntercatProbes<I>,
    disabled: &BTreeSet<String>,
) -> LawReport {
    let mut r = LawReport::new();
    let on = |tag: &str| !disabled.contains(tag);
    let pr = |x: &dyn std::fmt::Debug| short(format!("{x:?}"));

    // ---------------- transversal strictness: four categories ----------------
    if on("t.cat.tar") {
        for f in &probes.tars {
            let l = a.t_then_tar(&a.t_id_obj(&a.tar_src(f)), f).unwrap();
            let rr = a.t_then_tar(f, &a.t_id_obj(&a.tar_tgt(f))).unwrap();
            r.check("t.cat.tar", pr(f), l == *f && rr == *f);
        }
        for f in &probes.tars {
            for g in &probes.tars {
                if a.tar_tgt(f) != a.tar_src(g) {
                    continue;
                }
                for h in &probes.tars {
                    if a.tar_tgt(g) != a.tar_src(h) {
                        continue;
                    }
                    let lhs = a.t_then_tar(&a.t_then_tar(f, g).unwrap(), h).unwrap();
                    let rhs = a.t_then_tar(f, &a.t_then_tar(g, h).unwrap()).unwrap();
                    r.check("t.cat.tar", short(format!("{f:?};{g:?};{h:?}")), lhs == rhs);
                }
            }
        }
    }
    if on("t.cat.hcell") {
        for c in &probes.hcells {
            let l = a.t_then_hcell(&a.t_id_har(&a.hcell_src(c)), c).unwrap();
            let rr = a.t_then_hcell(c, &a.t_id_har(&a.hcell_tgt(c))).unwrap();
            r.check("t.cat.hcell", pr(c), l == *c && rr == *c);
        }
        for c in &probes.hcells {
            for d in &probes.hcells {
                if a.hcell_tgt(c) != a.hcell_src(d) {
                    continue;
                }
                for e in &probes.hcells {
                    if a.hcell_tgt(d) != a.hcell_src(e) {
                        continue;
                    }
                    let lhs = a.t_then_hcell(&a.t_then_hcell(c, d).unwrap(), e).unwrap();
                    let rhs = a.t_then_hcell(c, &a.t_then_hcell(d, e).unwrap()).unwrap();
                    r.check("t.cat.hcell", short(format!("{c:?};{d:?};{e:?}")), lhs == rhs);
                }
            }
        }
    }
    if on("t.cat.vcell") {
        for c in &probes.vcells {
            let l = a.t_then_vcell(&a.t_id_var(&a.vcell_src(c)), c).unwrap();
            let rr = a.t_then_vcell(c, &a.t_id_var(&a.vcell_tgt(c))).unwrap();
            r.check("t.cat.vcell", pr(c), l == *c && rr == *c);
        }
    }
    if on("t.cat.cube") {
        for c in &probes.cubes {
            let l = a.t_then_cube(&a.t_id_bcell(&a.cube_src(c)), c).unwrap();
            let rr = a.t_then_cube(c, &a.t_id_bcell(&a.cube_tgt(c))).unwrap();
            r.check("t.cat.cube", pr(c), l == *c && rr == *c);
        }
        for c in &probes.cubes {
            for d in &probes.cubes {
                if a.cube_tgt(c) != a.cube_src(d) {
                    continue;
                }
                for e in &probes.cubes {
                    if a.cube_tgt(d) != a.cube_src(e) {
                        continue;
                    }
                    let lhs = a.t_then_cube(&a.t_then_cube(c, d).unwrap(), e).unwrap();
                    let rhs = a.t_then_cube(c, &a.t_then_cube(d, e).unwrap()).unwrap();
                    r.check("t.cat.cube", short(format!("{c:?};{d:?};{e:?}")), lhs == rhs);
                }
            }
        }
    }

    // ---------------- identity boundary bookkeeping ----------------
    if on("bound.id") {
        for v in &probes.vars {
            let b = a.h_id_var(v);
            let ok = a.bcell_west(&b) == *v
                && a.bcell_east(&b) == *v
                && a.bcell_north(&b) == a.h_id_obj(&a.var_src(v))
                && a.bcell_south(&b) == a.h_id_obj(&a.var_tgt(v));
            r.check("bound.id", pr(v), ok);
        }
        for h in &probes.hars {
            let b = a.v_id_har(h);
            let ok = a.bcell_north(&b) == *h
                && a.bcell_south(&b) == *h
                && a.bcell_west(&b) == a.v_id_obj(&a.har_src(h))
                && a.bcell_east(&b) == a.v_id_obj(&a.har_tgt(h));
            r.check("bound.id", pr(h), ok);
        }
    }

    // derived composable pairs of basic cells
    let hpairs: Vec<(&I::BCell, &I::BCell)> = probes
        .bcells
        .iter()
        .flat_map(|x| {
            probes
                .bcells
                .iter()
                .filter(move |y| a.bcell_east(x) == a.bcell_west(y))
                .map(move |y| (x, y))
        })
        .collect();
    let vpairs: Vec<(&I::BCell, &I::BCell)> = probes
        .bcells
        .iter()
        .flat_map(|x| {
            probes
                .bcells
                .iter()
                .filter(move |y| a.bcell_south(x) == a.bcell_north(y))
                .map(move |y| (x, y))
        })
        .collect();
    // 2x2 grids (alpha | beta) / (abar | bbar)
    let grids: Vec<(&I::BCell, &I::BCell, &I::BCell, &I::BCell)> = hpairs
        .iter()
        .flat_map(|(x, y)| {
            hpairs
                .iter()
                .filter(move |(xb, yb)| {
                    a.bcell_south(x) == a.bcell_north(xb) && a.bcell_south(y) == a.bcell_north(yb)
                })
                .map(move |(xb, yb)| (*x, *y, *xb, *yb))
        })
        .take(GRID_CAP)
        .collect();

    // ---------------- weak horizontal structure ----------------
    if on("h.weak.har") {
        for h in &probes.hars {
            let lu = a.h_lunit_har(h);
            let src = a.h_then_har(&a.h_id_obj(&a.har_src(h)), h).unwrap();
            let okb = a.hcell_src(&lu) == src && a.hcell_tgt(&lu) == *h;
            let inv_ok = match a.invert_hcell(&lu) {
                Some(inv) => {
                    a.t_then_hcell(&lu, &inv).unwrap() == a.t_id_har(&src)
                        && a.t_then_hcell(&inv, &lu).unwrap() == a.t_id_har(h)
                }
                None => false,
            };
            r.check("h.weak.har", short(format!("lunit {h:?}")), okb && inv_ok);
            let ru = a.h_runit_har(h);
            let src2 = a.h_then_har(h, &a.h_id_obj(&a.har_tgt(h))).unwrap();
            let okb2 = a.hcell_src(&ru) == src2 && a.hcell_tgt(&ru) == *h;
            r.check(
                "h.weak.har",
                short(format!("runit {h:?}")),
                okb2 && a.invert_hcell(&ru).is_some(),
            );
        }
        // pentagon and triangle at arrow level
        let htriples: Vec<(&I::HAr, &I::HAr, &I::HAr)> = probes
            .hars
            .iter()
            .flat_map(|x| {
                probes.hars.iter().flat_map(move |y| {
                    probes
                        .hars
                        .iter()
                        .filter(move |z| {
                            a.har_tgt(x) == a.har_src(y) && a.har_tgt(y) == a.har_src(*z)
                        })
                        .map(move |z| (x, y, z))
                })
            })
            .collect();
        for (x, y, z) in &htriples {
            let asc = a.h_assoc_har(x, y, z).unwrap();
            let lhs_h = a.h_then_har(&a.h_then_har(x, y).unwrap(), z).unwrap();
            let rhs_h = a.h_then_har(x, &a.h_then_har(y, z).unwrap()).unwrap();
            let okb = a.hcell_src(&asc) == lhs_h && a.hcell_tgt(&asc) == rhs_h;
            r.check(
                "h.weak.har",
                short(format!("assoc {x:?};{y:?};{z:?}")),
                okb && a.invert_hcell(&asc).is_some(),
            );
        }
        for (x, y, z) in &htriples {
            for w in &probes.hars {
                if a.har_tgt(*z) != a.har_src(w) {
                    continue;
                }
                let xy = a.h_then_har(x, y).unwrap();
                let zw = a.h_then_har(z, w).unwrap();
                let p1 = a
                    .t_then_hcell(&a.h_assoc_har(&xy, z, w).unwrap(), &a.h_assoc_har(x, y, &zw).unwrap())
                    .unwrap();
                let yz = a.h_then_har(y, z).unwrap();
                let s1 = a
                    .h_then_hcell(&a.h_assoc_har(x, y, z).unwrap(), &a.t_id_har(w))
                    .unwrap();
                let s2 = a.h_assoc_har(x, &yz, w).unwrap();
                let s3 = a
                    .h_then_hcell(&a.t_id_har(x), &a.h_assoc_har(y, z, w).unwrap())
                    .unwrap();
                let p2 = a.t_then_hcell(&a.t_then_hcell(&s1, &s2).unwrap(), &s3).unwrap();
                r.check("h.weak.har", short(format!("pentagon {x:?};{y:?};{z:?};{w:?}")), p1 == p2);
            }
        }
        for x in &probes.hars {
            for y in &probes.hars {
                if a.har_tgt(x) != a.har_src(y) {
                    continue;
                }
                let mid = a.h_id_obj(&a.har_tgt(x));
                let asc = a.h_assoc_har(x, &mid, y).unwrap();
                let lhs = a
                    .t_then_hcell(&asc, &a.h_then_hcell(&a.t_id_har(x), &a.h_lunit_har(y)).unwrap())
                    .unwrap();
                let rhs = a.h_then_hcell(&a.h_runit_har(x), &a.t_id_har(y)).unwrap();
                r.check("h.weak.har", short(format!("triangle {x:?};{y:?}")), lhs == rhs);
            }
        }
    }
    if on("h.weak.bcell") {
        for b in &probes.bcells {
            let lu = a.h_lunit_bcell(b);
            let src = a.h_then_bcell(&a.h_id_var(&a.bcell_west(b)), b).unwrap();
            // side faces are transversal identities; the horizontal faces are
            // the arrow-level unitors
            let faces = a.cube_west(&lu) == a.t_id_var(&a.bcell_west(b))
                && a.cube_east(&lu) == a.t_id_var(&a.bcell_east(b))
                && a.cube_north(&lu) == a.h_lunit_har(&a.bcell_north(b))
                && a.cube_south(&lu) == a.h_lunit_har(&a.bcell_south(b));
            let okb = a.cube_src(&lu) == src && a.cube_tgt(&lu) == *b && faces;
            let inv_ok = match a.invert_cube(&lu) {
                Some(inv) => {
                    a.t_then_cube(&lu, &inv).unwrap() == a.t_id_bcell(&src)
                        && a.t_then_cube(&inv, &lu).unwrap() == a.t_id_bcell(b)
                }
                None => false,
            };
            r.check("h.weak.bcell", short(format!("lunit {b:?}")), okb && inv_ok);
            let ru = a.h_runit_bcell(b);
            let src2 = a.h_then_bcell(b, &a.h_id_var(&a.bcell_east(b))).unwrap();
            let faces2 = a.cube_north(&ru) == a.h_runit_har(&a.bcell_north(b))
                && a.cube_south(&ru) == a.h_runit_har(&a.bcell_south(b));
            r.check(
                "h.weak.bcell",
                short(format!("runit {b:?}")),
                a.cube_src(&ru) == src2 && a.cube_tgt(&ru) == *b && faces2 && a.invert_cube(&ru).is_some(),
            );
        }
        let htriples: Vec<(&I::BCell, &I::BCell, &I::BCell)> = hpairs
            .iter()
            .flat_map(|(x, y)| {
                probes
                    .bcells
                    .iter()
                    .filter(move |z| a.bcell_east(y) == a.bcell_west(*z))
                    .map(move |z| (*x, *y, z))
            })
            .take(GRID_CAP)
            .collect();
        for (x, y, z) in &htriples {
            let asc = a.h_assoc_bcell(x, y, z).unwrap();
            let lhs = a.h_then_bcell(&a.h_then_bcell(x, y).unwrap(), z).unwrap();
            let rhs = a.h_then_bcell(x, &a.h_then_bcell(y, z).unwrap()).unwrap();
            let faces = a.cube_west(&asc) == a.t_id_var(&a.bcell_west(x))
                && a.cube_east(&asc) == a.t_id_var(&a.bcell_east(z))
                && a.cube_north(&asc)
                    == a.h_assoc_har(&a.bcell_north(x), &a.bcell_north(y), &a.bcell_north(z)).unwrap()
                && a.cube_south(&asc)
                    == a.h_assoc_har(&a.bcell_south(x), &a.bcell_south(y), &a.bcell_south(z)).unwrap();
            let okb = a.cube_src(&asc) == lhs && a.cube_tgt(&asc) == rhs && faces;
            r.check(
                "h.weak.bcell",
                short(format!("assoc {x:?};{y:?};{z:?}")),
                okb && a.invert_cube(&asc).is_some(),
            );
        }
        for (x, y) in hpairs.iter().take(GRID_CAP) {
            let mid = a.h_id_var(&a.bcell_east(x));
            let asc = a.h_assoc_bcell(x, &mid, y).unwrap();
            let lhs = a
                .t_then_cube(&asc, &a.h_then_cube(&a.t_id_bcell(x), &a.h_lunit_bcell(y)).unwrap())
                .unwrap();
            let rhs = a.h_then_cube(&a.h_runit_bcell(x), &a.t_id_bcell(y)).unwrap();
            r.check("h.weak.bcell", short(format!("triangle {x:?};{y:?}")), lhs == rhs);
        }
    }
    if on("h.funct") {
        // 1_{a|b} = 1_a | 1_b
        for (x, y) in &hpairs {
            let lhs = a.t_id_bcell(&a.h_then_bcell(x, y).unwrap());
            let rhs = a.h_then_cube(&a.t_id_bcell(x), &a.t_id_bcell(y)).unwrap();
            r.check("h.funct", short(format!("id {x:?}|{y:?}")), lhs == rhs);
        }
        // (c.c2)|(d.d2) = (c|d).(c2|d2)
        let mut count = 0;
        'outer_h: for c in &probes.cubes {
            for c2 in &probes.cubes {
                if a.cube_tgt(c) != a.cube_src(c2) {
                    continue;
                }
                for d in &probes.cubes {
                    if a.bcell_east(&a.cube_src(c)) != a.bcell_west(&a.cube_src(d))
                        || a.cube_east(c) != a.cube_west(d)
                    {
                        continue;
                    }
                    for d2 in &probes.cubes {
                        if a.cube_tgt(d) != a.cube_src(d2) || a.cube_east(c2) != a.cube_west(d2) {
                            continue;
                        }
                        let lhs = a
                            .h_then_cube(&a.t_then_cube(c, c2).unwrap(), &a.t_then_cube(d, d2).unwrap())
                            .unwrap();
                        let rhs = a
                            .t_then_cube(&a.h_then_cube(c, d).unwrap(), &a.h_then_cube(c2, d2).unwrap())
                            .unwrap();
                        r.check("h.funct", short(format!("mf {c:?}|{d:?}")), lhs == rhs);
                        count += 1;
                        if count > GRID_CAP {
                            break 'outer_h;
                        }
                    }
                }
            }
        }
    }

    // ---------------- weak vertical structure ----------------
    if on("v.weak.var") {
        for v in &probes.vars {
            let lu = a.v_lunit_var(v);
            let src = a.v_then_var(&a.v_id_obj(&a.var_src(v)), v).unwrap();
            let okb = a.vcell_src(&lu) == src && a.vcell_tgt(&lu) == *v;
            let inv_ok = match a.invert_vcell(&lu) {
                Some(inv) => {
                    a.t_then_vcell(&lu, &inv).unwrap() == a.t_id_var(&src)
                        && a.t_then_vcell(&inv, &lu).unwrap() == a.t_id_var(v)
                }
                None => false,
            };
            r.check("v.weak.var", short(format!("lunit {v:?}")), okb && inv_ok);
            let ru = a.v_runit_var(v);
            let src2 = a.v_then_var(v, &a.v_id_obj(&a.var_tgt(v))).unwrap();
            r.check(
                "v.weak.var",
                short(format!("runit {v:?}")),
                a.vcell_src(&ru) == src2 && a.vcell_tgt(&ru) == *v && a.invert_vcell(&ru).is_some(),
            );
        }
        let vtriples: Vec<(&I::VAr, &I::VAr, &I::VAr)> = probes
            .vars
            .iter()
            .flat_map(|x| {
                probes.vars.iter().flat_map(move |y| {
                    probes
                        .vars
                        .iter()
                        .filter(move |z| {
                            a.var_tgt(x) == a.var_src(y) && a.var_tgt(y) == a.var_src(*z)
                        })
                        .map(move |z| (x, y, z))
                })
            })
            .collect();
        for (x, y, z) in &vtriples {
            let asc = a.v_assoc_var(x, y, z).unwrap();
            let lhs = a.v_then_var(&a.v_then_var(x, y).unwrap(), z).unwrap();
            let rhs = a.v_then_var(x, &a.v_then_var(y, z).unwrap()).unwrap();
            let okb = a.vcell_src(&asc) == lhs && a.vcell_tgt(&asc) == rhs;
            r.check(
                "v.weak.var",
                short(format!("assoc {x:?};{y:?};{z:?}")),
                okb && a.invert_vcell(&asc).is_some(),
            );
        }
        for (x, y, z) in &vtriples {
            for w in &probes.vars {
                if a.var_tgt(*z) != a.var_src(w) {
                    continue;
                }
                let xy = a.v_then_var(x, y).unwrap();
                let zw = a.v_then_var(z, w).unwrap();
                let p1 = a
                    .t_then_vcell(&a.v_assoc_var(&xy, z, w).unwrap(), &a.v_assoc_var(x, y, &zw).unwrap())
                    .unwrap();
                let yz = a.v_then_var(y, z).unwrap();
                let s1 = a
                    .v_then_vcell(&a.v_assoc_var(x, y, z).unwrap(), &a.t_id_var(w))
                    .unwrap();
                let s2 = a.v_assoc_var(x, &yz, w).unwrap();
                let s3 = a
                    .v_then_vcell(&a.t_id_var(x), &a.v_assoc_var(y, z, w).unwrap())
                    .unwrap();
                let p2 = a.t_then_vcell(&a.t_then_vcell(&s1, &s2).unwrap(), &s3).unwrap();
                r.check("v.weak.var", short(format!("pentagon {x:?};{y:?};{z:?};{w:?}")), p1 == p2);
            }
        }
        for x in &probes.vars {
            for y in &probes.vars {
                if a.var_tgt(x) != a.var_src(y) {
                    continue;
                }
                let mid = a.v_id_obj(&a.var_tgt(x));
                let asc = a.v_assoc_var(x, &mid, y).unwrap();
                let lhs = a
                    .t_then_vcell(&asc, &a.v_then_vcell(&a.t_id_var(x), &a.v_lunit_var(y)).unwrap())
                    .unwrap();
                let rhs = a.v_then_vcell(&a.v_runit_var(x), &a.t_id_var(y)).unwrap();
                r.check("v.weak.var", short(format!("triangle {x:?};{y:?}")), lhs == rhs);
            }
        }
    }
    if on("v.weak.bcell") {
        for b in &probes.bcells {
            let lu = a.v_lunit_bcell(b);
            let src = a.v_then_bcell(&a.v_id_har(&a.bcell_north(b)), b).unwrap();
            let faces = a.cube_north(&lu) == a.t_id_har(&a.bcell_north(b))
                && a.cube_south(&lu) == a.t_id_har(&a.bcell_south(b))
                && a.cube_west(&lu) == a.v_lunit_var(&a.bcell_west(b))
                && a.cube_east(&lu) == a.v_lunit_var(&a.bcell_east(b));
            let okb = a.cube_src(&lu) == src && a.cube_tgt(&lu) == *b && faces;
            r.check(
                "v.weak.bcell",
                short(format!("lunit {b:?}")),
                okb && a.invert_cube(&lu).is_some(),
            );
            let ru = a.v_runit_bcell(b);
            let src2 = a.v_then_bcell(b, &a.v_id_har(&a.bcell_south(b))).unwrap();
            let faces2 = a.cube_west(&ru) == a.v_runit_var(&a.bcell_west(b))
                && a.cube_east(&ru) == a.v_runit_var(&a.bcell_east(b));
            r.check(
                "v.weak.bcell",
                short(format!("runit {b:?}")),
                a.cube_src(&ru) == src2 && a.cube_tgt(&ru) == *b && faces2 && a.invert_cube(&ru).is_some(),
            );
        }
        let vtriples: Vec<(&I::BCell, &I::BCell, &I::BCell)> = vpairs
            .iter()
            .flat_map(|(x, y)| {
                probes
                    .bcells
                    .iter()
                    .filter(move |z| a.bcell_south(y) == a.bcell_north(*z))
                    .map(move |z| (*x, *y, z))
            })
            .take(GRID_CAP)
            .collect();
        for (x, y, z) in &vtriples {
            let asc = a.v_assoc_bcell(x, y, z).unwrap();
            let lhs = a.v_then_bcell(&a.v_then_bcell(x, y).unwrap(), z).unwrap();
            let rhs = a.v_then_bcell(x, &a.v_then_bcell(y, z).unwrap()).unwrap();
            let faces = a.cube_north(&asc) == a.t_id_har(&a.bcell_north(x))
                && a.cube_south(&asc) == a.t_id_har(&a.bcell_south(z))
                && a.cube_west(&asc)
                    == a.v_assoc_var(&a.bcell_west(x), &a.bcell_west(y), &a.bcell_west(z)).unwrap()
                && a.cube_east(&asc)
                    == a.v_assoc_var(&a.bcell_east(x), &a.bcell_east(y), &a.bcell_east(z)).unwrap();
            let okb = a.cube_src(&asc) == lhs && a.cube_tgt(&asc) == rhs && faces;
            r.check(
                "v.weak.bcell",
                short(format!("assoc {x:?};{y:?};{z:?}")),
                okb && a.invert_cube(&asc).is_some(),
            );
        }
        for (x, y) in vpairs.iter().take(GRID_CAP) {
            let mid = a.v_id_har(&a.bcell_south(x));
            let asc = a.v_assoc_bcell(x, &mid, y).unwrap();
            let lhs = a
                .t_then_cube(&asc, &a.v_then_cube(&a.t_id_bcell(x), &a.v_lunit_bcell(y)).unwrap())
                .unwrap();
            let rhs = a.v_then_cube(&a.v_runit_bcell(x), &a.t_id_bcell(y)).unwrap();
            r.check("v.weak.bcell", short(format!("triangle {x:?};{y:?}")), lhs == rhs);
        }
    }
    if on("v.funct") {
        for (x, y) in &vpairs {
            let lhs = a.t_id_bcell(&a.v_then_bcell(x, y).unwrap());
            let rhs = a.v_then_cube(&a.t_id_bcell(x), &a.t_id_bcell(y)).unwrap();
            r.check("v.funct", short(format!("id {x:?}/{y:?}")), lhs == rhs);
        }
        let mut count = 0;
        'outer_v: for c in &probes.cubes {
            for c2 in &probes.cubes {
                if a.cube_tgt(c) != a.cube_src(c2) {
                    continue;
                }
                for d in &probes.cubes {
                    if a.bcell_south(&a.cube_src(c)) != a.bcell_north(&a.cube_src(d))
                        || a.cube_south(c) != a.cube_north(d)
                    {
                        continue;
                    }
                    for d2 in &probes.cubes {
                        if a.cube_tgt(d) != a.cube_src(d2) || a.cube_south(c2) != a.cube_north(d2) {
                            continue;
                        }
                        let lhs = a
                            .v_then_cube(&a.t_then_cube(c, c2).unwrap(), &a.t_then_cube(d, d2).unwrap())
                            .unwrap();
                        let rhs = a
                            .t_then_cube(&a.v_then_cube(c, d).unwrap(), &a.v_then_cube(c2, d2).unwrap())
                            .unwrap();
                        r.check("v.funct", short(format!("mf {c:?}/{d:?}")), lhs == rhs);
                        count += 1;
                        if count > GRID_CAP {
                            break 'outer_v;
                        }
                    }
                }
            }
        }
    }

    // ---------------- interchangers ----------------
    if on("ix.chi.boundary") {
        for (x, y, xb, yb) in &grids {
            let chi = a.chi(x, y, xb, yb).unwrap();
            let src = a
                .v_then_bcell(&a.h_then_bcell(x, y).unwrap(), &a.h_then_bcell(xb, yb).unwrap())
                .unwrap();
            let tgt = a
                .h_then_bcell(&a.v_then_bcell(x, xb).unwrap(), &a.v_then_bcell(y, yb).unwrap())
                .unwrap();
            let ok = a.cube_src(&chi) == src && a.cube_tgt(&chi) == tgt && a.is_special_cube(&chi);
            r.check("ix.chi.boundary", short(format!("{x:?}|{y:?}/{xb:?}|{yb:?}")), ok);
        }
    }
    if on("ix.mu.boundary") {
        for v in &probes.vars {
            for w in &probes.vars {
                if a.var_tgt(v) != a.var_src(w) {
                    continue;
                }
                let mu = a.mu(v, w).unwrap();
                let src = a.v_then_bcell(&a.h_id_var(v), &a.h_id_var(w)).unwrap();
                let tgt = a.h_id_var(&a.v_then_var(v, w).unwrap());
                let ok = a.cube_src(&mu) == src && a.cube_tgt(&mu) == tgt && a.is_special_cube(&mu);
                r.check("ix.mu.boundary", short(format!("{v:?}/{w:?}")), ok);
            }
        }
    }
    if on("ix.delta.boundary") {
        for h in &probes.hars {
            for k in &probes.hars {
                if a.har_tgt(h) != a.har_src(k) {
                    continue;
                }
                let delta = a.delta(h, k).unwrap();
                let src = a.v_id_har(&a.h_then_har(h, k).unwrap());
                let tgt = a.h_then_bcell(&a.v_id_har(h), &a.v_id_har(k)).unwrap();
                let ok = a.cube_src(&delta) == src && a.cube_tgt(&delta) == tgt && a.is_special_cube(&delta);
                r.check("ix.delta.boundary", short(format!("{h:?}|{k:?}")), ok);
            }
        }
    }
    if on("ix.tau") {
        for o in &probes.objs {
            let tau = a.tau(o);
            let src = a.v_id_har(&a.h_id_obj(o));
            let tgt = a.h_id_var(&a.v_id_obj(o));
            let ok = a.cube_src(&tau) == src && a.cube_tgt(&tau) == tgt && a.is_special_cube(&tau);
            r.check("ix.tau", pr(o), ok);
        }
        // naturality in transversal arrows
        for f in &probes.tars {
            let lhs = a
                .t_then_cube(&a.v_id_hcell(&a.h_id_tar(f)), &a.tau(&a.tar_tgt(f)))
                .unwrap();
            let rhs = a
                .t_then_cube(&a.tau(&a.tar_src(f)), &a.h_id_vcell(&a.v_id_tar(f)))
                .unwrap();
            r.check("ix.tau", short(format!("nat {f:?}")), lhs == rhs);
        }
    }
    if on("ix.chi.natural") {
        let mut count = 0;
        'chi_nat: for c11 in &probes.cubes {
            for c12 in &probes.cubes {
                if a.bcell_east(&a.cube_src(c11)) != a.bcell_west(&a.cube_src(c12))
                    || a.cube_east(c11) != a.cube_west(c12)
                {
                    continue;
                }
                for c21 in &probes.cubes {
                    if a.bcell_south(&a.cube_src(c11)) != a.bcell_north(&a.cube_src(c21))
                        || a.cube_south(c11) != a.cube_north(c21)
                    {
                        continue;
                    }
                    for c22 in &probes.cubes {
                        if a.bcell_east(&a.cube_src(c21)) != a.bcell_west(&a.cube_src(c22))
                            || a.cube_east(c21) != a.cube_west(c22)
                            || a.bcell_south(&a.cube_src(c12)) != a.bcell_north(&a.cube_src(c22))
                            || a.cube_south(c12) != a.cube_north(c22)
                        {
                            continue;
                        }
                        let chi_src = a
                            .chi(&a.cube_src(c11), &a.cube_src(c12), &a.cube_src(c21), &a.cube_src(c22))
                            .unwrap();
                        let chi_tgt = a
                            .chi(&a.cube_tgt(c11), &a.cube_tgt(c12), &a.cube_tgt(c21), &a.cube_tgt(c22))
                            .unwrap();
                        let before = a
                            .v_then_cube(&a.h_then_cube(c11, c12).unwrap(), &a.h_then_cube(c21, c22).unwrap())
                            .unwrap();
                        let after = a
                            .h_then_cube(&a.v_then_cube(c11, c21).unwrap(), &a.v_then_cube(c12, c22).unwrap())
                            .unwrap();
                        let lhs = a.t_then_cube(&before, &chi_tgt).unwrap();
                        let rhs = a.t_then_cube(&chi_src, &after).unwrap();
                        r.check("ix.chi.natural", short(format!("{c11:?}")), lhs == rhs);
                        count += 1;
                        if count > GRID_CAP {
                            break 'chi_nat;
                        }
                    }
                }
            }
        }
    }
    if on("ix.mu.natural") {
        for p in &probes.vcells {
            for q in &probes.vcells {
                if a.var_tgt(&a.vcell_src(p)) != a.var_src(&a.vcell_src(q))
                    || a.vcell_south(p) != a.vcell_north(q)
                {
                    continue;
                }
                let mu_src = a.mu(&a.vcell_src(p), &a.vcell_src(q)).unwrap();
                let mu_tgt = a.mu(&a.vcell_tgt(p), &a.vcell_tgt(q)).unwrap();
                let before = a.v_then_cube(&a.h_id_vcell(p), &a.h_id_vcell(q)).unwrap();
                let after = a.h_id_vcell(&a.v_then_vcell(p, q).unwrap());
                let lhs = a.t_then_cube(&before, &mu_tgt).unwrap();
                let rhs = a.t_then_cube(&mu_src, &after).unwrap();
                r.check("ix.mu.natural", short(format!("{p:?}/{q:?}")), lhs == rhs);
            }
        }
    }
    if on("ix.delta.natural") {
        for p in &probes.hcells {
            for q in &probes.hcells {
                if a.har_tgt(&a.hcell_src(p)) != a.har_src(&a.hcell_src(q))
                    || a.hcell_east(p) != a.hcell_west(q)
                {
                    continue;
                }
                let d_src = a.delta(&a.hcell_src(p), &a.hcell_src(q)).unwrap();
                let d_tgt = a.delta(&a.hcell_tgt(p), &a.hcell_tgt(q)).unwrap();
                let before = a.v_id_hcell(&a.h_then_hcell(p, q).unwrap());
                let after = a.h_then_cube(&a.v_id_hcell(p), &a.v_id_hcell(q)).unwrap();
                let lhs = a.t_then_cube(&before, &d_tgt).unwrap();
                let rhs = a.t_then_cube(&d_src, &after).unwrap();
                r.check("ix.delta.natural", short(format!("{p:?}|{q:?}")), lhs == rhs);
            }
        }
    }
    if on("ix.chi.hex.h") {
        // 2 x 3 grids
        let mut count = 0;
        'hexh: for (x, y, xb, yb) in &grids {
            for z in &probes.bcells {
                if a.bcell_east(y) != a.bcell_west(z) {
                    continue;
                }
                for zb in &probes.bcells {
                    if a.bcell_east(yb) != a.bcell_west(zb) || a.bcell_south(z) != a.bcell_north(zb) {
                        continue;
                    }
                    let xy = a.h_then_bcell(x, y).unwrap();
                    let xyb = a.h_then_bcell(xb, yb).unwrap();
                    // path 1: chi on ((x|y), z) then (chi | 1) then assoc
                    let p1a = a.chi(&xy, z, &xyb, zb).unwrap();
                    let p1b = a
                        .h_then_cube(&a.chi(x, y, xb, yb).unwrap(), &a.t_id_bcell(&a.v_then_bcell(z, zb).unwrap()))
                        .unwrap();
                    let p1c = a
                        .h_assoc_bcell(
                            &a.v_then_bcell(x, xb).unwrap(),
                            &a.v_then_bcell(y, yb).unwrap(),
                            &a.v_then_bcell(z, zb).unwrap(),
                        )
                        .unwrap();
                    let p1 = a.t_then_cube(&a.t_then_cube(&p1a, &p1b).unwrap(), &p1c).unwrap();
                    // path 2: (assoc / assoc) then chi on (x, y|z) then (1 | chi)
                    let p2a = a
                        .v_then_cube(&a.h_assoc_bcell(x, y, z).unwrap(), &a.h_assoc_bcell(xb, yb, zb).unwrap())
                        .unwrap();
                    let yz = a.h_then_bcell(y, z).unwrap();
                    let ybzb = a.h_then_bcell(yb, zb).unwrap();
                    let p2b = a.chi(x, &yz, xb, &ybzb).unwrap();
                    let p2c = a
                        .h_then_cube(&a.t_id_bcell(&a.v_then_bcell(x, xb).unwrap()), &a.chi(y, z, yb, zb).unwrap())
                        .unwrap();
                    let p2 = a.t_then_cube(&a.t_then_cube(&p2a, &p2b).unwrap(), &p2c).unwrap();
                    r.check("ix.chi.hex.h", short(format!("{x:?}|{y:?}|{z:?}")), p1 == p2);
                    count += 1;
                    if count > GRID_CAP / 2 {
                        break 'hexh;
                    }
                }
            }
        }
    }
    if on("ix.chi.hex.v") {
        // 3 x 2 grids
        let mut count = 0;
        'hexv: for (x, y, xb, yb) in &grids {
            for z in &probes.bcells {
                if a.bcell_south(xb) != a.bcell_north(z) {
                    continue;
                }
                for zb in &probes.bcells {
                    if a.bcell_south(yb) != a.bcell_north(zb) || a.bcell_east(z) != a.bcell_west(zb) {
                        continue;
                    }
                    let xxb = a.v_then_bcell(x, xb).unwrap();
                    let yyb = a.v_then_bcell(y, yb).unwrap();
                    // path 1: (chi / 1) then chi then (assoc^v | assoc^v)
                    let p1a = a
                        .v_then_cube(
                            &a.chi(x, y, xb, yb).unwrap(),
                            &a.t_id_bcell(&a.h_then_bcell(z, zb).unwrap()),
                        )
                        .unwrap();
                    let p1b = a.chi(&xxb, &yyb, z, zb).unwrap();
                    let p1c = a
                        .h_then_cube(&a.v_assoc_bcell(x, xb, z).unwrap(), &a.v_assoc_bcell(y, yb, zb).unwrap())
                        .unwrap();
                    let p1 = a.t_then_cube(&a.t_then_cube(&p1a, &p1b).unwrap(), &p1c).unwrap();
                    // path 2: assoc^v then (1 / chi) then chi
                    let xy = a.h_then_bcell(x, y).unwrap();
                    let xbyb = a.h_then_bcell(xb, yb).unwrap();
                    let zzb = a.h_then_bcell(z, zb).unwrap();
                    let p2a = a.v_assoc_bcell(&xy, &xbyb, &zzb).unwrap();
                    let p2b = a
                        .v_then_cube(&a.t_id_bcell(&xy), &a.chi(xb, yb, z, zb).unwrap())
                        .unwrap();
                    let p2c = a
                        .chi(x, y, &a.v_then_bcell(xb, z).unwrap(), &a.v_then_bcell(yb, zb).unwrap())
                        .unwrap();
                    let p2 = a.t_then_cube(&a.t_then_cube(&p2a, &p2b).unwrap(), &p2c).unwrap();
                    r.check("ix.chi.hex.v", short(format!("{x:?}/{xb:?}/{z:?}")), p1 == p2);
                    count += 1;
                    if count > GRID_CAP / 2 {
                        break 'hexv;
                    }
                }
            }
        }
    }

    // unit squares relating the degenerate interchangers to the unitors
    if on("ix.unit.chi.delta") {
        for (x, y) in hpairs.iter().take(GRID_CAP) {
            let (nx, ny) = (a.bcell_north(x), a.bcell_north(y));
            let xy = a.h_then_bcell(x, y).unwrap();
            let step1 = a.v_then_cube(&a.delta(&nx, &ny).unwrap(), &a.t_id_bcell(&xy)).unwrap();
            let step2 = a.chi(&a.v_id_har(&nx), &a.v_id_har(&ny), x, y).unwrap();
            let step3 = a.h_then_cube(&a.v_lunit_bcell(x), &a.v_lunit_bcell(y)).unwrap();
            let lhs = a.t_then_cube(&a.t_then_cube(&step1, &step2).unwrap(), &step3).unwrap();
            let rhs = a.v_lunit_bcell(&xy);
            r.check("ix.unit.chi.delta", short(format!("l {x:?}|{y:?}")), lhs == rhs);

            let (sx, sy) = (a.bcell_south(x), a.bcell_south(y));
            let step1 = a.v_then_cube(&a.t_id_bcell(&xy), &a.delta(&sx, &sy).unwrap()).unwrap();
            let step2 = a.chi(x, y, &a.v_id_har(&sx), &a.v_id_har(&sy)).unwrap();
            let step3 = a.h_then_cube(&a.v_runit_bcell(x), &a.v_runit_bcell(y)).unwrap();
            let lhs = a.t_then_cube(&a.t_then_cube(&step1, &step2).unwrap(), &step3).unwrap();
            let rhs = a.v_runit_bcell(&xy);
            r.check("ix.unit.chi.delta", short(format!("r {x:?}|{y:?}")), lhs == rhs);
        }
    }
    if on("ix.unit.chi.mu") {
        for (x, y) in vpairs.iter().take(GRID_CAP) {
            let (wx, wy) = (a.bcell_west(x), a.bcell_west(y));
            let xy = a.v_then_bcell(x, y).unwrap();
            let step1 = a.chi(&a.h_id_var(&wx), x, &a.h_id_var(&wy), y).unwrap();
            let step2 = a.h_then_cube(&a.mu(&wx, &wy).unwrap(), &a.t_id_bcell(&xy)).unwrap();
            let step3 = a.h_lunit_bcell(&xy);
            let lhs = a.t_then_cube(&a.t_then_cube(&step1, &step2).unwrap(), &step3).unwrap();
            let rhs = a.v_then_cube(&a.h_lunit_bcell(x), &a.h_lunit_bcell(y)).unwrap();
            r.check("ix.unit.chi.mu", short(format!("l {x:?}/{y:?}")), lhs == rhs);

            let (ex, ey) = (a.bcell_east(x), a.bcell_east(y));
            let step1 = a.chi(x, &a.h_id_var(&ex), y, &a.h_id_var(&ey)).unwrap();
            let step2 = a.h_then_cube(&a.t_id_bcell(&xy), &a.mu(&ex, &ey).unwrap()).unwrap();
            let step3 = a.h_runit_bcell(&xy);
            let lhs = a.t_then_cube(&a.t_then_cube(&step1, &step2).unwrap(), &step3).unwrap();
            let rhs = a.v_then_cube(&a.h_runit_bcell(x), &a.h_runit_bcell(y)).unwrap();
            r.check("ix.unit.chi.mu", short(format!("r {x:?}/{y:?}")), lhs == rhs);
        }
    }
    if on("ix.unit.mu.tau") {
        for v in &probes.vars {
            let (s, t) = (a.var_src(v), a.var_tgt(v));
            let idv = a.h_id_var(v);
            // tau / 1 then mu then id-of-lunit  ==  v-lunit of id_v
            let step1 = a.v_then_cube(&a.tau(&s), &a.t_id_bcell(&idv)).unwrap();
            let step2 = a.mu(&a.v_id_obj(&s), v).unwrap();
            let step3 = a.h_id_vcell(&a.v_lunit_var(v));
            let lhs = a.t_then_cube(&a.t_then_cube(&step1, &step2).unwrap(), &step3).unwrap();
            let rhs = a.v_lunit_bcell(&idv);
            r.check("ix.unit.mu.tau", short(format!("l {v:?}")), lhs == rhs);

            let step1 = a.v_then_cube(&a.t_id_bcell(&idv), &a.tau(&t)).unwrap();
            let step2 = a.mu(v, &a.v_id_obj(&t)).unwrap();
            let step3 = a.h_id_vcell(&a.v_runit_var(v));
            let lhs = a.t_then_cube(&a.t_then_cube(&step1, &step2).unwrap(), &step3).unwrap();
            let rhs = a.v_runit_bcell(&idv);
            r.check("ix.unit.mu.tau", short(format!("r {v:?}")), lhs == rhs);
        }
    }
    if on("ix.unit.delta.tau") {
        for h in &probes.hars {
            let (s, t) = (a.har_src(h), a.har_tgt(h));
            let idh = a.v_id_har(h);
            // delta then (tau | 1) then h-lunit  ==  Id of the arrow-level lunit
            let step1 = a.delta(&a.h_id_obj(&s), h).unwrap();
            let step2 = a.h_then_cube(&a.tau(&s), &a.t_id_bcell(&idh)).unwrap();
            let step3 = a.h_lunit_bcell(&idh);
            let lhs = a.t_then_cube(&a.t_then_cube(&step1, &step2).unwrap(), &step3).unwrap();
            let rhs = a.v_id_hcell(&a.h_lunit_har(h));
            r.check("ix.unit.delta.tau", short(format!("l {h:?}")), lhs == rhs);

            let step1 = a.delta(h, &a.h_id_obj(&t)).unwrap();
            let step2 = a.h_then_cube(&a.t_id_bcell(&idh), &a.tau(&t)).unwrap();
            let step3 = a.h_runit_bcell(&idh);
            let lhs = a.t_then_cube(&a.t_then_cube(&step1, &step2).unwrap(), &step3).unwrap();
            let rhs = a.v_id_hcell(&a.h_runit_har(h));
            r.check("ix.unit.delta.tau", short(format!("r {h:?}")), lhs == rhs);
        }
    }
    // hexagons for the degenerate interchangers
    if on("ix.mu.hex") {
        for u in &probes.vars {
            for v in &probes.vars {
                if a.var_tgt(u) != a.var_src(v) {
                    continue;
                }
                for w in &probes.vars {
                    if a.var_tgt(v) != a.var_src(w) {
                        continue;
                    }
                    let uv = a.v_then_var(u, v).unwrap();
                    let vw = a.v_then_var(v, w).unwrap();
                    let p1 = {
                        let s1 = a
                            .v_then_cube(&a.mu(u, v).unwrap(), &a.t_id_bcell(&a.h_id_var(w)))
                            .unwrap();
                        let s2 = a.mu(&uv, w).unwrap();
                        let s3 = a.h_id_vcell(&a.v_assoc_var(u, v, w).unwrap());
                        a.t_then_cube(&a.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    };
                    let p2 = {
                        let s1 = a
                            .v_assoc_bcell(&a.h_id_var(u), &a.h_id_var(v), &a.h_id_var(w))
                            .unwrap();
                        let s2 = a
                            .v_then_cube(&a.t_id_bcell(&a.h_id_var(u)), &a.mu(v, w).unwrap())
                            .unwrap();
                        let s3 = a.mu(u, &vw).unwrap();
                        a.t_then_cube(&a.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    };
                    r.check("ix.mu.hex", short(format!("{u:?}/{v:?}/{w:?}")), p1 == p2);
                }
            }
        }
    }
    if on("ix.delta.hex") {
        for h in &probes.hars {
            for k in &probes.hars {
                if a.har_tgt(h) != a.har_src(k) {
                    continue;
                }
                for l in &probes.hars {
                    if a.har_tgt(k) != a.har_src(l) {
                        continue;
                    }
                    let hk = a.h_then_har(h, k).unwrap();
                    let kl = a.h_then_har(k, l).unwrap();
                    let p1 = {
                        let s1 = a.delta(&hk, l).unwrap();
                        let s2 = a
                            .h_then_cube(&a.delta(h, k).unwrap(), &a.t_id_bcell(&a.v_id_har(l)))
                            .unwrap();
                        let s3 = a
                            .h_assoc_bcell(&a.v_id_har(h), &a.v_id_har(k), &a.v_id_har(l))
                            .unwrap();
                        a.t_then_cube(&a.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    };
                    let p2 = {
                        let s1 = a.v_id_hcell(&a.h_assoc_har(h, k, l).unwrap());
                        let s2 = a.delta(h, &kl).unwrap();
                        let s3 = a
                            .h_then_cube(&a.t_id_bcell(&a.v_id_har(h)), &a.delta(k, l).unwrap())
                            .unwrap();
                        a.t_then_cube(&a.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    };
                    r.check("ix.delta.hex", short(format!("{h:?}|{k:?}|{l:?}")), p1 == p2);
                }
            }
        }
    }
    r
}

/// Chirality and strict-triple-category predicates, decided on probes.
pub fn chirality<I: Intercategory>(a: &I, probes: &IntercatProbes<I>) -> StructureVerdict {
    let mut chiral = true;
    let mut strict = true;
    for o in &probes.objs {
        if !super::invert::is_identity_cube(a, &a.tau(o)) {
            chiral = false;
        }
    }
    for v in &probes.vars {
        for w in &probes.vars {
            if a.var_tgt(v) != a.var_src(w) {
                continue;
            }
            if !super::invert::is_identity_cube(a, &a.mu(v, w).unwrap()) {
                chiral = false;
            }
        }
    }
    for h in &probes.hars {
        for k in &probes.hars {
            if a.har_tgt(h) != a.har_src(k) {
                continue;
            }
            if !super::invert::is_identity_cube(a, &a.delta(h, k).unwrap()) {
                chiral = false;
            }
        }
    }
    // strictness additionally requires chi and the structural cubes to be
    // identities on probes
    'outer: for x in &probes.bcells {
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
                    if !super::invert::is_identity_cube(a, &a.chi(x, y, xb, yb).unwrap()) {
                        strict = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    for b in &probes.bcells {
        if !super::invert::is_identity_cube(a, &a.h_lunit_bcell(b))
            || !super::invert::is_identity_cube(a, &a.h_runit_bcell(b))
            || !super::invert::is_identity_cube(a, &a.v_lunit_bcell(b))
            || !super::invert::is_identity_cube(a, &a.v_runit_bcell(b))
        {
            strict = false;
        }
    }
    StructureVerdict {
        chiral,
        strict: strict && chiral,
    }
}
