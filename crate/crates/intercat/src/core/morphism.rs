//! Morphisms of intercategories: lax-lax, colax-lax and colax-colax. All
//! three preserve the transversal structure on the nose; the horizontal and
//! vertical comparison cells point with or against composition depending on
//! the kind. Lax-colax is not a kind: its compatibility diagrams do not
//! compose.

use super::laws::IntercatProbes;
use super::report::LawReport;
use super::Intercategory;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphKind {
    LaxLax,
    ColaxLax,
    ColaxColax,
}

impl MorphKind {
    pub fn h_is_lax(self) -> bool {
        matches!(self, MorphKind::LaxLax)
    }
    pub fn v_is_lax(self) -> bool {
        !matches!(self, MorphKind::ColaxColax)
    }
}

/// A morphism of intercategories. Comparison conventions:
/// - horizontal lax: `h_cmp : F x | F y -> F (x|y)`, `h_unit : id_F -> F id`;
///   horizontal colax: both reversed;
/// - vertical lax: `v_cmp : F x / F y -> F (x/y)`, `v_unit : Id_F -> F Id`;
///   vertical colax: both reversed.
pub trait IntercatMorphism<S: Intercategory, T: Intercategory> {
    fn kind(&self) -> MorphKind;

    fn on_obj(&self, o: &S::Obj) -> T::Obj;
    fn on_tar(&self, f: &S::TAr) -> T::TAr;
    fn on_har(&self, h: &S::HAr) -> T::HAr;
    fn on_var(&self, v: &S::VAr) -> T::VAr;
    fn on_hcell(&self, c: &S::HCell) -> T::HCell;
    fn on_vcell(&self, c: &S::VCell) -> T::VCell;
    fn on_bcell(&self, b: &S::BCell) -> T::BCell;
    fn on_cube(&self, c: &S::Cube) -> T::Cube;

    fn h_cmp_har(&self, h: &S::HAr, k: &S::HAr) -> T::HCell;
    fn h_unit_obj(&self, a: &S::Obj) -> T::HCell;
    fn h_cmp_bcell(&self, x: &S::BCell, y: &S::BCell) -> T::Cube;
    fn h_unit_var(&self, v: &S::VAr) -> T::Cube;

    fn v_cmp_var(&self, u: &S::VAr, w: &S::VAr) -> T::VCell;
    fn v_unit_obj(&self, a: &S::Obj) -> T::VCell;
    fn v_cmp_bcell(&self, x: &S::BCell, y: &S::BCell) -> T::Cube;
    fn v_unit_har(&self, h: &S::HAr) -> T::Cube;
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

const CAP: usize = 60;

/// Evaluates the morphism laws on probes: strict preservation of the
/// transversal structure, boundary bookkeeping, comparison-cube boundaries,
/// lax/colax coherence in both directions, naturality of the comparisons,
/// and the four squares relating them to the interchangers.
pub fn check_morphism<S, T, M>(s: &S, t: &T, m: &M, probes: &IntercatProbes<S>) -> LawReport
where
    S: Intercategory,
    T: Intercategory,
    M: IntercatMorphism<S, T>,
{
    let mut r = LawReport::new();
    let kind = m.kind();
    let pr = |x: &dyn std::fmt::Debug| short(format!("{x:?}"));

    // ---- transversal functoriality, all four categories ----
    for f in &probes.tars {
        for g in &probes.tars {
            if s.tar_tgt(f) != s.tar_src(g) {
                continue;
            }
            let lhs = m.on_tar(&s.t_then_tar(f, g).unwrap());
            let rhs = t.t_then_tar(&m.on_tar(f), &m.on_tar(g)).unwrap();
            r.check("mor.t.funct", short(format!("{f:?};{g:?}")), lhs == rhs);
        }
    }
    for o in &probes.objs {
        let ok = m.on_tar(&s.t_id_obj(o)) == t.t_id_obj(&m.on_obj(o));
        r.check("mor.t.funct", pr(o), ok);
    }
    for c in &probes.cubes {
        for d in &probes.cubes {
            if s.cube_tgt(c) != s.cube_src(d) {
                continue;
            }
            let lhs = m.on_cube(&s.t_then_cube(c, d).unwrap());
            let rhs = t.t_then_cube(&m.on_cube(c), &m.on_cube(d)).unwrap();
            r.check("mor.t.funct", short(format!("{c:?};{d:?}")), lhs == rhs);
        }
    }
    for b in &probes.bcells {
        let ok = m.on_cube(&s.t_id_bcell(b)) == t.t_id_bcell(&m.on_bcell(b));
        r.check("mor.t.funct", pr(b), ok);
    }
    for c in &probes.hcells {
        for d in &probes.hcells {
            if s.hcell_tgt(c) != s.hcell_src(d) {
                continue;
            }
            let lhs = m.on_hcell(&s.t_then_hcell(c, d).unwrap());
            let rhs = t.t_then_hcell(&m.on_hcell(c), &m.on_hcell(d)).unwrap();
            r.check("mor.t.funct", short(format!("{c:?};{d:?}")), lhs == rhs);
        }
    }
    for c in &probes.vcells {
        for d in &probes.vcells {
            if s.vcell_tgt(c) != s.vcell_src(d) {
                continue;
            }
            let lhs = m.on_vcell(&s.t_then_vcell(c, d).unwrap());
            let rhs = t.t_then_vcell(&m.on_vcell(c), &m.on_vcell(d)).unwrap();
            r.check("mor.t.funct", short(format!("{c:?};{d:?}")), lhs == rhs);
        }
    }

    // ---- boundary preservation ----
    for b in &probes.bcells {
        let fb = m.on_bcell(b);
        let ok = t.bcell_north(&fb) == m.on_har(&s.bcell_north(b))
            && t.bcell_south(&fb) == m.on_har(&s.bcell_south(b))
            && t.bcell_west(&fb) == m.on_var(&s.bcell_west(b))
            && t.bcell_east(&fb) == m.on_var(&s.bcell_east(b));
        r.check("mor.boundary", pr(b), ok);
    }
    for c in &probes.cubes {
        let fc = m.on_cube(c);
        let ok = t.cube_src(&fc) == m.on_bcell(&s.cube_src(c))
            && t.cube_tgt(&fc) == m.on_bcell(&s.cube_tgt(c))
            && t.cube_north(&fc) == m.on_hcell(&s.cube_north(c))
            && t.cube_west(&fc) == m.on_vcell(&s.cube_west(c));
        r.check("mor.boundary", pr(c), ok);
    }

    // ---- comparison boundaries ----
    let hpairs: Vec<(&S::BCell, &S::BCell)> = probes
        .bcells
        .iter()
        .flat_map(|x| {
            probes
                .bcells
                .iter()
                .filter(move |y| s.bcell_east(x) == s.bcell_west(y))
                .map(move |y| (x, y))
        })
        .take(CAP)
        .collect();
    let vpairs: Vec<(&S::BCell, &S::BCell)> = probes
        .bcells
        .iter()
        .flat_map(|x| {
            probes
                .bcells
                .iter()
                .filter(move |y| s.bcell_south(x) == s.bcell_north(y))
                .map(move |y| (x, y))
        })
        .take(CAP)
        .collect();
    for (x, y) in &hpairs {
        let cmp = m.h_cmp_bcell(x, y);
        let composite_in_t = t.h_then_bcell(&m.on_bcell(x), &m.on_bcell(y)).unwrap();
        let image = m.on_bcell(&s.h_then_bcell(x, y).unwrap());
        let (src, tgt) = if kind.h_is_lax() {
            (composite_in_t, image)
        } else {
            (image, composite_in_t)
        };
        let ok = t.cube_src(&cmp) == src && t.cube_tgt(&cmp) == tgt;
        r.check("mor.h.cmp.boundary", short(format!("{x:?}|{y:?}")), ok);
    }
    for v in &probes.vars {
        let unit = m.h_unit_var(v);
        let idt = t.h_id_var(&m.on_var(v));
        let image = m.on_bcell(&s.h_id_var(v));
        let (src, tgt) = if kind.h_is_lax() { (idt, image) } else { (image, idt) };
        let ok = t.cube_src(&unit) == src && t.cube_tgt(&unit) == tgt;
        r.check("mor.h.unit.boundary", pr(v), ok);
    }
    for (x, y) in &vpairs {
        let cmp = m.v_cmp_bcell(x, y);
        let composite_in_t = t.v_then_bcell(&m.on_bcell(x), &m.on_bcell(y)).unwrap();
        let image = m.on_bcell(&s.v_then_bcell(x, y).unwrap());
        let (src, tgt) = if kind.v_is_lax() {
            (composite_in_t, image)
        } else {
            (image, composite_in_t)
        };
        let ok = t.cube_src(&cmp) == src && t.cube_tgt(&cmp) == tgt;
        r.check("mor.v.cmp.boundary", short(format!("{x:?}/{y:?}")), ok);
    }
    for h in &probes.hars {
        let unit = m.v_unit_har(h);
        let idt = t.v_id_har(&m.on_har(h));
        let image = m.on_bcell(&s.v_id_har(h));
        let (src, tgt) = if kind.v_is_lax() { (idt, image) } else { (image, idt) };
        let ok = t.cube_src(&unit) == src && t.cube_tgt(&unit) == tgt;
        r.check("mor.v.unit.boundary", pr(h), ok);
    }

    // ---- horizontal coherence at the basic-cell level ----
    let htriples: Vec<(&S::BCell, &S::BCell, &S::BCell)> = hpairs
        .iter()
        .flat_map(|(x, y)| {
            probes
                .bcells
                .iter()
                .filter(move |z| s.bcell_east(y) == s.bcell_west(*z))
                .map(move |z| (*x, *y, z))
        })
        .take(CAP)
        .collect();
    for (x, y, z) in &htriples {
        let (fx, fy, fz) = (m.on_bcell(x), m.on_bcell(y), m.on_bcell(z));
        let (p1, p2) = if kind.h_is_lax() {
            let p1 = {
                let s1 = t.h_then_cube(&m.h_cmp_bcell(x, y), &t.t_id_bcell(&fz)).unwrap();
                let s2 = m.h_cmp_bcell(&s.h_then_bcell(x, y).unwrap(), z);
                let s3 = m.on_cube(&s.h_assoc_bcell(x, y, z).unwrap());
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            let p2 = {
                let s1 = t.h_assoc_bcell(&fx, &fy, &fz).unwrap();
                let s2 = t.h_then_cube(&t.t_id_bcell(&fx), &m.h_cmp_bcell(y, z)).unwrap();
                let s3 = m.h_cmp_bcell(x, &s.h_then_bcell(y, z).unwrap());
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (p1, p2)
        } else {
            let p1 = {
                let s1 = m.h_cmp_bcell(&s.h_then_bcell(x, y).unwrap(), z);
                let s2 = t.h_then_cube(&m.h_cmp_bcell(x, y), &t.t_id_bcell(&fz)).unwrap();
                let s3 = t.h_assoc_bcell(&fx, &fy, &fz).unwrap();
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            let p2 = {
                let s1 = m.on_cube(&s.h_assoc_bcell(x, y, z).unwrap());
                let s2 = m.h_cmp_bcell(x, &s.h_then_bcell(y, z).unwrap());
                let s3 = t.h_then_cube(&t.t_id_bcell(&fx), &m.h_cmp_bcell(y, z)).unwrap();
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (p1, p2)
        };
        r.check("mor.h.hexagon", short(format!("{x:?}|{y:?}|{z:?}")), p1 == p2);
    }
    for b in probes.bcells.iter().take(CAP) {
        let w = s.bcell_west(b);
        let fb = m.on_bcell(b);
        let (lhs, rhs) = if kind.h_is_lax() {
            let lhs = {
                let s1 = t
                    .h_then_cube(&m.h_unit_var(&w), &t.t_id_bcell(&fb))
                    .unwrap();
                let s2 = m.h_cmp_bcell(&s.h_id_var(&w), b);
                let s3 = m.on_cube(&s.h_lunit_bcell(b));
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (lhs, t.h_lunit_bcell(&fb))
        } else {
            let lhs = {
                let s1 = m.h_cmp_bcell(&s.h_id_var(&w), b);
                let s2 = t
                    .h_then_cube(&m.h_unit_var(&w), &t.t_id_bcell(&fb))
                    .unwrap();
                let s3 = t.h_lunit_bcell(&fb);
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (lhs, m.on_cube(&s.h_lunit_bcell(b)))
        };
        r.check("mor.h.lunit", pr(b), lhs == rhs);
        let e = s.bcell_east(b);
        let (lhs, rhs) = if kind.h_is_lax() {
            let lhs = {
                let s1 = t
                    .h_then_cube(&t.t_id_bcell(&fb), &m.h_unit_var(&e))
                    .unwrap();
                let s2 = m.h_cmp_bcell(b, &s.h_id_var(&e));
                let s3 = m.on_cube(&s.h_runit_bcell(b));
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (lhs, t.h_runit_bcell(&fb))
        } else {
            let lhs = {
                let s1 = m.h_cmp_bcell(b, &s.h_id_var(&e));
                let s2 = t
                    .h_then_cube(&t.t_id_bcell(&fb), &m.h_unit_var(&e))
                    .unwrap();
                let s3 = t.h_runit_bcell(&fb);
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (lhs, m.on_cube(&s.h_runit_bcell(b)))
        };
        r.check("mor.h.runit", pr(b), lhs == rhs);
    }
    // naturality of the horizontal comparison on cubes
    let mut count = 0;
    'hnat: for c in &probes.cubes {
        for d in &probes.cubes {
            if s.bcell_east(&s.cube_src(c)) != s.bcell_west(&s.cube_src(d))
                || s.cube_east(c) != s.cube_west(d)
            {
                continue;
            }
            let (x, y) = (s.cube_src(c), s.cube_src(d));
            let (x2, y2) = (s.cube_tgt(c), s.cube_tgt(d));
            let (lhs, rhs) = if kind.h_is_lax() {
                (
                    t.t_then_cube(
                        &t.h_then_cube(&m.on_cube(c), &m.on_cube(d)).unwrap(),
                        &m.h_cmp_bcell(&x2, &y2),
                    )
                    .unwrap(),
                    t.t_then_cube(&m.h_cmp_bcell(&x, &y), &m.on_cube(&s.h_then_cube(c, d).unwrap())).unwrap(),
                )
            } else {
                (
                    t.t_then_cube(
                        &m.on_cube(&s.h_then_cube(c, d).unwrap()),
                        &m.h_cmp_bcell(&x2, &y2),
                    )
                    .unwrap(),
                    t.t_then_cube(&m.h_cmp_bcell(&x, &y), &t.h_then_cube(&m.on_cube(c), &m.on_cube(d)).unwrap()).unwrap(),
                )
            };
            r.check("mor.h.natural", short(format!("{c:?}|{d:?}")), lhs == rhs);
            count += 1;
            if count > CAP {
                break 'hnat;
            }
        }
    }

    // ---- vertical coherence at the basic-cell level ----
    let vtriples: Vec<(&S::BCell, &S::BCell, &S::BCell)> = vpairs
        .iter()
        .flat_map(|(x, y)| {
            probes
                .bcells
                .iter()
                .filter(move |z| s.bcell_south(y) == s.bcell_north(*z))
                .map(move |z| (*x, *y, z))
        })
        .take(CAP)
        .collect();
    for (x, y, z) in &vtriples {
        let (fx, fy, fz) = (m.on_bcell(x), m.on_bcell(y), m.on_bcell(z));
        let (p1, p2) = if kind.v_is_lax() {
            let p1 = {
                let s1 = t.v_then_cube(&m.v_cmp_bcell(x, y), &t.t_id_bcell(&fz)).unwrap();
                let s2 = m.v_cmp_bcell(&s.v_then_bcell(x, y).unwrap(), z);
                let s3 = m.on_cube(&s.v_assoc_bcell(x, y, z).unwrap());
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            let p2 = {
                let s1 = t.v_assoc_bcell(&fx, &fy, &fz).unwrap();
                let s2 = t.v_then_cube(&t.t_id_bcell(&fx), &m.v_cmp_bcell(y, z)).unwrap();
                let s3 = m.v_cmp_bcell(x, &s.v_then_bcell(y, z).unwrap());
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (p1, p2)
        } else {
            let p1 = {
                let s1 = m.v_cmp_bcell(&s.v_then_bcell(x, y).unwrap(), z);
                let s2 = t.v_then_cube(&m.v_cmp_bcell(x, y), &t.t_id_bcell(&fz)).unwrap();
                let s3 = t.v_assoc_bcell(&fx, &fy, &fz).unwrap();
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            let p2 = {
                let s1 = m.on_cube(&s.v_assoc_bcell(x, y, z).unwrap());
                let s2 = m.v_cmp_bcell(x, &s.v_then_bcell(y, z).unwrap());
                let s3 = t.v_then_cube(&t.t_id_bcell(&fx), &m.v_cmp_bcell(y, z)).unwrap();
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (p1, p2)
        };
        r.check("mor.v.hexagon", short(format!("{x:?}/{y:?}/{z:?}")), p1 == p2);
    }
    for b in probes.bcells.iter().take(CAP) {
        let n = s.bcell_north(b);
        let fb = m.on_bcell(b);
        let (lhs, rhs) = if kind.v_is_lax() {
            let lhs = {
                let s1 = t.v_then_cube(&m.v_unit_har(&n), &t.t_id_bcell(&fb)).unwrap();
                let s2 = m.v_cmp_bcell(&s.v_id_har(&n), b);
                let s3 = m.on_cube(&s.v_lunit_bcell(b));
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (lhs, t.v_lunit_bcell(&fb))
        } else {
            let lhs = {
                let s1 = m.v_cmp_bcell(&s.v_id_har(&n), b);
                let s2 = t.v_then_cube(&m.v_unit_har(&n), &t.t_id_bcell(&fb)).unwrap();
                let s3 = t.v_lunit_bcell(&fb);
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (lhs, m.on_cube(&s.v_lunit_bcell(b)))
        };
        r.check("mor.v.lunit", pr(b), lhs == rhs);
        let so = s.bcell_south(b);
        let (lhs, rhs) = if kind.v_is_lax() {
            let lhs = {
                let s1 = t.v_then_cube(&t.t_id_bcell(&fb), &m.v_unit_har(&so)).unwrap();
                let s2 = m.v_cmp_bcell(b, &s.v_id_har(&so));
                let s3 = m.on_cube(&s.v_runit_bcell(b));
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (lhs, t.v_runit_bcell(&fb))
        } else {
            let lhs = {
                let s1 = m.v_cmp_bcell(b, &s.v_id_har(&so));
                let s2 = t.v_then_cube(&t.t_id_bcell(&fb), &m.v_unit_har(&so)).unwrap();
                let s3 = t.v_runit_bcell(&fb);
                t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
            };
            (lhs, m.on_cube(&s.v_runit_bcell(b)))
        };
        r.check("mor.v.runit", pr(b), lhs == rhs);
    }
    let mut count = 0;
    'vnat: for c in &probes.cubes {
        for d in &probes.cubes {
            if s.bcell_south(&s.cube_src(c)) != s.bcell_north(&s.cube_src(d))
                || s.cube_south(c) != s.cube_north(d)
            {
                continue;
            }
            let (x, y) = (s.cube_src(c), s.cube_src(d));
            let (x2, y2) = (s.cube_tgt(c), s.cube_tgt(d));
            let (lhs, rhs) = if kind.v_is_lax() {
                (
                    t.t_then_cube(
                        &t.v_then_cube(&m.on_cube(c), &m.on_cube(d)).unwrap(),
                        &m.v_cmp_bcell(&x2, &y2),
                    )
                    .unwrap(),
                    t.t_then_cube(&m.v_cmp_bcell(&x, &y), &m.on_cube(&s.v_then_cube(c, d).unwrap())).unwrap(),
                )
            } else {
                (
                    t.t_then_cube(
                        &m.on_cube(&s.v_then_cube(c, d).unwrap()),
                        &m.v_cmp_bcell(&x2, &y2),
                    )
                    .unwrap(),
                    t.t_then_cube(&m.v_cmp_bcell(&x, &y), &t.v_then_cube(&m.on_cube(c), &m.on_cube(d)).unwrap()).unwrap(),
                )
            };
            r.check("mor.v.natural", short(format!("{c:?}/{d:?}")), lhs == rhs);
            count += 1;
            if count > CAP {
                break 'vnat;
            }
        }
    }

    // ---- the four squares relating the comparisons to the interchangers ----
    let mut count = 0;
    'chisq: for (x, y) in &hpairs {
        for (xb, yb) in &hpairs {
            if s.bcell_south(x) != s.bcell_north(xb) || s.bcell_south(y) != s.bcell_north(yb) {
                continue;
            }
            let (fx, fy, fxb, fyb) = (m.on_bcell(x), m.on_bcell(y), m.on_bcell(xb), m.on_bcell(yb));
            let (p1, p2) = match kind {
                MorphKind::LaxLax => {
                    let p1 = {
                        let s1 = t.chi(&fx, &fy, &fxb, &fyb).unwrap();
                        let s2 = t
                            .h_then_cube(&m.v_cmp_bcell(x, xb), &m.v_cmp_bcell(y, yb))
                            .unwrap();
                        let s3 = m.h_cmp_bcell(&s.v_then_bcell(x, xb).unwrap(), &s.v_then_bcell(y, yb).unwrap());
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    };
                    let p2 = {
                        let s1 = t
                            .v_then_cube(&m.h_cmp_bcell(x, y), &m.h_cmp_bcell(xb, yb))
                            .unwrap();
                        let s2 = m.v_cmp_bcell(&s.h_then_bcell(x, y).unwrap(), &s.h_then_bcell(xb, yb).unwrap());
                        let s3 = m.on_cube(&s.chi(x, y, xb, yb).unwrap());
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    };
                    (p1, p2)
                }
                MorphKind::ColaxLax => {
                    let p1 = {
                        let s1 = m.v_cmp_bcell(&s.h_then_bcell(x, y).unwrap(), &s.h_then_bcell(xb, yb).unwrap());
                        let s2 = m.on_cube(&s.chi(x, y, xb, yb).unwrap());
                        let s3 = m.h_cmp_bcell(&s.v_then_bcell(x, xb).unwrap(), &s.v_then_bcell(y, yb).unwrap());
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    };
                    let p2 = {
                        let s1 = t
                            .v_then_cube(&m.h_cmp_bcell(x, y), &m.h_cmp_bcell(xb, yb))
                            .unwrap();
                        let s2 = t.chi(&fx, &fy, &fxb, &fyb).unwrap();
                        let s3 = t
                            .h_then_cube(&m.v_cmp_bcell(x, xb), &m.v_cmp_bcell(y, yb))
                            .unwrap();
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    };
                    (p1, p2)
                }
                MorphKind::ColaxColax => {
                    let p1 = {
                        let s1 = m.v_cmp_bcell(&s.h_then_bcell(x, y).unwrap(), &s.h_then_bcell(xb, yb).unwrap());
                        let s2 = t
                            .v_then_cube(&m.h_cmp_bcell(x, y), &m.h_cmp_bcell(xb, yb))
                            .unwrap();
                        let s3 = t.chi(&fx, &fy, &fxb, &fyb).unwrap();
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    };
                    let p2 = {
                        let s1 = m.on_cube(&s.chi(x, y, xb, yb).unwrap());
                        let s2 = m.h_cmp_bcell(&s.v_then_bcell(x, xb).unwrap(), &s.v_then_bcell(y, yb).unwrap());
                        let s3 = t
                            .h_then_cube(&m.v_cmp_bcell(x, xb), &m.v_cmp_bcell(y, yb))
                            .unwrap();
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    };
                    (p1, p2)
                }
            };
            r.check("mor.ix.chi", short(format!("{x:?}|{y:?}")), p1 == p2);
            count += 1;
            if count > CAP {
                break 'chisq;
            }
        }
    }
    for v in &probes.vars {
        for w in &probes.vars {
            if s.var_tgt(v) != s.var_src(w) {
                continue;
            }
            let (fv, fw) = (m.on_var(v), m.on_var(w));
            let (p1, p2) = match kind {
                MorphKind::LaxLax => (
                    {
                        let s1 = t.mu(&fv, &fw).unwrap();
                        let s2 = t.h_id_vcell(&m.v_cmp_var(v, w));
                        let s3 = m.h_unit_var(&s.v_then_var(v, w).unwrap());
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                    {
                        let s1 = t.v_then_cube(&m.h_unit_var(v), &m.h_unit_var(w)).unwrap();
                        let s2 = m.v_cmp_bcell(&s.h_id_var(v), &s.h_id_var(w));
                        let s3 = m.on_cube(&s.mu(v, w).unwrap());
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                ),
                MorphKind::ColaxLax => (
                    {
                        let s1 = t.v_then_cube(&m.h_unit_var(v), &m.h_unit_var(w)).unwrap();
                        let s2 = t.mu(&fv, &fw).unwrap();
                        let s3 = t.h_id_vcell(&m.v_cmp_var(v, w));
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                    {
                        let s1 = m.v_cmp_bcell(&s.h_id_var(v), &s.h_id_var(w));
                        let s2 = m.on_cube(&s.mu(v, w).unwrap());
                        let s3 = m.h_unit_var(&s.v_then_var(v, w).unwrap());
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                ),
                MorphKind::ColaxColax => (
                    {
                        let s1 = m.v_cmp_bcell(&s.h_id_var(v), &s.h_id_var(w));
                        let s2 = t.v_then_cube(&m.h_unit_var(v), &m.h_unit_var(w)).unwrap();
                        let s3 = t.mu(&fv, &fw).unwrap();
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                    {
                        let s1 = m.on_cube(&s.mu(v, w).unwrap());
                        let s2 = m.h_unit_var(&s.v_then_var(v, w).unwrap());
                        let s3 = t.h_id_vcell(&m.v_cmp_var(v, w));
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                ),
            };
            r.check("mor.ix.mu", short(format!("{v:?}/{w:?}")), p1 == p2);
        }
    }
    for h in &probes.hars {
        for k in &probes.hars {
            if s.har_tgt(h) != s.har_src(k) {
                continue;
            }
            let (fh, fk) = (m.on_har(h), m.on_har(k));
            let (p1, p2) = match kind {
                MorphKind::LaxLax => (
                    {
                        let s1 = t.delta(&fh, &fk).unwrap();
                        let s2 = t.h_then_cube(&m.v_unit_har(h), &m.v_unit_har(k)).unwrap();
                        let s3 = m.h_cmp_bcell(&s.v_id_har(h), &s.v_id_har(k));
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                    {
                        let s1 = t.v_id_hcell(&m.h_cmp_har(h, k));
                        let s2 = m.v_unit_har(&s.h_then_har(h, k).unwrap());
                        let s3 = m.on_cube(&s.delta(h, k).unwrap());
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                ),
                MorphKind::ColaxLax => (
                    {
                        let s1 = m.v_unit_har(&s.h_then_har(h, k).unwrap());
                        let s2 = m.on_cube(&s.delta(h, k).unwrap());
                        let s3 = m.h_cmp_bcell(&s.v_id_har(h), &s.v_id_har(k));
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                    {
                        let s1 = t.v_id_hcell(&m.h_cmp_har(h, k));
                        let s2 = t.delta(&fh, &fk).unwrap();
                        let s3 = t.h_then_cube(&m.v_unit_har(h), &m.v_unit_har(k)).unwrap();
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                ),
                MorphKind::ColaxColax => (
                    {
                        let s1 = m.on_cube(&s.delta(h, k).unwrap());
                        let s2 = m.h_cmp_bcell(&s.v_id_har(h), &s.v_id_har(k));
                        let s3 = t.h_then_cube(&m.v_unit_har(h), &m.v_unit_har(k)).unwrap();
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                    {
                        let s1 = m.v_unit_har(&s.h_then_har(h, k).unwrap());
                        let s2 = t.v_id_hcell(&m.h_cmp_har(h, k));
                        let s3 = t.delta(&fh, &fk).unwrap();
                        t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                    },
                ),
            };
            r.check("mor.ix.delta", short(format!("{h:?}|{k:?}")), p1 == p2);
        }
    }
    for o in &probes.objs {
        let fo = m.on_obj(o);
        let (p1, p2) = match kind {
            MorphKind::LaxLax => (
                {
                    let s1 = t.tau(&fo);
                    let s2 = t.h_id_vcell(&m.v_unit_obj(o));
                    let s3 = m.h_unit_var(&s.v_id_obj(o));
                    t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                },
                {
                    let s1 = t.v_id_hcell(&m.h_unit_obj(o));
                    let s2 = m.v_unit_har(&s.h_id_obj(o));
                    let s3 = m.on_cube(&s.tau(o));
                    t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                },
            ),
            MorphKind::ColaxLax => (
                {
                    let s1 = m.v_unit_har(&s.h_id_obj(o));
                    let s2 = m.on_cube(&s.tau(o));
                    let s3 = m.h_unit_var(&s.v_id_obj(o));
                    t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                },
                {
                    let s1 = t.v_id_hcell(&m.h_unit_obj(o));
                    let s2 = t.tau(&fo);
                    let s3 = t.h_id_vcell(&m.v_unit_obj(o));
                    t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                },
            ),
            MorphKind::ColaxColax => (
                {
                    let s1 = m.on_cube(&s.tau(o));
                    let s2 = m.h_unit_var(&s.v_id_obj(o));
                    let s3 = t.h_id_vcell(&m.v_unit_obj(o));
                    t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                },
                {
                    let s1 = m.v_unit_har(&s.h_id_obj(o));
                    let s2 = t.v_id_hcell(&m.h_unit_obj(o));
                    let s3 = t.tau(&fo);
                    t.t_then_cube(&t.t_then_cube(&s1, &s2).unwrap(), &s3).unwrap()
                },
            ),
        };
        r.check("mor.ix.tau", pr(o), p1 == p2);
    }
    r
}
