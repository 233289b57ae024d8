//! The symmetric embedding of a true Gray category: both arrow directions
//! are the 1-cells, basic cells are quintets filled by a 2-cell from the
//! west-south composite to the north-east composite, and cubes are 3-cells.
//! Vertical and horizontal arrows are companion-paired by the identity
//! bijection, with binding quintets carried by identity 2-cells.

use super::{G1, TrueGrayCat};
use crate::core::{Enumerable, Intercategory};
use crate::fincat::MorId;
use crate::{Error, Result};

/// A quintet: four 1-cells and a filling 2-cell `(west;south) => (north;east)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Quin {
    pub north: G1,
    pub west: G1,
    pub east: G1,
    pub south: G1,
    pub content: MorId,
}

/// A cube: a 3-cell between the contents of two quintets with the same
/// square of 1-cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuinCube {
    pub src: Quin,
    pub tgt: Quin,
    pub mu: MorId,
}

/// The symmetric quintet intercategory of a true Gray category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraySym {
    pub g: TrueGrayCat,
}

/// The companion structure: the identity bijection between vertical and
/// horizontal arrows with its binding cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompanionStructure;

pub fn gray_symmetric(g: TrueGrayCat) -> Result<(GraySym, CompanionStructure)> {
    let report = g.validate();
    if !report.passed() {
        return Err(Error::invalid("gray_symmetric", format!("{report}")));
    }
    Ok((GraySym { g }, CompanionStructure))
}

impl GraySym {
    pub fn mk_bcell(&self, north: G1, west: G1, east: G1, south: G1, content: MorId) -> Result<Quin> {
        let ws = self.g.then1(&west.f, &south.f)?;
        let ne = self.g.then1(&north.f, &east.f)?;
        let hom = self.g.hom(&north.src, &south.tgt);
        if hom.dom1(&content) != &ws || hom.cod1(&content) != &ne {
            return Err(Error::boundary("GraySym::mk_bcell", "content does not fill the square"));
        }
        Ok(Quin {
            north,
            west,
            east,
            south,
            content,
        })
    }

    pub fn mk_cube(&self, src: Quin, tgt: Quin, mu: MorId) -> Result<QuinCube> {
        if (&src.north, &src.west, &src.east, &src.south)
            != (&tgt.north, &tgt.west, &tgt.east, &tgt.south)
        {
            return Err(Error::boundary("GraySym::mk_cube", "squares differ"));
        }
        let hom = self.g.hom(&src.north.src, &src.south.tgt);
        if hom.dom2(&mu) != &src.content || hom.cod2(&mu) != &tgt.content {
            return Err(Error::boundary("GraySym::mk_cube", "3-cell boundary mismatch"));
        }
        Ok(QuinCube { src, tgt, mu })
    }

    fn id_g1(&self, a: &str) -> G1 {
        G1 {
            src: a.to_string(),
            tgt: a.to_string(),
            f: self.g.id1[a].clone(),
        }
    }

    /// The companion of a vertical arrow: the same 1-cell horizontally.
    pub fn companion(&self, v: &G1) -> G1 {
        v.clone()
    }

    /// Binding cell `eps_v : (v_* north, v west, id east, id south)`.
    pub fn eps(&self, v: &G1) -> Quin {
        let idt = self.id_g1(&v.tgt);
        let hom = self.g.hom(&v.src, &v.tgt);
        Quin {
            north: v.clone(),
            west: v.clone(),
            east: idt.clone(),
            south: idt,
            content: hom.id1[&v.f].clone(),
        }
    }

    /// Binding cell `eta_v : (id north, id west, v east, v_* south)`.
    pub fn eta(&self, v: &G1) -> Quin {
        let ids = self.id_g1(&v.src);
        let hom = self.g.hom(&v.src, &v.tgt);
        Quin {
            north: ids.clone(),
            west: ids,
            east: v.clone(),
            south: v.clone(),
            content: hom.id1[&v.f].clone(),
        }
    }
}

impl Intercategory for GraySym {
    type Obj = String;
    type TAr = String;
    type HAr = G1;
    type VAr = G1;
    type HCell = G1;
    type VCell = G1;
    type BCell = Quin;
    type Cube = QuinCube;

    fn tar_src(&self, f: &String) -> String {
        f.clone()
    }
    fn tar_tgt(&self, f: &String) -> String {
        f.clone()
    }
    fn har_src(&self, h: &G1) -> String {
        h.src.clone()
    }
    fn har_tgt(&self, h: &G1) -> String {
        h.tgt.clone()
    }
    fn var_src(&self, v: &G1) -> String {
        v.src.clone()
    }
    fn var_tgt(&self, v: &G1) -> String {
        v.tgt.clone()
    }

    fn hcell_src(&self, c: &G1) -> G1 {
        c.clone()
    }
    fn hcell_tgt(&self, c: &G1) -> G1 {
        c.clone()
    }
    fn hcell_west(&self, c: &G1) -> String {
        c.src.clone()
    }
    fn hcell_east(&self, c: &G1) -> String {
        c.tgt.clone()
    }
    fn vcell_src(&self, c: &G1) -> G1 {
        c.clone()
    }
    fn vcell_tgt(&self, c: &G1) -> G1 {
        c.clone()
    }
    fn vcell_north(&self, c: &G1) -> String {
        c.src.clone()
    }
    fn vcell_south(&self, c: &G1) -> String {
        c.tgt.clone()
    }

    fn bcell_north(&self, b: &Quin) -> G1 {
        b.north.clone()
    }
    fn bcell_south(&self, b: &Quin) -> G1 {
        b.south.clone()
    }
    fn bcell_west(&self, b: &Quin) -> G1 {
        b.west.clone()
    }
    fn bcell_east(&self, b: &Quin) -> G1 {
        b.east.clone()
    }

    fn cube_src(&self, c: &QuinCube) -> Quin {
        c.src.clone()
    }
    fn cube_tgt(&self, c: &QuinCube) -> Quin {
        c.tgt.clone()
    }
    fn cube_north(&self, c: &QuinCube) -> G1 {
        c.src.north.clone()
    }
    fn cube_south(&self, c: &QuinCube) -> G1 {
        c.src.south.clone()
    }
    fn cube_west(&self, c: &QuinCube) -> G1 {
        c.src.west.clone()
    }
    fn cube_east(&self, c: &QuinCube) -> G1 {
        c.src.east.clone()
    }

    fn t_id_obj(&self, a: &String) -> String {
        a.clone()
    }
    fn t_id_har(&self, h: &G1) -> G1 {
        h.clone()
    }
    fn t_id_var(&self, v: &G1) -> G1 {
        v.clone()
    }
    fn t_id_bcell(&self, b: &Quin) -> QuinCube {
        let hom = self.g.hom(&b.north.src, &b.south.tgt);
        QuinCube {
            src: b.clone(),
            tgt: b.clone(),
            mu: hom.id2_of(&b.content).clone(),
        }
    }

    fn t_then_tar(&self, f: &String, g: &String) -> Result<String> {
        if f != g {
            return Err(Error::boundary("GraySym::t_then_tar", "identities differ"));
        }
        Ok(f.clone())
    }
    fn t_then_hcell(&self, c: &G1, d: &G1) -> Result<G1> {
        if c != d {
            return Err(Error::boundary("GraySym::t_then_hcell", "identities differ"));
        }
        Ok(c.clone())
    }
    fn t_then_vcell(&self, c: &G1, d: &G1) -> Result<G1> {
        self.t_then_hcell(c, d)
    }
    fn t_then_cube(&self, c: &QuinCube, d: &QuinCube) -> Result<QuinCube> {
        if c.tgt != d.src {
            return Err(Error::boundary("GraySym::t_then_cube", "cubes not composable"));
        }
        let hom = self.g.hom(&c.src.north.src, &c.src.south.tgt);
        self.mk_cube(c.src.clone(), d.tgt.clone(), hom.vthen(&c.mu, &d.mu)?)
    }

    fn h_id_obj(&self, a: &String) -> G1 {
        self.id_g1(a)
    }
    fn h_id_tar(&self, f: &String) -> G1 {
        self.id_g1(f)
    }
    fn h_id_var(&self, v: &G1) -> Quin {
        let hom = self.g.hom(&v.src, &v.tgt);
        Quin {
            north: self.id_g1(&v.src),
            west: v.clone(),
            east: v.clone(),
            south: self.id_g1(&v.tgt),
            content: hom.id1[&v.f].clone(),
        }
    }
    fn h_id_vcell(&self, c: &G1) -> QuinCube {
        self.t_id_bcell(&self.h_id_var(c))
    }

    fn h_then_har(&self, h: &G1, k: &G1) -> Result<G1> {
        Ok(G1 {
            src: h.src.clone(),
            tgt: k.tgt.clone(),
            f: self.g.then1(&h.f, &k.f)?,
        })
    }
    fn h_then_hcell(&self, c: &G1, d: &G1) -> Result<G1> {
        self.h_then_har(c, d)
    }
    fn h_then_bcell(&self, a: &Quin, b: &Quin) -> Result<Quin> {
        if a.east != b.west {
            return Err(Error::boundary("GraySym::h_then_bcell", "east != west"));
        }
        let hom = self.g.hom(&a.north.src, &b.south.tgt);
        let step1 = self.g.wr(&a.content, &b.south.f)?;
        let step2 = self.g.wl(&a.north.f, &b.content)?;
        self.mk_bcell(
            self.h_then_har(&a.north, &b.north)?,
            a.west.clone(),
            b.east.clone(),
            self.h_then_har(&a.south, &b.south)?,
            hom.then1(&step1, &step2)?,
        )
    }
    fn h_then_cube(&self, c: &QuinCube, d: &QuinCube) -> Result<QuinCube> {
        let src = self.h_then_bcell(&c.src, &d.src)?;
        let tgt = self.h_then_bcell(&c.tgt, &d.tgt)?;
        let hom = self.g.hom(&src.north.src, &src.south.tgt);
        let step1 = self.g.wr3(&c.mu, &d.src.south.f)?;
        let step2 = self.g.wl3(&c.src.north.f, &d.mu)?;
        self.mk_cube(src, tgt, hom.hthen(&step1, &step2)?)
    }

    fn v_id_obj(&self, a: &String) -> G1 {
        self.id_g1(a)
    }
    fn v_id_tar(&self, f: &String) -> G1 {
        self.id_g1(f)
    }
    fn v_id_har(&self, h: &G1) -> Quin {
        let hom = self.g.hom(&h.src, &h.tgt);
        Quin {
            north: h.clone(),
            west: self.id_g1(&h.src),
            east: self.id_g1(&h.tgt),
            south: h.clone(),
            content: hom.id1[&h.f].clone(),
        }
    }
    fn v_id_hcell(&self, c: &G1) -> QuinCube {
        self.t_id_bcell(&self.v_id_har(c))
    }

    fn v_then_var(&self, u: &G1, w: &G1) -> Result<G1> {
        self.h_then_har(u, w)
    }
    fn v_then_vcell(&self, c: &G1, d: &G1) -> Result<G1> {
        self.h_then_har(c, d)
    }
    fn v_then_bcell(&self, a: &Quin, b: &Quin) -> Result<Quin> {
        if a.south != b.north {
            return Err(Error::boundary("GraySym::v_then_bcell", "south != north"));
        }
        let hom = self.g.hom(&a.north.src, &b.south.tgt);
        let step1 = self.g.wl(&a.west.f, &b.content)?;
        let step2 = self.g.wr(&a.content, &b.east.f)?;
        self.mk_bcell(
            a.north.clone(),
            self.h_then_har(&a.west, &b.west)?,
            self.h_then_har(&a.east, &b.east)?,
            b.south.clone(),
            hom.then1(&step1, &step2)?,
        )
    }
    fn v_then_cube(&self, c: &QuinCube, d: &QuinCube) -> Result<QuinCube> {
        let src = self.v_then_bcell(&c.src, &d.src)?;
        let tgt = self.v_then_bcell(&c.tgt, &d.tgt)?;
        let hom = self.g.hom(&src.north.src, &src.south.tgt);
        let step1 = self.g.wl3(&c.src.west.f, &d.mu)?;
        let step2 = self.g.wr3(&c.mu, &d.src.east.f)?;
        self.mk_cube(src, tgt, hom.hthen(&step1, &step2)?)
    }

    fn h_assoc_har(&self, h1: &G1, h2: &G1, h3: &G1) -> Result<G1> {
        self.h_then_har(&self.h_then_har(h1, h2)?, h3)
    }
    fn h_lunit_har(&self, h: &G1) -> G1 {
        h.clone()
    }
    fn h_runit_har(&self, h: &G1) -> G1 {
        h.clone()
    }
    fn h_assoc_bcell(&self, a: &Quin, b: &Quin, c: &Quin) -> Result<QuinCube> {
        Ok(self.t_id_bcell(&self.h_then_bcell(&self.h_then_bcell(a, b)?, c)?))
    }
    fn h_lunit_bcell(&self, a: &Quin) -> QuinCube {
        self.t_id_bcell(a)
    }
    fn h_runit_bcell(&self, a: &Quin) -> QuinCube {
        self.t_id_bcell(a)
    }
    fn v_assoc_var(&self, u: &G1, v: &G1, w: &G1) -> Result<G1> {
        self.h_assoc_har(u, v, w)
    }
    fn v_lunit_var(&self, v: &G1) -> G1 {
        v.clone()
    }
    fn v_runit_var(&self, v: &G1) -> G1 {
        v.clone()
    }
    fn v_assoc_bcell(&self, a: &Quin, b: &Quin, c: &Quin) -> Result<QuinCube> {
        Ok(self.t_id_bcell(&self.v_then_bcell(&self.v_then_bcell(a, b)?, c)?))
    }
    fn v_lunit_bcell(&self, a: &Quin) -> QuinCube {
        self.t_id_bcell(a)
    }
    fn v_runit_bcell(&self, a: &Quin) -> QuinCube {
        self.t_id_bcell(a)
    }

    fn chi(&self, a: &Quin, b: &Quin, abar: &Quin, bbar: &Quin) -> Result<QuinCube> {
        let src = self.v_then_bcell(&self.h_then_bcell(a, b)?, &self.h_then_bcell(abar, bbar)?)?;
        let tgt = self.h_then_bcell(&self.v_then_bcell(a, abar)?, &self.v_then_bcell(b, bbar)?)?;
        let hom = self.g.hom(&src.north.src, &src.south.tgt);
        // chi = 1_{w_a . abar . s_bbar} ; x(a, bbar) ; 1_{n_a . b . e_bbar}
        let piece1 = self
            .g
            .wl(&a.west.f, &self.g.wr(&abar.content, &bbar.south.f)?)?;
        let x = self.g.x(&a.content, &bbar.content)?;
        let piece3 = self.g.wl(&a.north.f, &self.g.wr(&b.content, &bbar.east.f)?)?;
        let mu = hom.hthen(
            &hom.hthen(&hom.id2_of(&piece1).clone(), &x)?,
            &hom.id2_of(&piece3).clone(),
        )?;
        self.mk_cube(src, tgt, mu)
    }
    fn mu(&self, v: &G1, w: &G1) -> Result<QuinCube> {
        Ok(self.t_id_bcell(&self.h_id_var(&self.v_then_var(v, w)?)))
    }
    fn delta(&self, h: &G1, k: &G1) -> Result<QuinCube> {
        Ok(self.t_id_bcell(&self.v_id_har(&self.h_then_har(h, k)?)))
    }
    fn tau(&self, a: &String) -> QuinCube {
        self.t_id_bcell(&self.h_id_var(&self.id_g1(a)))
    }

    fn invert_hcell(&self, c: &G1) -> Option<G1> {
        Some(c.clone())
    }
    fn invert_vcell(&self, c: &G1) -> Option<G1> {
        Some(c.clone())
    }
    fn invert_cube(&self, c: &QuinCube) -> Option<QuinCube> {
        let hom = self.g.hom(&c.src.north.src, &c.src.south.tgt);
        let (d2, c2) = (hom.dom2(&c.mu).clone(), hom.cod2(&c.mu).clone());
        hom.two_cells
            .iter()
            .map(|(m, _, _)| m)
            .find(|m| {
                hom.dom2(m) == &c2
                    && hom.cod2(m) == &d2
                    && hom.vthen(&c.mu, m).ok().as_deref() == Some(hom.id2_of(&d2).as_str())
                    && hom.vthen(m, &c.mu).ok().as_deref() == Some(hom.id2_of(&c2).as_str())
            })
            .map(|m| QuinCube {
                src: c.tgt.clone(),
                tgt: c.src.clone(),
                mu: m.clone(),
            })
    }

    fn name(&self) -> String {
        "gray_symmetric".to_string()
    }
}

impl Enumerable for GraySym {
    fn tars_between(&self, a: &String, b: &String) -> Option<Vec<String>> {
        Some(if a == b { vec![a.clone()] } else { vec![] })
    }
    fn hcells_between(&self, s: &G1, t: &G1) -> Option<Vec<G1>> {
        Some(if s == t { vec![s.clone()] } else { vec![] })
    }
    fn vcells_between(&self, s: &G1, t: &G1) -> Option<Vec<G1>> {
        Some(if s == t { vec![s.clone()] } else { vec![] })
    }
    fn cubes_between(&self, s: &Quin, t: &Quin) -> Option<Vec<QuinCube>> {
        if (&s.north, &s.west, &s.east, &s.south) != (&t.north, &t.west, &t.east, &t.south) {
            return Some(vec![]);
        }
        let hom = self.g.hom(&s.north.src, &s.south.tgt);
        Some(
            hom.two_cells
                .iter()
                .filter(|(_, d, c)| d == &s.content && c == &t.content)
                .map(|(m, _, _)| QuinCube {
                    src: s.clone(),
                    tgt: t.clone(),
                    mu: m.clone(),
                })
                .collect(),
        )
    }
}

/// The companion equations of the symmetric embedding, checked for every
/// 1-cell of the structure.
pub fn companions(sym: &GraySym) -> crate::core::report::LawReport {
    let mut r = crate::core::report::LawReport::new();
    let all1: Vec<G1> = sym
        .g
        .homs
        .iter()
        .flat_map(|((a, b), h)| {
            h.objects.iter().map(move |f| G1 {
                src: a.clone(),
                tgt: b.clone(),
                f: f.clone(),
            })
        })
        .collect();
    for v in &all1 {
        let eps = sym.eps(v);
        let eta = sym.eta(v);
        // (i) eta | eps = Id_{v_*}
        let lhs = sym.h_then_bcell(&eta, &eps).unwrap();
        r.check("companion.i", v.f.clone(), lhs == sym.v_id_har(&sym.companion(v)));
        // (ii) eta / eps = id_v
        let lhs = sym.v_then_bcell(&eta, &eps).unwrap();
        r.check("companion.ii", v.f.clone(), lhs == sym.h_id_var(v));
        // (iii) at identities both binders collapse to Id_{id}
        if v.f == sym.g.id1[&v.src] {
            let idq = sym.v_id_har(&sym.h_id_obj(&v.src));
            r.check("companion.iii", v.f.clone(), eps == idq && eta == idq);
        }
    }
    // (iv) (v . w)_* = v_* | w_* and the binding cells paste
    for v in &all1 {
        for w in &all1 {
            if v.tgt != w.src {
                continue;
            }
            let vw = sym.v_then_var(v, w).unwrap();
            let comp = sym.h_then_har(&sym.companion(v), &sym.companion(w)).unwrap();
            r.check("companion.iv.arrow", format!("({},{})", v.f, w.f), sym.companion(&vw) == comp);
            // eps pasting: [eps_v | Id_{w_*}] over [id_w | eps_w] = eps_{v.w}
            let top = sym
                .h_then_bcell(&sym.eps(v), &sym.v_id_har(&sym.companion(w)))
                .unwrap();
            let bot = sym.h_then_bcell(&sym.h_id_var(w), &sym.eps(w)).unwrap();
            let paste = sym.v_then_bcell(&top, &bot).unwrap();
            r.check("companion.iv.eps", format!("({},{})", v.f, w.f), paste == sym.eps(&vw));
            // eta pasting: [eta_v | id_v] over [Id_{v_*} | eta_w] = eta_{v.w}
            let top = sym.h_then_bcell(&sym.eta(v), &sym.h_id_var(v)).unwrap();
            let bot = sym
                .h_then_bcell(&sym.v_id_har(&sym.companion(v)), &sym.eta(w))
                .unwrap();
            let paste = sym.v_then_bcell(&top, &bot).unwrap();
            r.check("companion.iv.eta", format!("({},{})", v.f, w.f), paste == sym.eta(&vw));
        }
    }
    r
}

/// True when the quintet's boundary composites agree and the triple
/// composite `eta_west | alpha | eps_east` is the vertical identity on the
/// common composite.
pub fn commutativity_cell(sym: &GraySym, alpha: &Quin) -> Result<bool> {
    let ne = sym.g.then1(&alpha.north.f, &alpha.east.f)?;
    let ws = sym.g.then1(&alpha.west.f, &alpha.south.f)?;
    if ne != ws {
        return Ok(false);
    }
    let triple = sym.h_then_bcell(
        &sym.h_then_bcell(&sym.eta(&alpha.west), alpha)?,
        &sym.eps(&alpha.east),
    )?;
    let id_cell = sym.v_id_har(&G1 {
        src: alpha.north.src.clone(),
        tgt: alpha.east.tgt.clone(),
        f: ne,
    });
    Ok(triple == id_cell)
}
