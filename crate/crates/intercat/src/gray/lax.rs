//! The lax and colax embeddings of a true Gray category: 2-cells become the
//! basic cells and 3-cells the cubes; in the lax case the 1-cells run
//! horizontally and the composite of basic cells is `alpha.h ; g.beta`, in
//! the colax case they run vertically with `f.beta ; alpha.k`. Everything is
//! strictly associative and unitary, the degenerate interchangers are
//! identities (the embeddings are chiral), and chi is whiskered from the
//! Gray interchange cell.

use super::{G1, G2, G3, TrueGrayCat};
use crate::core::{Enumerable, Intercategory};
use crate::fincat::MorId;
use crate::{Error, Result};

/// The lax embedding: horizontal arrows are the 1-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayLax {
    pub g: TrueGrayCat,
}

/// The colax embedding: vertical arrows are the 1-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayColax {
    pub g: TrueGrayCat,
}

pub fn gray_lax(g: TrueGrayCat) -> Result<GrayLax> {
    let report = g.validate();
    if !report.passed() {
        return Err(Error::invalid("gray_lax", format!("{report}")));
    }
    Ok(GrayLax { g })
}

pub fn gray_colax(g: TrueGrayCat) -> Result<GrayColax> {
    let report = g.validate();
    if !report.passed() {
        return Err(Error::invalid("gray_colax", format!("{report}")));
    }
    Ok(GrayColax { g })
}

impl GrayLax {
    fn g2(&self, src: &str, tgt: &str, alpha: MorId) -> G2 {
        G2 {
            src: src.to_string(),
            tgt: tgt.to_string(),
            alpha,
        }
    }

    fn bcell_dom2(&self, b: &G2) -> (MorId, MorId) {
        let hom = self.g.hom(&b.src, &b.tgt);
        (hom.dom1(&b.alpha).clone(), hom.cod1(&b.alpha).clone())
    }
}

impl Intercategory for GrayLax {
    type Obj = String;
    type TAr = String;
    type HAr = G1;
    type VAr = String;
    type HCell = G1;
    type VCell = String;
    type BCell = G2;
    type Cube = G3;

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
    fn var_src(&self, v: &String) -> String {
        v.clone()
    }
    fn var_tgt(&self, v: &String) -> String {
        v.clone()
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
    fn vcell_src(&self, c: &String) -> String {
        c.clone()
    }
    fn vcell_tgt(&self, c: &String) -> String {
        c.clone()
    }
    fn vcell_north(&self, c: &String) -> String {
        c.clone()
    }
    fn vcell_south(&self, c: &String) -> String {
        c.clone()
    }

    fn bcell_north(&self, b: &G2) -> G1 {
        G1 {
            src: b.src.clone(),
            tgt: b.tgt.clone(),
            f: self.bcell_dom2(b).0,
        }
    }
    fn bcell_south(&self, b: &G2) -> G1 {
        G1 {
            src: b.src.clone(),
            tgt: b.tgt.clone(),
            f: self.bcell_dom2(b).1,
        }
    }
    fn bcell_west(&self, b: &G2) -> String {
        b.src.clone()
    }
    fn bcell_east(&self, b: &G2) -> String {
        b.tgt.clone()
    }

    fn cube_src(&self, c: &G3) -> G2 {
        let hom = self.g.hom(&c.src, &c.tgt);
        self.g2(&c.src, &c.tgt, hom.dom2(&c.mu).clone())
    }
    fn cube_tgt(&self, c: &G3) -> G2 {
        let hom = self.g.hom(&c.src, &c.tgt);
        self.g2(&c.src, &c.tgt, hom.cod2(&c.mu).clone())
    }
    fn cube_north(&self, c: &G3) -> G1 {
        self.bcell_north(&self.cube_src(c))
    }
    fn cube_south(&self, c: &G3) -> G1 {
        self.bcell_south(&self.cube_src(c))
    }
    fn cube_west(&self, c: &G3) -> String {
        c.src.clone()
    }
    fn cube_east(&self, c: &G3) -> String {
        c.tgt.clone()
    }

    fn t_id_obj(&self, a: &String) -> String {
        a.clone()
    }
    fn t_id_har(&self, h: &G1) -> G1 {
        h.clone()
    }
    fn t_id_var(&self, v: &String) -> String {
        v.clone()
    }
    fn t_id_bcell(&self, b: &G2) -> G3 {
        let hom = self.g.hom(&b.src, &b.tgt);
        G3 {
            src: b.src.clone(),
            tgt: b.tgt.clone(),
            mu: hom.id2_of(&b.alpha).clone(),
        }
    }

    fn t_then_tar(&self, f: &String, g: &String) -> Result<String> {
        if f != g {
            return Err(Error::boundary("GrayLax::t_then_tar", "identities differ"));
        }
        Ok(f.clone())
    }
    fn t_then_hcell(&self, c: &G1, d: &G1) -> Result<G1> {
        if c != d {
            return Err(Error::boundary("GrayLax::t_then_hcell", "identities differ"));
        }
        Ok(c.clone())
    }
    fn t_then_vcell(&self, c: &String, d: &String) -> Result<String> {
        if c != d {
            return Err(Error::boundary("GrayLax::t_then_vcell", "identities differ"));
        }
        Ok(c.clone())
    }
    fn t_then_cube(&self, c: &G3, d: &G3) -> Result<G3> {
        let hom = self.g.hom(&c.src, &c.tgt);
        Ok(G3 {
            src: c.src.clone(),
            tgt: c.tgt.clone(),
            mu: hom.vthen(&c.mu, &d.mu)?,
        })
    }

    fn h_id_obj(&self, a: &String) -> G1 {
        G1 {
            src: a.clone(),
            tgt: a.clone(),
            f: self.g.id1[a].clone(),
        }
    }
    fn h_id_tar(&self, f: &String) -> G1 {
        self.h_id_obj(f)
    }
    fn h_id_var(&self, v: &String) -> G2 {
        let hom = self.g.hom(v, v);
        self.g2(v, v, hom.id1[&self.g.id1[v]].clone())
    }
    fn h_id_vcell(&self, c: &String) -> G3 {
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
    fn h_then_bcell(&self, a: &G2, b: &G2) -> Result<G2> {
        // alpha | beta = (alpha . h) ; (g . beta)
        if a.tgt != b.src {
            return Err(Error::boundary("GrayLax::h_then_bcell", "objects differ"));
        }
        let (h, _) = self.bcell_dom2(b);
        let (_, g) = self.bcell_dom2(a);
        let hom = self.g.hom(&a.src, &b.tgt);
        let left = self.g.wr(&a.alpha, &h)?;
        let right = self.g.wl(&g, &b.alpha)?;
        Ok(self.g2(&a.src, &b.tgt, hom.then1(&left, &right)?))
    }
    fn h_then_cube(&self, c: &G3, d: &G3) -> Result<G3> {
        if c.tgt != d.src {
            return Err(Error::boundary("GrayLax::h_then_cube", "objects differ"));
        }
        let hom = self.g.hom(&c.src, &d.tgt);
        let src_d = self.cube_src(d);
        let tgt_c = self.cube_tgt(c);
        let (h, _) = self.bcell_dom2(&src_d);
        let (_, g) = self.bcell_dom2(&tgt_c);
        let left = self.g.wr3(&c.mu, &h)?;
        let right = self.g.wl3(&g, &d.mu)?;
        Ok(G3 {
            src: c.src.clone(),
            tgt: d.tgt.clone(),
            mu: hom.hthen(&left, &right)?,
        })
    }

    fn v_id_obj(&self, a: &String) -> String {
        a.clone()
    }
    fn v_id_tar(&self, f: &String) -> String {
        f.clone()
    }
    fn v_id_har(&self, h: &G1) -> G2 {
        let hom = self.g.hom(&h.src, &h.tgt);
        self.g2(&h.src, &h.tgt, hom.id1[&h.f].clone())
    }
    fn v_id_hcell(&self, c: &G1) -> G3 {
        self.t_id_bcell(&self.v_id_har(c))
    }

    fn v_then_var(&self, u: &String, w: &String) -> Result<String> {
        if u != w {
            return Err(Error::boundary("GrayLax::v_then_var", "identities differ"));
        }
        Ok(u.clone())
    }
    fn v_then_vcell(&self, c: &String, d: &String) -> Result<String> {
        self.v_then_var(c, d)
    }
    fn v_then_bcell(&self, a: &G2, b: &G2) -> Result<G2> {
        let hom = self.g.hom(&a.src, &a.tgt);
        Ok(self.g2(&a.src, &a.tgt, hom.then1(&a.alpha, &b.alpha)?))
    }
    fn v_then_cube(&self, c: &G3, d: &G3) -> Result<G3> {
        let hom = self.g.hom(&c.src, &c.tgt);
        Ok(G3 {
            src: c.src.clone(),
            tgt: c.tgt.clone(),
            mu: hom.hthen(&c.mu, &d.mu)?,
        })
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
    fn h_assoc_bcell(&self, a: &G2, b: &G2, c: &G2) -> Result<G3> {
        Ok(self.t_id_bcell(&self.h_then_bcell(&self.h_then_bcell(a, b)?, c)?))
    }
    fn h_lunit_bcell(&self, a: &G2) -> G3 {
        self.t_id_bcell(a)
    }
    fn h_runit_bcell(&self, a: &G2) -> G3 {
        self.t_id_bcell(a)
    }
    fn v_assoc_var(&self, u: &String, _v: &String, _w: &String) -> Result<String> {
        Ok(u.clone())
    }
    fn v_lunit_var(&self, v: &String) -> String {
        v.clone()
    }
    fn v_runit_var(&self, v: &String) -> String {
        v.clone()
    }
    fn v_assoc_bcell(&self, a: &G2, b: &G2, c: &G2) -> Result<G3> {
        Ok(self.t_id_bcell(&self.v_then_bcell(&self.v_then_bcell(a, b)?, c)?))
    }
    fn v_lunit_bcell(&self, a: &G2) -> G3 {
        self.t_id_bcell(a)
    }
    fn v_runit_bcell(&self, a: &G2) -> G3 {
        self.t_id_bcell(a)
    }

    fn chi(&self, a: &G2, b: &G2, abar: &G2, bbar: &G2) -> Result<G3> {
        // chi = (alpha.h) ; x(abar, b) ; (l.bbar)
        if a.tgt != b.src {
            return Err(Error::boundary("GrayLax::chi", "objects differ"));
        }
        let hom = self.g.hom(&a.src, &b.tgt);
        let (h, _) = self.bcell_dom2(b);
        let (_, l) = self.bcell_dom2(abar);
        let left2 = self.g.wr(&a.alpha, &h)?;
        let x = self.g.x(&abar.alpha, &b.alpha)?;
        let right2 = self.g.wl(&l, &bbar.alpha)?;
        let hom_src = self.g.hom(&a.src, &b.tgt);
        let mu = hom.hthen(
            &hom.hthen(&hom_src.id2_of(&left2).clone(), &x)?,
            &hom_src.id2_of(&right2).clone(),
        )?;
        Ok(G3 {
            src: a.src.clone(),
            tgt: b.tgt.clone(),
            mu,
        })
    }
    fn mu(&self, v: &String, w: &String) -> Result<G3> {
        Ok(self.t_id_bcell(&self.h_id_var(&self.v_then_var(v, w)?)))
    }
    fn delta(&self, h: &G1, k: &G1) -> Result<G3> {
        Ok(self.t_id_bcell(&self.v_id_har(&self.h_then_har(h, k)?)))
    }
    fn tau(&self, a: &String) -> G3 {
        self.t_id_bcell(&self.h_id_var(a))
    }

    fn invert_hcell(&self, c: &G1) -> Option<G1> {
        Some(c.clone())
    }
    fn invert_vcell(&self, c: &String) -> Option<String> {
        Some(c.clone())
    }
    fn invert_cube(&self, c: &G3) -> Option<G3> {
        let hom = self.g.hom(&c.src, &c.tgt);
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
            .map(|m| G3 {
                src: c.src.clone(),
                tgt: c.tgt.clone(),
                mu: m.clone(),
            })
    }

    fn name(&self) -> String {
        "gray_lax".to_string()
    }
}

impl Enumerable for GrayLax {
    fn tars_between(&self, a: &String, b: &String) -> Option<Vec<String>> {
        Some(if a == b { vec![a.clone()] } else { vec![] })
    }
    fn hcells_between(&self, s: &G1, t: &G1) -> Option<Vec<G1>> {
        Some(if s == t { vec![s.clone()] } else { vec![] })
    }
    fn vcells_between(&self, s: &String, t: &String) -> Option<Vec<String>> {
        Some(if s == t { vec![s.clone()] } else { vec![] })
    }
    fn cubes_between(&self, s: &G2, t: &G2) -> Option<Vec<G3>> {
        if (s.src.clone(), s.tgt.clone()) != (t.src.clone(), t.tgt.clone()) {
            return Some(vec![]);
        }
        let hom = self.g.hom(&s.src, &s.tgt);
        Some(
            hom.two_cells
                .iter()
                .filter(|(_, d, c)| d == &s.alpha && c == &t.alpha)
                .map(|(m, _, _)| G3 {
                    src: s.src.clone(),
                    tgt: s.tgt.clone(),
                    mu: m.clone(),
                })
                .collect(),
        )
    }
}

/// The colax embedding is the transversal-and-direction dual of the lax one:
/// it reuses the lax data with horizontal and vertical swapped and the
/// composite formula `f.beta ; alpha.k`.
impl GrayColax {
    fn lax(&self) -> GrayLax {
        GrayLax { g: self.g.clone() }
    }
}

impl Intercategory for GrayColax {
    type Obj = String;
    type TAr = String;
    type HAr = String;
    type VAr = G1;
    type HCell = String;
    type VCell = G1;
    type BCell = G2;
    type Cube = G3;

    fn tar_src(&self, f: &String) -> String {
        f.clone()
    }
    fn tar_tgt(&self, f: &String) -> String {
        f.clone()
    }
    fn har_src(&self, h: &String) -> String {
        h.clone()
    }
    fn har_tgt(&self, h: &String) -> String {
        h.clone()
    }
    fn var_src(&self, v: &G1) -> String {
        v.src.clone()
    }
    fn var_tgt(&self, v: &G1) -> String {
        v.tgt.clone()
    }

    fn hcell_src(&self, c: &String) -> String {
        c.clone()
    }
    fn hcell_tgt(&self, c: &String) -> String {
        c.clone()
    }
    fn hcell_west(&self, c: &String) -> String {
        c.clone()
    }
    fn hcell_east(&self, c: &String) -> String {
        c.clone()
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

    fn bcell_north(&self, b: &G2) -> String {
        b.src.clone()
    }
    fn bcell_south(&self, b: &G2) -> String {
        b.tgt.clone()
    }
    fn bcell_west(&self, b: &G2) -> G1 {
        self.lax().bcell_north(b)
    }
    fn bcell_east(&self, b: &G2) -> G1 {
        self.lax().bcell_south(b)
    }

    fn cube_src(&self, c: &G3) -> G2 {
        self.lax().cube_src(c)
    }
    fn cube_tgt(&self, c: &G3) -> G2 {
        self.lax().cube_tgt(c)
    }
    fn cube_north(&self, c: &G3) -> String {
        c.src.clone()
    }
    fn cube_south(&self, c: &G3) -> String {
        c.tgt.clone()
    }
    fn cube_west(&self, c: &G3) -> G1 {
        self.lax().cube_north(c)
    }
    fn cube_east(&self, c: &G3) -> G1 {
        self.lax().cube_south(c)
    }

    fn t_id_obj(&self, a: &String) -> String {
        a.clone()
    }
    fn t_id_har(&self, h: &String) -> String {
        h.clone()
    }
    fn t_id_var(&self, v: &G1) -> G1 {
        v.clone()
    }
    fn t_id_bcell(&self, b: &G2) -> G3 {
        self.lax().t_id_bcell(b)
    }

    fn t_then_tar(&self, f: &String, g: &String) -> Result<String> {
        self.lax().t_then_tar(f, g)
    }
    fn t_then_hcell(&self, c: &String, d: &String) -> Result<String> {
        self.lax().t_then_tar(c, d)
    }
    fn t_then_vcell(&self, c: &G1, d: &G1) -> Result<G1> {
        if c != d {
            return Err(Error::boundary("GrayColax::t_then_vcell", "identities differ"));
        }
        Ok(c.clone())
    }
    fn t_then_cube(&self, c: &G3, d: &G3) -> Result<G3> {
        self.lax().t_then_cube(c, d)
    }

    fn h_id_obj(&self, a: &String) -> String {
        a.clone()
    }
    fn h_id_tar(&self, f: &String) -> String {
        f.clone()
    }
    fn h_id_var(&self, v: &G1) -> G2 {
        self.lax().v_id_har(v)
    }
    fn h_id_vcell(&self, c: &G1) -> G3 {
        self.t_id_bcell(&self.h_id_var(c))
    }

    fn h_then_har(&self, h: &String, k: &String) -> Result<String> {
        self.lax().v_then_var(h, k)
    }
    fn h_then_hcell(&self, c: &String, d: &String) -> Result<String> {
        self.h_then_har(c, d)
    }
    fn h_then_bcell(&self, a: &G2, b: &G2) -> Result<G2> {
        self.lax().v_then_bcell(a, b)
    }
    fn h_then_cube(&self, c: &G3, d: &G3) -> Result<G3> {
        self.lax().v_then_cube(c, d)
    }

    fn v_id_obj(&self, a: &String) -> G1 {
        self.lax().h_id_obj(a)
    }
    fn v_id_tar(&self, f: &String) -> G1 {
        self.lax().h_id_obj(f)
    }
    fn v_id_har(&self, h: &String) -> G2 {
        self.lax().h_id_var(h)
    }
    fn v_id_hcell(&self, c: &String) -> G3 {
        self.t_id_bcell(&self.v_id_har(c))
    }

    fn v_then_var(&self, u: &G1, w: &G1) -> Result<G1> {
        self.lax().h_then_har(u, w)
    }
    fn v_then_vcell(&self, c: &G1, d: &G1) -> Result<G1> {
        self.v_then_var(c, d)
    }
    fn v_then_bcell(&self, a: &G2, b: &G2) -> Result<G2> {
        // alpha . beta = (f . beta) ; (alpha . k)
        if a.tgt != b.src {
            return Err(Error::boundary("GrayColax::v_then_bcell", "objects differ"));
        }
        let lax = self.lax();
        let (f, _) = lax.bcell_dom2_pub(a);
        let (_, k) = lax.bcell_dom2_pub(b);
        let hom = self.g.hom(&a.src, &b.tgt);
        let left = self.g.wl(&f, &b.alpha)?;
        let right = self.g.wr(&a.alpha, &k)?;
        Ok(G2 {
            src: a.src.clone(),
            tgt: b.tgt.clone(),
            alpha: hom.then1(&left, &right)?,
        })
    }
    fn v_then_cube(&self, c: &G3, d: &G3) -> Result<G3> {
        if c.tgt != d.src {
            return Err(Error::boundary("GrayColax::v_then_cube", "objects differ"));
        }
        let lax = self.lax();
        let hom = self.g.hom(&c.src, &d.tgt);
        let (f, _) = lax.bcell_dom2_pub(&lax.cube_src(c));
        let (_, k) = lax.bcell_dom2_pub(&lax.cube_tgt(d));
        let left = self.g.wl3(&f, &d.mu)?;
        let right = self.g.wr3(&c.mu, &k)?;
        Ok(G3 {
            src: c.src.clone(),
            tgt: d.tgt.clone(),
            mu: hom.hthen(&left, &right)?,
        })
    }

    fn h_assoc_har(&self, h1: &String, _h2: &String, _h3: &String) -> Result<String> {
        Ok(h1.clone())
    }
    fn h_lunit_har(&self, h: &String) -> String {
        h.clone()
    }
    fn h_runit_har(&self, h: &String) -> String {
        h.clone()
    }
    fn h_assoc_bcell(&self, a: &G2, b: &G2, c: &G2) -> Result<G3> {
        Ok(self.t_id_bcell(&self.h_then_bcell(&self.h_then_bcell(a, b)?, c)?))
    }
    fn h_lunit_bcell(&self, a: &G2) -> G3 {
        self.t_id_bcell(a)
    }
    fn h_runit_bcell(&self, a: &G2) -> G3 {
        self.t_id_bcell(a)
    }
    fn v_assoc_var(&self, u: &G1, v: &G1, w: &G1) -> Result<G1> {
        self.lax().h_assoc_har(u, v, w)
    }
    fn v_lunit_var(&self, v: &G1) -> G1 {
        v.clone()
    }
    fn v_runit_var(&self, v: &G1) -> G1 {
        v.clone()
    }
    fn v_assoc_bcell(&self, a: &G2, b: &G2, c: &G2) -> Result<G3> {
        Ok(self.t_id_bcell(&self.v_then_bcell(&self.v_then_bcell(a, b)?, c)?))
    }
    fn v_lunit_bcell(&self, a: &G2) -> G3 {
        self.t_id_bcell(a)
    }
    fn v_runit_bcell(&self, a: &G2) -> G3 {
        self.t_id_bcell(a)
    }

    fn chi(&self, a: &G2, b: &G2, abar: &G2, bbar: &G2) -> Result<G3> {
        // chi = (f . abar) ; x(a, bbar) ; (b . m)
        if a.tgt != abar.src {
            return Err(Error::boundary("GrayColax::chi", "objects differ"));
        }
        let lax = self.lax();
        let (f, _) = lax.bcell_dom2_pub(a);
        let (_, m) = lax.bcell_dom2_pub(bbar);
        let hom = self.g.hom(&a.src, &abar.tgt);
        let left2 = self.g.wl(&f, &abar.alpha)?;
        let x = self.g.x(&a.alpha, &bbar.alpha)?;
        let right2 = self.g.wr(&b.alpha, &m)?;
        let mu = hom.hthen(
            &hom.hthen(&hom.id2_of(&left2).clone(), &x)?,
            &hom.id2_of(&right2).clone(),
        )?;
        Ok(G3 {
            src: a.src.clone(),
            tgt: abar.tgt.clone(),
            mu,
        })
    }
    fn mu(&self, v: &G1, w: &G1) -> Result<G3> {
        Ok(self.t_id_bcell(&self.h_id_var(&self.v_then_var(v, w)?)))
    }
    fn delta(&self, h: &String, k: &String) -> Result<G3> {
        Ok(self.t_id_bcell(&self.v_id_har(&self.h_then_har(h, k)?)))
    }
    fn tau(&self, a: &String) -> G3 {
        self.t_id_bcell(&self.v_id_har(a))
    }

    fn invert_hcell(&self, c: &String) -> Option<String> {
        Some(c.clone())
    }
    fn invert_vcell(&self, c: &G1) -> Option<G1> {
        Some(c.clone())
    }
    fn invert_cube(&self, c: &G3) -> Option<G3> {
        self.lax().invert_cube(c)
    }

    fn name(&self) -> String {
        "gray_colax".to_string()
    }
}

impl GrayLax {
    pub fn bcell_dom2_pub(&self, b: &G2) -> (MorId, MorId) {
        self.bcell_dom2(b)
    }
}
