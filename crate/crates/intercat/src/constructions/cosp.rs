//! The intercategory of cospans in a double category with a compatible
//! choice of pushouts. Transversal dualization forces the switch of
//! horizontal and vertical: cospans of the double category's horizontal
//! morphisms become the vertical arrows, and its vertical arrows become the
//! horizontal ones. Here chi is the pushout-to-pullback comparison (rarely
//! invertible), delta and tau are literal identities, and mu is an identity
//! exactly when the pushout choice is normal.

use crate::core::{Enumerable, Intercategory};
use crate::doublecat::HasPushouts;
use crate::{Error, Result};

/// A cospan of horizontal morphisms, read as a vertical arrow.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VCosp<M> {
    pub left: M,
    pub right: M,
}

/// A map of cospans over a pair of transversal arrows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VCospMap<M> {
    pub src: VCosp<M>,
    pub tgt: VCosp<M>,
    pub f0: M,
    pub f2: M,
    pub f1: M,
}

/// A cospan of cells: a basic cell. `ncell : north -> mid` and
/// `scell : south -> mid` in the double category's cell category.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BCosp<C> {
    pub ncell: C,
    pub scell: C,
}

/// A commutative cospan-morphism diagram: a cube.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CospCube<C, B> {
    pub src: B,
    pub tgt: B,
    pub cn: C,
    pub cm: C,
    pub cs: C,
}

/// `Cosp(D)` for a double category `D` with chosen pushouts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CospIntercat<D: HasPushouts> {
    pub d: D,
    pub label: String,
}

impl<D: HasPushouts> CospIntercat<D> {
    pub fn new(d: D) -> Self {
        CospIntercat {
            d,
            label: "cosp".to_string(),
        }
    }

    pub fn named(d: D, label: impl Into<String>) -> Self {
        CospIntercat {
            d,
            label: label.into(),
        }
    }

    pub fn mk_var(&self, left: D::HAr, right: D::HAr) -> Result<VCosp<D::HAr>> {
        if self.d.h_cod(&left) != self.d.h_cod(&right) {
            return Err(Error::boundary("CospIntercat::mk_var", "legs do not share a nadir"));
        }
        Ok(VCosp { left, right })
    }

    pub fn mk_bcell(&self, ncell: D::Cell, scell: D::Cell) -> Result<BCosp<D::Cell>> {
        if self.d.cell_east(&ncell) != self.d.cell_east(&scell) {
            return Err(Error::boundary("CospIntercat::mk_bcell", "cells do not share a middle"));
        }
        Ok(BCosp { ncell, scell })
    }

    pub fn mk_cube(
        &self,
        src: BCosp<D::Cell>,
        tgt: BCosp<D::Cell>,
        cn: D::Cell,
        cm: D::Cell,
        cs: D::Cell,
    ) -> Result<CospCube<D::Cell, BCosp<D::Cell>>> {
        let d = &self.d;
        let ok = d.cell_h_then(&src.ncell, &cm)? == d.cell_h_then(&cn, &tgt.ncell)?
            && d.cell_h_then(&src.scell, &cm)? == d.cell_h_then(&cs, &tgt.scell)?;
        if !ok {
            return Err(Error::boundary("CospIntercat::mk_cube", "faces do not commute"));
        }
        Ok(CospCube { src, tgt, cn, cm, cs })
    }

    fn mid_var(&self, b: &BCosp<D::Cell>) -> D::VAr {
        self.d.cell_east(&b.ncell)
    }
}

impl<D: HasPushouts> Intercategory for CospIntercat<D> {
    type Obj = D::Obj;
    type TAr = D::HAr;
    type HAr = D::VAr;
    type VAr = VCosp<D::HAr>;
    type HCell = D::Cell;
    type VCell = VCospMap<D::HAr>;
    type BCell = BCosp<D::Cell>;
    type Cube = CospCube<D::Cell, BCosp<D::Cell>>;

    fn tar_src(&self, f: &Self::TAr) -> Self::Obj {
        self.d.h_dom(f)
    }
    fn tar_tgt(&self, f: &Self::TAr) -> Self::Obj {
        self.d.h_cod(f)
    }
    fn har_src(&self, h: &Self::HAr) -> Self::Obj {
        self.d.v_src(h)
    }
    fn har_tgt(&self, h: &Self::HAr) -> Self::Obj {
        self.d.v_tgt(h)
    }
    fn var_src(&self, v: &Self::VAr) -> Self::Obj {
        self.d.h_dom(&v.left)
    }
    fn var_tgt(&self, v: &Self::VAr) -> Self::Obj {
        self.d.h_dom(&v.right)
    }

    fn hcell_src(&self, c: &Self::HCell) -> Self::HAr {
        self.d.cell_west(c)
    }
    fn hcell_tgt(&self, c: &Self::HCell) -> Self::HAr {
        self.d.cell_east(c)
    }
    fn hcell_west(&self, c: &Self::HCell) -> Self::TAr {
        self.d.cell_top(c)
    }
    fn hcell_east(&self, c: &Self::HCell) -> Self::TAr {
        self.d.cell_bot(c)
    }

    fn vcell_src(&self, c: &Self::VCell) -> Self::VAr {
        c.src.clone()
    }
    fn vcell_tgt(&self, c: &Self::VCell) -> Self::VAr {
        c.tgt.clone()
    }
    fn vcell_north(&self, c: &Self::VCell) -> Self::TAr {
        c.f0.clone()
    }
    fn vcell_south(&self, c: &Self::VCell) -> Self::TAr {
        c.f1.clone()
    }

    fn bcell_north(&self, b: &Self::BCell) -> Self::HAr {
        self.d.cell_west(&b.ncell)
    }
    fn bcell_south(&self, b: &Self::BCell) -> Self::HAr {
        self.d.cell_west(&b.scell)
    }
    fn bcell_west(&self, b: &Self::BCell) -> Self::VAr {
        VCosp {
            left: self.d.cell_top(&b.ncell),
            right: self.d.cell_top(&b.scell),
        }
    }
    fn bcell_east(&self, b: &Self::BCell) -> Self::VAr {
        VCosp {
            left: self.d.cell_bot(&b.ncell),
            right: self.d.cell_bot(&b.scell),
        }
    }

    fn cube_src(&self, c: &Self::Cube) -> Self::BCell {
        c.src.clone()
    }
    fn cube_tgt(&self, c: &Self::Cube) -> Self::BCell {
        c.tgt.clone()
    }
    fn cube_north(&self, c: &Self::Cube) -> Self::HCell {
        c.cn.clone()
    }
    fn cube_south(&self, c: &Self::Cube) -> Self::HCell {
        c.cs.clone()
    }
    fn cube_west(&self, c: &Self::Cube) -> Self::VCell {
        VCospMap {
            src: self.bcell_west(&c.src),
            tgt: self.bcell_west(&c.tgt),
            f0: self.d.cell_top(&c.cn),
            f2: self.d.cell_top(&c.cm),
            f1: self.d.cell_top(&c.cs),
        }
    }
    fn cube_east(&self, c: &Self::Cube) -> Self::VCell {
        VCospMap {
            src: self.bcell_east(&c.src),
            tgt: self.bcell_east(&c.tgt),
            f0: self.d.cell_bot(&c.cn),
            f2: self.d.cell_bot(&c.cm),
            f1: self.d.cell_bot(&c.cs),
        }
    }

    fn t_id_obj(&self, a: &Self::Obj) -> Self::TAr {
        self.d.h_id(a)
    }
    fn t_id_har(&self, h: &Self::HAr) -> Self::HCell {
        self.d.cell_h_id(h)
    }
    fn t_id_var(&self, v: &Self::VAr) -> Self::VCell {
        VCospMap {
            src: v.clone(),
            tgt: v.clone(),
            f0: self.d.h_id(&self.var_src(v)),
            f2: self.d.h_id(&self.d.h_cod(&v.left)),
            f1: self.d.h_id(&self.var_tgt(v)),
        }
    }
    fn t_id_bcell(&self, b: &Self::BCell) -> Self::Cube {
        CospCube {
            src: b.clone(),
            tgt: b.clone(),
            cn: self.d.cell_h_id(&self.bcell_north(b)),
            cm: self.d.cell_h_id(&self.mid_var(b)),
            cs: self.d.cell_h_id(&self.bcell_south(b)),
        }
    }

    fn t_then_tar(&self, f: &Self::TAr, g: &Self::TAr) -> Result<Self::TAr> {
        self.d.h_then(f, g)
    }
    fn t_then_hcell(&self, c: &Self::HCell, d: &Self::HCell) -> Result<Self::HCell> {
        self.d.cell_h_then(c, d)
    }
    fn t_then_vcell(&self, c: &Self::VCell, d: &Self::VCell) -> Result<Self::VCell> {
        if c.tgt != d.src {
            return Err(Error::boundary("Cosp::t_then_vcell", "boundary mismatch"));
        }
        Ok(VCospMap {
            src: c.src.clone(),
            tgt: d.tgt.clone(),
            f0: self.d.h_then(&c.f0, &d.f0)?,
            f2: self.d.h_then(&c.f2, &d.f2)?,
            f1: self.d.h_then(&c.f1, &d.f1)?,
        })
    }
    fn t_then_cube(&self, c: &Self::Cube, d: &Self::Cube) -> Result<Self::Cube> {
        if c.tgt != d.src {
            return Err(Error::boundary("Cosp::t_then_cube", "boundary mismatch"));
        }
        self.mk_cube(
            c.src.clone(),
            d.tgt.clone(),
            self.d.cell_h_then(&c.cn, &d.cn)?,
            self.d.cell_h_then(&c.cm, &d.cm)?,
            self.d.cell_h_then(&c.cs, &d.cs)?,
        )
    }

    fn h_id_obj(&self, a: &Self::Obj) -> Self::HAr {
        self.d.v_id(a)
    }
    fn h_id_tar(&self, f: &Self::TAr) -> Self::HCell {
        self.d.cell_v_id(f)
    }
    fn h_id_var(&self, v: &Self::VAr) -> Self::BCell {
        BCosp {
            ncell: self.d.cell_v_id(&v.left),
            scell: self.d.cell_v_id(&v.right),
        }
    }
    fn h_id_vcell(&self, c: &Self::VCell) -> Self::Cube {
        CospCube {
            src: self.h_id_var(&c.src),
            tgt: self.h_id_var(&c.tgt),
            cn: self.d.cell_v_id(&c.f0),
            cm: self.d.cell_v_id(&c.f2),
            cs: self.d.cell_v_id(&c.f1),
        }
    }

    fn h_then_har(&self, h: &Self::HAr, k: &Self::HAr) -> Result<Self::HAr> {
        self.d.v_then(h, k)
    }
    fn h_then_hcell(&self, c: &Self::HCell, e: &Self::HCell) -> Result<Self::HCell> {
        self.d.cell_v_then(c, e)
    }
    fn h_then_bcell(&self, a: &Self::BCell, b: &Self::BCell) -> Result<Self::BCell> {
        if self.bcell_east(a) != self.bcell_west(b) {
            return Err(Error::boundary("Cosp::h_then_bcell", "shared vertical differs"));
        }
        self.mk_bcell(
            self.d.cell_v_then(&a.ncell, &b.ncell)?,
            self.d.cell_v_then(&a.scell, &b.scell)?,
        )
    }
    fn h_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        let src = self.h_then_bcell(&c.src, &e.src)?;
        let tgt = self.h_then_bcell(&c.tgt, &e.tgt)?;
        self.mk_cube(
            src,
            tgt,
            self.d.cell_v_then(&c.cn, &e.cn)?,
            self.d.cell_v_then(&c.cm, &e.cm)?,
            self.d.cell_v_then(&c.cs, &e.cs)?,
        )
    }

    fn v_id_obj(&self, a: &Self::Obj) -> Self::VAr {
        VCosp {
            left: self.d.h_id(a),
            right: self.d.h_id(a),
        }
    }
    fn v_id_tar(&self, f: &Self::TAr) -> Self::VCell {
        VCospMap {
            src: self.v_id_obj(&self.tar_src(f)),
            tgt: self.v_id_obj(&self.tar_tgt(f)),
            f0: f.clone(),
            f2: f.clone(),
            f1: f.clone(),
        }
    }
    fn v_id_har(&self, h: &Self::HAr) -> Self::BCell {
        BCosp {
            ncell: self.d.cell_h_id(h),
            scell: self.d.cell_h_id(h),
        }
    }
    fn v_id_hcell(&self, c: &Self::HCell) -> Self::Cube {
        CospCube {
            src: self.v_id_har(&self.d.cell_west(c)),
            tgt: self.v_id_har(&self.d.cell_east(c)),
            cn: c.clone(),
            cm: c.clone(),
            cs: c.clone(),
        }
    }

    fn v_then_var(&self, u: &Self::VAr, w: &Self::VAr) -> Result<Self::VAr> {
        if self.var_tgt(u) != self.var_src(w) {
            return Err(Error::boundary("Cosp::v_then_var", "middle objects differ"));
        }
        let po = self.d.po_har(&u.right, &w.left)?;
        Ok(VCosp {
            left: self.d.h_then(&u.left, &po.j1)?,
            right: self.d.h_then(&w.right, &po.j2)?,
        })
    }
    fn v_then_vcell(&self, c: &Self::VCell, e: &Self::VCell) -> Result<Self::VCell> {
        if c.f1 != e.f0 {
            return Err(Error::boundary("Cosp::v_then_vcell", "side arrows differ"));
        }
        let src = self.v_then_var(&c.src, &e.src)?;
        let tgt = self.v_then_var(&c.tgt, &e.tgt)?;
        let po_src = self.d.po_har(&c.src.right, &e.src.left)?;
        let po_tgt = self.d.po_har(&c.tgt.right, &e.tgt.left)?;
        let f2 = self.d.po_har_mediate(
            (&c.src.right, &e.src.left),
            &po_src,
            &self.d.h_then(&c.f2, &po_tgt.j1)?,
            &self.d.h_then(&e.f2, &po_tgt.j2)?,
        )?;
        Ok(VCospMap {
            src,
            tgt,
            f0: c.f0.clone(),
            f2,
            f1: e.f1.clone(),
        })
    }
    fn v_then_bcell(&self, a: &Self::BCell, b: &Self::BCell) -> Result<Self::BCell> {
        if self.bcell_south(a) != self.bcell_north(b) {
            return Err(Error::boundary("Cosp::v_then_bcell", "south != north"));
        }
        let po = self.d.po_cell(&a.scell, &b.ncell)?;
        self.mk_bcell(
            self.d.cell_h_then(&a.ncell, &po.j1)?,
            self.d.cell_h_then(&b.scell, &po.j2)?,
        )
    }
    fn v_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        let src = self.v_then_bcell(&c.src, &e.src)?;
        let tgt = self.v_then_bcell(&c.tgt, &e.tgt)?;
        let po_src = self.d.po_cell(&c.src.scell, &e.src.ncell)?;
        let po_tgt = self.d.po_cell(&c.tgt.scell, &e.tgt.ncell)?;
        let cm = self.d.po_cell_mediate(
            (&c.src.scell, &e.src.ncell),
            &po_src,
            &self.d.cell_h_then(&c.cm, &po_tgt.j1)?,
            &self.d.cell_h_then(&e.cm, &po_tgt.j2)?,
        )?;
        self.mk_cube(src, tgt, c.cn.clone(), cm, e.cs.clone())
    }

    fn h_assoc_har(&self, h1: &Self::HAr, h2: &Self::HAr, h3: &Self::HAr) -> Result<Self::HCell> {
        self.d.v_assoc(h1, h2, h3)
    }
    fn h_lunit_har(&self, h: &Self::HAr) -> Self::HCell {
        self.d.v_lunit(h)
    }
    fn h_runit_har(&self, h: &Self::HAr) -> Self::HCell {
        self.d.v_runit(h)
    }
    fn h_assoc_bcell(&self, a: &Self::BCell, b: &Self::BCell, c: &Self::BCell) -> Result<Self::Cube> {
        let d = &self.d;
        let lhs = self.h_then_bcell(&self.h_then_bcell(a, b)?, c)?;
        let rhs = self.h_then_bcell(a, &self.h_then_bcell(b, c)?)?;
        self.mk_cube(
            lhs,
            rhs,
            d.v_assoc(&self.bcell_north(a), &self.bcell_north(b), &self.bcell_north(c))?,
            d.v_assoc(&self.mid_var(a), &self.mid_var(b), &self.mid_var(c))?,
            d.v_assoc(&self.bcell_south(a), &self.bcell_south(b), &self.bcell_south(c))?,
        )
    }
    fn h_lunit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let src = self
            .h_then_bcell(&self.h_id_var(&self.bcell_west(a)), a)
            .expect("h_lunit composite");
        CospCube {
            src,
            tgt: a.clone(),
            cn: d.v_lunit(&self.bcell_north(a)),
            cm: d.v_lunit(&self.mid_var(a)),
            cs: d.v_lunit(&self.bcell_south(a)),
        }
    }
    fn h_runit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let src = self
            .h_then_bcell(a, &self.h_id_var(&self.bcell_east(a)))
            .expect("h_runit composite");
        CospCube {
            src,
            tgt: a.clone(),
            cn: d.v_runit(&self.bcell_north(a)),
            cm: d.v_runit(&self.mid_var(a)),
            cs: d.v_runit(&self.bcell_south(a)),
        }
    }

    fn v_assoc_var(&self, u: &Self::VAr, v: &Self::VAr, w: &Self::VAr) -> Result<Self::VCell> {
        let d = &self.d;
        let uv_po = d.po_har(&u.right, &v.left)?;
        let uv = self.v_then_var(u, v)?;
        let vw_po = d.po_har(&v.right, &w.left)?;
        let vw = self.v_then_var(v, w)?;
        let lhs_po = d.po_har(&uv.right, &w.left)?;
        let rhs_po = d.po_har(&u.right, &vw.left)?;
        let lhs = self.v_then_var(&uv, w)?;
        let rhs = self.v_then_var(u, &vw)?;
        let from_uv = d.po_har_mediate(
            (&u.right, &v.left),
            &uv_po,
            &rhs_po.j1,
            &d.h_then(&vw_po.j1, &rhs_po.j2)?,
        )?;
        let f2 = d.po_har_mediate(
            (&uv.right, &w.left),
            &lhs_po,
            &from_uv,
            &d.h_then(&vw_po.j2, &rhs_po.j2)?,
        )?;
        Ok(VCospMap {
            src: lhs,
            tgt: rhs,
            f0: d.h_id(&self.var_src(u)),
            f2,
            f1: d.h_id(&self.var_tgt(w)),
        })
    }
    fn v_lunit_var(&self, v: &Self::VAr) -> Self::VCell {
        let d = &self.d;
        let a = self.var_src(v);
        let po = d.po_har(&d.h_id(&a), &v.left).expect("v_lunit pushout");
        let src = self.v_then_var(&self.v_id_obj(&a), v).expect("v_lunit composite");
        let f2 = d
            .po_har_mediate(
                (&d.h_id(&a), &v.left),
                &po,
                &v.left,
                &d.h_id(&d.h_cod(&v.left)),
            )
            .expect("v_lunit mediator");
        VCospMap {
            src,
            tgt: v.clone(),
            f0: d.h_id(&a),
            f2,
            f1: d.h_id(&self.var_tgt(v)),
        }
    }
    fn v_runit_var(&self, v: &Self::VAr) -> Self::VCell {
        let d = &self.d;
        let b = self.var_tgt(v);
        let po = d.po_har(&v.right, &d.h_id(&b)).expect("v_runit pushout");
        let src = self.v_then_var(v, &self.v_id_obj(&b)).expect("v_runit composite");
        let f2 = d
            .po_har_mediate(
                (&v.right, &d.h_id(&b)),
                &po,
                &d.h_id(&d.h_cod(&v.right)),
                &v.right,
            )
            .expect("v_runit mediator");
        VCospMap {
            src,
            tgt: v.clone(),
            f0: d.h_id(&self.var_src(v)),
            f2,
            f1: d.h_id(&b),
        }
    }

    fn v_assoc_bcell(&self, a: &Self::BCell, b: &Self::BCell, c: &Self::BCell) -> Result<Self::Cube> {
        let d = &self.d;
        let ab_po = d.po_cell(&a.scell, &b.ncell)?;
        let ab = self.v_then_bcell(a, b)?;
        let bc_po = d.po_cell(&b.scell, &c.ncell)?;
        let bc = self.v_then_bcell(b, c)?;
        let lhs_po = d.po_cell(&ab.scell, &c.ncell)?;
        let rhs_po = d.po_cell(&a.scell, &bc.ncell)?;
        let lhs = self.v_then_bcell(&ab, c)?;
        let rhs = self.v_then_bcell(a, &bc)?;
        let from_ab = d.po_cell_mediate(
            (&a.scell, &b.ncell),
            &ab_po,
            &rhs_po.j1,
            &d.cell_h_then(&bc_po.j1, &rhs_po.j2)?,
        )?;
        let cm = d.po_cell_mediate(
            (&ab.scell, &c.ncell),
            &lhs_po,
            &from_ab,
            &d.cell_h_then(&bc_po.j2, &rhs_po.j2)?,
        )?;
        self.mk_cube(
            lhs,
            rhs,
            d.cell_h_id(&self.bcell_north(a)),
            cm,
            d.cell_h_id(&self.bcell_south(c)),
        )
    }
    fn v_lunit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let n = self.bcell_north(a);
        let idb = self.v_id_har(&n);
        let po = d.po_cell(&idb.scell, &a.ncell).expect("v_lunit po_cell");
        let src = self.v_then_bcell(&idb, a).expect("v_lunit composite");
        let cm = d
            .po_cell_mediate(
                (&idb.scell, &a.ncell),
                &po,
                &a.ncell,
                &d.cell_h_id(&self.mid_var(a)),
            )
            .expect("v_lunit mediator");
        CospCube {
            src,
            tgt: a.clone(),
            cn: d.cell_h_id(&n),
            cm,
            cs: d.cell_h_id(&self.bcell_south(a)),
        }
    }
    fn v_runit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let so = self.bcell_south(a);
        let idb = self.v_id_har(&so);
        let po = d.po_cell(&a.scell, &idb.ncell).expect("v_runit po_cell");
        let src = self.v_then_bcell(a, &idb).expect("v_runit composite");
        let cm = d
            .po_cell_mediate(
                (&a.scell, &idb.ncell),
                &po,
                &d.cell_h_id(&self.mid_var(a)),
                &a.scell,
            )
            .expect("v_runit mediator");
        CospCube {
            src,
            tgt: a.clone(),
            cn: d.cell_h_id(&self.bcell_north(a)),
            cm,
            cs: d.cell_h_id(&so),
        }
    }

    fn chi(
        &self,
        a: &Self::BCell,
        b: &Self::BCell,
        abar: &Self::BCell,
        bbar: &Self::BCell,
    ) -> Result<Self::Cube> {
        let d = &self.d;
        let ab = self.h_then_bcell(a, b)?;
        let abarbbar = self.h_then_bcell(abar, bbar)?;
        let src = self.v_then_bcell(&ab, &abarbbar)?;
        let a_abar = self.v_then_bcell(a, abar)?;
        let b_bbar = self.v_then_bcell(b, bbar)?;
        let tgt = self.h_then_bcell(&a_abar, &b_bbar)?;
        // comparison out of the pushout of composites into the composite of
        // pushouts
        let src_po = d.po_cell(&ab.scell, &abarbbar.ncell)?;
        let left_po = d.po_cell(&a.scell, &abar.ncell)?;
        let right_po = d.po_cell(&b.scell, &bbar.ncell)?;
        let cm = d.po_cell_mediate(
            (&ab.scell, &abarbbar.ncell),
            &src_po,
            &d.cell_v_then(&left_po.j1, &right_po.j1)?,
            &d.cell_v_then(&left_po.j2, &right_po.j2)?,
        )?;
        self.mk_cube(
            src,
            tgt,
            d.cell_h_id(&self.bcell_north(&ab)),
            cm,
            d.cell_h_id(&self.bcell_south(&abarbbar)),
        )
    }

    fn mu(&self, v: &Self::VAr, w: &Self::VAr) -> Result<Self::Cube> {
        let d = &self.d;
        let src = self.v_then_bcell(&self.h_id_var(v), &self.h_id_var(w))?;
        let tgt = self.h_id_var(&self.v_then_var(v, w)?);
        let po1 = d.po_cell(&d.cell_v_id(&v.right), &d.cell_v_id(&w.left))?;
        let po0 = d.po_har(&v.right, &w.left)?;
        let cm = d.po_cell_mediate(
            (&d.cell_v_id(&v.right), &d.cell_v_id(&w.left)),
            &po1,
            &d.cell_v_id(&po0.j1),
            &d.cell_v_id(&po0.j2),
        )?;
        self.mk_cube(
            src,
            tgt,
            d.cell_h_id(&d.v_id(&self.var_src(v))),
            cm,
            d.cell_h_id(&d.v_id(&self.var_tgt(w))),
        )
    }

    fn delta(&self, h: &Self::HAr, k: &Self::HAr) -> Result<Self::Cube> {
        // Id_{h|k} and Id_h | Id_k coincide on the nose
        Ok(self.t_id_bcell(&self.v_id_har(&self.d.v_then(h, k)?)))
    }

    fn tau(&self, a: &Self::Obj) -> Self::Cube {
        self.t_id_bcell(&self.v_id_har(&self.d.v_id(a)))
    }

    fn invert_hcell(&self, c: &Self::HCell) -> Option<Self::HCell> {
        self.d.cell_invert(c)
    }
    fn invert_vcell(&self, c: &Self::VCell) -> Option<Self::VCell> {
        Some(VCospMap {
            src: c.tgt.clone(),
            tgt: c.src.clone(),
            f0: self.d.h_invert(&c.f0)?,
            f2: self.d.h_invert(&c.f2)?,
            f1: self.d.h_invert(&c.f1)?,
        })
    }
    fn invert_cube(&self, c: &Self::Cube) -> Option<Self::Cube> {
        Some(CospCube {
            src: c.tgt.clone(),
            tgt: c.src.clone(),
            cn: self.d.cell_invert(&c.cn)?,
            cm: self.d.cell_invert(&c.cm)?,
            cs: self.d.cell_invert(&c.cs)?,
        })
    }

    fn name(&self) -> String {
        self.label.clone()
    }
}

impl<D: HasPushouts> Enumerable for CospIntercat<D> {
    fn tars_between(&self, a: &Self::Obj, b: &Self::Obj) -> Option<Vec<Self::TAr>> {
        self.d.hars_between(a, b)
    }

    fn hcells_between(&self, src: &Self::HAr, tgt: &Self::HAr) -> Option<Vec<Self::HCell>> {
        self.d.cells_constrained(src, tgt, None, None)
    }

    fn vcells_between(&self, src: &Self::VAr, tgt: &Self::VAr) -> Option<Vec<Self::VCell>> {
        let d = &self.d;
        let f0s = d.hars_between(&self.var_src(src), &self.var_src(tgt))?;
        let f2s = d.hars_between(&d.h_cod(&src.left), &d.h_cod(&tgt.left))?;
        let f1s = d.hars_between(&self.var_tgt(src), &self.var_tgt(tgt))?;
        let mut out = Vec::new();
        for f0 in &f0s {
            for f2 in &f2s {
                if d.h_then(&src.left, f2).ok() != d.h_then(f0, &tgt.left).ok() {
                    continue;
                }
                for f1 in &f1s {
                    if d.h_then(&src.right, f2).ok() != d.h_then(f1, &tgt.right).ok() {
                        continue;
                    }
                    out.push(VCospMap {
                        src: src.clone(),
                        tgt: tgt.clone(),
                        f0: f0.clone(),
                        f2: f2.clone(),
                        f1: f1.clone(),
                    });
                }
            }
        }
        Some(out)
    }

    fn cubes_between(&self, src: &Self::BCell, tgt: &Self::BCell) -> Option<Vec<Self::Cube>> {
        let d = &self.d;
        let cns = d.cells_constrained(&self.bcell_north(src), &self.bcell_north(tgt), None, None)?;
        let cms = d.cells_constrained(&self.mid_var(src), &self.mid_var(tgt), None, None)?;
        let css = d.cells_constrained(&self.bcell_south(src), &self.bcell_south(tgt), None, None)?;
        let mut out = Vec::new();
        for cm in &cms {
            for cn in &cns {
                if d.cell_h_then(&src.ncell, cm).ok() != d.cell_h_then(cn, &tgt.ncell).ok() {
                    continue;
                }
                for cs in &css {
                    if d.cell_h_then(&src.scell, cm).ok() != d.cell_h_then(cs, &tgt.scell).ok() {
                        continue;
                    }
                    out.push(CospCube {
                        src: src.clone(),
                        tgt: tgt.clone(),
                        cn: cn.clone(),
                        cm: cm.clone(),
                        cs: cs.clone(),
                    });
                }
            }
        }
        Some(out)
    }
}
