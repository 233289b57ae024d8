//! The intercategory of spans in a double category with a compatible choice
//! of pullbacks: horizontal arrows are spans of the double category's
//! horizontal morphisms, basic cells are spans of its cells, and the
//! interchanger chi is built from the comparison cell gamma. The degenerate
//! interchangers mu and tau are literal identities; delta is an identity
//! exactly when the pullback choice is normal.

use crate::core::{Enumerable, Intercategory};
use crate::doublecat::{gamma, HasPullbacks};
use crate::{Error, Result};

/// A span of horizontal morphisms, read as a horizontal arrow of the
/// intercategory.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HSpan<M> {
    pub left: M,
    pub right: M,
}

/// A map of spans over a pair of transversal arrows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HSpanMap<M> {
    pub src: HSpan<M>,
    pub tgt: HSpan<M>,
    pub f0: M,
    pub f2: M,
    pub f1: M,
}

/// A span of cells: a basic cell of the intercategory. `lcell : mid -> west`
/// and `rcell : mid -> east` in the double category's cell category.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BSpan<C> {
    pub lcell: C,
    pub rcell: C,
}

/// A commutative span-morphism diagram: a cube of the intercategory.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpanCube<C, B> {
    pub src: B,
    pub tgt: B,
    pub c0: C,
    pub c2: C,
    pub c1: C,
}

/// `Span(D)` for a double category `D` with chosen pullbacks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanIntercat<D: HasPullbacks> {
    pub d: D,
    pub label: String,
}

impl<D: HasPullbacks> SpanIntercat<D> {
    pub fn new(d: D) -> Self {
        SpanIntercat {
            d,
            label: "span".to_string(),
        }
    }

    pub fn named(d: D, label: impl Into<String>) -> Self {
        SpanIntercat {
            d,
            label: label.into(),
        }
    }

    pub fn mk_har(&self, left: D::HAr, right: D::HAr) -> Result<HSpan<D::HAr>> {
        if self.d.h_dom(&left) != self.d.h_dom(&right) {
            return Err(Error::boundary("SpanIntercat::mk_har", "legs do not share an apex"));
        }
        Ok(HSpan { left, right })
    }

    pub fn mk_bcell(&self, lcell: D::Cell, rcell: D::Cell) -> Result<BSpan<D::Cell>> {
        if self.d.cell_west(&lcell) != self.d.cell_west(&rcell) {
            return Err(Error::boundary("SpanIntercat::mk_bcell", "cells do not share a middle"));
        }
        Ok(BSpan { lcell, rcell })
    }

    pub fn mk_cube(
        &self,
        src: BSpan<D::Cell>,
        tgt: BSpan<D::Cell>,
        c0: D::Cell,
        c2: D::Cell,
        c1: D::Cell,
    ) -> Result<SpanCube<D::Cell, BSpan<D::Cell>>> {
        let d = &self.d;
        let ok = d.cell_h_then(&c2, &tgt.lcell)? == d.cell_h_then(&src.lcell, &c0)?
            && d.cell_h_then(&c2, &tgt.rcell)? == d.cell_h_then(&src.rcell, &c1)?;
        if !ok {
            return Err(Error::boundary("SpanIntercat::mk_cube", "faces do not commute"));
        }
        Ok(SpanCube { src, tgt, c0, c2, c1 })
    }

    fn mid_var(&self, b: &BSpan<D::Cell>) -> D::VAr {
        self.d.cell_west(&b.lcell)
    }
}

impl<D: HasPullbacks> Intercategory for SpanIntercat<D> {
    type Obj = D::Obj;
    type TAr = D::HAr;
    type HAr = HSpan<D::HAr>;
    type VAr = D::VAr;
    type HCell = HSpanMap<D::HAr>;
    type VCell = D::Cell;
    type BCell = BSpan<D::Cell>;
    type Cube = SpanCube<D::Cell, BSpan<D::Cell>>;

    fn tar_src(&self, f: &Self::TAr) -> Self::Obj {
        self.d.h_dom(f)
    }
    fn tar_tgt(&self, f: &Self::TAr) -> Self::Obj {
        self.d.h_cod(f)
    }
    fn har_src(&self, h: &Self::HAr) -> Self::Obj {
        self.d.h_cod(&h.left)
    }
    fn har_tgt(&self, h: &Self::HAr) -> Self::Obj {
        self.d.h_cod(&h.right)
    }
    fn var_src(&self, v: &Self::VAr) -> Self::Obj {
        self.d.v_src(v)
    }
    fn var_tgt(&self, v: &Self::VAr) -> Self::Obj {
        self.d.v_tgt(v)
    }

    fn hcell_src(&self, c: &Self::HCell) -> Self::HAr {
        c.src.clone()
    }
    fn hcell_tgt(&self, c: &Self::HCell) -> Self::HAr {
        c.tgt.clone()
    }
    fn hcell_west(&self, c: &Self::HCell) -> Self::TAr {
        c.f0.clone()
    }
    fn hcell_east(&self, c: &Self::HCell) -> Self::TAr {
        c.f1.clone()
    }

    fn vcell_src(&self, c: &Self::VCell) -> Self::VAr {
        self.d.cell_west(c)
    }
    fn vcell_tgt(&self, c: &Self::VCell) -> Self::VAr {
        self.d.cell_east(c)
    }
    fn vcell_north(&self, c: &Self::VCell) -> Self::TAr {
        self.d.cell_top(c)
    }
    fn vcell_south(&self, c: &Self::VCell) -> Self::TAr {
        self.d.cell_bot(c)
    }

    fn bcell_north(&self, b: &Self::BCell) -> Self::HAr {
        HSpan {
            left: self.d.cell_top(&b.lcell),
            right: self.d.cell_top(&b.rcell),
        }
    }
    fn bcell_south(&self, b: &Self::BCell) -> Self::HAr {
        HSpan {
            left: self.d.cell_bot(&b.lcell),
            right: self.d.cell_bot(&b.rcell),
        }
    }
    fn bcell_west(&self, b: &Self::BCell) -> Self::VAr {
        self.d.cell_east(&b.lcell)
    }
    fn bcell_east(&self, b: &Self::BCell) -> Self::VAr {
        self.d.cell_east(&b.rcell)
    }

    fn cube_src(&self, c: &Self::Cube) -> Self::BCell {
        c.src.clone()
    }
    fn cube_tgt(&self, c: &Self::Cube) -> Self::BCell {
        c.tgt.clone()
    }
    fn cube_north(&self, c: &Self::Cube) -> Self::HCell {
        HSpanMap {
            src: self.bcell_north(&c.src),
            tgt: self.bcell_north(&c.tgt),
            f0: self.d.cell_top(&c.c0),
            f2: self.d.cell_top(&c.c2),
            f1: self.d.cell_top(&c.c1),
        }
    }
    fn cube_south(&self, c: &Self::Cube) -> Self::HCell {
        HSpanMap {
            src: self.bcell_south(&c.src),
            tgt: self.bcell_south(&c.tgt),
            f0: self.d.cell_bot(&c.c0),
            f2: self.d.cell_bot(&c.c2),
            f1: self.d.cell_bot(&c.c1),
        }
    }
    fn cube_west(&self, c: &Self::Cube) -> Self::VCell {
        c.c0.clone()
    }
    fn cube_east(&self, c: &Self::Cube) -> Self::VCell {
        c.c1.clone()
    }

    fn t_id_obj(&self, a: &Self::Obj) -> Self::TAr {
        self.d.h_id(a)
    }
    fn t_id_har(&self, h: &Self::HAr) -> Self::HCell {
        HSpanMap {
            src: h.clone(),
            tgt: h.clone(),
            f0: self.d.h_id(&self.har_src(h)),
            f2: self.d.h_id(&self.d.h_dom(&h.left)),
            f1: self.d.h_id(&self.har_tgt(h)),
        }
    }
    fn t_id_var(&self, v: &Self::VAr) -> Self::VCell {
        self.d.cell_h_id(v)
    }
    fn t_id_bcell(&self, b: &Self::BCell) -> Self::Cube {
        SpanCube {
            src: b.clone(),
            tgt: b.clone(),
            c0: self.d.cell_h_id(&self.bcell_west(b)),
            c2: self.d.cell_h_id(&self.mid_var(b)),
            c1: self.d.cell_h_id(&self.bcell_east(b)),
        }
    }

    fn t_then_tar(&self, f: &Self::TAr, g: &Self::TAr) -> Result<Self::TAr> {
        self.d.h_then(f, g)
    }
    fn t_then_hcell(&self, c: &Self::HCell, d: &Self::HCell) -> Result<Self::HCell> {
        if c.tgt != d.src {
            return Err(Error::boundary("Span::t_then_hcell", "boundary mismatch"));
        }
        Ok(HSpanMap {
            src: c.src.clone(),
            tgt: d.tgt.clone(),
            f0: self.d.h_then(&c.f0, &d.f0)?,
            f2: self.d.h_then(&c.f2, &d.f2)?,
            f1: self.d.h_then(&c.f1, &d.f1)?,
        })
    }
    fn t_then_vcell(&self, c: &Self::VCell, d: &Self::VCell) -> Result<Self::VCell> {
        self.d.cell_h_then(c, d)
    }
    fn t_then_cube(&self, c: &Self::Cube, d: &Self::Cube) -> Result<Self::Cube> {
        if c.tgt != d.src {
            return Err(Error::boundary("Span::t_then_cube", "boundary mismatch"));
        }
        self.mk_cube(
            c.src.clone(),
            d.tgt.clone(),
            self.d.cell_h_then(&c.c0, &d.c0)?,
            self.d.cell_h_then(&c.c2, &d.c2)?,
            self.d.cell_h_then(&c.c1, &d.c1)?,
        )
    }

    fn h_id_obj(&self, a: &Self::Obj) -> Self::HAr {
        HSpan {
            left: self.d.h_id(a),
            right: self.d.h_id(a),
        }
    }
    fn h_id_tar(&self, f: &Self::TAr) -> Self::HCell {
        HSpanMap {
            src: self.h_id_obj(&self.tar_src(f)),
            tgt: self.h_id_obj(&self.tar_tgt(f)),
            f0: f.clone(),
            f2: f.clone(),
            f1: f.clone(),
        }
    }
    fn h_id_var(&self, v: &Self::VAr) -> Self::BCell {
        BSpan {
            lcell: self.d.cell_h_id(v),
            rcell: self.d.cell_h_id(v),
        }
    }
    fn h_id_vcell(&self, c: &Self::VCell) -> Self::Cube {
        SpanCube {
            src: self.h_id_var(&self.d.cell_west(c)),
            tgt: self.h_id_var(&self.d.cell_east(c)),
            c0: c.clone(),
            c2: c.clone(),
            c1: c.clone(),
        }
    }

    fn h_then_har(&self, h: &Self::HAr, k: &Self::HAr) -> Result<Self::HAr> {
        if self.har_tgt(h) != self.har_src(k) {
            return Err(Error::boundary("Span::h_then_har", "middle objects differ"));
        }
        let pb = self.d.pb_har(&h.right, &k.left)?;
        Ok(HSpan {
            left: self.d.h_then(&pb.p1, &h.left)?,
            right: self.d.h_then(&pb.p2, &k.right)?,
        })
    }

    fn h_then_hcell(&self, c: &Self::HCell, e: &Self::HCell) -> Result<Self::HCell> {
        if c.f1 != e.f0 {
            return Err(Error::boundary("Span::h_then_hcell", "side arrows differ"));
        }
        let src = self.h_then_har(&c.src, &e.src)?;
        let tgt = self.h_then_har(&c.tgt, &e.tgt)?;
        let pb_src = self.d.pb_har(&c.src.right, &e.src.left)?;
        let pb_tgt = self.d.pb_har(&c.tgt.right, &e.tgt.left)?;
        let f2 = self.d.pb_har_mediate(
            &pb_tgt,
            &self.d.h_then(&pb_src.p1, &c.f2)?,
            &self.d.h_then(&pb_src.p2, &e.f2)?,
        )?;
        Ok(HSpanMap {
            src,
            tgt,
            f0: c.f0.clone(),
            f2,
            f1: e.f1.clone(),
        })
    }

    fn h_then_bcell(&self, a: &Self::BCell, b: &Self::BCell) -> Result<Self::BCell> {
        if self.bcell_east(a) != self.bcell_west(b) {
            return Err(Error::boundary("Span::h_then_bcell", "shared vertical differs"));
        }
        let pb = self.d.pb_cell(&a.rcell, &b.lcell)?;
        self.mk_bcell(
            self.d.cell_h_then(&pb.p1, &a.lcell)?,
            self.d.cell_h_then(&pb.p2, &b.rcell)?,
        )
    }

    fn h_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        let src = self.h_then_bcell(&c.src, &e.src)?;
        let tgt = self.h_then_bcell(&c.tgt, &e.tgt)?;
        let pb_src = self.d.pb_cell(&c.src.rcell, &e.src.lcell)?;
        let pb_tgt = self.d.pb_cell(&c.tgt.rcell, &e.tgt.lcell)?;
        let mid = self.d.pb_cell_mediate(
            &pb_tgt,
            &self.d.cell_h_then(&pb_src.p1, &c.c2)?,
            &self.d.cell_h_then(&pb_src.p2, &e.c2)?,
        )?;
        self.mk_cube(src, tgt, c.c0.clone(), mid, e.c1.clone())
    }

    fn v_id_obj(&self, a: &Self::Obj) -> Self::VAr {
        self.d.v_id(a)
    }
    fn v_id_tar(&self, f: &Self::TAr) -> Self::VCell {
        self.d.cell_v_id(f)
    }
    fn v_id_har(&self, h: &Self::HAr) -> Self::BCell {
        BSpan {
            lcell: self.d.cell_v_id(&h.left),
            rcell: self.d.cell_v_id(&h.right),
        }
    }
    fn v_id_hcell(&self, c: &Self::HCell) -> Self::Cube {
        SpanCube {
            src: self.v_id_har(&c.src),
            tgt: self.v_id_har(&c.tgt),
            c0: self.d.cell_v_id(&c.f0),
            c2: self.d.cell_v_id(&c.f2),
            c1: self.d.cell_v_id(&c.f1),
        }
    }

    fn v_then_var(&self, u: &Self::VAr, w: &Self::VAr) -> Result<Self::VAr> {
        self.d.v_then(u, w)
    }
    fn v_then_vcell(&self, c: &Self::VCell, e: &Self::VCell) -> Result<Self::VCell> {
        self.d.cell_v_then(c, e)
    }
    fn v_then_bcell(&self, a: &Self::BCell, b: &Self::BCell) -> Result<Self::BCell> {
        if self.bcell_south(a) != self.bcell_north(b) {
            return Err(Error::boundary("Span::v_then_bcell", "south != north"));
        }
        self.mk_bcell(
            self.d.cell_v_then(&a.lcell, &b.lcell)?,
            self.d.cell_v_then(&a.rcell, &b.rcell)?,
        )
    }
    fn v_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        let src = self.v_then_bcell(&c.src, &e.src)?;
        let tgt = self.v_then_bcell(&c.tgt, &e.tgt)?;
        self.mk_cube(
            src,
            tgt,
            self.d.cell_v_then(&c.c0, &e.c0)?,
            self.d.cell_v_then(&c.c2, &e.c2)?,
            self.d.cell_v_then(&c.c1, &e.c1)?,
        )
    }

    fn h_assoc_har(&self, h1: &Self::HAr, h2: &Self::HAr, h3: &Self::HAr) -> Result<Self::HCell> {
        let d = &self.d;
        let pb12 = d.pb_har(&h1.right, &h2.left)?;
        let h12 = self.h_then_har(h1, h2)?;
        let pb23 = d.pb_har(&h2.right, &h3.left)?;
        let h23 = self.h_then_har(h2, h3)?;
        let lhs_pb = d.pb_har(&h12.right, &h3.left)?;
        let rhs_pb = d.pb_har(&h1.right, &h23.left)?;
        let lhs = self.h_then_har(&h12, h3)?;
        let rhs = self.h_then_har(h1, &h23)?;
        let into_23 = d.pb_har_mediate(
            &pb23,
            &d.h_then(&lhs_pb.p1, &pb12.p2)?,
            &lhs_pb.p2,
        )?;
        let f2 = d.pb_har_mediate(&rhs_pb, &d.h_then(&lhs_pb.p1, &pb12.p1)?, &into_23)?;
        Ok(HSpanMap {
            src: lhs,
            tgt: rhs,
            f0: d.h_id(&self.har_src(h1)),
            f2,
            f1: d.h_id(&self.har_tgt(h3)),
        })
    }

    fn h_lunit_har(&self, h: &Self::HAr) -> Self::HCell {
        let d = &self.d;
        let a = self.har_src(h);
        let pb = d.pb_har(&d.h_id(&a), &h.left).expect("lunit pullback");
        let src = self.h_then_har(&self.h_id_obj(&a), h).expect("lunit composite");
        HSpanMap {
            src,
            tgt: h.clone(),
            f0: d.h_id(&a),
            f2: pb.p2,
            f1: d.h_id(&self.har_tgt(h)),
        }
    }

    fn h_runit_har(&self, h: &Self::HAr) -> Self::HCell {
        let d = &self.d;
        let b = self.har_tgt(h);
        let pb = d.pb_har(&h.right, &d.h_id(&b)).expect("runit pullback");
        let src = self.h_then_har(h, &self.h_id_obj(&b)).expect("runit composite");
        HSpanMap {
            src,
            tgt: h.clone(),
            f0: d.h_id(&self.har_src(h)),
            f2: pb.p1,
            f1: d.h_id(&b),
        }
    }

    fn h_assoc_bcell(&self, a: &Self::BCell, b: &Self::BCell, c: &Self::BCell) -> Result<Self::Cube> {
        let d = &self.d;
        let pb12 = d.pb_cell(&a.rcell, &b.lcell)?;
        let ab = self.h_then_bcell(a, b)?;
        let pb23 = d.pb_cell(&b.rcell, &c.lcell)?;
        let bc = self.h_then_bcell(b, c)?;
        let lhs_pb = d.pb_cell(&ab.rcell, &c.lcell)?;
        let rhs_pb = d.pb_cell(&a.rcell, &bc.lcell)?;
        let lhs = self.h_then_bcell(&ab, c)?;
        let rhs = self.h_then_bcell(a, &bc)?;
        let into_23 = d.pb_cell_mediate(
            &pb23,
            &d.cell_h_then(&lhs_pb.p1, &pb12.p2)?,
            &lhs_pb.p2,
        )?;
        let c2 = d.pb_cell_mediate(&rhs_pb, &d.cell_h_then(&lhs_pb.p1, &pb12.p1)?, &into_23)?;
        self.mk_cube(
            lhs,
            rhs,
            d.cell_h_id(&self.bcell_west(a)),
            c2,
            d.cell_h_id(&self.bcell_east(c)),
        )
    }

    fn h_lunit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let w = self.bcell_west(a);
        let idb = self.h_id_var(&w);
        let pb = d.pb_cell(&idb.rcell, &a.lcell).expect("lunit pb_cell");
        let src = self.h_then_bcell(&idb, a).expect("lunit composite");
        SpanCube {
            src,
            tgt: a.clone(),
            c0: d.cell_h_id(&w),
            c2: pb.p2,
            c1: d.cell_h_id(&self.bcell_east(a)),
        }
    }

    fn h_runit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let e = self.bcell_east(a);
        let idb = self.h_id_var(&e);
        let pb = d.pb_cell(&a.rcell, &idb.lcell).expect("runit pb_cell");
        let src = self.h_then_bcell(a, &idb).expect("runit composite");
        SpanCube {
            src,
            tgt: a.clone(),
            c0: d.cell_h_id(&self.bcell_west(a)),
            c2: pb.p1,
            c1: d.cell_h_id(&e),
        }
    }

    fn v_assoc_var(&self, u: &Self::VAr, v: &Self::VAr, w: &Self::VAr) -> Result<Self::VCell> {
        self.d.v_assoc(u, v, w)
    }
    fn v_lunit_var(&self, v: &Self::VAr) -> Self::VCell {
        self.d.v_lunit(v)
    }
    fn v_runit_var(&self, v: &Self::VAr) -> Self::VCell {
        self.d.v_runit(v)
    }

    fn v_assoc_bcell(&self, a: &Self::BCell, b: &Self::BCell, c: &Self::BCell) -> Result<Self::Cube> {
        let d = &self.d;
        let lhs = self.v_then_bcell(&self.v_then_bcell(a, b)?, c)?;
        let rhs = self.v_then_bcell(a, &self.v_then_bcell(b, c)?)?;
        self.mk_cube(
            lhs,
            rhs,
            d.v_assoc(&self.bcell_west(a), &self.bcell_west(b), &self.bcell_west(c))?,
            d.v_assoc(&self.mid_var(a), &self.mid_var(b), &self.mid_var(c))?,
            d.v_assoc(&self.bcell_east(a), &self.bcell_east(b), &self.bcell_east(c))?,
        )
    }

    fn v_lunit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let src = self
            .v_then_bcell(&self.v_id_har(&self.bcell_north(a)), a)
            .expect("v_lunit composite");
        SpanCube {
            src,
            tgt: a.clone(),
            c0: d.v_lunit(&self.bcell_west(a)),
            c2: d.v_lunit(&self.mid_var(a)),
            c1: d.v_lunit(&self.bcell_east(a)),
        }
    }

    fn v_runit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let src = self
            .v_then_bcell(a, &self.v_id_har(&self.bcell_south(a)))
            .expect("v_runit composite");
        SpanCube {
            src,
            tgt: a.clone(),
            c0: d.v_runit(&self.bcell_west(a)),
            c2: d.v_runit(&self.mid_var(a)),
            c1: d.v_runit(&self.bcell_east(a)),
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
        let src = self.v_then_bcell(&self.h_then_bcell(a, b)?, &self.h_then_bcell(abar, bbar)?)?;
        let tgt = self.h_then_bcell(&self.v_then_bcell(a, abar)?, &self.v_then_bcell(b, bbar)?)?;
        let g = gamma(d, &a.rcell, &b.lcell, &abar.rcell, &bbar.lcell)?;
        self.mk_cube(
            src,
            tgt,
            d.cell_h_id(&d.v_then(&self.bcell_west(a), &self.bcell_west(abar))?),
            g,
            d.cell_h_id(&d.v_then(&self.bcell_east(b), &self.bcell_east(bbar))?),
        )
    }

    fn mu(&self, v: &Self::VAr, w: &Self::VAr) -> Result<Self::Cube> {
        // id_v / id_w = id_{v/w} on the nose, so mu is the identity
        Ok(self.t_id_bcell(&self.h_id_var(&self.d.v_then(v, w)?)))
    }

    fn delta(&self, h: &Self::HAr, k: &Self::HAr) -> Result<Self::Cube> {
        let d = &self.d;
        let src = self.v_id_har(&self.h_then_har(h, k)?);
        let tgt = self.h_then_bcell(&self.v_id_har(h), &self.v_id_har(k))?;
        let pb0 = d.pb_har(&h.right, &k.left)?;
        let pb1 = d.pb_cell(&d.cell_v_id(&h.right), &d.cell_v_id(&k.left))?;
        let c2 = d.pb_cell_mediate(&pb1, &d.cell_v_id(&pb0.p1), &d.cell_v_id(&pb0.p2))?;
        self.mk_cube(
            src,
            tgt,
            d.cell_h_id(&d.v_id(&self.har_src(h))),
            c2,
            d.cell_h_id(&d.v_id(&self.har_tgt(k))),
        )
    }

    fn tau(&self, a: &Self::Obj) -> Self::Cube {
        // Id_{id_A} and id_{Id_A} coincide on the nose
        self.t_id_bcell(&self.h_id_var(&self.d.v_id(a)))
    }

    fn invert_hcell(&self, c: &Self::HCell) -> Option<Self::HCell> {
        Some(HSpanMap {
            src: c.tgt.clone(),
            tgt: c.src.clone(),
            f0: self.d.h_invert(&c.f0)?,
            f2: self.d.h_invert(&c.f2)?,
            f1: self.d.h_invert(&c.f1)?,
        })
    }
    fn invert_vcell(&self, c: &Self::VCell) -> Option<Self::VCell> {
        self.d.cell_invert(c)
    }
    fn invert_cube(&self, c: &Self::Cube) -> Option<Self::Cube> {
        Some(SpanCube {
            src: c.tgt.clone(),
            tgt: c.src.clone(),
            c0: self.d.cell_invert(&c.c0)?,
            c2: self.d.cell_invert(&c.c2)?,
            c1: self.d.cell_invert(&c.c1)?,
        })
    }

    fn name(&self) -> String {
        self.label.clone()
    }
}

impl<D: HasPullbacks> Enumerable for SpanIntercat<D> {
    fn tars_between(&self, a: &Self::Obj, b: &Self::Obj) -> Option<Vec<Self::TAr>> {
        self.d.hars_between(a, b)
    }

    fn hcells_between(&self, src: &Self::HAr, tgt: &Self::HAr) -> Option<Vec<Self::HCell>> {
        let d = &self.d;
        let f0s = d.hars_between(&self.har_src(src), &self.har_src(tgt))?;
        let f2s = d.hars_between(&d.h_dom(&src.left), &d.h_dom(&tgt.left))?;
        let f1s = d.hars_between(&self.har_tgt(src), &self.har_tgt(tgt))?;
        let mut out = Vec::new();
        for f0 in &f0s {
            for f2 in &f2s {
                if d.h_then(f2, &tgt.left).ok() != d.h_then(&src.left, f0).ok() {
                    continue;
                }
                for f1 in &f1s {
                    if d.h_then(f2, &tgt.right).ok() != d.h_then(&src.right, f1).ok() {
                        continue;
                    }
                    out.push(HSpanMap {
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

    fn vcells_between(&self, src: &Self::VAr, tgt: &Self::VAr) -> Option<Vec<Self::VCell>> {
        self.d.cells_constrained(src, tgt, None, None)
    }

    fn cubes_between(&self, src: &Self::BCell, tgt: &Self::BCell) -> Option<Vec<Self::Cube>> {
        let d = &self.d;
        let c0s = d.cells_constrained(&self.bcell_west(src), &self.bcell_west(tgt), None, None)?;
        let c2s = d.cells_constrained(&self.mid_var(src), &self.mid_var(tgt), None, None)?;
        let c1s = d.cells_constrained(&self.bcell_east(src), &self.bcell_east(tgt), None, None)?;
        let mut out = Vec::new();
        for c2 in &c2s {
            for c0 in &c0s {
                if d.cell_h_then(c2, &tgt.lcell).ok() != d.cell_h_then(&src.lcell, c0).ok() {
                    continue;
                }
                for c1 in &c1s {
                    if d.cell_h_then(c2, &tgt.rcell).ok() != d.cell_h_then(&src.rcell, c1).ok() {
                        continue;
                    }
                    out.push(SpanCube {
                        src: src.clone(),
                        tgt: tgt.clone(),
                        c0: c0.clone(),
                        c2: c2.clone(),
                        c1: c1.clone(),
                    });
                }
            }
        }
        Some(out)
    }
}
