//! The generalized span-cospan intercategory of a quintet of categories and
//! functors: horizontal arrows are F-spans in B, vertical arrows are
//! H-cospans in C, basic cells are the nine-object diagrams with their four
//! pentagon commutativities, and the interchangers are computed in closed
//! form — tau is the component of phi, delta factors through the
//! K-comparison, mu through the G-comparison, and chi through the canonical
//! limit-colimit exchange.
//!
//! Grid conventions for a 2x2 cell grid `alpha beta / abar bbar`: the center
//! object is `alpha.south.tgt`; the shared middle-row spans are
//! `alpha.south = abar.north` and `beta.south = bbar.north`; the shared
//! middle-column cospans are `alpha.east = beta.west` and `abar.east =
//! bbar.west`.

use crate::core::Intercategory;
use crate::doublecat::base::CompCat;
use crate::{Error, Result};
use std::fmt;
use std::rc::Rc;

/// A functor between computable categories, given by its action maps.
pub struct CatArrow<C: CompCat> {
    pub name: String,
    pub on_o: Rc<dyn Fn(&C::O) -> C::O>,
    pub on_m: Rc<dyn Fn(&C::M) -> C::M>,
}

impl<C: CompCat> Clone for CatArrow<C> {
    fn clone(&self) -> Self {
        CatArrow {
            name: self.name.clone(),
            on_o: Rc::clone(&self.on_o),
            on_m: Rc::clone(&self.on_m),
        }
    }
}

impl<C: CompCat> fmt::Debug for CatArrow<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CatArrow({})", self.name)
    }
}

impl<C: CompCat> CatArrow<C> {
    pub fn identity() -> Self {
        CatArrow {
            name: "id".to_string(),
            on_o: Rc::new(|o: &C::O| o.clone()),
            on_m: Rc::new(|m: &C::M| m.clone()),
        }
    }

    pub fn new(
        name: impl Into<String>,
        on_o: impl Fn(&C::O) -> C::O + 'static,
        on_m: impl Fn(&C::M) -> C::M + 'static,
    ) -> Self {
        CatArrow {
            name: name.into(),
            on_o: Rc::new(on_o),
            on_m: Rc::new(on_m),
        }
    }

    pub fn o(&self, x: &C::O) -> C::O {
        (self.on_o)(x)
    }
    pub fn m(&self, x: &C::M) -> C::M {
        (self.on_m)(x)
    }
}

/// A natural transformation rule: one component morphism per object.
pub struct NatArrow<C: CompCat> {
    pub name: String,
    pub component: Rc<dyn Fn(&C::O) -> C::M>,
}

impl<C: CompCat> Clone for NatArrow<C> {
    fn clone(&self) -> Self {
        NatArrow {
            name: self.name.clone(),
            component: Rc::clone(&self.component),
        }
    }
}

impl<C: CompCat> fmt::Debug for NatArrow<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NatArrow({})", self.name)
    }
}

impl<C: CompCat> NatArrow<C> {
    pub fn new(name: impl Into<String>, component: impl Fn(&C::O) -> C::M + 'static) -> Self {
        NatArrow {
            name: name.into(),
            component: Rc::new(component),
        }
    }

    pub fn at(&self, x: &C::O) -> C::M {
        (self.component)(x)
    }
}

/// The quintet: four categories, four functors, and `phi : K F => G H`.
pub struct ScQuintet<C: CompCat> {
    pub a: C,
    pub b: C,
    pub c: C,
    pub d: C,
    pub f: CatArrow<C>,
    pub h: CatArrow<C>,
    pub k: CatArrow<C>,
    pub g: CatArrow<C>,
    pub phi: NatArrow<C>,
    pub label: String,
}

impl<C: CompCat + Clone> Clone for ScQuintet<C> {
    fn clone(&self) -> Self {
        ScQuintet {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            f: self.f.clone(),
            h: self.h.clone(),
            k: self.k.clone(),
            g: self.g.clone(),
            phi: self.phi.clone(),
            label: self.label.clone(),
        }
    }
}

impl<C: CompCat> fmt::Debug for ScQuintet<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScQuintet({})", self.label)
    }
}

impl<C: CompCat + Clone + 'static> ScQuintet<C> {
    /// The identity quintet on a base category.
    pub fn identity(base: C, label: impl Into<String>) -> Self {
        let b = base.clone();
        ScQuintet {
            a: base.clone(),
            b: base.clone(),
            c: base.clone(),
            d: base,
            f: CatArrow::identity(),
            h: CatArrow::identity(),
            k: CatArrow::identity(),
            g: CatArrow::identity(),
            phi: NatArrow::new("id", move |o| b.id(o)),
            label: label.into(),
        }
    }
}

/// An F-span in B: a horizontal arrow `src -> tgt`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FSpan<O, M> {
    pub src: O,
    pub tgt: O,
    pub left: M,
    pub right: M,
}

/// An H-cospan in C: a vertical arrow `src -|-> tgt`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HCosp<O, M> {
    pub src: O,
    pub tgt: O,
    pub left: M,
    pub right: M,
}

/// A map of F-spans over a pair of A-morphisms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FSpanMap<O, M> {
    pub src: FSpan<O, M>,
    pub tgt: FSpan<O, M>,
    pub a0: M,
    pub b: M,
    pub a1: M,
}

/// A map of H-cospans over a pair of A-morphisms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HCospMap<O, M> {
    pub src: HCosp<O, M>,
    pub tgt: HCosp<O, M>,
    pub a0: M,
    pub c: M,
    pub a1: M,
}

/// The nine objects and twelve morphisms of a basic cell.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ScCell<O, M> {
    pub north: FSpan<O, M>,
    pub south: FSpan<O, M>,
    pub west: HCosp<O, M>,
    pub east: HCosp<O, M>,
    pub mid: O,
    /// `K(north apex) -> mid`
    pub kb1: M,
    /// `K(south apex) -> mid`
    pub kb2: M,
    /// `mid -> G(west nadir)`
    pub gc1: M,
    /// `mid -> G(east nadir)`
    pub gc2: M,
}

/// A transversal morphism of basic cells: a natural family.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ScCube<O, M> {
    pub src: ScCell<O, M>,
    pub tgt: ScCell<O, M>,
    pub a11: M,
    pub a12: M,
    pub a21: M,
    pub a22: M,
    pub b1: M,
    pub b2: M,
    pub c1: M,
    pub c2: M,
    pub dmor: M,
}

/// The interchanger chi factored through the canonical limit-colimit
/// comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScChiTrace<O, M> {
    pub p: O,
    pub pprime: O,
    pub qprime: O,
    pub qsecond: O,
    pub q: O,
    pub kappa_step: M,
    pub theta: M,
    pub psi_step: M,
    pub gamma_step: M,
}

/// The quintet intercategory.
pub struct ScPhi<C: CompCat> {
    pub q: ScQuintet<C>,
}

impl<C: CompCat> fmt::Debug for ScPhi<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScPhi({})", self.q.label)
    }
}

/// Builds the quintet intercategory after checking phi's boundaries at the
/// probe objects.
pub fn sc_phi<C: CompCat>(q: ScQuintet<C>, probe_objs: &[C::O]) -> Result<ScPhi<C>> {
    for a in probe_objs {
        let comp = q.phi.at(a);
        let want_dom = q.k.o(&q.f.o(a));
        let want_cod = q.g.o(&q.h.o(a));
        if q.d.dom(&comp) != want_dom || q.d.cod(&comp) != want_cod {
            return Err(Error::invalid(
                "sc_phi",
                format!("phi component at {a:?} has the wrong boundary"),
            ));
        }
    }
    Ok(ScPhi { q })
}

impl<C: CompCat> ScPhi<C> {
    fn pent(&self, kb: &C::M, gc: &C::M, bleg: &C::M, cleg: &C::M, corner: &C::O) -> Result<bool> {
        let q = &self.q;
        let long = q
            .d
            .then(&q.k.m(bleg), &q.phi.at(corner))
            .and_then(|x| q.d.then(&x, &q.g.m(cleg)))?;
        Ok(long == q.d.then(kb, gc)?)
    }

    pub fn mk_har(&self, src: C::O, tgt: C::O, left: C::M, right: C::M) -> Result<FSpan<C::O, C::M>> {
        let q = &self.q;
        let ok = q.b.dom(&left) == q.b.dom(&right)
            && q.b.cod(&left) == q.f.o(&src)
            && q.b.cod(&right) == q.f.o(&tgt);
        if !ok {
            return Err(Error::boundary("ScPhi::mk_har", "not an F-span"));
        }
        Ok(FSpan { src, tgt, left, right })
    }

    pub fn mk_var(&self, src: C::O, tgt: C::O, left: C::M, right: C::M) -> Result<HCosp<C::O, C::M>> {
        let q = &self.q;
        let ok = q.c.cod(&left) == q.c.cod(&right)
            && q.c.dom(&left) == q.h.o(&src)
            && q.c.dom(&right) == q.h.o(&tgt);
        if !ok {
            return Err(Error::boundary("ScPhi::mk_var", "not an H-cospan"));
        }
        Ok(HCosp { src, tgt, left, right })
    }

    pub fn mk_bcell(
        &self,
        north: FSpan<C::O, C::M>,
        south: FSpan<C::O, C::M>,
        west: HCosp<C::O, C::M>,
        east: HCosp<C::O, C::M>,
        mid: C::O,
        kb1: C::M,
        kb2: C::M,
        gc1: C::M,
        gc2: C::M,
    ) -> Result<ScCell<C::O, C::M>> {
        let corners_ok = north.src == west.src
            && north.tgt == east.src
            && south.src == west.tgt
            && south.tgt == east.tgt;
        if !corners_ok {
            return Err(Error::boundary("ScPhi::mk_bcell", "corner objects disagree"));
        }
        if !(self.pent(&kb1, &gc1, &north.left, &west.left, &north.src)?
            && self.pent(&kb1, &gc2, &north.right, &east.left, &north.tgt)?
            && self.pent(&kb2, &gc1, &south.left, &west.right, &south.src)?
            && self.pent(&kb2, &gc2, &south.right, &east.right, &south.tgt)?)
        {
            return Err(Error::invalid("ScPhi::mk_bcell", "pentagon commutativity fails"));
        }
        Ok(ScCell {
            north,
            south,
            west,
            east,
            mid,
            kb1,
            kb2,
            gc1,
            gc2,
        })
    }

    pub fn mk_cube(&self, cube: ScCube<C::O, C::M>) -> Result<ScCube<C::O, C::M>> {
        let q = &self.q;
        let s = &cube.src;
        let t = &cube.tgt;
        let checks = [
            q.b.then(&cube.b1, &t.north.left)? == q.b.then(&s.north.left, &q.f.m(&cube.a11))?,
            q.b.then(&cube.b1, &t.north.right)? == q.b.then(&s.north.right, &q.f.m(&cube.a12))?,
            q.b.then(&cube.b2, &t.south.left)? == q.b.then(&s.south.left, &q.f.m(&cube.a21))?,
            q.b.then(&cube.b2, &t.south.right)? == q.b.then(&s.south.right, &q.f.m(&cube.a22))?,
            q.c.then(&s.west.left, &cube.c1)? == q.c.then(&q.h.m(&cube.a11), &t.west.left)?,
            q.c.then(&s.west.right, &cube.c1)? == q.c.then(&q.h.m(&cube.a21), &t.west.right)?,
            q.c.then(&s.east.left, &cube.c2)? == q.c.then(&q.h.m(&cube.a12), &t.east.left)?,
            q.c.then(&s.east.right, &cube.c2)? == q.c.then(&q.h.m(&cube.a22), &t.east.right)?,
            q.d.then(&q.k.m(&cube.b1), &t.kb1)? == q.d.then(&s.kb1, &cube.dmor)?,
            q.d.then(&q.k.m(&cube.b2), &t.kb2)? == q.d.then(&s.kb2, &cube.dmor)?,
            q.d.then(&s.gc1, &q.g.m(&cube.c1))? == q.d.then(&cube.dmor, &t.gc1)?,
            q.d.then(&s.gc2, &q.g.m(&cube.c2))? == q.d.then(&cube.dmor, &t.gc2)?,
        ];
        if checks.iter().any(|ok| !ok) {
            return Err(Error::boundary("ScPhi::mk_cube", "family is not natural"));
        }
        Ok(cube)
    }

    /// Computes chi together with its factorization `kappa ; theta ; psi ;
    /// gamma` through the intermediate (co)limits.
    pub fn chi_trace(
        &self,
        alpha: &ScCell<C::O, C::M>,
        beta: &ScCell<C::O, C::M>,
        abar: &ScCell<C::O, C::M>,
        bbar: &ScCell<C::O, C::M>,
    ) -> Result<(ScCube<C::O, C::M>, ScChiTrace<C::O, C::M>)> {
        let q = &self.q;
        let chi = self.chi(alpha, beta, abar, bbar)?;
        let center = alpha.south.tgt.clone();
        let phi22 = q.phi.at(&center);

        // row pullbacks of the D-objects
        let top_pb = q.d.pullback(&alpha.gc2, &beta.gc1)?;
        let bot_pb = q.d.pullback(&abar.gc2, &bbar.gc1)?;
        // middle-row span (shared): alpha.south = abar.north, beta.south = bbar.north
        let bpbmid = q.b.pullback(&abar.north.right, &bbar.north.left)?;
        // P: source mid = pushout over K(B-pullback)
        let p = chi.src.mid.clone();
        // P': pushout over KB21 x_{KFA22} KB22
        let kpb = q.d.pullback(&q.k.m(&abar.north.right), &q.k.m(&bbar.north.left))?;
        let _kappa = q.d.pb_mediate(&kpb, &q.k.m(&bpbmid.p1), &q.k.m(&bpbmid.p2))?;
        let to_top = q.d.pb_mediate(
            &top_pb,
            &q.d.then(&kpb.p1, &alpha.kb2)?,
            &q.d.then(&kpb.p2, &beta.kb2)?,
        )?;
        let to_bot = q.d.pb_mediate(
            &bot_pb,
            &q.d.then(&kpb.p1, &abar.kb1)?,
            &q.d.then(&kpb.p2, &bbar.kb1)?,
        )?;
        let pprime_po = q.d.pushout(&to_top, &to_bot)?;
        let src_po_top = q.d.pb_mediate(
            &top_pb,
            &q.d.then(&q.k.m(&bpbmid.p1), &alpha.kb2)?,
            &q.d.then(&q.k.m(&bpbmid.p2), &beta.kb2)?,
        )?;
        let src_po_bot = q.d.pb_mediate(
            &bot_pb,
            &q.d.then(&q.k.m(&bpbmid.p1), &abar.kb1)?,
            &q.d.then(&q.k.m(&bpbmid.p2), &bbar.kb1)?,
        )?;
        let src_po = q.d.pushout(&src_po_top, &src_po_bot)?;
        let kappa_step = q.d.po_mediate(
            (&src_po_top, &src_po_bot),
            &src_po,
            &pprime_po.j1,
            &pprime_po.j2,
        )?;
        // column pushouts of the D-objects
        let left_po = q.d.pushout(&alpha.kb2, &abar.kb1)?;
        let right_po = q.d.pushout(&beta.kb2, &bbar.kb1)?;
        // middle column glued over KFA22: maps into GC12 and GC22
        let to_gc12 = q.d.then(&phi22, &q.g.m(&alpha.east.right))?;
        let to_gc22 = q.d.then(&phi22, &q.g.m(&abar.east.left))?;
        let mid_po_kf = q.d.pushout(&to_gc12, &to_gc22)?;
        let left_to_mid = q.d.po_mediate(
            (&alpha.kb2, &abar.kb1),
            &left_po,
            &q.d.then(&alpha.gc2, &mid_po_kf.j1)?,
            &q.d.then(&abar.gc2, &mid_po_kf.j2)?,
        )?;
        let right_to_mid = q.d.po_mediate(
            (&beta.kb2, &bbar.kb1),
            &right_po,
            &q.d.then(&beta.gc1, &mid_po_kf.j1)?,
            &q.d.then(&bbar.gc1, &mid_po_kf.j2)?,
        )?;
        let qprime_pb = q.d.pullback(&left_to_mid, &right_to_mid)?;
        // theta: P' -> Q'
        let theta = {
            let top_leg = q.d.pb_mediate(
                &qprime_pb,
                &q.d.then(&top_pb.p1, &left_po.j1)?,
                &q.d.then(&top_pb.p2, &right_po.j1)?,
            )?;
            let bot_leg = q.d.pb_mediate(
                &qprime_pb,
                &q.d.then(&bot_pb.p1, &left_po.j2)?,
                &q.d.then(&bot_pb.p2, &right_po.j2)?,
            )?;
            q.d.po_mediate((&to_top, &to_bot), &pprime_po, &top_leg, &bot_leg)?
        };
        // psi: reglue the middle over GHA22
        let gh_po = q.d.pushout(&q.g.m(&alpha.east.right), &q.g.m(&abar.east.left))?;
        let psi = q.d.po_mediate((&to_gc12, &to_gc22), &mid_po_kf, &gh_po.j1, &gh_po.j2)?;
        let left_gh = q.d.then(&left_to_mid, &psi)?;
        let right_gh = q.d.then(&right_to_mid, &psi)?;
        let qsecond_pb = q.d.pullback(&left_gh, &right_gh)?;
        let psi_step = q.d.pb_mediate(&qsecond_pb, &qprime_pb.p1, &qprime_pb.p2)?;
        // gamma: compare with G of the C-level pushout
        let cpo = q.c.pushout(&alpha.east.right, &abar.east.left)?;
        let gammahat = q.d.po_mediate(
            (&q.g.m(&alpha.east.right), &q.g.m(&abar.east.left)),
            &gh_po,
            &q.g.m(&cpo.j1),
            &q.g.m(&cpo.j2),
        )?;
        let left_final = q.d.then(&left_gh, &gammahat)?;
        let right_final = q.d.then(&right_gh, &gammahat)?;
        let q_pb = q.d.pullback(&left_final, &right_final)?;
        let gamma_step = q.d.pb_mediate(&q_pb, &qsecond_pb.p1, &qsecond_pb.p2)?;
        let trace = ScChiTrace {
            p,
            pprime: pprime_po.nadir.clone(),
            qprime: qprime_pb.apex.clone(),
            qsecond: qsecond_pb.apex.clone(),
            q: q_pb.apex.clone(),
            kappa_step,
            theta,
            psi_step,
            gamma_step,
        };
        Ok((chi, trace))
    }

    /// Comparison `kappa : K(B x_{FA} B') -> KB x_{KFA} KB'` for an F-cospan
    /// in B; its invertibility is "K preserves F-pullbacks", its epi-ness is
    /// "K sends F-pullbacks to quasi-pullbacks".
    pub fn kappa_for(&self, b_to_fa: &C::M, bp_to_fa: &C::M) -> Result<C::M> {
        let q = &self.q;
        let bpb = q.b.pullback(b_to_fa, bp_to_fa)?;
        let kpb = q.d.pullback(&q.k.m(b_to_fa), &q.k.m(bp_to_fa))?;
        q.d.pb_mediate(&kpb, &q.k.m(&bpb.p1), &q.k.m(&bpb.p2))
    }

    /// Comparison `gammahat : GC +_{GHA} GC' -> G(C +_{HA} C')` for an
    /// H-span in C; invertibility is "G preserves H-pushouts", mono-ness is
    /// "G sends H-pushouts to quasi-pushouts".
    pub fn gammahat_for(&self, ha_to_c: &C::M, ha_to_cp: &C::M) -> Result<C::M> {
        let q = &self.q;
        let cpo = q.c.pushout(ha_to_c, ha_to_cp)?;
        let gpo = q.d.pushout(&q.g.m(ha_to_c), &q.g.m(ha_to_cp))?;
        q.d.po_mediate(
            (&q.g.m(ha_to_c), &q.g.m(ha_to_cp)),
            &gpo,
            &q.g.m(&cpo.j1),
            &q.g.m(&cpo.j2),
        )
    }
}

impl<C: CompCat> Intercategory for ScPhi<C> {
    type Obj = C::O;
    type TAr = C::M;
    type HAr = FSpan<C::O, C::M>;
    type VAr = HCosp<C::O, C::M>;
    type HCell = FSpanMap<C::O, C::M>;
    type VCell = HCospMap<C::O, C::M>;
    type BCell = ScCell<C::O, C::M>;
    type Cube = ScCube<C::O, C::M>;

    fn tar_src(&self, f: &C::M) -> C::O {
        self.q.a.dom(f)
    }
    fn tar_tgt(&self, f: &C::M) -> C::O {
        self.q.a.cod(f)
    }
    fn har_src(&self, h: &Self::HAr) -> C::O {
        h.src.clone()
    }
    fn har_tgt(&self, h: &Self::HAr) -> C::O {
        h.tgt.clone()
    }
    fn var_src(&self, v: &Self::VAr) -> C::O {
        v.src.clone()
    }
    fn var_tgt(&self, v: &Self::VAr) -> C::O {
        v.tgt.clone()
    }

    fn hcell_src(&self, c: &Self::HCell) -> Self::HAr {
        c.src.clone()
    }
    fn hcell_tgt(&self, c: &Self::HCell) -> Self::HAr {
        c.tgt.clone()
    }
    fn hcell_west(&self, c: &Self::HCell) -> C::M {
        c.a0.clone()
    }
    fn hcell_east(&self, c: &Self::HCell) -> C::M {
        c.a1.clone()
    }

    fn vcell_src(&self, c: &Self::VCell) -> Self::VAr {
        c.src.clone()
    }
    fn vcell_tgt(&self, c: &Self::VCell) -> Self::VAr {
        c.tgt.clone()
    }
    fn vcell_north(&self, c: &Self::VCell) -> C::M {
        c.a0.clone()
    }
    fn vcell_south(&self, c: &Self::VCell) -> C::M {
        c.a1.clone()
    }

    fn bcell_north(&self, b: &Self::BCell) -> Self::HAr {
        b.north.clone()
    }
    fn bcell_south(&self, b: &Self::BCell) -> Self::HAr {
        b.south.clone()
    }
    fn bcell_west(&self, b: &Self::BCell) -> Self::VAr {
        b.west.clone()
    }
    fn bcell_east(&self, b: &Self::BCell) -> Self::VAr {
        b.east.clone()
    }

    fn cube_src(&self, c: &Self::Cube) -> Self::BCell {
        c.src.clone()
    }
    fn cube_tgt(&self, c: &Self::Cube) -> Self::BCell {
        c.tgt.clone()
    }
    fn cube_north(&self, c: &Self::Cube) -> Self::HCell {
        FSpanMap {
            src: c.src.north.clone(),
            tgt: c.tgt.north.clone(),
            a0: c.a11.clone(),
            b: c.b1.clone(),
            a1: c.a12.clone(),
        }
    }
    fn cube_south(&self, c: &Self::Cube) -> Self::HCell {
        FSpanMap {
            src: c.src.south.clone(),
            tgt: c.tgt.south.clone(),
            a0: c.a21.clone(),
            b: c.b2.clone(),
            a1: c.a22.clone(),
        }
    }
    fn cube_west(&self, c: &Self::Cube) -> Self::VCell {
        HCospMap {
            src: c.src.west.clone(),
            tgt: c.tgt.west.clone(),
            a0: c.a11.clone(),
            c: c.c1.clone(),
            a1: c.a21.clone(),
        }
    }
    fn cube_east(&self, c: &Self::Cube) -> Self::VCell {
        HCospMap {
            src: c.src.east.clone(),
            tgt: c.tgt.east.clone(),
            a0: c.a12.clone(),
            c: c.c2.clone(),
            a1: c.a22.clone(),
        }
    }

    fn t_id_obj(&self, a: &C::O) -> C::M {
        self.q.a.id(a)
    }
    fn t_id_har(&self, h: &Self::HAr) -> Self::HCell {
        FSpanMap {
            src: h.clone(),
            tgt: h.clone(),
            a0: self.q.a.id(&h.src),
            b: self.q.b.id(&self.q.b.dom(&h.left)),
            a1: self.q.a.id(&h.tgt),
        }
    }
    fn t_id_var(&self, v: &Self::VAr) -> Self::VCell {
        HCospMap {
            src: v.clone(),
            tgt: v.clone(),
            a0: self.q.a.id(&v.src),
            c: self.q.c.id(&self.q.c.cod(&v.left)),
            a1: self.q.a.id(&v.tgt),
        }
    }
    fn t_id_bcell(&self, b: &Self::BCell) -> Self::Cube {
        ScCube {
            src: b.clone(),
            tgt: b.clone(),
            a11: self.q.a.id(&b.north.src),
            a12: self.q.a.id(&b.north.tgt),
            a21: self.q.a.id(&b.south.src),
            a22: self.q.a.id(&b.south.tgt),
            b1: self.q.b.id(&self.q.b.dom(&b.north.left)),
            b2: self.q.b.id(&self.q.b.dom(&b.south.left)),
            c1: self.q.c.id(&self.q.c.cod(&b.west.left)),
            c2: self.q.c.id(&self.q.c.cod(&b.east.left)),
            dmor: self.q.d.id(&b.mid),
        }
    }

    fn t_then_tar(&self, f: &C::M, g: &C::M) -> Result<C::M> {
        self.q.a.then(f, g)
    }
    fn t_then_hcell(&self, c: &Self::HCell, d: &Self::HCell) -> Result<Self::HCell> {
        if c.tgt != d.src {
            return Err(Error::boundary("ScPhi::t_then_hcell", "boundary mismatch"));
        }
        Ok(FSpanMap {
            src: c.src.clone(),
            tgt: d.tgt.clone(),
            a0: self.q.a.then(&c.a0, &d.a0)?,
            b: self.q.b.then(&c.b, &d.b)?,
            a1: self.q.a.then(&c.a1, &d.a1)?,
        })
    }
    fn t_then_vcell(&self, c: &Self::VCell, d: &Self::VCell) -> Result<Self::VCell> {
        if c.tgt != d.src {
            return Err(Error::boundary("ScPhi::t_then_vcell", "boundary mismatch"));
        }
        Ok(HCospMap {
            src: c.src.clone(),
            tgt: d.tgt.clone(),
            a0: self.q.a.then(&c.a0, &d.a0)?,
            c: self.q.c.then(&c.c, &d.c)?,
            a1: self.q.a.then(&c.a1, &d.a1)?,
        })
    }
    fn t_then_cube(&self, c: &Self::Cube, d: &Self::Cube) -> Result<Self::Cube> {
        if c.tgt != d.src {
            return Err(Error::boundary("ScPhi::t_then_cube", "boundary mismatch"));
        }
        self.mk_cube(ScCube {
            src: c.src.clone(),
            tgt: d.tgt.clone(),
            a11: self.q.a.then(&c.a11, &d.a11)?,
            a12: self.q.a.then(&c.a12, &d.a12)?,
            a21: self.q.a.then(&c.a21, &d.a21)?,
            a22: self.q.a.then(&c.a22, &d.a22)?,
            b1: self.q.b.then(&c.b1, &d.b1)?,
            b2: self.q.b.then(&c.b2, &d.b2)?,
            c1: self.q.c.then(&c.c1, &d.c1)?,
            c2: self.q.c.then(&c.c2, &d.c2)?,
            dmor: self.q.d.then(&c.dmor, &d.dmor)?,
        })
    }

    fn h_id_obj(&self, a: &C::O) -> Self::HAr {
        let fa = self.q.f.o(a);
        FSpan {
            src: a.clone(),
            tgt: a.clone(),
            left: self.q.b.id(&fa),
            right: self.q.b.id(&fa),
        }
    }
    fn h_id_tar(&self, f: &C::M) -> Self::HCell {
        FSpanMap {
            src: self.h_id_obj(&self.tar_src(f)),
            tgt: self.h_id_obj(&self.tar_tgt(f)),
            a0: f.clone(),
            b: self.q.f.m(f),
            a1: f.clone(),
        }
    }
    fn h_id_var(&self, v: &Self::VAr) -> Self::BCell {
        self.id_cell_on_var(v)
    }
    fn h_id_vcell(&self, c: &Self::VCell) -> Self::Cube {
        self.mk_cube(ScCube {
            src: self.id_cell_on_var(&c.src),
            tgt: self.id_cell_on_var(&c.tgt),
            a11: c.a0.clone(),
            a12: c.a0.clone(),
            a21: c.a1.clone(),
            a22: c.a1.clone(),
            b1: self.q.f.m(&c.a0),
            b2: self.q.f.m(&c.a1),
            c1: c.c.clone(),
            c2: c.c.clone(),
            dmor: self.q.g.m(&c.c),
        })
        .expect("h_id_vcell")
    }

    fn h_then_har(&self, h: &Self::HAr, k: &Self::HAr) -> Result<Self::HAr> {
        if h.tgt != k.src {
            return Err(Error::boundary("ScPhi::h_then_har", "middle objects differ"));
        }
        let pb = self.q.b.pullback(&h.right, &k.left)?;
        Ok(FSpan {
            src: h.src.clone(),
            tgt: k.tgt.clone(),
            left: self.q.b.then(&pb.p1, &h.left)?,
            right: self.q.b.then(&pb.p2, &k.right)?,
        })
    }
    fn h_then_hcell(&self, c: &Self::HCell, e: &Self::HCell) -> Result<Self::HCell> {
        if c.a1 != e.a0 {
            return Err(Error::boundary("ScPhi::h_then_hcell", "side arrows differ"));
        }
        let src = self.h_then_har(&c.src, &e.src)?;
        let tgt = self.h_then_har(&c.tgt, &e.tgt)?;
        let pb_src = self.q.b.pullback(&c.src.right, &e.src.left)?;
        let pb_tgt = self.q.b.pullback(&c.tgt.right, &e.tgt.left)?;
        let b = self.q.b.pb_mediate(
            &pb_tgt,
            &self.q.b.then(&pb_src.p1, &c.b)?,
            &self.q.b.then(&pb_src.p2, &e.b)?,
        )?;
        Ok(FSpanMap {
            src,
            tgt,
            a0: c.a0.clone(),
            b,
            a1: e.a1.clone(),
        })
    }
    fn h_then_bcell(&self, alpha: &Self::BCell, beta: &Self::BCell) -> Result<Self::BCell> {
        if alpha.east != beta.west {
            return Err(Error::boundary("ScPhi::h_then_bcell", "shared cospan differs"));
        }
        let q = &self.q;
        let north = self.h_then_har(&alpha.north, &beta.north)?;
        let south = self.h_then_har(&alpha.south, &beta.south)?;
        let bpb1 = q.b.pullback(&alpha.north.right, &beta.north.left)?;
        let bpb2 = q.b.pullback(&alpha.south.right, &beta.south.left)?;
        let dpb = q.d.pullback(&alpha.gc2, &beta.gc1)?;
        let kb1 = q.d.pb_mediate(
            &dpb,
            &q.d.then(&q.k.m(&bpb1.p1), &alpha.kb1)?,
            &q.d.then(&q.k.m(&bpb1.p2), &beta.kb1)?,
        )?;
        let kb2 = q.d.pb_mediate(
            &dpb,
            &q.d.then(&q.k.m(&bpb2.p1), &alpha.kb2)?,
            &q.d.then(&q.k.m(&bpb2.p2), &beta.kb2)?,
        )?;
        self.mk_bcell(
            north,
            south,
            alpha.west.clone(),
            beta.east.clone(),
            dpb.apex.clone(),
            kb1,
            kb2,
            q.d.then(&dpb.p1, &alpha.gc1)?,
            q.d.then(&dpb.p2, &beta.gc2)?,
        )
    }
    fn h_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        let q = &self.q;
        let src = self.h_then_bcell(&c.src, &e.src)?;
        let tgt = self.h_then_bcell(&c.tgt, &e.tgt)?;
        let b_src1 = q.b.pullback(&c.src.north.right, &e.src.north.left)?;
        let b_tgt1 = q.b.pullback(&c.tgt.north.right, &e.tgt.north.left)?;
        let b1 = q.b.pb_mediate(
            &b_tgt1,
            &q.b.then(&b_src1.p1, &c.b1)?,
            &q.b.then(&b_src1.p2, &e.b1)?,
        )?;
        let b_src2 = q.b.pullback(&c.src.south.right, &e.src.south.left)?;
        let b_tgt2 = q.b.pullback(&c.tgt.south.right, &e.tgt.south.left)?;
        let b2 = q.b.pb_mediate(
            &b_tgt2,
            &q.b.then(&b_src2.p1, &c.b2)?,
            &q.b.then(&b_src2.p2, &e.b2)?,
        )?;
        let d_src = q.d.pullback(&c.src.gc2, &e.src.gc1)?;
        let d_tgt = q.d.pullback(&c.tgt.gc2, &e.tgt.gc1)?;
        let dmor = q.d.pb_mediate(
            &d_tgt,
            &q.d.then(&d_src.p1, &c.dmor)?,
            &q.d.then(&d_src.p2, &e.dmor)?,
        )?;
        self.mk_cube(ScCube {
            src,
            tgt,
            a11: c.a11.clone(),
            a12: e.a12.clone(),
            a21: c.a21.clone(),
            a22: e.a22.clone(),
            b1,
            b2,
            c1: c.c1.clone(),
            c2: e.c2.clone(),
            dmor,
        })
    }

    fn v_id_obj(&self, a: &C::O) -> Self::VAr {
        let ha = self.q.h.o(a);
        HCosp {
            src: a.clone(),
            tgt: a.clone(),
            left: self.q.c.id(&ha),
            right: self.q.c.id(&ha),
        }
    }
    fn v_id_tar(&self, f: &C::M) -> Self::VCell {
        HCospMap {
            src: self.v_id_obj(&self.tar_src(f)),
            tgt: self.v_id_obj(&self.tar_tgt(f)),
            a0: f.clone(),
            c: self.q.h.m(f),
            a1: f.clone(),
        }
    }
    fn v_id_har(&self, h: &Self::HAr) -> Self::BCell {
        self.id_cell_on_har(h)
    }
    fn v_id_hcell(&self, c: &Self::HCell) -> Self::Cube {
        self.mk_cube(ScCube {
            src: self.id_cell_on_har(&c.src),
            tgt: self.id_cell_on_har(&c.tgt),
            a11: c.a0.clone(),
            a12: c.a1.clone(),
            a21: c.a0.clone(),
            a22: c.a1.clone(),
            b1: c.b.clone(),
            b2: c.b.clone(),
            c1: self.q.h.m(&c.a0),
            c2: self.q.h.m(&c.a1),
            dmor: self.q.k.m(&c.b),
        })
        .expect("v_id_hcell")
    }

    fn v_then_var(&self, u: &Self::VAr, w: &Self::VAr) -> Result<Self::VAr> {
        if u.tgt != w.src {
            return Err(Error::boundary("ScPhi::v_then_var", "middle objects differ"));
        }
        let po = self.q.c.pushout(&u.right, &w.left)?;
        Ok(HCosp {
            src: u.src.clone(),
            tgt: w.tgt.clone(),
            left: self.q.c.then(&u.left, &po.j1)?,
            right: self.q.c.then(&w.right, &po.j2)?,
        })
    }
    fn v_then_vcell(&self, c: &Self::VCell, e: &Self::VCell) -> Result<Self::VCell> {
        if c.a1 != e.a0 {
            return Err(Error::boundary("ScPhi::v_then_vcell", "side arrows differ"));
        }
        let src = self.v_then_var(&c.src, &e.src)?;
        let tgt = self.v_then_var(&c.tgt, &e.tgt)?;
        let po_src = self.q.c.pushout(&c.src.right, &e.src.left)?;
        let po_tgt = self.q.c.pushout(&c.tgt.right, &e.tgt.left)?;
        let cm = self.q.c.po_mediate(
            (&c.src.right, &e.src.left),
            &po_src,
            &self.q.c.then(&c.c, &po_tgt.j1)?,
            &self.q.c.then(&e.c, &po_tgt.j2)?,
        )?;
        Ok(HCospMap {
            src,
            tgt,
            a0: c.a0.clone(),
            c: cm,
            a1: e.a1.clone(),
        })
    }
    fn v_then_bcell(&self, alpha: &Self::BCell, beta: &Self::BCell) -> Result<Self::BCell> {
        if alpha.south != beta.north {
            return Err(Error::boundary("ScPhi::v_then_bcell", "shared span differs"));
        }
        let q = &self.q;
        let west = self.v_then_var(&alpha.west, &beta.west)?;
        let east = self.v_then_var(&alpha.east, &beta.east)?;
        let cpo1 = q.c.pushout(&alpha.west.right, &beta.west.left)?;
        let cpo2 = q.c.pushout(&alpha.east.right, &beta.east.left)?;
        let dpo = q.d.pushout(&alpha.kb2, &beta.kb1)?;
        let gc1 = q.d.po_mediate(
            (&alpha.kb2, &beta.kb1),
            &dpo,
            &q.d.then(&alpha.gc1, &q.g.m(&cpo1.j1))?,
            &q.d.then(&beta.gc1, &q.g.m(&cpo1.j2))?,
        )?;
        let gc2 = q.d.po_mediate(
            (&alpha.kb2, &beta.kb1),
            &dpo,
            &q.d.then(&alpha.gc2, &q.g.m(&cpo2.j1))?,
            &q.d.then(&beta.gc2, &q.g.m(&cpo2.j2))?,
        )?;
        self.mk_bcell(
            alpha.north.clone(),
            beta.south.clone(),
            west,
            east,
            dpo.nadir.clone(),
            q.d.then(&alpha.kb1, &dpo.j1)?,
            q.d.then(&beta.kb2, &dpo.j2)?,
            gc1,
            gc2,
        )
    }
    fn v_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        let q = &self.q;
        let src = self.v_then_bcell(&c.src, &e.src)?;
        let tgt = self.v_then_bcell(&c.tgt, &e.tgt)?;
        let c_src1 = q.c.pushout(&c.src.west.right, &e.src.west.left)?;
        let c_tgt1 = q.c.pushout(&c.tgt.west.right, &e.tgt.west.left)?;
        let c1 = q.c.po_mediate(
            (&c.src.west.right, &e.src.west.left),
            &c_src1,
            &q.c.then(&c.c1, &c_tgt1.j1)?,
            &q.c.then(&e.c1, &c_tgt1.j2)?,
        )?;
        let c_src2 = q.c.pushout(&c.src.east.right, &e.src.east.left)?;
        let c_tgt2 = q.c.pushout(&c.tgt.east.right, &e.tgt.east.left)?;
        let c2 = q.c.po_mediate(
            (&c.src.east.right, &e.src.east.left),
            &c_src2,
            &q.c.then(&c.c2, &c_tgt2.j1)?,
            &q.c.then(&e.c2, &c_tgt2.j2)?,
        )?;
        let d_src = q.d.pushout(&c.src.kb2, &e.src.kb1)?;
        let d_tgt = q.d.pushout(&c.tgt.kb2, &e.tgt.kb1)?;
        let dmor = q.d.po_mediate(
            (&c.src.kb2, &e.src.kb1),
            &d_src,
            &q.d.then(&c.dmor, &d_tgt.j1)?,
            &q.d.then(&e.dmor, &d_tgt.j2)?,
        )?;
        self.mk_cube(ScCube {
            src,
            tgt,
            a11: c.a11.clone(),
            a12: c.a12.clone(),
            a21: e.a21.clone(),
            a22: e.a22.clone(),
            b1: c.b1.clone(),
            b2: e.b2.clone(),
            c1,
            c2,
            dmor,
        })
    }

    fn h_assoc_har(&self, h1: &Self::HAr, h2: &Self::HAr, h3: &Self::HAr) -> Result<Self::HCell> {
        let q = &self.q;
        let pb12 = q.b.pullback(&h1.right, &h2.left)?;
        let h12 = self.h_then_har(h1, h2)?;
        let pb23 = q.b.pullback(&h2.right, &h3.left)?;
        let h23 = self.h_then_har(h2, h3)?;
        let lhs_pb = q.b.pullback(&h12.right, &h3.left)?;
        let rhs_pb = q.b.pullback(&h1.right, &h23.left)?;
        let lhs = self.h_then_har(&h12, h3)?;
        let rhs = self.h_then_har(h1, &h23)?;
        let into_23 = q.b.pb_mediate(&pb23, &q.b.then(&lhs_pb.p1, &pb12.p2)?, &lhs_pb.p2)?;
        let b = q.b.pb_mediate(&rhs_pb, &q.b.then(&lhs_pb.p1, &pb12.p1)?, &into_23)?;
        Ok(FSpanMap {
            src: lhs,
            tgt: rhs,
            a0: q.a.id(&h1.src),
            b,
            a1: q.a.id(&h3.tgt),
        })
    }
    fn h_lunit_har(&self, h: &Self::HAr) -> Self::HCell {
        let q = &self.q;
        let ida = self.h_id_obj(&h.src);
        let pb = q.b.pullback(&ida.right, &h.left).expect("sc lunit");
        let src = self.h_then_har(&ida, h).expect("sc lunit comp");
        FSpanMap {
            src,
            tgt: h.clone(),
            a0: q.a.id(&h.src),
            b: pb.p2,
            a1: q.a.id(&h.tgt),
        }
    }
    fn h_runit_har(&self, h: &Self::HAr) -> Self::HCell {
        let q = &self.q;
        let idb = self.h_id_obj(&h.tgt);
        let pb = q.b.pullback(&h.right, &idb.left).expect("sc runit");
        let src = self.h_then_har(h, &idb).expect("sc runit comp");
        FSpanMap {
            src,
            tgt: h.clone(),
            a0: q.a.id(&h.src),
            b: pb.p1,
            a1: q.a.id(&h.tgt),
        }
    }
    fn h_assoc_bcell(&self, x: &Self::BCell, y: &Self::BCell, z: &Self::BCell) -> Result<Self::Cube> {
        let q = &self.q;
        let lhs = self.h_then_bcell(&self.h_then_bcell(x, y)?, z)?;
        let rhs = self.h_then_bcell(x, &self.h_then_bcell(y, z)?)?;
        let nb = self.h_assoc_har(&x.north, &y.north, &z.north)?;
        let sb = self.h_assoc_har(&x.south, &y.south, &z.south)?;
        // the D-level re-bracketing mediator
        let pb12 = q.d.pullback(&x.gc2, &y.gc1)?;
        let xy = self.h_then_bcell(x, y)?;
        let pb23 = q.d.pullback(&y.gc2, &z.gc1)?;
        let yz = self.h_then_bcell(y, z)?;
        let lhs_pb = q.d.pullback(&xy.gc2, &z.gc1)?;
        let rhs_pb = q.d.pullback(&x.gc2, &yz.gc1)?;
        let into_23 = q.d.pb_mediate(&pb23, &q.d.then(&lhs_pb.p1, &pb12.p2)?, &lhs_pb.p2)?;
        let dmor = q.d.pb_mediate(&rhs_pb, &q.d.then(&lhs_pb.p1, &pb12.p1)?, &into_23)?;
        self.mk_cube(ScCube {
            src: lhs,
            tgt: rhs,
            a11: q.a.id(&x.north.src),
            a12: q.a.id(&z.north.tgt),
            a21: q.a.id(&x.south.src),
            a22: q.a.id(&z.south.tgt),
            b1: nb.b,
            b2: sb.b,
            c1: q.c.id(&q.c.cod(&x.west.left)),
            c2: q.c.id(&q.c.cod(&z.east.left)),
            dmor,
        })
    }
    fn h_lunit_bcell(&self, x: &Self::BCell) -> Self::Cube {
        let q = &self.q;
        let idb = self.h_id_var(&x.west);
        let src = self.h_then_bcell(&idb, x).expect("sc h_lunit");
        let nb = self.h_lunit_har(&x.north);
        let sb = self.h_lunit_har(&x.south);
        let dpb = q.d.pullback(&idb.gc2, &x.gc1).expect("sc h_lunit dpb");
        self.mk_cube(ScCube {
            src,
            tgt: x.clone(),
            a11: q.a.id(&x.north.src),
            a12: q.a.id(&x.north.tgt),
            a21: q.a.id(&x.south.src),
            a22: q.a.id(&x.south.tgt),
            b1: nb.b,
            b2: sb.b,
            c1: q.c.id(&q.c.cod(&x.west.left)),
            c2: q.c.id(&q.c.cod(&x.east.left)),
            dmor: dpb.p2,
        })
        .expect("sc h_lunit cube")
    }
    fn h_runit_bcell(&self, x: &Self::BCell) -> Self::Cube {
        let q = &self.q;
        let idb = self.h_id_var(&x.east);
        let src = self.h_then_bcell(x, &idb).expect("sc h_runit");
        let nb = self.h_runit_har(&x.north);
        let sb = self.h_runit_har(&x.south);
        let dpb = q.d.pullback(&x.gc2, &idb.gc1).expect("sc h_runit dpb");
        self.mk_cube(ScCube {
            src,
            tgt: x.clone(),
            a11: q.a.id(&x.north.src),
            a12: q.a.id(&x.north.tgt),
            a21: q.a.id(&x.south.src),
            a22: q.a.id(&x.south.tgt),
            b1: nb.b,
            b2: sb.b,
            c1: q.c.id(&q.c.cod(&x.west.left)),
            c2: q.c.id(&q.c.cod(&x.east.left)),
            dmor: dpb.p1,
        })
        .expect("sc h_runit cube")
    }

    fn v_assoc_var(&self, u: &Self::VAr, v: &Self::VAr, w: &Self::VAr) -> Result<Self::VCell> {
        let q = &self.q;
        let po12 = q.c.pushout(&u.right, &v.left)?;
        let uv = self.v_then_var(u, v)?;
        let po23 = q.c.pushout(&v.right, &w.left)?;
        let vw = self.v_then_var(v, w)?;
        let lhs_po = q.c.pushout(&uv.right, &w.left)?;
        let rhs_po = q.c.pushout(&u.right, &vw.left)?;
        let lhs = self.v_then_var(&uv, w)?;
        let rhs = self.v_then_var(u, &vw)?;
        let from_12 = q.c.po_mediate(
            (&u.right, &v.left),
            &po12,
            &rhs_po.j1,
            &q.c.then(&po23.j1, &rhs_po.j2)?,
        )?;
        let cmid = q.c.po_mediate(
            (&uv.right, &w.left),
            &lhs_po,
            &from_12,
            &q.c.then(&po23.j2, &rhs_po.j2)?,
        )?;
        Ok(HCospMap {
            src: lhs,
            tgt: rhs,
            a0: q.a.id(&u.src),
            c: cmid,
            a1: q.a.id(&w.tgt),
        })
    }
    fn v_lunit_var(&self, v: &Self::VAr) -> Self::VCell {
        let q = &self.q;
        let ida = self.v_id_obj(&v.src);
        let po = q.c.pushout(&ida.right, &v.left).expect("sc v_lunit");
        let src = self.v_then_var(&ida, v).expect("sc v_lunit comp");
        let cmid = q
            .c
            .po_mediate((&ida.right, &v.left), &po, &v.left, &q.c.id(&q.c.cod(&v.left)))
            .expect("sc v_lunit mediator");
        HCospMap {
            src,
            tgt: v.clone(),
            a0: q.a.id(&v.src),
            c: cmid,
            a1: q.a.id(&v.tgt),
        }
    }
    fn v_runit_var(&self, v: &Self::VAr) -> Self::VCell {
        let q = &self.q;
        let idb = self.v_id_obj(&v.tgt);
        let po = q.c.pushout(&v.right, &idb.left).expect("sc v_runit");
        let src = self.v_then_var(v, &idb).expect("sc v_runit comp");
        let cmid = q
            .c
            .po_mediate((&v.right, &idb.left), &po, &q.c.id(&q.c.cod(&v.right)), &v.right)
            .expect("sc v_runit mediator");
        HCospMap {
            src,
            tgt: v.clone(),
            a0: q.a.id(&v.src),
            c: cmid,
            a1: q.a.id(&v.tgt),
        }
    }
    fn v_assoc_bcell(&self, x: &Self::BCell, y: &Self::BCell, z: &Self::BCell) -> Result<Self::Cube> {
        let q = &self.q;
        let lhs = self.v_then_bcell(&self.v_then_bcell(x, y)?, z)?;
        let rhs = self.v_then_bcell(x, &self.v_then_bcell(y, z)?)?;
        let wc = self.v_assoc_var(&x.west, &y.west, &z.west)?;
        let ec = self.v_assoc_var(&x.east, &y.east, &z.east)?;
        let po12 = q.d.pushout(&x.kb2, &y.kb1)?;
        let xy = self.v_then_bcell(x, y)?;
        let po23 = q.d.pushout(&y.kb2, &z.kb1)?;
        let yz = self.v_then_bcell(y, z)?;
        let lhs_po = q.d.pushout(&xy.kb2, &z.kb1)?;
        let rhs_po = q.d.pushout(&x.kb2, &yz.kb1)?;
        let from_12 = q.d.po_mediate(
            (&x.kb2, &y.kb1),
            &po12,
            &rhs_po.j1,
            &q.d.then(&po23.j1, &rhs_po.j2)?,
        )?;
        let dmor = q.d.po_mediate(
            (&xy.kb2, &z.kb1),
            &lhs_po,
            &from_12,
            &q.d.then(&po23.j2, &rhs_po.j2)?,
        )?;
        self.mk_cube(ScCube {
            src: lhs,
            tgt: rhs,
            a11: q.a.id(&x.north.src),
            a12: q.a.id(&x.north.tgt),
            a21: q.a.id(&z.south.src),
            a22: q.a.id(&z.south.tgt),
            b1: q.b.id(&q.b.dom(&x.north.left)),
            b2: q.b.id(&q.b.dom(&z.south.left)),
            c1: wc.c,
            c2: ec.c,
            dmor,
        })
    }
    fn v_lunit_bcell(&self, x: &Self::BCell) -> Self::Cube {
        let q = &self.q;
        let idb = self.v_id_har(&x.north);
        let src = self.v_then_bcell(&idb, x).expect("sc v_lunit bcell");
        let wc = self.v_lunit_var(&x.west);
        let ec = self.v_lunit_var(&x.east);
        let dpo = q.d.pushout(&idb.kb2, &x.kb1).expect("sc v_lunit dpo");
        let dmor = q
            .d
            .po_mediate((&idb.kb2, &x.kb1), &dpo, &x.kb1, &q.d.id(&x.mid))
            .expect("sc v_lunit dmor");
        self.mk_cube(ScCube {
            src,
            tgt: x.clone(),
            a11: q.a.id(&x.north.src),
            a12: q.a.id(&x.north.tgt),
            a21: q.a.id(&x.south.src),
            a22: q.a.id(&x.south.tgt),
            b1: q.b.id(&q.b.dom(&x.north.left)),
            b2: q.b.id(&q.b.dom(&x.south.left)),
            c1: wc.c,
            c2: ec.c,
            dmor,
        })
        .expect("sc v_lunit cube")
    }
    fn v_runit_bcell(&self, x: &Self::BCell) -> Self::Cube {
        let q = &self.q;
        let idb = self.v_id_har(&x.south);
        let src = self.v_then_bcell(x, &idb).expect("sc v_runit bcell");
        let wc = self.v_runit_var(&x.west);
        let ec = self.v_runit_var(&x.east);
        let dpo = q.d.pushout(&x.kb2, &idb.kb1).expect("sc v_runit dpo");
        let dmor = q
            .d
            .po_mediate((&x.kb2, &idb.kb1), &dpo, &q.d.id(&x.mid), &x.kb2)
            .expect("sc v_runit dmor");
        self.mk_cube(ScCube {
            src,
            tgt: x.clone(),
            a11: q.a.id(&x.north.src),
            a12: q.a.id(&x.north.tgt),
            a21: q.a.id(&x.south.src),
            a22: q.a.id(&x.south.tgt),
            b1: q.b.id(&q.b.dom(&x.north.left)),
            b2: q.b.id(&q.b.dom(&x.south.left)),
            c1: wc.c,
            c2: ec.c,
            dmor,
        })
        .expect("sc v_runit cube")
    }

    fn chi(
        &self,
        alpha: &Self::BCell,
        beta: &Self::BCell,
        abar: &Self::BCell,
        bbar: &Self::BCell,
    ) -> Result<Self::Cube> {
        let q = &self.q;
        let src = self.v_then_bcell(&self.h_then_bcell(alpha, beta)?, &self.h_then_bcell(abar, bbar)?)?;
        let tgt = self.h_then_bcell(&self.v_then_bcell(alpha, abar)?, &self.v_then_bcell(beta, bbar)?)?;
        // legs from the row pullbacks into the column pushouts
        let top_pb = q.d.pullback(&alpha.gc2, &beta.gc1)?;
        let bot_pb = q.d.pullback(&abar.gc2, &bbar.gc1)?;
        let left_po = q.d.pushout(&alpha.kb2, &abar.kb1)?;
        let right_po = q.d.pushout(&beta.kb2, &bbar.kb1)?;
        let tgt_pb = q.d.pullback(&tgt_left_leg(self, alpha, abar, beta, bbar)?, &tgt_right_leg(self, alpha, abar, beta, bbar)?)?;
        let top_leg = q.d.pb_mediate(
            &tgt_pb,
            &q.d.then(&top_pb.p1, &left_po.j1)?,
            &q.d.then(&top_pb.p2, &right_po.j1)?,
        )?;
        let bot_leg = q.d.pb_mediate(
            &tgt_pb,
            &q.d.then(&bot_pb.p1, &left_po.j2)?,
            &q.d.then(&bot_pb.p2, &right_po.j2)?,
        )?;
        // source mid: pushout of the row pullbacks over K of the B-pullback
        let bpbmid = q.b.pullback(&abar.north.right, &bbar.north.left)?;
        let mid1 = q.d.pb_mediate(
            &top_pb,
            &q.d.then(&q.k.m(&bpbmid.p1), &alpha.kb2)?,
            &q.d.then(&q.k.m(&bpbmid.p2), &beta.kb2)?,
        )?;
        let mid2 = q.d.pb_mediate(
            &bot_pb,
            &q.d.then(&q.k.m(&bpbmid.p1), &abar.kb1)?,
            &q.d.then(&q.k.m(&bpbmid.p2), &bbar.kb1)?,
        )?;
        let src_po = q.d.pushout(&mid1, &mid2)?;
        let dmor = q.d.po_mediate((&mid1, &mid2), &src_po, &top_leg, &bot_leg)?;
        self.mk_cube(ScCube {
            src: src.clone(),
            tgt,
            a11: q.a.id(&src.north.src),
            a12: q.a.id(&src.north.tgt),
            a21: q.a.id(&src.south.src),
            a22: q.a.id(&src.south.tgt),
            b1: q.b.id(&q.b.dom(&src.north.left)),
            b2: q.b.id(&q.b.dom(&src.south.left)),
            c1: q.c.id(&q.c.cod(&src.west.left)),
            c2: q.c.id(&q.c.cod(&src.east.left)),
            dmor,
        })
    }

    fn mu(&self, v: &Self::VAr, w: &Self::VAr) -> Result<Self::Cube> {
        let q = &self.q;
        let src = self.v_then_bcell(&self.h_id_var(v), &self.h_id_var(w))?;
        let composed = self.v_then_var(v, w)?;
        let tgt = self.h_id_var(&composed);
        // src mid: GC +_{KFA'} GC'; tgt mid: G(C +_{HA'} C')
        let idv = self.h_id_var(v);
        let idw = self.h_id_var(w);
        let dpo = q.d.pushout(&idv.kb2, &idw.kb1)?;
        let cpo = q.c.pushout(&v.right, &w.left)?;
        let dmor = q.d.po_mediate(
            (&idv.kb2, &idw.kb1),
            &dpo,
            &q.g.m(&cpo.j1),
            &q.g.m(&cpo.j2),
        )?;
        self.mk_cube(ScCube {
            src: src.clone(),
            tgt,
            a11: q.a.id(&v.src),
            a12: q.a.id(&v.src),
            a21: q.a.id(&w.tgt),
            a22: q.a.id(&w.tgt),
            b1: q.b.id(&q.f.o(&v.src)),
            b2: q.b.id(&q.f.o(&w.tgt)),
            c1: q.c.id(&q.c.cod(&src.west.left)),
            c2: q.c.id(&q.c.cod(&src.east.left)),
            dmor,
        })
    }

    fn delta(&self, h: &Self::HAr, k: &Self::HAr) -> Result<Self::Cube> {
        let q = &self.q;
        let composed = self.h_then_har(h, k)?;
        let src = self.v_id_har(&composed);
        let tgt = self.h_then_bcell(&self.v_id_har(h), &self.v_id_har(k))?;
        // src mid: K(B x_{FA'} B'); tgt mid: KB x_{GHA'} KB'
        let idh = self.v_id_har(h);
        let idk = self.v_id_har(k);
        let dpb = q.d.pullback(&idh.gc2, &idk.gc1)?;
        let bpb = q.b.pullback(&h.right, &k.left)?;
        let dmor = q.d.pb_mediate(&dpb, &q.k.m(&bpb.p1), &q.k.m(&bpb.p2))?;
        self.mk_cube(ScCube {
            src: src.clone(),
            tgt,
            a11: q.a.id(&h.src),
            a12: q.a.id(&k.tgt),
            a21: q.a.id(&h.src),
            a22: q.a.id(&k.tgt),
            b1: q.b.id(&q.b.dom(&composed.left)),
            b2: q.b.id(&q.b.dom(&composed.left)),
            c1: q.c.id(&q.h.o(&h.src)),
            c2: q.c.id(&q.h.o(&k.tgt)),
            dmor,
        })
    }

    fn tau(&self, a: &C::O) -> Self::Cube {
        let q = &self.q;
        let src = self.v_id_har(&self.h_id_obj(a));
        let tgt = self.h_id_var(&self.v_id_obj(a));
        self.mk_cube(ScCube {
            src,
            tgt,
            a11: q.a.id(a),
            a12: q.a.id(a),
            a21: q.a.id(a),
            a22: q.a.id(a),
            b1: q.b.id(&q.f.o(a)),
            b2: q.b.id(&q.f.o(a)),
            c1: q.c.id(&q.h.o(a)),
            c2: q.c.id(&q.h.o(a)),
            dmor: q.phi.at(a),
        })
        .expect("sc tau")
    }

    fn invert_hcell(&self, c: &Self::HCell) -> Option<Self::HCell> {
        Some(FSpanMap {
            src: c.tgt.clone(),
            tgt: c.src.clone(),
            a0: self.q.a.invert(&c.a0)?,
            b: self.q.b.invert(&c.b)?,
            a1: self.q.a.invert(&c.a1)?,
        })
    }
    fn invert_vcell(&self, c: &Self::VCell) -> Option<Self::VCell> {
        Some(HCospMap {
            src: c.tgt.clone(),
            tgt: c.src.clone(),
            a0: self.q.a.invert(&c.a0)?,
            c: self.q.c.invert(&c.c)?,
            a1: self.q.a.invert(&c.a1)?,
        })
    }
    fn invert_cube(&self, c: &Self::Cube) -> Option<Self::Cube> {
        Some(ScCube {
            src: c.tgt.clone(),
            tgt: c.src.clone(),
            a11: self.q.a.invert(&c.a11)?,
            a12: self.q.a.invert(&c.a12)?,
            a21: self.q.a.invert(&c.a21)?,
            a22: self.q.a.invert(&c.a22)?,
            b1: self.q.b.invert(&c.b1)?,
            b2: self.q.b.invert(&c.b2)?,
            c1: self.q.c.invert(&c.c1)?,
            c2: self.q.c.invert(&c.c2)?,
            dmor: self.q.d.invert(&c.dmor)?,
        })
    }

    fn name(&self) -> String {
        format!("sc_phi({})", self.q.label)
    }
}

impl<C: CompCat> ScPhi<C> {
    fn id_cell_on_har(&self, h: &FSpan<C::O, C::M>) -> ScCell<C::O, C::M> {
        let q = &self.q;
        let kb = q.d.id(&q.k.o(&q.b.dom(&h.left)));
        let gc1 = q.d.then(&q.k.m(&h.left), &q.phi.at(&h.src)).expect("sc id gc1");
        let gc2 = q.d.then(&q.k.m(&h.right), &q.phi.at(&h.tgt)).expect("sc id gc2");
        ScCell {
            north: h.clone(),
            south: h.clone(),
            west: self.v_id_obj(&h.src),
            east: self.v_id_obj(&h.tgt),
            mid: q.k.o(&q.b.dom(&h.left)),
            kb1: kb.clone(),
            kb2: kb,
            gc1,
            gc2,
        }
    }

    fn id_cell_on_var(&self, v: &HCosp<C::O, C::M>) -> ScCell<C::O, C::M> {
        let q = &self.q;
        let gc = q.d.id(&q.g.o(&q.c.cod(&v.left)));
        let kb1 = q.d.then(&q.phi.at(&v.src), &q.g.m(&v.left)).expect("sc id kb1");
        let kb2 = q.d.then(&q.phi.at(&v.tgt), &q.g.m(&v.right)).expect("sc id kb2");
        ScCell {
            north: self.h_id_obj(&v.src),
            south: self.h_id_obj(&v.tgt),
            west: v.clone(),
            east: v.clone(),
            mid: q.g.o(&q.c.cod(&v.left)),
            kb1,
            kb2,
            gc1: gc.clone(),
            gc2: gc,
        }
    }
}

// helper legs for chi's target pullback: the composed column cells' gc maps
fn tgt_left_leg<C: CompCat>(
    sc: &ScPhi<C>,
    alpha: &ScCell<C::O, C::M>,
    abar: &ScCell<C::O, C::M>,
    _beta: &ScCell<C::O, C::M>,
    _bbar: &ScCell<C::O, C::M>,
) -> Result<C::M> {
    let col = sc.v_then_bcell(alpha, abar)?;
    Ok(col.gc2)
}

fn tgt_right_leg<C: CompCat>(
    sc: &ScPhi<C>,
    _alpha: &ScCell<C::O, C::M>,
    _abar: &ScCell<C::O, C::M>,
    beta: &ScCell<C::O, C::M>,
    bbar: &ScCell<C::O, C::M>,
) -> Result<C::M> {
    let col = sc.v_then_bcell(beta, bbar)?;
    Ok(col.gc1)
}
