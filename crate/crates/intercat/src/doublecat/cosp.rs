//! The double category of cospans in a computable base category: cospans as
//! vertical arrows, vertical composition by the base's chosen pushouts, and
//! a componentwise (lax, normal) choice of pullbacks.

use super::base::{CompCat, Pb, Po};
use super::{DoubleCat, HasPullbacks, HasPushouts};
use crate::{Error, Result};

/// A cospan `src -l-> nadir <-r- tgt`, read as a vertical arrow
/// `src -|-> tgt`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CospV<M> {
    pub left: M,
    pub right: M,
}

/// A morphism of cospans: `mid` between the nadirs, over `top` and `bot`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CospCell<M> {
    pub top: M,
    pub bot: M,
    pub west: CospV<M>,
    pub east: CospV<M>,
    pub mid: M,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CospDouble<C: CompCat> {
    pub base: C,
    pub normal: bool,
}

impl<C: CompCat> CospDouble<C> {
    pub fn new(base: C) -> Self {
        CospDouble { base, normal: true }
    }

    pub fn mk_cell(&self, top: C::M, bot: C::M, west: CospV<C::M>, east: CospV<C::M>, mid: C::M) -> Result<CospCell<C::M>> {
        let c = &self.base;
        let ok = c.then(&west.left, &mid)? == c.then(&top, &east.left)?
            && c.then(&west.right, &mid)? == c.then(&bot, &east.right)?;
        if !ok {
            return Err(Error::boundary("CospDouble::mk_cell", "mid does not commute with legs"));
        }
        Ok(CospCell { top, bot, west, east, mid })
    }
}

impl<C: CompCat> DoubleCat for CospDouble<C> {
    type Obj = C::O;
    type HAr = C::M;
    type VAr = CospV<C::M>;
    type Cell = CospCell<C::M>;

    fn h_dom(&self, h: &C::M) -> C::O {
        self.base.dom(h)
    }
    fn h_cod(&self, h: &C::M) -> C::O {
        self.base.cod(h)
    }
    fn v_src(&self, v: &CospV<C::M>) -> C::O {
        self.base.dom(&v.left)
    }
    fn v_tgt(&self, v: &CospV<C::M>) -> C::O {
        self.base.dom(&v.right)
    }

    fn cell_top(&self, c: &CospCell<C::M>) -> C::M {
        c.top.clone()
    }
    fn cell_bot(&self, c: &CospCell<C::M>) -> C::M {
        c.bot.clone()
    }
    fn cell_west(&self, c: &CospCell<C::M>) -> CospV<C::M> {
        c.west.clone()
    }
    fn cell_east(&self, c: &CospCell<C::M>) -> CospV<C::M> {
        c.east.clone()
    }

    fn h_id(&self, a: &C::O) -> C::M {
        self.base.id(a)
    }
    fn h_then(&self, f: &C::M, g: &C::M) -> Result<C::M> {
        self.base.then(f, g)
    }

    fn v_id(&self, a: &C::O) -> CospV<C::M> {
        CospV {
            left: self.base.id(a),
            right: self.base.id(a),
        }
    }

    fn v_then(&self, u: &CospV<C::M>, w: &CospV<C::M>) -> Result<CospV<C::M>> {
        if self.v_tgt(u) != self.v_src(w) {
            return Err(Error::boundary("CospDouble::v_then", "middle objects differ"));
        }
        let po = self.base.pushout(&u.right, &w.left)?;
        Ok(CospV {
            left: self.base.then(&u.left, &po.j1)?,
            right: self.base.then(&w.right, &po.j2)?,
        })
    }

    fn cell_h_id(&self, v: &CospV<C::M>) -> CospCell<C::M> {
        CospCell {
            top: self.base.id(&self.v_src(v)),
            bot: self.base.id(&self.v_tgt(v)),
            west: v.clone(),
            east: v.clone(),
            mid: self.base.id(&self.base.cod(&v.left)),
        }
    }

    fn cell_h_then(&self, c: &CospCell<C::M>, d: &CospCell<C::M>) -> Result<CospCell<C::M>> {
        if c.east != d.west {
            return Err(Error::boundary("CospDouble::cell_h_then", "middle cospans differ"));
        }
        Ok(CospCell {
            top: self.base.then(&c.top, &d.top)?,
            bot: self.base.then(&c.bot, &d.bot)?,
            west: c.west.clone(),
            east: d.east.clone(),
            mid: self.base.then(&c.mid, &d.mid)?,
        })
    }

    fn cell_v_id(&self, f: &C::M) -> CospCell<C::M> {
        CospCell {
            top: f.clone(),
            bot: f.clone(),
            west: self.v_id(&self.base.dom(f)),
            east: self.v_id(&self.base.cod(f)),
            mid: f.clone(),
        }
    }

    fn cell_v_then(&self, c: &CospCell<C::M>, d: &CospCell<C::M>) -> Result<CospCell<C::M>> {
        if c.bot != d.top {
            return Err(Error::boundary("CospDouble::cell_v_then", "bot != top"));
        }
        let west = self.v_then(&c.west, &d.west)?;
        let east = self.v_then(&c.east, &d.east)?;
        let wpo = self.base.pushout(&c.west.right, &d.west.left)?;
        let epo = self.base.pushout(&c.east.right, &d.east.left)?;
        let mid = self.base.po_mediate(
            (&c.west.right, &d.west.left),
            &wpo,
            &self.base.then(&c.mid, &epo.j1)?,
            &self.base.then(&d.mid, &epo.j2)?,
        )?;
        Ok(CospCell {
            top: c.top.clone(),
            bot: d.bot.clone(),
            west,
            east,
            mid,
        })
    }

    fn v_assoc(&self, u: &CospV<C::M>, v: &CospV<C::M>, w: &CospV<C::M>) -> Result<CospCell<C::M>> {
        let c = &self.base;
        let uv_po = c.pushout(&u.right, &v.left)?;
        let uv = self.v_then(u, v)?;
        let vw_po = c.pushout(&v.right, &w.left)?;
        let vw = self.v_then(v, w)?;
        let lhs_po = c.pushout(&uv.right, &w.left)?;
        let rhs_po = c.pushout(&u.right, &vw.left)?;
        let lhs = self.v_then(&uv, w)?;
        let rhs = self.v_then(u, &vw)?;
        // mediate out of the lhs pushouts into the rhs nadir
        let from_uv = c.po_mediate(
            (&u.right, &v.left),
            &uv_po,
            &rhs_po.j1,
            &c.then(&vw_po.j1, &rhs_po.j2)?,
        )?;
        let mid = c.po_mediate(
            (&uv.right, &w.left),
            &lhs_po,
            &from_uv,
            &c.then(&vw_po.j2, &rhs_po.j2)?,
        )?;
        self.mk_cell(c.id(&self.v_src(u)), c.id(&self.v_tgt(w)), lhs, rhs, mid)
    }

    fn v_lunit(&self, v: &CospV<C::M>) -> CospCell<C::M> {
        let c = &self.base;
        let src = self.v_src(v);
        let po = c.pushout(&c.id(&src), &v.left).expect("lunit pushout");
        let composed = self.v_then(&self.v_id(&src), v).expect("lunit composite");
        let mid = c
            .po_mediate((&c.id(&src), &v.left), &po, &v.left, &c.id(&c.cod(&v.left)))
            .expect("lunit mediator");
        CospCell {
            top: c.id(&src),
            bot: c.id(&self.v_tgt(v)),
            west: composed,
            east: v.clone(),
            mid,
        }
    }

    fn v_runit(&self, v: &CospV<C::M>) -> CospCell<C::M> {
        let c = &self.base;
        let tgt = self.v_tgt(v);
        let po = c.pushout(&v.right, &c.id(&tgt)).expect("runit pushout");
        let composed = self.v_then(v, &self.v_id(&tgt)).expect("runit composite");
        let mid = c
            .po_mediate((&v.right, &c.id(&tgt)), &po, &c.id(&c.cod(&v.right)), &v.right)
            .expect("runit mediator");
        CospCell {
            top: c.id(&self.v_src(v)),
            bot: c.id(&tgt),
            west: composed,
            east: v.clone(),
            mid,
        }
    }

    fn cell_invert(&self, cl: &CospCell<C::M>) -> Option<CospCell<C::M>> {
        let c = &self.base;
        Some(CospCell {
            top: c.invert(&cl.top)?,
            bot: c.invert(&cl.bot)?,
            west: cl.east.clone(),
            east: cl.west.clone(),
            mid: c.invert(&cl.mid)?,
        })
    }

    fn cells_constrained(
        &self,
        west: &CospV<C::M>,
        east: &CospV<C::M>,
        top: Option<&C::M>,
        bot: Option<&C::M>,
    ) -> Option<Vec<CospCell<C::M>>> {
        let c = &self.base;
        let tops = match top {
            Some(t) => vec![t.clone()],
            None => c.hom_between(&self.v_src(west), &self.v_src(east))?,
        };
        let bots = match bot {
            Some(b) => vec![b.clone()],
            None => c.hom_between(&self.v_tgt(west), &self.v_tgt(east))?,
        };
        let mids = c.hom_between(&c.cod(&west.left), &c.cod(&east.left))?;
        let mut out = Vec::new();
        for t in &tops {
            for b in &bots {
                for m in &mids {
                    if let Ok(cell) = self.mk_cell(t.clone(), b.clone(), west.clone(), east.clone(), m.clone()) {
                        out.push(cell);
                    }
                }
            }
        }
        Some(out)
    }

    fn h_invert(&self, f: &C::M) -> Option<C::M> {
        self.base.invert(f)
    }

    fn hars_between(&self, a: &C::O, b: &C::O) -> Option<Vec<C::M>> {
        self.base.hom_between(a, b)
    }
}

impl<C: CompCat> HasPullbacks for CospDouble<C> {
    fn pb_har(&self, f: &C::M, g: &C::M) -> Result<Pb<C::O, C::M>> {
        self.base.pullback(f, g)
    }

    fn pb_har_mediate(&self, pb: &Pb<C::O, C::M>, u: &C::M, w: &C::M) -> Result<C::M> {
        self.base.pb_mediate(pb, u, w)
    }

    fn pb_cell(&self, x: &CospCell<C::M>, y: &CospCell<C::M>) -> Result<Pb<CospV<C::M>, CospCell<C::M>>> {
        if x.east != y.east {
            return Err(Error::boundary("CospDouble::pb_cell", "cospan targets differ"));
        }
        let c = &self.base;
        let top = c.pullback(&x.top, &y.top)?;
        let bot = c.pullback(&x.bot, &y.bot)?;
        let nadirpb = if self.normal {
            c.pullback(&x.mid, &y.mid)?
        } else {
            c.pullback_alt(&x.mid, &y.mid)?
        };
        let left = c.pb_mediate(
            &nadirpb,
            &c.then(&top.p1, &x.west.left)?,
            &c.then(&top.p2, &y.west.left)?,
        )?;
        let right = c.pb_mediate(
            &nadirpb,
            &c.then(&bot.p1, &x.west.right)?,
            &c.then(&bot.p2, &y.west.right)?,
        )?;
        let apex = CospV { left, right };
        let p1 = self.mk_cell(top.p1.clone(), bot.p1.clone(), apex.clone(), x.west.clone(), nadirpb.p1.clone())?;
        let p2 = self.mk_cell(top.p2.clone(), bot.p2.clone(), apex.clone(), y.west.clone(), nadirpb.p2.clone())?;
        Ok(Pb { apex, p1, p2 })
    }

    fn pb_cell_mediate(
        &self,
        pb: &Pb<CospV<C::M>, CospCell<C::M>>,
        c1: &CospCell<C::M>,
        c2: &CospCell<C::M>,
    ) -> Result<CospCell<C::M>> {
        let c = &self.base;
        let top = c.pb_mediate(
            &Pb {
                apex: self.v_src(&pb.apex),
                p1: pb.p1.top.clone(),
                p2: pb.p2.top.clone(),
            },
            &c1.top,
            &c2.top,
        )?;
        let bot = c.pb_mediate(
            &Pb {
                apex: self.v_tgt(&pb.apex),
                p1: pb.p1.bot.clone(),
                p2: pb.p2.bot.clone(),
            },
            &c1.bot,
            &c2.bot,
        )?;
        let mid = c.pb_mediate(
            &Pb {
                apex: c.cod(&pb.apex.left),
                p1: pb.p1.mid.clone(),
                p2: pb.p2.mid.clone(),
            },
            &c1.mid,
            &c2.mid,
        )?;
        self.mk_cell(top, bot, c1.west.clone(), pb.apex.clone(), mid)
    }
}

impl<C: CompCat> HasPushouts for CospDouble<C> {
    fn po_har(&self, f: &C::M, g: &C::M) -> Result<Po<C::O, C::M>> {
        self.base.pushout(f, g)
    }

    fn po_har_mediate(&self, src: (&C::M, &C::M), po: &Po<C::O, C::M>, u: &C::M, w: &C::M) -> Result<C::M> {
        self.base.po_mediate(src, po, u, w)
    }

    fn po_cell(&self, x: &CospCell<C::M>, y: &CospCell<C::M>) -> Result<Po<CospV<C::M>, CospCell<C::M>>> {
        if x.west != y.west {
            return Err(Error::boundary("CospDouble::po_cell", "span sources differ"));
        }
        let c = &self.base;
        let top = c.pushout(&x.top, &y.top)?;
        let bot = c.pushout(&x.bot, &y.bot)?;
        let nadirpo = if self.normal {
            c.pushout(&x.mid, &y.mid)?
        } else {
            c.pushout_alt(&x.mid, &y.mid)?
        };
        let left = c.po_mediate(
            (&x.top, &y.top),
            &top,
            &c.then(&x.east.left, &nadirpo.j1)?,
            &c.then(&y.east.left, &nadirpo.j2)?,
        )?;
        let right = c.po_mediate(
            (&x.bot, &y.bot),
            &bot,
            &c.then(&x.east.right, &nadirpo.j1)?,
            &c.then(&y.east.right, &nadirpo.j2)?,
        )?;
        let nadir = CospV { left, right };
        let j1 = self.mk_cell(top.j1.clone(), bot.j1.clone(), x.east.clone(), nadir.clone(), nadirpo.j1.clone())?;
        let j2 = self.mk_cell(top.j2.clone(), bot.j2.clone(), y.east.clone(), nadir.clone(), nadirpo.j2.clone())?;
        Ok(Po { nadir, j1, j2 })
    }

    fn po_cell_mediate(
        &self,
        src: (&CospCell<C::M>, &CospCell<C::M>),
        po: &Po<CospV<C::M>, CospCell<C::M>>,
        c1: &CospCell<C::M>,
        c2: &CospCell<C::M>,
    ) -> Result<CospCell<C::M>> {
        let c = &self.base;
        let top = c.po_mediate(
            (&src.0.top, &src.1.top),
            &Po {
                nadir: self.v_src(&po.nadir),
                j1: po.j1.top.clone(),
                j2: po.j2.top.clone(),
            },
            &c1.top,
            &c2.top,
        )?;
        let bot = c.po_mediate(
            (&src.0.bot, &src.1.bot),
            &Po {
                nadir: self.v_tgt(&po.nadir),
                j1: po.j1.bot.clone(),
                j2: po.j2.bot.clone(),
            },
            &c1.bot,
            &c2.bot,
        )?;
        let mid = c.po_mediate(
            (&src.0.mid, &src.1.mid),
            &Po {
                nadir: c.cod(&po.nadir.left),
                j1: po.j1.mid.clone(),
                j2: po.j2.mid.clone(),
            },
            &c1.mid,
            &c2.mid,
        )?;
        self.mk_cell(top, bot, po.nadir.clone(), c1.east.clone(), mid)
    }
}
