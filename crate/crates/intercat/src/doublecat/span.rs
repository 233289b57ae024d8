//! The double category of spans in a computable base category: objects and
//! morphisms of the base, spans as vertical arrows, span morphisms as cells,
//! vertical composition by the base's chosen pullbacks.

use super::base::{CompCat, Pb, Po};
use super::{DoubleCat, HasPullbacks, HasPushouts};
use crate::{Error, Result};

/// A span `src <-l- apex -r-> tgt`, read as a vertical arrow `src -|-> tgt`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpanV<M> {
    pub left: M,
    pub right: M,
}

/// A morphism of spans: `mid` between the apexes, over `top` and `bot`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpanCell<M> {
    pub top: M,
    pub bot: M,
    pub west: SpanV<M>,
    pub east: SpanV<M>,
    pub mid: M,
}

/// Spans in `C`. With `normal = true` every chosen `A1` pullback is built
/// componentwise from the base's primary choice, which makes the vertical
/// identity functor preserve chosen pullbacks on the nose. With `normal =
/// false` the apex component uses the base's alternative choice, giving a
/// deliberately non-normal (but still boundary-compatible) structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanDouble<C: CompCat> {
    pub base: C,
    pub normal: bool,
}

impl<C: CompCat> SpanDouble<C> {
    pub fn new(base: C) -> Self {
        SpanDouble { base, normal: true }
    }

    pub fn non_normal(base: C) -> Self {
        SpanDouble { base, normal: false }
    }

    pub fn mk_cell(&self, top: C::M, bot: C::M, west: SpanV<C::M>, east: SpanV<C::M>, mid: C::M) -> Result<SpanCell<C::M>> {
        let c = &self.base;
        let ok = c.then(&mid, &east.left)? == c.then(&west.left, &top)?
            && c.then(&mid, &east.right)? == c.then(&west.right, &bot)?;
        if !ok {
            return Err(Error::boundary("SpanDouble::mk_cell", "mid does not commute with legs"));
        }
        Ok(SpanCell { top, bot, west, east, mid })
    }
}

impl<C: CompCat> DoubleCat for SpanDouble<C> {
    type Obj = C::O;
    type HAr = C::M;
    type VAr = SpanV<C::M>;
    type Cell = SpanCell<C::M>;

    fn h_dom(&self, h: &C::M) -> C::O {
        self.base.dom(h)
    }
    fn h_cod(&self, h: &C::M) -> C::O {
        self.base.cod(h)
    }
    fn v_src(&self, v: &SpanV<C::M>) -> C::O {
        self.base.cod(&v.left)
    }
    fn v_tgt(&self, v: &SpanV<C::M>) -> C::O {
        self.base.cod(&v.right)
    }

    fn cell_top(&self, c: &SpanCell<C::M>) -> C::M {
        c.top.clone()
    }
    fn cell_bot(&self, c: &SpanCell<C::M>) -> C::M {
        c.bot.clone()
    }
    fn cell_west(&self, c: &SpanCell<C::M>) -> SpanV<C::M> {
        c.west.clone()
    }
    fn cell_east(&self, c: &SpanCell<C::M>) -> SpanV<C::M> {
        c.east.clone()
    }

    fn h_id(&self, a: &C::O) -> C::M {
        self.base.id(a)
    }
    fn h_then(&self, f: &C::M, g: &C::M) -> Result<C::M> {
        self.base.then(f, g)
    }

    fn v_id(&self, a: &C::O) -> SpanV<C::M> {
        SpanV {
            left: self.base.id(a),
            right: self.base.id(a),
        }
    }

    fn v_then(&self, u: &SpanV<C::M>, w: &SpanV<C::M>) -> Result<SpanV<C::M>> {
        if self.v_tgt(u) != self.v_src(w) {
            return Err(Error::boundary("SpanDouble::v_then", "middle objects differ"));
        }
        let pb = self.base.pullback(&u.right, &w.left)?;
        Ok(SpanV {
            left: self.base.then(&pb.p1, &u.left)?,
            right: self.base.then(&pb.p2, &w.right)?,
        })
    }

    fn cell_h_id(&self, v: &SpanV<C::M>) -> SpanCell<C::M> {
        SpanCell {
            top: self.base.id(&self.v_src(v)),
            bot: self.base.id(&self.v_tgt(v)),
            west: v.clone(),
            east: v.clone(),
            mid: self.base.id(&self.base.dom(&v.left)),
        }
    }

    fn cell_h_then(&self, c: &SpanCell<C::M>, d: &SpanCell<C::M>) -> Result<SpanCell<C::M>> {
        if c.east != d.west {
            return Err(Error::boundary("SpanDouble::cell_h_then", "middle spans differ"));
        }
        Ok(SpanCell {
            top: self.base.then(&c.top, &d.top)?,
            bot: self.base.then(&c.bot, &d.bot)?,
            west: c.west.clone(),
            east: d.east.clone(),
            mid: self.base.then(&c.mid, &d.mid)?,
        })
    }

    fn cell_v_id(&self, f: &C::M) -> SpanCell<C::M> {
        SpanCell {
            top: f.clone(),
            bot: f.clone(),
            west: self.v_id(&self.base.dom(f)),
            east: self.v_id(&self.base.cod(f)),
            mid: f.clone(),
        }
    }

    fn cell_v_then(&self, c: &SpanCell<C::M>, d: &SpanCell<C::M>) -> Result<SpanCell<C::M>> {
        if c.bot != d.top {
            return Err(Error::boundary("SpanDouble::cell_v_then", "bot != top"));
        }
        let west = self.v_then(&c.west, &d.west)?;
        let east = self.v_then(&c.east, &d.east)?;
        let wpb = self.base.pullback(&c.west.right, &d.west.left)?;
        let epb = self.base.pullback(&c.east.right, &d.east.left)?;
        let mid = self.base.pb_mediate(
            &epb,
            &self.base.then(&wpb.p1, &c.mid)?,
            &self.base.then(&wpb.p2, &d.mid)?,
        )?;
        Ok(SpanCell {
            top: c.top.clone(),
            bot: d.bot.clone(),
            west,
            east,
            mid,
        })
    }

    fn v_assoc(&self, u: &SpanV<C::M>, v: &SpanV<C::M>, w: &SpanV<C::M>) -> Result<SpanCell<C::M>> {
        let c = &self.base;
        let uv_pb = c.pullback(&u.right, &v.left)?;
        let uv = self.v_then(u, v)?;
        let vw_pb = c.pullback(&v.right, &w.left)?;
        let vw = self.v_then(v, w)?;
        let lhs_pb = c.pullback(&uv.right, &w.left)?; // apex of (u.v).w
        let rhs_pb = c.pullback(&u.right, &vw.left)?; // apex of u.(v.w)
        let lhs = self.v_then(&uv, w)?;
        let rhs = self.v_then(u, &vw)?;
        // mediate lhs apex into the nested pullbacks of the rhs
        let into_vw = c.pb_mediate(
            &vw_pb,
            &c.then(&lhs_pb.p1, &uv_pb.p2)?,
            &lhs_pb.p2,
        )?;
        let mid = c.pb_mediate(&rhs_pb, &c.then(&lhs_pb.p1, &uv_pb.p1)?, &into_vw)?;
        self.mk_cell(
            c.id(&self.v_src(u)),
            c.id(&self.v_tgt(w)),
            lhs,
            rhs,
            mid,
        )
    }

    fn v_lunit(&self, v: &SpanV<C::M>) -> SpanCell<C::M> {
        let c = &self.base;
        let src = self.v_src(v);
        let pb = c.pullback(&c.id(&src), &v.left).expect("lunit pullback");
        let composed = self.v_then(&self.v_id(&src), v).expect("lunit composite");
        SpanCell {
            top: c.id(&src),
            bot: c.id(&self.v_tgt(v)),
            west: composed,
            east: v.clone(),
            mid: pb.p2,
        }
    }

    fn v_runit(&self, v: &SpanV<C::M>) -> SpanCell<C::M> {
        let c = &self.base;
        let tgt = self.v_tgt(v);
        let pb = c.pullback(&v.right, &c.id(&tgt)).expect("runit pullback");
        let composed = self.v_then(v, &self.v_id(&tgt)).expect("runit composite");
        SpanCell {
            top: c.id(&self.v_src(v)),
            bot: c.id(&tgt),
            west: composed,
            east: v.clone(),
            mid: pb.p1,
        }
    }

    fn cell_invert(&self, cl: &SpanCell<C::M>) -> Option<SpanCell<C::M>> {
        let c = &self.base;
        let top = c.invert(&cl.top)?;
        let bot = c.invert(&cl.bot)?;
        let mid = c.invert(&cl.mid)?;
        Some(SpanCell {
            top,
            bot,
            west: cl.east.clone(),
            east: cl.west.clone(),
            mid,
        })
    }

    fn cells_constrained(
        &self,
        west: &SpanV<C::M>,
        east: &SpanV<C::M>,
        top: Option<&C::M>,
        bot: Option<&C::M>,
    ) -> Option<Vec<SpanCell<C::M>>> {
        let c = &self.base;
        let tops = match top {
            Some(t) => vec![t.clone()],
            None => c.hom_between(&self.v_src(west), &self.v_src(east))?,
        };
        let bots = match bot {
            Some(b) => vec![b.clone()],
            None => c.hom_between(&self.v_tgt(west), &self.v_tgt(east))?,
        };
        let mids = c.hom_between(&c.dom(&west.left), &c.dom(&east.left))?;
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

impl<C: CompCat> HasPullbacks for SpanDouble<C> {
    fn pb_har(&self, f: &C::M, g: &C::M) -> Result<Pb<C::O, C::M>> {
        self.base.pullback(f, g)
    }

    fn pb_har_mediate(&self, pb: &Pb<C::O, C::M>, u: &C::M, w: &C::M) -> Result<C::M> {
        self.base.pb_mediate(pb, u, w)
    }

    fn pb_cell(&self, x: &SpanCell<C::M>, y: &SpanCell<C::M>) -> Result<Pb<SpanV<C::M>, SpanCell<C::M>>> {
        if x.east != y.east {
            return Err(Error::boundary("SpanDouble::pb_cell", "cospan targets differ"));
        }
        let c = &self.base;
        let top = c.pullback(&x.top, &y.top)?;
        let bot = c.pullback(&x.bot, &y.bot)?;
        let apexpb = if self.normal {
            c.pullback(&x.mid, &y.mid)?
        } else {
            c.pullback_alt(&x.mid, &y.mid)?
        };
        let left = c.pb_mediate(
            &top,
            &c.then(&apexpb.p1, &x.west.left)?,
            &c.then(&apexpb.p2, &y.west.left)?,
        )?;
        let right = c.pb_mediate(
            &bot,
            &c.then(&apexpb.p1, &x.west.right)?,
            &c.then(&apexpb.p2, &y.west.right)?,
        )?;
        let apex = SpanV { left, right };
        let p1 = self.mk_cell(top.p1.clone(), bot.p1.clone(), apex.clone(), x.west.clone(), apexpb.p1.clone())?;
        let p2 = self.mk_cell(top.p2.clone(), bot.p2.clone(), apex.clone(), y.west.clone(), apexpb.p2.clone())?;
        Ok(Pb { apex, p1, p2 })
    }

    fn pb_cell_mediate(
        &self,
        pb: &Pb<SpanV<C::M>, SpanCell<C::M>>,
        c1: &SpanCell<C::M>,
        c2: &SpanCell<C::M>,
    ) -> Result<SpanCell<C::M>> {
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
                apex: c.dom(&pb.apex.left),
                p1: pb.p1.mid.clone(),
                p2: pb.p2.mid.clone(),
            },
            &c1.mid,
            &c2.mid,
        )?;
        self.mk_cell(top, bot, c1.west.clone(), pb.apex.clone(), mid)
    }
}

/// Componentwise pushouts, available when the base category has them. Used
/// to build the cospan intercategory over a span double category.
impl<C: CompCat> HasPushouts for SpanDouble<C> {
    fn po_har(&self, f: &C::M, g: &C::M) -> Result<Po<C::O, C::M>> {
        self.base.pushout(f, g)
    }

    fn po_har_mediate(&self, src: (&C::M, &C::M), po: &Po<C::O, C::M>, u: &C::M, w: &C::M) -> Result<C::M> {
        self.base.po_mediate(src, po, u, w)
    }

    fn po_cell(&self, x: &SpanCell<C::M>, y: &SpanCell<C::M>) -> Result<Po<SpanV<C::M>, SpanCell<C::M>>> {
        if x.west != y.west {
            return Err(Error::boundary("SpanDouble::po_cell", "span sources differ"));
        }
        let c = &self.base;
        let top = c.pushout(&x.top, &y.top)?;
        let bot = c.pushout(&x.bot, &y.bot)?;
        let apexpo = if self.normal {
            c.pushout(&x.mid, &y.mid)?
        } else {
            c.pushout_alt(&x.mid, &y.mid)?
        };
        // legs of the nadir span: mediate out of the apex pushout
        let left = c.po_mediate(
            (&x.mid, &y.mid),
            &apexpo,
            &c.then(&x.east.left, &top.j1)?,
            &c.then(&y.east.left, &top.j2)?,
        )?;
        let right = c.po_mediate(
            (&x.mid, &y.mid),
            &apexpo,
            &c.then(&x.east.right, &bot.j1)?,
            &c.then(&y.east.right, &bot.j2)?,
        )?;
        let nadir = SpanV { left, right };
        let j1 = self.mk_cell(top.j1.clone(), bot.j1.clone(), x.east.clone(), nadir.clone(), apexpo.j1.clone())?;
        let j2 = self.mk_cell(top.j2.clone(), bot.j2.clone(), y.east.clone(), nadir.clone(), apexpo.j2.clone())?;
        Ok(Po { nadir, j1, j2 })
    }

    fn po_cell_mediate(
        &self,
        src: (&SpanCell<C::M>, &SpanCell<C::M>),
        po: &Po<SpanV<C::M>, SpanCell<C::M>>,
        c1: &SpanCell<C::M>,
        c2: &SpanCell<C::M>,
    ) -> Result<SpanCell<C::M>> {
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
                nadir: c.dom(&po.nadir.left),
                j1: po.j1.mid.clone(),
                j2: po.j2.mid.clone(),
            },
            &c1.mid,
            &c2.mid,
        )?;
        self.mk_cell(top, bot, po.nadir.clone(), c1.east.clone(), mid)
    }
}
