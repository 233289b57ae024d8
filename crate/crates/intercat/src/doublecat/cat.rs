//! The double category of small (finite) categories, functors and
//! profunctors, with the standard pairs construction as the chosen pullback.
//! The choice is unitary (normal) but only lax: composing profunctors does
//! not commute with pulling back, which is the engine behind the
//! non-invertible interchanger of the span construction over this instance.

use super::base::Pb;
use super::DoubleCat;
use crate::fincat::{
    cat_pb_mediate, cat_pullback, prof_compose_traced, FinCatData, FunctorData, ProfData,
};
use crate::finset::{Elem, FinSetObj};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A profunctor morphism over a pair of functors: components
/// `comps[(b, bb, x)]` send `x` in `west(b, bb)` to an element of
/// `east(top b, bot bb)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProfCell {
    pub top: FunctorData,
    pub bot: FunctorData,
    pub west: ProfData,
    pub east: ProfData,
    pub comps: BTreeMap<(String, String, Elem), Elem>,
}

impl ProfCell {
    pub fn at(&self, b: &str, bb: &str, x: &Elem) -> &Elem {
        self.comps
            .get(&(b.to_string(), bb.to_string(), x.clone()))
            .unwrap_or_else(|| panic!("profunctor cell has no component at ({b},{bb},{x})"))
    }
}

/// The double category `Cat`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CatDouble;

impl CatDouble {
    pub fn mk_cell(
        &self,
        top: FunctorData,
        bot: FunctorData,
        west: ProfData,
        east: ProfData,
        comps: BTreeMap<(String, String, Elem), Elem>,
    ) -> Result<ProfCell> {
        let cell = ProfCell {
            top,
            bot,
            west,
            east,
            comps,
        };
        // totality, codomain membership, and naturality in both actions
        for a in &cell.west.src.objects {
            for b in &cell.west.tgt.objects {
                for x in cell.west.set(a, b).elems() {
                    let y = cell
                        .comps
                        .get(&(a.clone(), b.clone(), x.clone()))
                        .ok_or_else(|| Error::invalid("ProfCell", format!("missing component at ({a},{b},{x})")))?;
                    if !cell.east.set(cell.top.on_obj(a), cell.bot.on_obj(b)).contains(y) {
                        return Err(Error::boundary("ProfCell", format!("component at ({a},{b},{x})")));
                    }
                }
            }
        }
        for (f, fd, fc) in &cell.west.src.morphisms {
            for b in &cell.west.tgt.objects {
                for x in cell.west.set(fc, b).elems() {
                    let lhs = cell.at(fd, b, cell.west.act_left(f, b, x));
                    let rhs = cell
                        .east
                        .act_left(cell.top.on_mor(f), cell.bot.on_obj(b), cell.at(fc, b, x));
                    if lhs != rhs {
                        return Err(Error::invalid("ProfCell", format!("left naturality at ({f},{b},{x})")));
                    }
                }
            }
        }
        for (g, gd, _) in &cell.west.tgt.morphisms {
            for a in &cell.west.src.objects {
                for x in cell.west.set(a, gd).elems() {
                    let lhs = cell.at(a, cell.west.tgt.cod(g), cell.west.act_right(g, a, x));
                    let rhs = cell
                        .east
                        .act_right(cell.bot.on_mor(g), cell.top.on_obj(a), cell.at(a, gd, x));
                    if lhs != rhs {
                        return Err(Error::invalid("ProfCell", format!("right naturality at ({g},{a},{x})")));
                    }
                }
            }
        }
        Ok(cell)
    }
}

impl DoubleCat for CatDouble {
    type Obj = FinCatData;
    type HAr = FunctorData;
    type VAr = ProfData;
    type Cell = ProfCell;

    fn h_dom(&self, h: &FunctorData) -> FinCatData {
        h.source.clone()
    }
    fn h_cod(&self, h: &FunctorData) -> FinCatData {
        h.target.clone()
    }
    fn v_src(&self, v: &ProfData) -> FinCatData {
        v.src.clone()
    }
    fn v_tgt(&self, v: &ProfData) -> FinCatData {
        v.tgt.clone()
    }

    fn cell_top(&self, c: &ProfCell) -> FunctorData {
        c.top.clone()
    }
    fn cell_bot(&self, c: &ProfCell) -> FunctorData {
        c.bot.clone()
    }
    fn cell_west(&self, c: &ProfCell) -> ProfData {
        c.west.clone()
    }
    fn cell_east(&self, c: &ProfCell) -> ProfData {
        c.east.clone()
    }

    fn h_id(&self, a: &FinCatData) -> FunctorData {
        FunctorData::identity(a)
    }

    fn h_then(&self, f: &FunctorData, g: &FunctorData) -> Result<FunctorData> {
        if f.target != g.source {
            return Err(Error::boundary("CatDouble::h_then", "functors not composable"));
        }
        Ok(FunctorData {
            source: f.source.clone(),
            target: g.target.clone(),
            obj_map: f
                .obj_map
                .iter()
                .map(|(a, b)| (a.clone(), g.on_obj(b).clone()))
                .collect(),
            mor_map: f
                .mor_map
                .iter()
                .map(|(a, b)| (a.clone(), g.on_mor(b).clone()))
                .collect(),
        })
    }

    fn v_id(&self, a: &FinCatData) -> ProfData {
        ProfData::hom_of(a)
    }

    fn v_then(&self, u: &ProfData, w: &ProfData) -> Result<ProfData> {
        crate::fincat::prof_compose(u, w)
    }

    fn cell_h_id(&self, v: &ProfData) -> ProfCell {
        let mut comps = BTreeMap::new();
        for a in &v.src.objects {
            for b in &v.tgt.objects {
                for x in v.set(a, b).elems() {
                    comps.insert((a.clone(), b.clone(), x.clone()), x.clone());
                }
            }
        }
        ProfCell {
            top: FunctorData::identity(&v.src),
            bot: FunctorData::identity(&v.tgt),
            west: v.clone(),
            east: v.clone(),
            comps,
        }
    }

    fn cell_h_then(&self, c: &ProfCell, d: &ProfCell) -> Result<ProfCell> {
        if c.east != d.west {
            return Err(Error::boundary("CatDouble::cell_h_then", "middle profunctors differ"));
        }
        let mut comps = BTreeMap::new();
        for ((a, b, x), y) in &c.comps {
            comps.insert(
                (a.clone(), b.clone(), x.clone()),
                d.at(c.top.on_obj(a), c.bot.on_obj(b), y).clone(),
            );
        }
        self.mk_cell(
            self.h_then(&c.top, &d.top)?,
            self.h_then(&c.bot, &d.bot)?,
            c.west.clone(),
            d.east.clone(),
            comps,
        )
    }

    fn cell_v_id(&self, f: &FunctorData) -> ProfCell {
        let west = ProfData::hom_of(&f.source);
        let east = ProfData::hom_of(&f.target);
        let mut comps = BTreeMap::new();
        for a in &f.source.objects {
            for b in &f.source.objects {
                for x in west.set(a, b).elems() {
                    comps.insert(
                        (a.clone(), b.clone(), x.clone()),
                        Elem::new(f.on_mor(x.as_str()).clone()),
                    );
                }
            }
        }
        ProfCell {
            top: f.clone(),
            bot: f.clone(),
            west,
            east,
            comps,
        }
    }

    fn cell_v_then(&self, c: &ProfCell, d: &ProfCell) -> Result<ProfCell> {
        if c.bot != d.top {
            return Err(Error::boundary("CatDouble::cell_v_then", "bot != top"));
        }
        let (west, wtrace) = prof_compose_traced(&c.west, &d.west)?;
        let (east, etrace) = prof_compose_traced(&c.east, &d.east)?;
        let mut comps = BTreeMap::new();
        for a in &west.src.objects {
            for z in &west.tgt.objects {
                for e in west.set(a, z).elems() {
                    let (b, x, y) = wtrace.rep_of(a, z, e).clone();
                    let img = etrace.class_of(
                        c.top.on_obj(a),
                        d.bot.on_obj(z),
                        c.bot.on_obj(&b),
                        c.at(a, &b, &x),
                        d.at(&b, z, &y),
                    );
                    comps.insert((a.clone(), z.clone(), e.clone()), img.clone());
                }
            }
        }
        self.mk_cell(c.top.clone(), d.bot.clone(), west, east, comps)
    }

    fn v_assoc(&self, p: &ProfData, q: &ProfData, r: &ProfData) -> Result<ProfCell> {
        let (pq, pq_t) = prof_compose_traced(p, q)?;
        let (qr, qr_t) = prof_compose_traced(q, r)?;
        let (lhs, lhs_t) = prof_compose_traced(&pq, r)?;
        let (rhs, rhs_t) = prof_compose_traced(p, &qr)?;
        let mut comps = BTreeMap::new();
        for a in &lhs.src.objects {
            for dd in &lhs.tgt.objects {
                for e in lhs.set(a, dd).elems() {
                    let (c, w, z) = lhs_t.rep_of(a, dd, e).clone();
                    let (b, x, y) = pq_t.rep_of(a, &c, &w).clone();
                    let inner = qr_t.class_of(&b, dd, &c, &y, &z).clone();
                    let img = rhs_t.class_of(a, dd, &b, &x, &inner).clone();
                    comps.insert((a.clone(), dd.clone(), e.clone()), img);
                }
            }
        }
        self.mk_cell(
            FunctorData::identity(&lhs.src),
            FunctorData::identity(&lhs.tgt),
            lhs,
            rhs,
            comps,
        )
    }

    fn v_lunit(&self, v: &ProfData) -> ProfCell {
        let hom = ProfData::hom_of(&v.src);
        let (composed, trace) = prof_compose_traced(&hom, v).expect("lunit composite");
        let mut comps = BTreeMap::new();
        for a in &composed.src.objects {
            for b in &composed.tgt.objects {
                for e in composed.set(a, b).elems() {
                    // class of (a', f : a -> a', x in v(a',b)) acts as x.f
                    let (aprime, f, x) = trace.rep_of(a, b, e).clone();
                    let _ = aprime;
                    let img = v.act_left(f.as_str(), b, &x).clone();
                    comps.insert((a.clone(), b.clone(), e.clone()), img);
                }
            }
        }
        ProfCell {
            top: FunctorData::identity(&v.src),
            bot: FunctorData::identity(&v.tgt),
            west: composed,
            east: v.clone(),
            comps,
        }
    }

    fn v_runit(&self, v: &ProfData) -> ProfCell {
        let hom = ProfData::hom_of(&v.tgt);
        let (composed, trace) = prof_compose_traced(v, &hom).expect("runit composite");
        let mut comps = BTreeMap::new();
        for a in &composed.src.objects {
            for b in &composed.tgt.objects {
                for e in composed.set(a, b).elems() {
                    // class of (b', x in v(a,b'), g : b' -> b) acts as g.x
                    let (bprime, x, g) = trace.rep_of(a, b, e).clone();
                    let _ = bprime;
                    let img = v.act_right(g.as_str(), a, &x).clone();
                    comps.insert((a.clone(), b.clone(), e.clone()), img);
                }
            }
        }
        ProfCell {
            top: FunctorData::identity(&v.src),
            bot: FunctorData::identity(&v.tgt),
            west: composed,
            east: v.clone(),
            comps,
        }
    }

    fn cell_invert(&self, c: &ProfCell) -> Option<ProfCell> {
        // invertible iff both functors are invertible and every component is
        // a bijection; here we only invert globular cells (identity functors)
        if c.top != FunctorData::identity(&c.top.source) || c.bot != FunctorData::identity(&c.bot.source) {
            return None;
        }
        let mut comps = BTreeMap::new();
        for a in &c.west.src.objects {
            for b in &c.west.tgt.objects {
                let mut seen = std::collections::BTreeSet::new();
                for x in c.west.set(a, b).elems() {
                    let y = c.at(a, b, x).clone();
                    if !seen.insert(y.clone()) {
                        return None;
                    }
                    comps.insert((a.clone(), b.clone(), y), x.clone());
                }
                if seen.len() != c.east.set(a, b).len() {
                    return None;
                }
            }
        }
        Some(ProfCell {
            top: c.top.clone(),
            bot: c.bot.clone(),
            west: c.east.clone(),
            east: c.west.clone(),
            comps,
        })
    }

    fn cells_constrained(
        &self,
        west: &ProfData,
        east: &ProfData,
        top: Option<&FunctorData>,
        bot: Option<&FunctorData>,
    ) -> Option<Vec<ProfCell>> {
        let (top, bot) = (top?, bot?);
        // all choices of component functions, filtered by naturality
        let mut keys = Vec::new();
        let mut choices: Vec<Vec<Elem>> = Vec::new();
        for a in &west.src.objects {
            for b in &west.tgt.objects {
                for x in west.set(a, b).elems() {
                    keys.push((a.clone(), b.clone(), x.clone()));
                    choices.push(east.set(top.on_obj(a), bot.on_obj(b)).elems().to_vec());
                }
            }
        }
        let mut assignments: Vec<Vec<Elem>> = vec![vec![]];
        for set in &choices {
            if set.is_empty() {
                return Some(vec![]);
            }
            let mut next = Vec::new();
            for partial in &assignments {
                for y in set {
                    let mut p = partial.clone();
                    p.push(y.clone());
                    next.push(p);
                }
            }
            assignments = next;
        }
        let mut out = Vec::new();
        for assign in assignments {
            let comps: BTreeMap<(String, String, Elem), Elem> =
                keys.iter().cloned().zip(assign).collect();
            if let Ok(cell) = self.mk_cell(top.clone(), bot.clone(), west.clone(), east.clone(), comps) {
                out.push(cell);
            }
        }
        Some(out)
    }

    fn h_invert(&self, f: &FunctorData) -> Option<FunctorData> {
        // a functor is invertible when both maps are bijections
        let mut obj_map = BTreeMap::new();
        for (a, b) in &f.obj_map {
            if obj_map.insert(b.clone(), a.clone()).is_some() {
                return None;
            }
        }
        if obj_map.len() != f.target.objects.len() {
            return None;
        }
        let mut mor_map = BTreeMap::new();
        for (a, b) in &f.mor_map {
            if mor_map.insert(b.clone(), a.clone()).is_some() {
                return None;
            }
        }
        if mor_map.len() != f.target.morphisms.len() {
            return None;
        }
        Some(FunctorData {
            source: f.target.clone(),
            target: f.source.clone(),
            obj_map,
            mor_map,
        })
    }

    fn hars_between(&self, a: &FinCatData, b: &FinCatData) -> Option<Vec<FunctorData>> {
        // all functors, by exhaustive assignment filtered by functoriality
        let mut obj_assignments: Vec<BTreeMap<String, String>> = vec![BTreeMap::new()];
        for o in &a.objects {
            let mut next = Vec::new();
            for partial in &obj_assignments {
                for t in &b.objects {
                    let mut p = partial.clone();
                    p.insert(o.clone(), t.clone());
                    next.push(p);
                }
            }
            obj_assignments = next;
        }
        let mut out = Vec::new();
        for obj_map in obj_assignments {
            let mut mor_assignments: Vec<BTreeMap<String, String>> = vec![BTreeMap::new()];
            for (m, d, c) in &a.morphisms {
                let cands = b.hom(&obj_map[d], &obj_map[c]);
                if cands.is_empty() {
                    mor_assignments.clear();
                    break;
                }
                let mut next = Vec::new();
                for partial in &mor_assignments {
                    for t in &cands {
                        let mut p = partial.clone();
                        p.insert(m.clone(), t.clone());
                        next.push(p);
                    }
                }
                mor_assignments = next;
            }
            for mor_map in mor_assignments {
                let f = FunctorData {
                    source: a.clone(),
                    target: b.clone(),
                    obj_map: obj_map.clone(),
                    mor_map,
                };
                if f.validate().passed() {
                    out.push(f);
                }
            }
        }
        Some(out)
    }
}

impl super::HasPullbacks for CatDouble {
    fn pb_har(&self, f: &FunctorData, g: &FunctorData) -> Result<Pb<FinCatData, FunctorData>> {
        let (cat, p1, p2) = cat_pullback(f, g)?;
        Ok(Pb { apex: cat, p1, p2 })
    }

    fn pb_har_mediate(
        &self,
        pb: &Pb<FinCatData, FunctorData>,
        u: &FunctorData,
        w: &FunctorData,
    ) -> Result<FunctorData> {
        cat_pb_mediate(&pb.apex, u, w)
    }

    fn pb_cell(&self, x: &ProfCell, y: &ProfCell) -> Result<Pb<ProfData, ProfCell>> {
        if x.east != y.east {
            return Err(Error::boundary("CatDouble::pb_cell", "cospan targets differ"));
        }
        let src = self.pb_har(&x.top, &y.top)?;
        let tgt = self.pb_har(&x.bot, &y.bot)?;
        // R x_P S ((b,c),(bb,cc)) = {(u,v) | rho(u) = sigma(v)}
        let mut sets = BTreeMap::new();
        let mut comps1 = BTreeMap::new();
        let mut comps2 = BTreeMap::new();
        for o in &src.apex.objects {
            let (b, c) = crate::fincat::split_pair_ids(o);
            for oo in &tgt.apex.objects {
                let (bb, cc) = crate::fincat::split_pair_ids(oo);
                let mut elems = Vec::new();
                for u in x.west.set(&b, &bb).elems() {
                    for v in y.west.set(&c, &cc).elems() {
                        if x.at(&b, &bb, u) == y.at(&c, &cc, v) {
                            let e = crate::finset::pair_label(u, v);
                            comps1.insert((o.clone(), oo.clone(), e.clone()), u.clone());
                            comps2.insert((o.clone(), oo.clone(), e.clone()), v.clone());
                            elems.push(e);
                        }
                    }
                }
                sets.insert((o.clone(), oo.clone()), FinSetObj::new(elems));
            }
        }
        let mut lact = BTreeMap::new();
        for (m, _, mc) in &src.apex.morphisms {
            let (m1, m2) = crate::fincat::split_pair_ids(m);
            for oo in &tgt.apex.objects {
                for e in sets[&(mc.clone(), oo.clone())].elems() {
                    let (u, v) = crate::doublecat::matrix::split_pair(e);
                    let (bb, cc) = crate::fincat::split_pair_ids(oo);
                    let nu = x.west.act_left(&m1, &bb, &u);
                    let nv = y.west.act_left(&m2, &cc, &v);
                    lact.insert(
                        (m.clone(), oo.clone(), e.clone()),
                        crate::finset::pair_label(nu, nv),
                    );
                }
            }
        }
        let mut ract = BTreeMap::new();
        for (m, md, _) in &tgt.apex.morphisms {
            let (m1, m2) = crate::fincat::split_pair_ids(m);
            for o in &src.apex.objects {
                for e in sets[&(o.clone(), md.clone())].elems() {
                    let (u, v) = crate::doublecat::matrix::split_pair(e);
                    let (b, c) = crate::fincat::split_pair_ids(o);
                    let nu = x.west.act_right(&m1, &b, &u);
                    let nv = y.west.act_right(&m2, &c, &v);
                    ract.insert(
                        (m.clone(), o.clone(), e.clone()),
                        crate::finset::pair_label(nu, nv),
                    );
                }
            }
        }
        let apex = ProfData {
            src: src.apex.clone(),
            tgt: tgt.apex.clone(),
            sets,
            lact,
            ract,
        };
        let p1 = self.mk_cell(src.p1.clone(), tgt.p1.clone(), apex.clone(), x.west.clone(), comps1)?;
        let p2 = self.mk_cell(src.p2.clone(), tgt.p2.clone(), apex.clone(), y.west.clone(), comps2)?;
        Ok(Pb { apex, p1, p2 })
    }

    fn pb_cell_mediate(&self, pb: &Pb<ProfData, ProfCell>, c1: &ProfCell, c2: &ProfCell) -> Result<ProfCell> {
        let top = self.pb_har_mediate(
            &Pb {
                apex: pb.apex.src.clone(),
                p1: pb.p1.top.clone(),
                p2: pb.p2.top.clone(),
            },
            &c1.top,
            &c2.top,
        )?;
        let bot = self.pb_har_mediate(
            &Pb {
                apex: pb.apex.tgt.clone(),
                p1: pb.p1.bot.clone(),
                p2: pb.p2.bot.clone(),
            },
            &c1.bot,
            &c2.bot,
        )?;
        let mut comps = BTreeMap::new();
        for a in &c1.west.src.objects {
            for b in &c1.west.tgt.objects {
                for e in c1.west.set(a, b).elems() {
                    comps.insert(
                        (a.clone(), b.clone(), e.clone()),
                        crate::finset::pair_label(c1.at(a, b, e), c2.at(a, b, e)),
                    );
                }
            }
        }
        self.mk_cell(top, bot, c1.west.clone(), pb.apex.clone(), comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::{check_double_laws, DblProbes};

    #[test]
    fn hom_is_vertical_identity_up_to_unitors() {
        let dd = CatDouble;
        let one = FinCatData::terminal();
        let v = ProfData::constant(&one, &one, &FinSetObj::from_labels(["x", "y"]));
        let lu = dd.v_lunit(&v);
        assert!(dd.cell_invert(&lu).is_some());
    }

    #[test]
    fn cat_double_laws_on_small_probes() {
        let dd = CatDouble;
        let one = FinCatData::terminal();
        let arrow = FinCatData::from_graph(&["0", "1"], &[("a", "0", "1")], &[]).unwrap();
        let v = ProfData::constant(&one, &one, &FinSetObj::from_labels(["x", "y"]));
        let w = ProfData::hom_of(&arrow);
        let probes = DblProbes::<CatDouble> {
            objs: vec![one.clone(), arrow.clone()],
            hars: vec![FunctorData::identity(&one), FunctorData::identity(&arrow)],
            vars: vec![v.clone(), w.clone(), dd.v_id(&one)],
            cells: vec![dd.cell_h_id(&v), dd.cell_h_id(&w)],
        };
        let report = check_double_laws(&dd, &probes);
        assert!(report.passed(), "{report}");
    }
}
