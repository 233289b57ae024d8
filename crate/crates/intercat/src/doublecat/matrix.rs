//! The double category of sets, functions and V-matrices for a monoidal
//! base V with coproducts preserved by the tensor. Vertical composition is
//! matrix multiplication `(M.N)[a,c] = Sum_b M[a,b] (x) N[b,c]`; vertical
//! identities are scalar matrices with the unit on the diagonal and the
//! initial object off it.

use super::base::{Data, Pb};
use super::DoubleCat;
use crate::finset::{all_fns, indexed_sum, pair_label, pullback, CospFS, Elem, FinFn, FinSetObj};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A monoidal category with enough computable structure for matrices:
/// tensor, indexed coproducts with copairing, distributivity, and chosen
/// pullbacks.
pub trait MonoidalBase {
    type O: Data;
    type M: Data;

    fn dom(&self, m: &Self::M) -> Self::O;
    fn cod(&self, m: &Self::M) -> Self::O;
    fn id(&self, o: &Self::O) -> Self::M;
    fn then(&self, f: &Self::M, g: &Self::M) -> Result<Self::M>;

    fn unit(&self) -> Self::O;
    fn initial(&self) -> Self::O;
    fn tensor_o(&self, a: &Self::O, b: &Self::O) -> Self::O;
    fn tensor_m(&self, f: &Self::M, g: &Self::M) -> Self::M;

    /// Indexed coproduct with its injections.
    fn sum_indexed(&self, parts: &[(Elem, Self::O)]) -> (Self::O, BTreeMap<Elem, Self::M>);

    /// Unique map out of a sum determined by one leg per summand.
    fn copair(
        &self,
        injections: &BTreeMap<Elem, Self::M>,
        legs: &BTreeMap<Elem, Self::M>,
    ) -> Result<Self::M>;

    /// Canonical iso `(Sum_i X_i) (x) Y -> Sum_i (X_i (x) Y)`, where both
    /// sides are built with `sum_indexed` on the same index labels.
    fn distr(&self, parts: &[(Elem, Self::O)], y: &Self::O) -> Result<Self::M>;

    /// Associator `(x (x) y) (x) z -> x (x) (y (x) z)`.
    fn tassoc(&self, x: &Self::O, y: &Self::O, z: &Self::O) -> Self::M;

    /// `unit (x) x -> x` and `x (x) unit -> x`.
    fn lunit_m(&self, x: &Self::O) -> Self::M;
    fn runit_m(&self, x: &Self::O) -> Self::M;

    /// The unique map out of an initial-like source (e.g. `0 (x) X`).
    fn unique_from(&self, src: &Self::O, tgt: &Self::O) -> Result<Self::M>;

    fn pullback(&self, f: &Self::M, g: &Self::M) -> Result<Pb<Self::O, Self::M>>;
    fn pb_mediate(&self, pb: &Pb<Self::O, Self::M>, u: &Self::M, w: &Self::M) -> Result<Self::M>;

    fn invert(&self, m: &Self::M) -> Option<Self::M>;
    fn is_iso(&self, m: &Self::M) -> bool {
        self.invert(m).is_some()
    }
    fn hom_between(&self, a: &Self::O, b: &Self::O) -> Option<Vec<Self::M>>;
}

/// (FinSet, x, 1, +, 0): the default matrix base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FinSetCartesian;

impl FinSetCartesian {
    fn prod(a: &FinSetObj, b: &FinSetObj) -> FinSetObj {
        FinSetObj::new(
            a.elems()
                .iter()
                .flat_map(|x| b.elems().iter().map(move |y| pair_label(x, y))),
        )
    }
}

impl MonoidalBase for FinSetCartesian {
    type O = FinSetObj;
    type M = FinFn;

    fn dom(&self, m: &FinFn) -> FinSetObj {
        m.dom.clone()
    }
    fn cod(&self, m: &FinFn) -> FinSetObj {
        m.cod.clone()
    }
    fn id(&self, o: &FinSetObj) -> FinFn {
        FinFn::identity(o)
    }
    fn then(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
        f.then(g)
    }

    fn unit(&self) -> FinSetObj {
        FinSetObj::point()
    }
    fn initial(&self) -> FinSetObj {
        FinSetObj::empty()
    }

    fn tensor_o(&self, a: &FinSetObj, b: &FinSetObj) -> FinSetObj {
        Self::prod(a, b)
    }

    fn tensor_m(&self, f: &FinFn, g: &FinFn) -> FinFn {
        let dom = Self::prod(&f.dom, &g.dom);
        let cod = Self::prod(&f.cod, &g.cod);
        FinFn::from_rule(dom, cod, |e| {
            let (x, y) = split_pair(e);
            pair_label(f.apply(&x), g.apply(&y))
        })
    }

    fn sum_indexed(&self, parts: &[(Elem, FinSetObj)]) -> (FinSetObj, BTreeMap<Elem, FinFn>) {
        let (total, injs) = indexed_sum(parts);
        (
            total,
            parts
                .iter()
                .map(|(i, _)| i.clone())
                .zip(injs)
                .collect(),
        )
    }

    fn copair(&self, injections: &BTreeMap<Elem, FinFn>, legs: &BTreeMap<Elem, FinFn>) -> Result<FinFn> {
        let sum = injections
            .values()
            .next()
            .map(|m| m.cod.clone())
            .unwrap_or_else(FinSetObj::empty);
        let target = legs
            .values()
            .next()
            .map(|m| m.cod.clone())
            .ok_or_else(|| Error::invalid("copair", "no legs"))?;
        let mut map = BTreeMap::new();
        for (i, inj) in injections {
            let leg = legs
                .get(i)
                .ok_or_else(|| Error::invalid("copair", format!("no leg at {i}")))?;
            for x in inj.dom.elems() {
                map.insert(inj.apply(x).clone(), leg.apply(x).clone());
            }
        }
        FinFn::new(sum, target, map)
    }

    fn distr(&self, parts: &[(Elem, FinSetObj)], y: &FinSetObj) -> Result<FinFn> {
        let (sx, _) = self.sum_indexed(parts);
        let dom = Self::prod(&sx, y);
        let tparts: Vec<(Elem, FinSetObj)> = parts
            .iter()
            .map(|(i, x)| (i.clone(), Self::prod(x, y)))
            .collect();
        let (cod, _) = self.sum_indexed(&tparts);
        // ((i,x),y) |-> (i,(x,y))
        Ok(FinFn::from_rule(dom, cod, |e| {
            let (ix, yv) = split_pair(e);
            let (i, x) = split_pair(&ix);
            pair_label(&i, &pair_label(&x, &yv))
        }))
    }

    fn tassoc(&self, x: &FinSetObj, y: &FinSetObj, z: &FinSetObj) -> FinFn {
        let dom = Self::prod(&Self::prod(x, y), z);
        let cod = Self::prod(x, &Self::prod(y, z));
        FinFn::from_rule(dom, cod, |e| {
            let (xy, zv) = split_pair(e);
            let (xv, yv) = split_pair(&xy);
            pair_label(&xv, &pair_label(&yv, &zv))
        })
    }

    fn lunit_m(&self, x: &FinSetObj) -> FinFn {
        let dom = Self::prod(&self.unit(), x);
        FinFn::from_rule(dom, x.clone(), |e| split_pair(e).1)
    }

    fn runit_m(&self, x: &FinSetObj) -> FinFn {
        let dom = Self::prod(x, &self.unit());
        FinFn::from_rule(dom, x.clone(), |e| split_pair(e).0)
    }

    fn unique_from(&self, src: &FinSetObj, tgt: &FinSetObj) -> Result<FinFn> {
        if !src.is_empty() {
            return Err(Error::invalid("unique_from", "source is not initial"));
        }
        Ok(FinFn::from_rule(src.clone(), tgt.clone(), |e| e.clone()))
    }

    fn pullback(&self, f: &FinFn, g: &FinFn) -> Result<Pb<FinSetObj, FinFn>> {
        let span = pullback(&CospFS::new(f.clone(), g.clone())?);
        Ok(Pb {
            apex: span.apex().clone(),
            p1: span.left,
            p2: span.right,
        })
    }

    fn pb_mediate(&self, pb: &Pb<FinSetObj, FinFn>, u: &FinFn, w: &FinFn) -> Result<FinFn> {
        let span = crate::finset::SpanFS::new(pb.p1.clone(), pb.p2.clone())?;
        crate::finset::pullback_mediator(&span, u, w)
    }

    fn invert(&self, m: &FinFn) -> Option<FinFn> {
        m.inverse()
    }

    fn hom_between(&self, a: &FinSetObj, b: &FinSetObj) -> Option<Vec<FinFn>> {
        Some(all_fns(a, b))
    }
}

/// Splits a canonical pair label `(a,b)` at the top-level comma.
pub fn split_pair(e: &Elem) -> (Elem, Elem) {
    let s = e.as_str();
    assert!(s.starts_with('(') && s.ends_with(')'), "not a pair label: {s}");
    let inner = &s[1..s.len() - 1];
    let mut depth = 0usize;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            ',' if depth == 0 => {
                return (Elem::new(&inner[..i]), Elem::new(&inner[i + 1..]));
            }
            _ => {}
        }
    }
    panic!("not a pair label: {s}");
}

/// The chain lattice `0 <= 1 <= ... <= n` with tensor `min` (unit `n`) and
/// coproduct `max` (initial `0`): a table-driven monoidal base where every
/// hom-set has at most one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainLattice {
    pub top: u32,
}

impl MonoidalBase for ChainLattice {
    type O = u32;
    /// morphisms are pairs (src, tgt) with src <= tgt
    type M = (u32, u32);

    fn dom(&self, m: &(u32, u32)) -> u32 {
        m.0
    }
    fn cod(&self, m: &(u32, u32)) -> u32 {
        m.1
    }
    fn id(&self, o: &u32) -> (u32, u32) {
        (*o, *o)
    }
    fn then(&self, f: &(u32, u32), g: &(u32, u32)) -> Result<(u32, u32)> {
        if f.1 != g.0 {
            return Err(Error::boundary("ChainLattice::then", "not composable"));
        }
        Ok((f.0, g.1))
    }

    fn unit(&self) -> u32 {
        self.top
    }
    fn initial(&self) -> u32 {
        0
    }
    fn tensor_o(&self, a: &u32, b: &u32) -> u32 {
        (*a).min(*b)
    }
    fn tensor_m(&self, f: &(u32, u32), g: &(u32, u32)) -> (u32, u32) {
        (f.0.min(g.0), f.1.min(g.1))
    }

    fn sum_indexed(&self, parts: &[(Elem, u32)]) -> (u32, BTreeMap<Elem, (u32, u32)>) {
        let total = parts.iter().map(|(_, o)| *o).max().unwrap_or(0);
        (
            total,
            parts.iter().map(|(i, o)| (i.clone(), (*o, total))).collect(),
        )
    }

    fn copair(
        &self,
        injections: &BTreeMap<Elem, (u32, u32)>,
        legs: &BTreeMap<Elem, (u32, u32)>,
    ) -> Result<(u32, u32)> {
        let sum = injections.values().map(|m| m.1).max().unwrap_or(0);
        let tgt = legs
            .values()
            .map(|m| m.1)
            .max()
            .ok_or_else(|| Error::invalid("copair", "no legs"))?;
        for leg in legs.values() {
            if leg.1 != tgt {
                return Err(Error::invalid("copair", "legs disagree on target"));
            }
        }
        if sum <= tgt {
            Ok((sum, tgt))
        } else {
            Err(Error::invalid("copair", "legs do not cover the sum"))
        }
    }

    fn distr(&self, parts: &[(Elem, u32)], y: &u32) -> Result<(u32, u32)> {
        let sx = parts.iter().map(|(_, o)| *o).max().unwrap_or(0);
        let lhs = sx.min(*y);
        let rhs = parts.iter().map(|(_, o)| (*o).min(*y)).max().unwrap_or(0);
        // distributive lattice: both sides are equal
        Ok((lhs, rhs))
    }

    fn tassoc(&self, x: &u32, y: &u32, z: &u32) -> (u32, u32) {
        let v = (*x).min(*y).min(*z);
        (v, v)
    }

    fn lunit_m(&self, x: &u32) -> (u32, u32) {
        (self.top.min(*x), *x)
    }
    fn runit_m(&self, x: &u32) -> (u32, u32) {
        ((*x).min(self.top), *x)
    }

    fn unique_from(&self, src: &u32, tgt: &u32) -> Result<(u32, u32)> {
        if src <= tgt {
            Ok((*src, *tgt))
        } else {
            Err(Error::Missing(format!("morphism {src} -> {tgt}")))
        }
    }

    fn pullback(&self, f: &(u32, u32), g: &(u32, u32)) -> Result<Pb<u32, (u32, u32)>> {
        let apex = f.0.min(g.0);
        Ok(Pb {
            apex,
            p1: (apex, f.0),
            p2: (apex, g.0),
        })
    }

    fn pb_mediate(&self, pb: &Pb<u32, (u32, u32)>, u: &(u32, u32), w: &(u32, u32)) -> Result<(u32, u32)> {
        if u.0 == w.0 && u.0 <= pb.apex {
            Ok((u.0, pb.apex))
        } else {
            Err(Error::boundary("ChainLattice::pb_mediate", "cone does not factor"))
        }
    }

    fn invert(&self, m: &(u32, u32)) -> Option<(u32, u32)> {
        (m.0 == m.1).then_some(*m)
    }

    fn hom_between(&self, a: &u32, b: &u32) -> Option<Vec<(u32, u32)>> {
        Some(if a <= b { vec![(*a, *b)] } else { vec![] })
    }
}

/// A matrix of V-objects, read as a vertical arrow `rows -|-> cols`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MatV<O> {
    pub rows: FinSetObj,
    pub cols: FinSetObj,
    pub entries: BTreeMap<(Elem, Elem), O>,
}

impl<O: Data> MatV<O> {
    pub fn entry(&self, a: &Elem, b: &Elem) -> &O {
        self.entries
            .get(&(a.clone(), b.clone()))
            .unwrap_or_else(|| panic!("matrix has no entry at ({a},{b})"))
    }
}

/// A matrix of V-morphisms over a pair of functions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MatCell<O, M> {
    pub top: FinFn,
    pub bot: FinFn,
    pub west: MatV<O>,
    pub east: MatV<O>,
    pub comps: BTreeMap<(Elem, Elem), M>,
}

/// The double category `V-Set`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDouble<V: MonoidalBase> {
    pub v: V,
}

impl<V: MonoidalBase> MatrixDouble<V> {
    pub fn new(v: V) -> Self {
        MatrixDouble { v }
    }

    pub fn mk_cell(
        &self,
        top: FinFn,
        bot: FinFn,
        west: MatV<V::O>,
        east: MatV<V::O>,
        comps: BTreeMap<(Elem, Elem), V::M>,
    ) -> Result<MatCell<V::O, V::M>> {
        for a in west.rows.elems() {
            for b in west.cols.elems() {
                let m = comps
                    .get(&(a.clone(), b.clone()))
                    .ok_or_else(|| Error::invalid("MatrixDouble::mk_cell", format!("no component at ({a},{b})")))?;
                let ok = self.v.dom(m) == *west.entry(a, b)
                    && self.v.cod(m) == *east.entry(top.apply(a), bot.apply(b));
                if !ok {
                    return Err(Error::boundary("MatrixDouble::mk_cell", format!("component ({a},{b})")));
                }
            }
        }
        Ok(MatCell {
            top,
            bot,
            west,
            east,
            comps,
        })
    }

    /// Entry label of `(M.N)[a,c]` summand at middle index `b`.
    fn mult_entry(&self, m: &MatV<V::O>, n: &MatV<V::O>, a: &Elem, c: &Elem) -> Vec<(Elem, V::O)> {
        m.cols
            .elems()
            .iter()
            .map(|b| (b.clone(), self.v.tensor_o(m.entry(a, b), n.entry(b, c))))
            .collect()
    }
}

impl<V: MonoidalBase> DoubleCat for MatrixDouble<V> {
    type Obj = FinSetObj;
    type HAr = FinFn;
    type VAr = MatV<V::O>;
    type Cell = MatCell<V::O, V::M>;

    fn h_dom(&self, h: &FinFn) -> FinSetObj {
        h.dom.clone()
    }
    fn h_cod(&self, h: &FinFn) -> FinSetObj {
        h.cod.clone()
    }
    fn v_src(&self, v: &MatV<V::O>) -> FinSetObj {
        v.rows.clone()
    }
    fn v_tgt(&self, v: &MatV<V::O>) -> FinSetObj {
        v.cols.clone()
    }

    fn cell_top(&self, c: &Self::Cell) -> FinFn {
        c.top.clone()
    }
    fn cell_bot(&self, c: &Self::Cell) -> FinFn {
        c.bot.clone()
    }
    fn cell_west(&self, c: &Self::Cell) -> MatV<V::O> {
        c.west.clone()
    }
    fn cell_east(&self, c: &Self::Cell) -> MatV<V::O> {
        c.east.clone()
    }

    fn h_id(&self, a: &FinSetObj) -> FinFn {
        FinFn::identity(a)
    }
    fn h_then(&self, f: &FinFn, g: &FinFn) -> Result<FinFn> {
        f.then(g)
    }

    fn v_id(&self, a: &FinSetObj) -> MatV<V::O> {
        let mut entries = BTreeMap::new();
        for x in a.elems() {
            for y in a.elems() {
                entries.insert(
                    (x.clone(), y.clone()),
                    if x == y { self.v.unit() } else { self.v.initial() },
                );
            }
        }
        MatV {
            rows: a.clone(),
            cols: a.clone(),
            entries,
        }
    }

    fn v_then(&self, m: &MatV<V::O>, n: &MatV<V::O>) -> Result<MatV<V::O>> {
        if m.cols != n.rows {
            return Err(Error::boundary("MatrixDouble::v_then", "index mismatch"));
        }
        let mut entries = BTreeMap::new();
        for a in m.rows.elems() {
            for c in n.cols.elems() {
                let parts = self.mult_entry(m, n, a, c);
                entries.insert((a.clone(), c.clone()), self.v.sum_indexed(&parts).0);
            }
        }
        Ok(MatV {
            rows: m.rows.clone(),
            cols: n.cols.clone(),
            entries,
        })
    }

    fn cell_h_id(&self, v: &MatV<V::O>) -> Self::Cell {
        let comps = v
            .entries
            .iter()
            .map(|(k, o)| (k.clone(), self.v.id(o)))
            .collect();
        MatCell {
            top: FinFn::identity(&v.rows),
            bot: FinFn::identity(&v.cols),
            west: v.clone(),
            east: v.clone(),
            comps,
        }
    }

    fn cell_h_then(&self, c: &Self::Cell, d: &Self::Cell) -> Result<Self::Cell> {
        if c.east != d.west {
            return Err(Error::boundary("MatrixDouble::cell_h_then", "middle matrices differ"));
        }
        let mut comps = BTreeMap::new();
        for (k, m) in &c.comps {
            let mapped = (c.top.apply(&k.0).clone(), c.bot.apply(&k.1).clone());
            comps.insert(k.clone(), self.v.then(m, &d.comps[&mapped])?);
        }
        self.mk_cell(
            c.top.then(&d.top)?,
            c.bot.then(&d.bot)?,
            c.west.clone(),
            d.east.clone(),
            comps,
        )
    }

    fn cell_v_id(&self, f: &FinFn) -> Self::Cell {
        let west = self.v_id(&f.dom);
        let east = self.v_id(&f.cod);
        let mut comps = BTreeMap::new();
        for x in f.dom.elems() {
            for y in f.dom.elems() {
                let m = if x == y {
                    self.v.id(&self.v.unit())
                } else if f.apply(x) == f.apply(y) {
                    // ! : 0 -> I
                    self.v
                        .unique_from(&self.v.initial(), &self.v.unit())
                        .expect("0 -> I")
                } else {
                    self.v.id(&self.v.initial())
                };
                comps.insert((x.clone(), y.clone()), m);
            }
        }
        MatCell {
            top: f.clone(),
            bot: f.clone(),
            west,
            east,
            comps,
        }
    }

    fn cell_v_then(&self, c: &Self::Cell, d: &Self::Cell) -> Result<Self::Cell> {
        if c.bot != d.top {
            return Err(Error::boundary("MatrixDouble::cell_v_then", "bot != top"));
        }
        let west = self.v_then(&c.west, &d.west)?;
        let east = self.v_then(&c.east, &d.east)?;
        let h = &c.bot;
        let mut comps = BTreeMap::new();
        for a in c.west.rows.elems() {
            for z in d.west.cols.elems() {
                let src_parts = self.mult_entry(&c.west, &d.west, a, z);
                let (_, src_injs) = self.v.sum_indexed(&src_parts);
                let tgt_parts =
                    self.mult_entry(&c.east, &d.east, c.top.apply(a), d.bot.apply(z));
                let (_, tgt_injs) = self.v.sum_indexed(&tgt_parts);
                let mut legs = BTreeMap::new();
                for b in c.west.cols.elems() {
                    let t = self
                        .v
                        .tensor_m(&c.comps[&(a.clone(), b.clone())], &d.comps[&(b.clone(), z.clone())]);
                    legs.insert(b.clone(), self.v.then(&t, &tgt_injs[h.apply(b)])?);
                }
                comps.insert((a.clone(), z.clone()), self.v.copair(&src_injs, &legs)?);
            }
        }
        self.mk_cell(c.top.clone(), d.bot.clone(), west, east, comps)
    }

    fn v_assoc(&self, m: &MatV<V::O>, n: &MatV<V::O>, p: &MatV<V::O>) -> Result<Self::Cell> {
        let v = &self.v;
        let mn = self.v_then(m, n)?;
        let np = self.v_then(n, p)?;
        let lhs = self.v_then(&mn, p)?;
        let rhs = self.v_then(m, &np)?;
        let mut comps = BTreeMap::new();
        for a in m.rows.elems() {
            for dd in p.cols.elems() {
                // step 1: Sum_c (S_c (x) P_cd) -> Sum_c Sum_b (T_bc (x) P_cd)
                let s_parts = self.mult_entry(&mn, p, a, dd); // indexed by c
                let (_, s_injs) = v.sum_indexed(&s_parts);
                let mut inner_sums = BTreeMap::new(); // c -> (sum obj, injs over b)
                let mut step1_legs = BTreeMap::new();
                let mut outer_parts: Vec<(Elem, V::O)> = Vec::new();
                for c in n.cols.elems() {
                    let t_parts = self.mult_entry(m, n, a, c); // indexed by b
                    let u_parts: Vec<(Elem, V::O)> = t_parts
                        .iter()
                        .map(|(b, t)| (b.clone(), v.tensor_o(t, p.entry(c, dd))))
                        .collect();
                    let (u_sum, u_injs) = v.sum_indexed(&u_parts);
                    inner_sums.insert(c.clone(), (u_sum.clone(), u_injs));
                    outer_parts.push((c.clone(), u_sum));
                }
                let (_, outer_injs) = v.sum_indexed(&outer_parts);
                for c in n.cols.elems() {
                    let t_parts = self.mult_entry(m, n, a, c);
                    let d_map = v.distr(&t_parts, p.entry(c, dd))?;
                    step1_legs.insert(c.clone(), v.then(&d_map, &outer_injs[c])?);
                }
                let step1 = v.copair(&s_injs, &step1_legs)?;

                // step 2: Sum_c Sum_b U_bc -> Sum_b Sum_c U_bc
                let mut swapped_inner: BTreeMap<Elem, (V::O, BTreeMap<Elem, V::M>)> = BTreeMap::new();
                let mut swapped_outer_parts: Vec<(Elem, V::O)> = Vec::new();
                for b in m.cols.elems() {
                    let parts: Vec<(Elem, V::O)> = n
                        .cols
                        .elems()
                        .iter()
                        .map(|c| {
                            let t = v.tensor_o(m.entry(a, b), n.entry(b, c));
                            (c.clone(), v.tensor_o(&t, p.entry(c, dd)))
                        })
                        .collect();
                    let (sum, injs) = v.sum_indexed(&parts);
                    swapped_inner.insert(b.clone(), (sum.clone(), injs));
                    swapped_outer_parts.push((b.clone(), sum));
                }
                let (_, swapped_outer_injs) = v.sum_indexed(&swapped_outer_parts);
                let mut step2_legs = BTreeMap::new();
                for c in n.cols.elems() {
                    let (_, u_injs) = &inner_sums[c];
                    let mut inner_legs = BTreeMap::new();
                    for b in m.cols.elems() {
                        let via = v.then(&swapped_inner[b].1[c], &swapped_outer_injs[b])?;
                        inner_legs.insert(b.clone(), via);
                    }
                    step2_legs.insert(c.clone(), v.copair(u_injs, &inner_legs)?);
                }
                let step2 = v.copair(&outer_injs, &step2_legs)?;

                // steps 3+4 per b: Sum_c (M(x)N)(x)P -> M (x) Sum_c N(x)P
                let rhs_parts = self.mult_entry(m, &np, a, dd); // indexed by b
                let (_, rhs_injs) = v.sum_indexed(&rhs_parts);
                let mut step34_legs = BTreeMap::new();
                for b in m.cols.elems() {
                    let q_parts: Vec<(Elem, V::O)> = n
                        .cols
                        .elems()
                        .iter()
                        .map(|c| (c.clone(), v.tensor_o(n.entry(b, c), p.entry(c, dd))))
                        .collect();
                    let (_, q_injs) = v.sum_indexed(&q_parts);
                    let (_, sw_injs) = &swapped_inner[b];
                    let mut legs = BTreeMap::new();
                    for c in n.cols.elems() {
                        let ta = v.tassoc(m.entry(a, b), n.entry(b, c), p.entry(c, dd));
                        let lift = v.tensor_m(&v.id(m.entry(a, b)), &q_injs[c]);
                        legs.insert(c.clone(), v.then(&ta, &lift)?);
                    }
                    let col = v.copair(sw_injs, &legs)?;
                    step34_legs.insert(b.clone(), v.then(&col, &rhs_injs[b])?);
                }
                let step34 = v.copair(&swapped_outer_injs, &step34_legs)?;

                let total = v.then(&v.then(&step1, &step2)?, &step34)?;
                comps.insert((a.clone(), dd.clone()), total);
            }
        }
        self.mk_cell(
            FinFn::identity(&m.rows),
            FinFn::identity(&p.cols),
            lhs,
            rhs,
            comps,
        )
    }

    fn v_lunit(&self, mat: &MatV<V::O>) -> Self::Cell {
        let v = &self.v;
        let composed = self.v_then(&self.v_id(&mat.rows), mat).expect("lunit");
        let mut comps = BTreeMap::new();
        for a in mat.rows.elems() {
            for c in mat.cols.elems() {
                let idm = self.v_id(&mat.rows);
                let parts = self.mult_entry(&idm, mat, a, c);
                let (_, injs) = v.sum_indexed(&parts);
                let mut legs = BTreeMap::new();
                for a2 in mat.rows.elems() {
                    let leg = if a2 == a {
                        v.lunit_m(mat.entry(a, c))
                    } else {
                        let src = v.tensor_o(&v.initial(), mat.entry(a2, c));
                        v.unique_from(&src, mat.entry(a, c)).expect("0 (x) X -> X")
                    };
                    legs.insert(a2.clone(), leg);
                }
                comps.insert((a.clone(), c.clone()), v.copair(&injs, &legs).expect("lunit copair"));
            }
        }
        MatCell {
            top: FinFn::identity(&mat.rows),
            bot: FinFn::identity(&mat.cols),
            west: composed,
            east: mat.clone(),
            comps,
        }
    }

    fn v_runit(&self, mat: &MatV<V::O>) -> Self::Cell {
        let v = &self.v;
        let composed = self.v_then(mat, &self.v_id(&mat.cols)).expect("runit");
        let mut comps = BTreeMap::new();
        for a in mat.rows.elems() {
            for c in mat.cols.elems() {
                let idm = self.v_id(&mat.cols);
                let parts = self.mult_entry(mat, &idm, a, c);
                let (_, injs) = v.sum_indexed(&parts);
                let mut legs = BTreeMap::new();
                for c2 in mat.cols.elems() {
                    let leg = if c2 == c {
                        v.runit_m(mat.entry(a, c))
                    } else {
                        let src = v.tensor_o(mat.entry(a, c2), &v.initial());
                        v.unique_from(&src, mat.entry(a, c)).expect("X (x) 0 -> X")
                    };
                    legs.insert(c2.clone(), leg);
                }
                comps.insert((a.clone(), c.clone()), v.copair(&injs, &legs).expect("runit copair"));
            }
        }
        MatCell {
            top: FinFn::identity(&mat.rows),
            bot: FinFn::identity(&mat.cols),
            west: composed,
            east: mat.clone(),
            comps,
        }
    }

    fn cell_invert(&self, c: &Self::Cell) -> Option<Self::Cell> {
        let top = c.top.inverse()?;
        let bot = c.bot.inverse()?;
        let mut comps = BTreeMap::new();
        for (k, m) in &c.comps {
            let inv = self.v.invert(m)?;
            comps.insert((c.top.apply(&k.0).clone(), c.bot.apply(&k.1).clone()), inv);
        }
        Some(MatCell {
            top,
            bot,
            west: c.east.clone(),
            east: c.west.clone(),
            comps,
        })
    }

    fn cells_constrained(
        &self,
        west: &MatV<V::O>,
        east: &MatV<V::O>,
        top: Option<&FinFn>,
        bot: Option<&FinFn>,
    ) -> Option<Vec<Self::Cell>> {
        let tops = match top {
            Some(t) => vec![t.clone()],
            None => all_fns(&west.rows, &east.rows),
        };
        let bots = match bot {
            Some(b) => vec![b.clone()],
            None => all_fns(&west.cols, &east.cols),
        };
        let mut out = Vec::new();
        for t in &tops {
            for b in &bots {
                // per-entry choices of V-morphisms
                let keys: Vec<(Elem, Elem)> = west.entries.keys().cloned().collect();
                let mut choice_sets = Vec::new();
                for (a, bb) in &keys {
                    let homs = self
                        .v
                        .hom_between(west.entry(a, bb), east.entry(t.apply(a), b.apply(bb)))?;
                    choice_sets.push(homs);
                }
                let mut stack: Vec<Vec<V::M>> = vec![vec![]];
                for set in &choice_sets {
                    let mut next = Vec::new();
                    for partial in &stack {
                        for m in set {
                            let mut p = partial.clone();
                            p.push(m.clone());
                            next.push(p);
                        }
                    }
                    stack = next;
                }
                for assign in stack {
                    let comps: BTreeMap<(Elem, Elem), V::M> =
                        keys.iter().cloned().zip(assign).collect();
                    if let Ok(cell) = self.mk_cell(t.clone(), b.clone(), west.clone(), east.clone(), comps) {
                        out.push(cell);
                    }
                }
            }
        }
        Some(out)
    }

    fn h_invert(&self, f: &FinFn) -> Option<FinFn> {
        f.inverse()
    }

    fn hars_between(&self, a: &FinSetObj, b: &FinSetObj) -> Option<Vec<FinFn>> {
        Some(all_fns(a, b))
    }
}

impl<V: MonoidalBase> super::HasPullbacks for MatrixDouble<V> {
    fn pb_har(&self, f: &FinFn, g: &FinFn) -> Result<Pb<FinSetObj, FinFn>> {
        let span = pullback(&CospFS::new(f.clone(), g.clone())?);
        Ok(Pb {
            apex: span.apex().clone(),
            p1: span.left,
            p2: span.right,
        })
    }

    fn pb_har_mediate(&self, pb: &Pb<FinSetObj, FinFn>, u: &FinFn, w: &FinFn) -> Result<FinFn> {
        let span = crate::finset::SpanFS::new(pb.p1.clone(), pb.p2.clone())?;
        crate::finset::pullback_mediator(&span, u, w)
    }

    fn pb_cell(&self, x: &Self::Cell, y: &Self::Cell) -> Result<Pb<MatV<V::O>, Self::Cell>> {
        if x.east != y.east {
            return Err(Error::boundary("MatrixDouble::pb_cell", "cospan targets differ"));
        }
        let rows = self.pb_har(&x.top, &y.top)?;
        let cols = self.pb_har(&x.bot, &y.bot)?;
        let mut entries = BTreeMap::new();
        let mut comps1 = BTreeMap::new();
        let mut comps2 = BTreeMap::new();
        for r in rows.apex.elems() {
            let (a1, a2) = split_pair(r);
            for c in cols.apex.elems() {
                let (b1, b2) = split_pair(c);
                let e1 = &x.comps[&(a1.clone(), b1.clone())];
                let e2 = &y.comps[&(a2.clone(), b2.clone())];
                let pb = self.v.pullback(e1, e2)?;
                entries.insert((r.clone(), c.clone()), pb.apex.clone());
                comps1.insert((r.clone(), c.clone()), pb.p1);
                comps2.insert((r.clone(), c.clone()), pb.p2);
            }
        }
        let apex = MatV {
            rows: rows.apex.clone(),
            cols: cols.apex.clone(),
            entries,
        };
        let p1 = self.mk_cell(rows.p1.clone(), cols.p1.clone(), apex.clone(), x.west.clone(), comps1)?;
        let p2 = self.mk_cell(rows.p2.clone(), cols.p2.clone(), apex.clone(), y.west.clone(), comps2)?;
        Ok(Pb { apex, p1, p2 })
    }

    fn pb_cell_mediate(&self, pb: &Pb<MatV<V::O>, Self::Cell>, c1: &Self::Cell, c2: &Self::Cell) -> Result<Self::Cell> {
        let top = self.pb_har_mediate(
            &Pb {
                apex: pb.apex.rows.clone(),
                p1: pb.p1.top.clone(),
                p2: pb.p2.top.clone(),
            },
            &c1.top,
            &c2.top,
        )?;
        let bot = self.pb_har_mediate(
            &Pb {
                apex: pb.apex.cols.clone(),
                p1: pb.p1.bot.clone(),
                p2: pb.p2.bot.clone(),
            },
            &c1.bot,
            &c2.bot,
        )?;
        let mut comps = BTreeMap::new();
        for (k, m1) in &c1.comps {
            let r = top.apply(&k.0).clone();
            let c = bot.apply(&k.1).clone();
            let target = Pb {
                apex: pb.apex.entry(&r, &c).clone(),
                p1: pb.p1.comps[&(r.clone(), c.clone())].clone(),
                p2: pb.p2.comps[&(r.clone(), c.clone())].clone(),
            };
            let med = self.v.pb_mediate(&target, m1, &c2.comps[k])?;
            comps.insert(k.clone(), med);
        }
        self.mk_cell(top, bot, c1.west.clone(), pb.apex.clone(), comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::{check_double_laws, DblProbes};

    fn fs(labels: &[&str]) -> FinSetObj {
        FinSetObj::from_labels(labels.iter().copied())
    }

    #[test]
    fn identity_matrix_entries() {
        let dd = MatrixDouble::new(FinSetCartesian);
        let id = dd.v_id(&fs(&["x", "y"]));
        assert_eq!(id.entry(&Elem::from("x"), &Elem::from("x")).len(), 1);
        assert_eq!(id.entry(&Elem::from("x"), &Elem::from("y")).len(), 0);
    }

    #[test]
    fn one_by_one_matrices_multiply_as_tensor() {
        let dd = MatrixDouble::new(FinSetCartesian);
        let pt = FinSetObj::point();
        let star = Elem::from("*");
        let m = MatV {
            rows: pt.clone(),
            cols: pt.clone(),
            entries: BTreeMap::from([((star.clone(), star.clone()), fs(&["a", "b"])) ]),
        };
        let n = MatV {
            rows: pt.clone(),
            cols: pt.clone(),
            entries: BTreeMap::from([((star.clone(), star.clone()), fs(&["u", "v", "w"])) ]),
        };
        let prod = dd.v_then(&m, &n).unwrap();
        assert_eq!(prod.entry(&star, &star).len(), 6);
    }

    #[test]
    fn rectangular_multiplication_counts() {
        let dd = MatrixDouble::new(FinSetCartesian);
        let a = fs(&["a0", "a1"]);
        let b = fs(&["b0", "b1"]);
        let c = fs(&["c0"]);
        let mut me = BTreeMap::new();
        for (i, x) in a.elems().iter().enumerate() {
            for (j, y) in b.elems().iter().enumerate() {
                let labels: Vec<String> = (0..i + j + 1).map(|k| format!("e{k}")).collect();
                me.insert((x.clone(), y.clone()), FinSetObj::from_labels(labels));
            }
        }
        let m = MatV { rows: a, cols: b.clone(), entries: me };
        let mut ne = BTreeMap::new();
        for y in b.elems() {
            ne.insert((y.clone(), c.elems()[0].clone()), fs(&["z0", "z1"]));
        }
        let n = MatV { rows: b, cols: c, entries: ne };
        let prod = dd.v_then(&m, &n).unwrap();
        // entry (a_i, c0) = sum_b |M[a_i,b]| * 2
        assert_eq!(prod.entry(&Elem::from("a0"), &Elem::from("c0")).len(), (1 + 2) * 2);
        assert_eq!(prod.entry(&Elem::from("a1"), &Elem::from("c0")).len(), (2 + 3) * 2);
    }

    #[test]
    fn matrix_double_laws_on_probes() {
        let dd = MatrixDouble::new(FinSetCartesian);
        let a = fs(&["x", "y"]);
        let b = fs(&["u"]);
        let m = MatV {
            rows: a.clone(),
            cols: b.clone(),
            entries: BTreeMap::from([
                ((Elem::from("x"), Elem::from("u")), fs(&["p"])),
                ((Elem::from("y"), Elem::from("u")), fs(&["q", "r"])),
            ]),
        };
        let idb = dd.v_id(&b);
        let f = FinFn::constant(a.clone(), b.clone(), Elem::from("u"));
        let cell = dd.cell_v_id(&f);
        let probes = DblProbes::<MatrixDouble<FinSetCartesian>> {
            objs: vec![a.clone(), b.clone()],
            hars: vec![FinFn::identity(&a), f.clone()],
            vars: vec![m.clone(), idb.clone(), dd.v_id(&a)],
            cells: vec![cell, dd.cell_h_id(&m)],
        };
        let report = check_double_laws(&dd, &probes);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn chain_lattice_matrix_laws() {
        let dd = MatrixDouble::new(ChainLattice { top: 3 });
        let a = fs(&["x", "y"]);
        let b = fs(&["u"]);
        let m = MatV {
            rows: a.clone(),
            cols: b.clone(),
            entries: BTreeMap::from([
                ((Elem::from("x"), Elem::from("u")), 2u32),
                ((Elem::from("y"), Elem::from("u")), 3u32),
            ]),
        };
        let probes = DblProbes::<MatrixDouble<ChainLattice>> {
            objs: vec![a.clone(), b.clone()],
            hars: vec![FinFn::identity(&a)],
            vars: vec![m.clone(), dd.v_id(&a), dd.v_id(&b)],
            cells: vec![dd.cell_h_id(&m)],
        };
        let report = check_double_laws(&dd, &probes);
        assert!(report.passed(), "{report}");
    }
}
