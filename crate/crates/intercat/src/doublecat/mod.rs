//! Weak double categories as pseudocategory data, the four instance builders
//! (spans, cospans, matrices, categories-and-profunctors), and the chosen
//! pullback/pushout structure with the comparison cell gamma.
//!
//! Conventions. A double category here is strict in the horizontal direction
//! and weak in the vertical one. A cell has a `top` and `bot` horizontal
//! arrow and a `west` and `east` vertical arrow; as a morphism of the
//! category `A1` (objects: vertical arrows, morphisms: cells, composition:
//! horizontal pasting) a cell goes from its west to its east boundary.
//! Composition is written diagrammatically everywhere: `then(f, g)` is `f`
//! followed by `g`.

pub mod base;
pub mod cat;
pub mod cosp;
pub mod findbl;
pub mod matrix;
pub mod span;

pub use base::{CompCat, Data, FinSetCat, Pb, Po, TableCat};
pub use cat::CatDouble;
pub use cosp::CospDouble;
pub use findbl::FinDblData;
pub use matrix::{ChainLattice, FinSetCartesian, MatrixDouble, MonoidalBase};
pub use span::SpanDouble;

use crate::core::report::LawReport;
use crate::Result;

/// A weak double category: strict horizontal composition, vertical
/// composition associative and unital up to the provided invertible special
/// cells.
pub trait DoubleCat {
    type Obj: Data;
    type HAr: Data;
    type VAr: Data;
    type Cell: Data;

    fn h_dom(&self, h: &Self::HAr) -> Self::Obj;
    fn h_cod(&self, h: &Self::HAr) -> Self::Obj;
    fn v_src(&self, v: &Self::VAr) -> Self::Obj;
    fn v_tgt(&self, v: &Self::VAr) -> Self::Obj;

    fn cell_top(&self, c: &Self::Cell) -> Self::HAr;
    fn cell_bot(&self, c: &Self::Cell) -> Self::HAr;
    fn cell_west(&self, c: &Self::Cell) -> Self::VAr;
    fn cell_east(&self, c: &Self::Cell) -> Self::VAr;

    fn h_id(&self, a: &Self::Obj) -> Self::HAr;
    fn h_then(&self, f: &Self::HAr, g: &Self::HAr) -> Result<Self::HAr>;

    fn v_id(&self, a: &Self::Obj) -> Self::VAr;
    fn v_then(&self, u: &Self::VAr, w: &Self::VAr) -> Result<Self::VAr>;

    /// Identity cell of the object `v` in `A1`.
    fn cell_h_id(&self, v: &Self::VAr) -> Self::Cell;
    /// Horizontal pasting: `c : u -> v` then `d : v -> w` in `A1`.
    fn cell_h_then(&self, c: &Self::Cell, d: &Self::Cell) -> Result<Self::Cell>;

    /// Vertical identity cell on a horizontal arrow.
    fn cell_v_id(&self, f: &Self::HAr) -> Self::Cell;
    /// Vertical pasting: `c` above `d` (`bot c = top d`).
    fn cell_v_then(&self, c: &Self::Cell, d: &Self::Cell) -> Result<Self::Cell>;

    /// Invertible special cell `(u . v) . w -> u . (v . w)`.
    fn v_assoc(&self, u: &Self::VAr, v: &Self::VAr, w: &Self::VAr) -> Result<Self::Cell>;
    /// Invertible special cell `Id_src . v -> v`.
    fn v_lunit(&self, v: &Self::VAr) -> Self::Cell;
    /// Invertible special cell `v . Id_tgt -> v`.
    fn v_runit(&self, v: &Self::VAr) -> Self::Cell;

    /// Inverse of an invertible cell in `A1`, when the instance can compute
    /// one.
    fn cell_invert(&self, c: &Self::Cell) -> Option<Self::Cell>;

    /// A cell is special when its top and bottom are horizontal identities.
    fn is_special(&self, c: &Self::Cell) -> bool {
        let t = self.cell_top(c);
        let b = self.cell_bot(c);
        t == self.h_id(&self.h_dom(&t)) && b == self.h_id(&self.h_dom(&b))
    }

    /// Enumerates cells with the given west/east boundary and optional
    /// top/bottom constraints; `None` when the instance is not enumerable.
    fn cells_constrained(
        &self,
        west: &Self::VAr,
        east: &Self::VAr,
        top: Option<&Self::HAr>,
        bot: Option<&Self::HAr>,
    ) -> Option<Vec<Self::Cell>>;

    /// Inverse of a horizontal arrow, when invertible and computable.
    fn h_invert(&self, f: &Self::HAr) -> Option<Self::HAr>;

    /// All horizontal arrows between two objects, when enumerable.
    fn hars_between(&self, a: &Self::Obj, b: &Self::Obj) -> Option<Vec<Self::HAr>>;
}

/// A compatible choice of pullbacks in `A0` (objects and horizontal arrows)
/// and in `A1` (vertical arrows and cells), as required by the span
/// construction.
pub trait HasPullbacks: DoubleCat {
    /// Chosen pullback in `A0`.
    fn pb_har(&self, f: &Self::HAr, g: &Self::HAr) -> Result<Pb<Self::Obj, Self::HAr>>;
    fn pb_har_mediate(
        &self,
        pb: &Pb<Self::Obj, Self::HAr>,
        u: &Self::HAr,
        w: &Self::HAr,
    ) -> Result<Self::HAr>;

    /// Chosen pullback in `A1` of the cospan of cells `x : v -> z <- w : y`.
    fn pb_cell(&self, x: &Self::Cell, y: &Self::Cell) -> Result<Pb<Self::VAr, Self::Cell>>;
    fn pb_cell_mediate(
        &self,
        pb: &Pb<Self::VAr, Self::Cell>,
        c1: &Self::Cell,
        c2: &Self::Cell,
    ) -> Result<Self::Cell>;
}

/// Dual structure for the cospan construction: chosen pushouts in `A0` and
/// `A1`.
pub trait HasPushouts: DoubleCat {
    fn po_har(&self, f: &Self::HAr, g: &Self::HAr) -> Result<Po<Self::Obj, Self::HAr>>;
    fn po_har_mediate(
        &self,
        src: (&Self::HAr, &Self::HAr),
        po: &Po<Self::Obj, Self::HAr>,
        u: &Self::HAr,
        w: &Self::HAr,
    ) -> Result<Self::HAr>;

    /// Chosen pushout in `A1` of the span of cells `x : z -> v`, `y : z -> w`.
    fn po_cell(&self, x: &Self::Cell, y: &Self::Cell) -> Result<Po<Self::VAr, Self::Cell>>;
    fn po_cell_mediate(
        &self,
        src: (&Self::Cell, &Self::Cell),
        po: &Po<Self::VAr, Self::Cell>,
        c1: &Self::Cell,
        c2: &Self::Cell,
    ) -> Result<Self::Cell>;
}

/// Probe data for the double category law suite.
#[derive(Debug, Clone, Default)]
pub struct DblProbes<D: DoubleCat> {
    pub objs: Vec<D::Obj>,
    pub hars: Vec<D::HAr>,
    pub vars: Vec<D::VAr>,
    pub cells: Vec<D::Cell>,
}

fn short(s: String) -> String {
    if s.len() > 120 {
        format!("{}…", &s[..s.char_indices().take_while(|(i, _)| *i < 117).map(|(i, c)| i + c.len_utf8()).last().unwrap_or(117)])
    } else {
        s
    }
}

/// Exhaustive double-category law suite over the given probes: boundary
/// bookkeeping, strict horizontal laws, weak vertical laws with coherent
/// associator and unitors (invertibility, naturality, triangle and pentagon),
/// functoriality of vertical pasting, and the interchange of the two cell
/// compositions.
pub fn check_double_laws<D: DoubleCat>(d: &D, probes: &DblProbes<D>) -> LawReport {
    let mut r = LawReport::new();
    let pr = |x: &dyn std::fmt::Debug| short(format!("{x:?}"));

    for h in &probes.hars {
        let idc = d.cell_v_id(h);
        r.check("dbl.vid.boundary", pr(h), d.cell_top(&idc) == *h && d.cell_bot(&idc) == *h);
    }
    for v in &probes.vars {
        let idc = d.cell_h_id(v);
        r.check(
            "dbl.hid.boundary",
            pr(v),
            d.cell_west(&idc) == *v && d.cell_east(&idc) == *v && d.is_special(&idc),
        );
    }

    // strict horizontal category on arrows
    for f in &probes.hars {
        let l = d.h_then(&d.h_id(&d.h_dom(f)), f).unwrap();
        let rr = d.h_then(f, &d.h_id(&d.h_cod(f))).unwrap();
        r.check("dbl.h.unit", pr(f), l == *f && rr == *f);
    }
    for f in &probes.hars {
        for g in &probes.hars {
            if d.h_cod(f) != d.h_dom(g) {
                continue;
            }
            for h in &probes.hars {
                if d.h_cod(g) != d.h_dom(h) {
                    continue;
                }
                let lhs = d.h_then(&d.h_then(f, g).unwrap(), h).unwrap();
                let rhs = d.h_then(f, &d.h_then(g, h).unwrap()).unwrap();
                r.check("dbl.h.assoc", short(format!("{f:?};{g:?};{h:?}")), lhs == rhs);
            }
        }
    }

    // A1 is a strict category under horizontal pasting
    for c in &probes.cells {
        let l = d.cell_h_then(&d.cell_h_id(&d.cell_west(c)), c).unwrap();
        let rr = d.cell_h_then(c, &d.cell_h_id(&d.cell_east(c))).unwrap();
        r.check("dbl.cell.h.unit", pr(c), l == *c && rr == *c);
    }
    let hpairs: Vec<(&D::Cell, &D::Cell)> = probes
        .cells
        .iter()
        .flat_map(|c| {
            probes
                .cells
                .iter()
                .filter(move |e| d.cell_east(c) == d.cell_west(e))
                .map(move |e| (c, e))
        })
        .collect();
    for (c, e) in &hpairs {
        for f in &probes.cells {
            if d.cell_east(e) != d.cell_west(f) {
                continue;
            }
            let lhs = d.cell_h_then(&d.cell_h_then(c, e).unwrap(), f).unwrap();
            let rhs = d.cell_h_then(c, &d.cell_h_then(e, f).unwrap()).unwrap();
            r.check("dbl.cell.h.assoc", short(format!("{c:?};{e:?};{f:?}")), lhs == rhs);
        }
    }

    // vertical identities are functorial along horizontal composition
    for f in &probes.hars {
        for g in &probes.hars {
            if d.h_cod(f) != d.h_dom(g) {
                continue;
            }
            let lhs = d.cell_v_id(&d.h_then(f, g).unwrap());
            let rhs = d.cell_h_then(&d.cell_v_id(f), &d.cell_v_id(g)).unwrap();
            r.check("dbl.vid.functorial", short(format!("{f:?};{g:?}")), lhs == rhs);
        }
    }

    // vertical pasting is functorial: identities and interchange
    let vpairs: Vec<(&D::Cell, &D::Cell)> = probes
        .cells
        .iter()
        .flat_map(|c| {
            probes
                .cells
                .iter()
                .filter(move |e| d.cell_bot(c) == d.cell_top(e))
                .map(move |e| (c, e))
        })
        .collect();
    for v in &probes.vars {
        for w in &probes.vars {
            if d.v_tgt(v) != d.v_src(w) {
                continue;
            }
            let lhs = d.cell_v_then(&d.cell_h_id(v), &d.cell_h_id(w)).unwrap();
            let rhs = d.cell_h_id(&d.v_then(v, w).unwrap());
            r.check("dbl.hid.multiplicative", short(format!("{v:?}/{w:?}")), lhs == rhs);
        }
    }
    for (c, e) in &vpairs {
        for (c2, e2) in &vpairs {
            if d.cell_east(c) != d.cell_west(c2) || d.cell_east(e) != d.cell_west(e2) {
                continue;
            }
            // (c/e) then (c2/e2) horizontally vs (c;c2)/(e;e2)
            let Ok(left) = d.cell_v_then(c, e) else { continue };
            let Ok(right) = d.cell_v_then(c2, e2) else { continue };
            let Ok(lhs) = d.cell_h_then(&left, &right) else { continue };
            let top = d.cell_h_then(c, c2).unwrap();
            let bot = d.cell_h_then(e, e2).unwrap();
            let rhs = d.cell_v_then(&top, &bot).unwrap();
            r.check("dbl.interchange", short(format!("{c:?}|{c2:?}/{e:?}|{e2:?}")), lhs == rhs);
        }
    }

    // weak vertical structure: unitors and associator are invertible special
    // cells with the right boundaries, natural, and coherent
    for v in &probes.vars {
        let lu = d.v_lunit(v);
        let idv = d.v_then(&d.v_id(&d.v_src(v)), v).unwrap();
        let okb = d.cell_west(&lu) == idv && d.cell_east(&lu) == *v && d.is_special(&lu);
        r.check("dbl.lunit.boundary", pr(v), okb);
        let ru = d.v_runit(v);
        let idv2 = d.v_then(v, &d.v_id(&d.v_tgt(v))).unwrap();
        r.check(
            "dbl.runit.boundary",
            pr(v),
            d.cell_west(&ru) == idv2 && d.cell_east(&ru) == *v && d.is_special(&ru),
        );
        for (name, cell) in [("dbl.lunit.invertible", &lu), ("dbl.runit.invertible", &ru)] {
            match d.cell_invert(cell) {
                None => r.record(name, pr(v), false, "no inverse"),
                Some(inv) => {
                    let lr = d.cell_h_then(cell, &inv).unwrap();
                    let rl = d.cell_h_then(&inv, cell).unwrap();
                    let ok = lr == d.cell_h_id(&d.cell_west(cell)) && rl == d.cell_h_id(&d.cell_east(cell));
                    r.check(name, pr(v), ok);
                }
            }
        }
    }
    let vtriples: Vec<(&D::VAr, &D::VAr, &D::VAr)> = probes
        .vars
        .iter()
        .flat_map(|u| {
            probes.vars.iter().flat_map(move |v| {
                probes
                    .vars
                    .iter()
                    .filter(move |w| d.v_tgt(u) == d.v_src(v) && d.v_tgt(v) == d.v_src(*w))
                    .map(move |w| (u, v, w))
            })
        })
        .collect();
    for (u, v, w) in &vtriples {
        let a = d.v_assoc(u, v, w).unwrap();
        let lhs_v = d.v_then(&d.v_then(u, v).unwrap(), w).unwrap();
        let rhs_v = d.v_then(u, &d.v_then(v, w).unwrap()).unwrap();
        let okb = d.cell_west(&a) == lhs_v && d.cell_east(&a) == rhs_v && d.is_special(&a);
        r.check("dbl.assoc.boundary", short(format!("{u:?}/{v:?}/{w:?}")), okb);
        match d.cell_invert(&a) {
            None => r.record("dbl.assoc.invertible", short(format!("{u:?}/{v:?}/{w:?}")), false, "no inverse"),
            Some(inv) => {
                let ok = d.cell_h_then(&a, &inv).unwrap() == d.cell_h_id(&lhs_v)
                    && d.cell_h_then(&inv, &a).unwrap() == d.cell_h_id(&rhs_v);
                r.check("dbl.assoc.invertible", short(format!("{u:?}/{v:?}/{w:?}")), ok);
            }
        }
    }
    // triangle: (u . Id) . v -a-> u . (Id . v), then u . lunit, equals runit . v
    for u in &probes.vars {
        for v in &probes.vars {
            if d.v_tgt(u) != d.v_src(v) {
                continue;
            }
            let mid = d.v_id(&d.v_tgt(u));
            let a = d.v_assoc(u, &mid, v).unwrap();
            let lhs = d
                .cell_h_then(&a, &d.cell_v_then(&d.cell_h_id(u), &d.v_lunit(v)).unwrap())
                .unwrap();
            let rhs = d.cell_v_then(&d.v_runit(u), &d.cell_h_id(v)).unwrap();
            r.check("dbl.triangle", short(format!("{u:?}/{v:?}")), lhs == rhs);
        }
    }
    // pentagon
    for (u, v, w) in &vtriples {
        for x in &probes.vars {
            if d.v_tgt(*w) != d.v_src(x) {
                continue;
            }
            let uv = d.v_then(u, v).unwrap();
            let wx = d.v_then(w, x).unwrap();
            let path1 = {
                let s1 = d.v_assoc(&uv, w, x).unwrap();
                let s2 = d.v_assoc(u, v, &wx).unwrap();
                d.cell_h_then(&s1, &s2).unwrap()
            };
            let path2 = {
                let s1 = d.cell_v_then(&d.v_assoc(u, v, w).unwrap(), &d.cell_h_id(x)).unwrap();
                let vw = d.v_then(v, w).unwrap();
                let s2 = d.v_assoc(u, &vw, x).unwrap();
                let s3 = d.cell_v_then(&d.cell_h_id(u), &d.v_assoc(v, w, x).unwrap()).unwrap();
                d.cell_h_then(&d.cell_h_then(&s1, &s2).unwrap(), &s3).unwrap()
            };
            r.check("dbl.pentagon", short(format!("{u:?}/{v:?}/{w:?}/{x:?}")), path1 == path2);
        }
    }
    // naturality of the unitors in A1
    for c in &probes.cells {
        let (v, w) = (d.cell_west(c), d.cell_east(c));
        let lhs = d.cell_h_then(&d.v_lunit(&v), c).unwrap();
        let image = d.cell_v_then(&d.cell_v_id(&d.cell_top(c)), c).unwrap();
        let rhs = d.cell_h_then(&image, &d.v_lunit(&w)).unwrap();
        r.check("dbl.lunit.natural", pr(c), lhs == rhs);
        let lhs2 = d.cell_h_then(&d.v_runit(&v), c).unwrap();
        let image2 = d.cell_v_then(c, &d.cell_v_id(&d.cell_bot(c))).unwrap();
        let rhs2 = d.cell_h_then(&image2, &d.v_runit(&w)).unwrap();
        r.check("dbl.runit.natural", pr(c), lhs2 == rhs2);
    }
    // naturality of the associator
    for (c, e) in &vpairs {
        for f in &probes.cells {
            if d.cell_bot(e) != d.cell_top(f) {
                continue;
            }
            let a_src = d
                .v_assoc(&d.cell_west(c), &d.cell_west(e), &d.cell_west(f))
                .unwrap();
            let a_tgt = d
                .v_assoc(&d.cell_east(c), &d.cell_east(e), &d.cell_east(f))
                .unwrap();
            let lhs = d
                .cell_h_then(&a_src, &d.cell_v_then(c, &d.cell_v_then(e, f).unwrap()).unwrap())
                .unwrap();
            let rhs = d
                .cell_h_then(&d.cell_v_then(&d.cell_v_then(c, e).unwrap(), f).unwrap(), &a_tgt)
                .unwrap();
            r.check("dbl.assoc.natural", short(format!("{c:?}/{e:?}/{f:?}")), lhs == rhs);
        }
    }
    r
}

/// The chosen-pullback structure of a double category, with the normality
/// verdict and a builder for the comparison cell gamma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PullbackInfo {
    /// True when the chosen `A1` pullback of vertical identity cells is the
    /// vertical identity of the chosen `A0` pullback.
    pub normal: bool,
}

/// Verifies on probes that the chosen pullbacks commute with the boundary
/// functors (`A0` choice = boundaries of the `A1` choice), decides
/// normality, and reports gamma's boundary on composable probe pairs.
pub fn pullback_structure<D: HasPullbacks>(d: &D, probes: &DblProbes<D>) -> (PullbackInfo, LawReport) {
    let mut r = LawReport::new();
    let mut normal = true;
    let cospans: Vec<(&D::Cell, &D::Cell)> = probes
        .cells
        .iter()
        .flat_map(|x| {
            probes
                .cells
                .iter()
                .filter(move |y| d.cell_east(x) == d.cell_east(*y))
                .map(move |y| (x, y))
        })
        .collect();
    for (x, y) in &cospans {
        let Ok(pb) = d.pb_cell(x, y) else {
            r.record("pbstruct.exists", short(format!("{x:?},{y:?}")), false, "A1 pullback missing");
            continue;
        };
        // boundary compatibility on the nose
        let top = d.pb_har(&d.cell_top(x), &d.cell_top(y)).unwrap();
        let bot = d.pb_har(&d.cell_bot(x), &d.cell_bot(y)).unwrap();
        let ok = d.v_src(&pb.apex) == top.apex
            && d.v_tgt(&pb.apex) == bot.apex
            && d.cell_top(&pb.p1) == top.p1
            && d.cell_top(&pb.p2) == top.p2
            && d.cell_bot(&pb.p1) == bot.p1
            && d.cell_bot(&pb.p2) == bot.p2;
        r.check("pbstruct.boundary", short(format!("{x:?},{y:?}")), ok);
    }
    // normality on probe cospans of horizontal arrows
    for f in &probes.hars {
        for g in &probes.hars {
            if d.h_cod(f) != d.h_cod(g) {
                continue;
            }
            let Ok(pb0) = d.pb_har(f, g) else { continue };
            let Ok(pb1) = d.pb_cell(&d.cell_v_id(f), &d.cell_v_id(g)) else { continue };
            let is_normal = pb1.apex == d.v_id(&pb0.apex)
                && pb1.p1 == d.cell_v_id(&pb0.p1)
                && pb1.p2 == d.cell_v_id(&pb0.p2);
            if !is_normal {
                normal = false;
            }
            r.record(
                "pbstruct.normal",
                short(format!("{f:?},{g:?}")),
                true,
                if is_normal { "id-pullback collapses" } else { "id-pullback does not collapse" },
            );
        }
    }
    (PullbackInfo { normal }, r)
}

/// The universally given comparison cell
/// `gamma : (v1 x_{v2} w1) . (x1 x_{x2} y1) -> (v1.x1) x_{v2.x2} (w1.y1)`,
/// built from the mediator of the codomain pullback. Arguments: `xi : v1 ->
/// v2`, `up : w1 -> v2` (a cospan in `A1`), and below them `xib : x1 -> x2`,
/// `upb : y1 -> x2`, vertically composable.
pub fn gamma<D: HasPullbacks>(
    d: &D,
    xi: &D::Cell,
    up: &D::Cell,
    xib: &D::Cell,
    upb: &D::Cell,
) -> Result<D::Cell> {
    let top_pb = d.pb_cell(xi, up)?;
    let bot_pb = d.pb_cell(xib, upb)?;
    let composed = d.pb_cell(&d.cell_v_then(xi, xib)?, &d.cell_v_then(up, upb)?)?;
    let left = d.cell_v_then(&top_pb.p1, &bot_pb.p1)?;
    let right = d.cell_v_then(&top_pb.p2, &bot_pb.p2)?;
    d.pb_cell_mediate(&composed, &left, &right)
}
