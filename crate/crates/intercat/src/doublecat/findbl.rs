//! Finite strict double categories given by explicit tables. These serve as
//! hosts for the quintet and cylinder constructions and as the stored form
//! of intermonad fixtures.

use super::DoubleCat;
use crate::core::report::LawReport;
use crate::{Error, Result};
use std::collections::BTreeMap;

pub type Id = String;

/// Tables for a small strict double category.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FinDblData {
    pub objects: Vec<Id>,
    /// (id, dom, cod)
    pub harrs: Vec<(Id, Id, Id)>,
    pub h_id: BTreeMap<Id, Id>,
    pub h_comp: BTreeMap<(Id, Id), Id>,
    /// (id, src, tgt)
    pub varrs: Vec<(Id, Id, Id)>,
    pub v_id: BTreeMap<Id, Id>,
    pub v_comp: BTreeMap<(Id, Id), Id>,
    /// (id, top, bot, west, east)
    pub cells: Vec<(Id, Id, Id, Id, Id)>,
    /// horizontal identity cell per vertical arrow
    pub cell_hid: BTreeMap<Id, Id>,
    /// vertical identity cell per horizontal arrow
    pub cell_vid: BTreeMap<Id, Id>,
    /// horizontal pasting
    pub cell_hcomp: BTreeMap<(Id, Id), Id>,
    /// vertical pasting
    pub cell_vcomp: BTreeMap<(Id, Id), Id>,
}

impl FinDblData {
    fn cell(&self, id: &str) -> &(Id, Id, Id, Id, Id) {
        self.cells
            .iter()
            .find(|(c, _, _, _, _)| c == id)
            .unwrap_or_else(|| panic!("unknown cell {id}"))
    }

    fn har(&self, id: &str) -> &(Id, Id, Id) {
        self.harrs
            .iter()
            .find(|(h, _, _)| h == id)
            .unwrap_or_else(|| panic!("unknown horizontal arrow {id}"))
    }

    fn var(&self, id: &str) -> &(Id, Id, Id) {
        self.varrs
            .iter()
            .find(|(v, _, _)| v == id)
            .unwrap_or_else(|| panic!("unknown vertical arrow {id}"))
    }

    /// The one-object double category with only identities.
    pub fn trivial() -> Self {
        FinDblData {
            objects: vec!["*".into()],
            harrs: vec![("h*".into(), "*".into(), "*".into())],
            h_id: BTreeMap::from([("*".into(), "h*".into())]),
            h_comp: BTreeMap::from([(("h*".into(), "h*".into()), "h*".into())]),
            varrs: vec![("v*".into(), "*".into(), "*".into())],
            v_id: BTreeMap::from([("*".into(), "v*".into())]),
            v_comp: BTreeMap::from([(("v*".into(), "v*".into()), "v*".into())]),
            cells: vec![("c*".into(), "h*".into(), "h*".into(), "v*".into(), "v*".into())],
            cell_hid: BTreeMap::from([("v*".into(), "c*".into())]),
            cell_vid: BTreeMap::from([("h*".into(), "c*".into())]),
            cell_hcomp: BTreeMap::from([(("c*".into(), "c*".into()), "c*".into())]),
            cell_vcomp: BTreeMap::from([(("c*".into(), "c*".into()), "c*".into())]),
        }
    }

    /// The double category of commuting squares of a monoid: one object,
    /// horizontal and vertical arrows the monoid elements, one cell per
    /// commuting square `w;s = n;e`.
    pub fn monoid_squares(elems: &[&str], unit: &str, table: &[(&str, &str, &str)]) -> Self {
        let mult = |a: &str, b: &str| -> Id {
            table
                .iter()
                .find(|(x, y, _)| *x == a && *y == b)
                .map(|(_, _, z)| z.to_string())
                .unwrap_or_else(|| panic!("monoid table missing ({a},{b})"))
        };
        let harrs: Vec<(Id, Id, Id)> = elems
            .iter()
            .map(|e| (format!("h{e}"), "*".to_string(), "*".to_string()))
            .collect();
        let varrs: Vec<(Id, Id, Id)> = elems
            .iter()
            .map(|e| (format!("v{e}"), "*".to_string(), "*".to_string()))
            .collect();
        let mut cells = Vec::new();
        let mut cell_hcomp = BTreeMap::new();
        let mut cell_vcomp = BTreeMap::new();
        let cell_name = |n: &str, s: &str, w: &str, e: &str| format!("q({n},{s},{w},{e})");
        for n in elems {
            for s in elems {
                for w in elems {
                    for e in elems {
                        if mult(w, s) == mult(n, e) {
                            cells.push((
                                cell_name(n, s, w, e),
                                format!("h{n}"),
                                format!("h{s}"),
                                format!("v{w}"),
                                format!("v{e}"),
                            ));
                        }
                    }
                }
            }
        }
        for (c1, n1, s1, w1, e1) in &cells.clone() {
            for (c2, n2, s2, w2, e2) in &cells.clone() {
                if e1 == w2 {
                    let n = mult(&n1[1..], &n2[1..]);
                    let s = mult(&s1[1..], &s2[1..]);
                    cell_hcomp.insert(
                        (c1.clone(), c2.clone()),
                        cell_name(&n, &s, &w1[1..], &e2[1..]),
                    );
                }
                if s1 == n2 {
                    let w = mult(&w1[1..], &w2[1..]);
                    let e = mult(&e1[1..], &e2[1..]);
                    cell_vcomp.insert(
                        (c1.clone(), c2.clone()),
                        cell_name(&n1[1..], &s2[1..], &w, &e),
                    );
                }
            }
        }
        let hu = format!("h{unit}");
        let vu = format!("v{unit}");
        FinDblData {
            objects: vec!["*".into()],
            h_id: BTreeMap::from([("*".into(), hu)]),
            h_comp: table
                .iter()
                .map(|(a, b, c)| ((format!("h{a}"), format!("h{b}")), format!("h{c}")))
                .collect(),
            v_id: BTreeMap::from([("*".into(), vu)]),
            v_comp: table
                .iter()
                .map(|(a, b, c)| ((format!("v{a}"), format!("v{b}")), format!("v{c}")))
                .collect(),
            cell_hid: elems
                .iter()
                .map(|v| (format!("v{v}"), cell_name(unit, unit, v, v)))
                .collect(),
            cell_vid: elems
                .iter()
                .map(|h| (format!("h{h}"), cell_name(h, h, unit, unit)))
                .collect(),
            harrs,
            varrs,
            cells,
            cell_hcomp,
            cell_vcomp,
        }
    }

    /// Structural validation: both arrow categories, cell boundary
    /// bookkeeping, pasting totality and interchange.
    pub fn validate(&self) -> LawReport {
        use crate::fincat::{validate, FinCatData};
        let mut r = LawReport::new();
        r.merge(validate(&FinCatData {
            objects: self.objects.clone(),
            morphisms: self.harrs.clone(),
            identity: self.h_id.clone(),
            comp: self.h_comp.clone(),
        }));
        r.merge(validate(&FinCatData {
            objects: self.objects.clone(),
            morphisms: self.varrs.clone(),
            identity: self.v_id.clone(),
            comp: self.v_comp.clone(),
        }));
        if !r.passed() {
            return r;
        }
        let probes = super::DblProbes::<FinDblData> {
            objs: self.objects.clone(),
            hars: self.harrs.iter().map(|(h, _, _)| h.clone()).collect(),
            vars: self.varrs.iter().map(|(v, _, _)| v.clone()).collect(),
            cells: self.cells.iter().map(|(c, _, _, _, _)| c.clone()).collect(),
        };
        r.merge(super::check_double_laws(self, &probes));
        r
    }
}

impl DoubleCat for FinDblData {
    type Obj = Id;
    type HAr = Id;
    type VAr = Id;
    type Cell = Id;

    fn h_dom(&self, h: &Id) -> Id {
        self.har(h).1.clone()
    }
    fn h_cod(&self, h: &Id) -> Id {
        self.har(h).2.clone()
    }
    fn v_src(&self, v: &Id) -> Id {
        self.var(v).1.clone()
    }
    fn v_tgt(&self, v: &Id) -> Id {
        self.var(v).2.clone()
    }

    fn cell_top(&self, c: &Id) -> Id {
        self.cell(c).1.clone()
    }
    fn cell_bot(&self, c: &Id) -> Id {
        self.cell(c).2.clone()
    }
    fn cell_west(&self, c: &Id) -> Id {
        self.cell(c).3.clone()
    }
    fn cell_east(&self, c: &Id) -> Id {
        self.cell(c).4.clone()
    }

    fn h_id(&self, a: &Id) -> Id {
        self.h_id[a].clone()
    }
    fn h_then(&self, f: &Id, g: &Id) -> Result<Id> {
        self.h_comp
            .get(&(f.clone(), g.clone()))
            .cloned()
            .ok_or_else(|| Error::boundary("FinDbl::h_then", format!("({f},{g})")))
    }

    fn v_id(&self, a: &Id) -> Id {
        self.v_id[a].clone()
    }
    fn v_then(&self, u: &Id, w: &Id) -> Result<Id> {
        self.v_comp
            .get(&(u.clone(), w.clone()))
            .cloned()
            .ok_or_else(|| Error::boundary("FinDbl::v_then", format!("({u},{w})")))
    }

    fn cell_h_id(&self, v: &Id) -> Id {
        self.cell_hid[v].clone()
    }
    fn cell_h_then(&self, c: &Id, d: &Id) -> Result<Id> {
        self.cell_hcomp
            .get(&(c.clone(), d.clone()))
            .cloned()
            .ok_or_else(|| Error::boundary("FinDbl::cell_h_then", format!("({c},{d})")))
    }

    fn cell_v_id(&self, f: &Id) -> Id {
        self.cell_vid[f].clone()
    }
    fn cell_v_then(&self, c: &Id, d: &Id) -> Result<Id> {
        self.cell_vcomp
            .get(&(c.clone(), d.clone()))
            .cloned()
            .ok_or_else(|| Error::boundary("FinDbl::cell_v_then", format!("({c},{d})")))
    }

    fn v_assoc(&self, u: &Id, v: &Id, w: &Id) -> Result<Id> {
        // strict: the associator is the identity cell
        let uvw = self.v_then(&self.v_then(u, v)?, w)?;
        Ok(self.cell_h_id(&uvw))
    }
    fn v_lunit(&self, v: &Id) -> Id {
        self.cell_h_id(v)
    }
    fn v_runit(&self, v: &Id) -> Id {
        self.cell_h_id(v)
    }

    fn cell_invert(&self, c: &Id) -> Option<Id> {
        let (w, e) = (self.cell_west(c), self.cell_east(c));
        self.cells
            .iter()
            .map(|(d, _, _, _, _)| d)
            .find(|d| {
                self.cell_west(d) == e
                    && self.cell_east(d) == w
                    && self.cell_h_then(c, d).ok() == Some(self.cell_h_id(&w))
                    && self.cell_h_then(d, c).ok() == Some(self.cell_h_id(&e))
            })
            .cloned()
    }

    fn cells_constrained(
        &self,
        west: &Id,
        east: &Id,
        top: Option<&Id>,
        bot: Option<&Id>,
    ) -> Option<Vec<Id>> {
        Some(
            self.cells
                .iter()
                .filter(|(_, t, b, w, e)| {
                    w == west && e == east && top.is_none_or(|x| x == t) && bot.is_none_or(|x| x == b)
                })
                .map(|(c, _, _, _, _)| c.clone())
                .collect(),
        )
    }

    fn h_invert(&self, f: &Id) -> Option<Id> {
        let (a, b) = (self.h_dom(f), self.h_cod(f));
        self.harrs
            .iter()
            .map(|(g, _, _)| g)
            .find(|g| {
                self.h_then(f, g).ok() == Some(self.h_id(&a)) && self.h_then(g, f).ok() == Some(self.h_id(&b))
            })
            .cloned()
    }

    fn hars_between(&self, a: &Id, b: &Id) -> Option<Vec<Id>> {
        Some(
            self.harrs
                .iter()
                .filter(|(_, d, c)| d == a && c == b)
                .map(|(h, _, _)| h.clone())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_double_category_is_lawful() {
        assert!(FinDblData::trivial().validate().passed());
    }

    #[test]
    fn monoid_squares_are_lawful() {
        let d = FinDblData::monoid_squares(
            &["e", "a"],
            "e",
            &[("e", "e", "e"), ("e", "a", "a"), ("a", "e", "a"), ("a", "a", "e")],
        );
        assert!(d.validate().passed());
    }
}
