//! Duoidal categories as one-object intercategories: the objects of the
//! duoidal category become the basic cells, its morphisms the cubes, the
//! first tensor gives horizontal composition and the second vertical
//! composition. The interchange morphism and the three degenerate
//! comparisons become the four interchangers.

use crate::core::report::LawReport;
use crate::core::{Enumerable, Intercategory};
use crate::doublecat::Data;
use crate::finset::{all_fns, indexed_sum, pair_label, Elem, FinFn, FinSetObj};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A computable duoidal category: two monoidal structures with an
/// interchange comparison `(a*b).(c*d) -> (a.c)*(b.d)` (writing `*` for the
/// first tensor and `.` for the second) and the three degenerate
/// comparisons.
pub trait DuoidalCat {
    type O: Data;
    type M: Data;

    fn dom(&self, m: &Self::M) -> Self::O;
    fn cod(&self, m: &Self::M) -> Self::O;
    fn id(&self, o: &Self::O) -> Self::M;
    fn then(&self, f: &Self::M, g: &Self::M) -> Result<Self::M>;

    fn t1(&self, a: &Self::O, b: &Self::O) -> Self::O;
    fn t1_m(&self, f: &Self::M, g: &Self::M) -> Self::M;
    fn unit1(&self) -> Self::O;
    fn t1_assoc(&self, a: &Self::O, b: &Self::O, c: &Self::O) -> Self::M;
    fn t1_lunit(&self, a: &Self::O) -> Self::M;
    fn t1_runit(&self, a: &Self::O) -> Self::M;

    fn t2(&self, a: &Self::O, b: &Self::O) -> Self::O;
    fn t2_m(&self, f: &Self::M, g: &Self::M) -> Self::M;
    fn unit2(&self) -> Self::O;
    fn t2_assoc(&self, a: &Self::O, b: &Self::O, c: &Self::O) -> Self::M;
    fn t2_lunit(&self, a: &Self::O) -> Self::M;
    fn t2_runit(&self, a: &Self::O) -> Self::M;

    /// `(a*b).(c*d) -> (a.c)*(b.d)`
    fn chihat(&self, a: &Self::O, b: &Self::O, c: &Self::O, d: &Self::O) -> Self::M;
    /// `I . I -> I`
    fn muhat(&self) -> Self::M;
    /// `J -> J * J`
    fn deltahat(&self) -> Self::M;
    /// `J -> I`
    fn tauhat(&self) -> Self::M;

    fn invert(&self, m: &Self::M) -> Option<Self::M>;
    fn hom_between(&self, a: &Self::O, b: &Self::O) -> Option<Vec<Self::M>>;
}

/// (FinSet, x, 1, +, 0): products horizontally, coproducts vertically. The
/// canonical duoidal structure on finite sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FinSetDuoidal;

impl FinSetDuoidal {
    pub(crate) fn prod(a: &FinSetObj, b: &FinSetObj) -> FinSetObj {
        FinSetObj::new(
            a.elems()
                .iter()
                .flat_map(|x| b.elems().iter().map(move |y| pair_label(x, y))),
        )
    }

    fn sum(a: &FinSetObj, b: &FinSetObj) -> (FinSetObj, FinFn, FinFn) {
        let (s, injs) = indexed_sum(&[
            (Elem::from("l"), a.clone()),
            (Elem::from("r"), b.clone()),
        ]);
        let mut it = injs.into_iter();
        (s, it.next().unwrap(), it.next().unwrap())
    }
}

impl DuoidalCat for FinSetDuoidal {
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

    fn t1(&self, a: &FinSetObj, b: &FinSetObj) -> FinSetObj {
        Self::prod(a, b)
    }
    fn t1_m(&self, f: &FinFn, g: &FinFn) -> FinFn {
        FinFn::from_rule(Self::prod(&f.dom, &g.dom), Self::prod(&f.cod, &g.cod), |e| {
            let (x, y) = crate::doublecat::matrix::split_pair(e);
            pair_label(f.apply(&x), g.apply(&y))
        })
    }
    fn unit1(&self) -> FinSetObj {
        FinSetObj::point()
    }
    fn t1_assoc(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> FinFn {
        let dom = Self::prod(&Self::prod(a, b), c);
        let cod = Self::prod(a, &Self::prod(b, c));
        FinFn::from_rule(dom, cod, |e| {
            let (xy, z) = crate::doublecat::matrix::split_pair(e);
            let (x, y) = crate::doublecat::matrix::split_pair(&xy);
            pair_label(&x, &pair_label(&y, &z))
        })
    }
    fn t1_lunit(&self, a: &FinSetObj) -> FinFn {
        FinFn::from_rule(Self::prod(&self.unit1(), a), a.clone(), |e| {
            crate::doublecat::matrix::split_pair(e).1
        })
    }
    fn t1_runit(&self, a: &FinSetObj) -> FinFn {
        FinFn::from_rule(Self::prod(a, &self.unit1()), a.clone(), |e| {
            crate::doublecat::matrix::split_pair(e).0
        })
    }

    fn t2(&self, a: &FinSetObj, b: &FinSetObj) -> FinSetObj {
        Self::sum(a, b).0
    }
    fn t2_m(&self, f: &FinFn, g: &FinFn) -> FinFn {
        let (dom, _, _) = Self::sum(&f.dom, &g.dom);
        let (cod, _, _) = Self::sum(&f.cod, &g.cod);
        FinFn::from_rule(dom, cod, |e| {
            let (tag, x) = crate::doublecat::matrix::split_pair(e);
            if tag.as_str() == "l" {
                pair_label(&tag, f.apply(&x))
            } else {
                pair_label(&tag, g.apply(&x))
            }
        })
    }
    fn unit2(&self) -> FinSetObj {
        FinSetObj::empty()
    }
    fn t2_assoc(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> FinFn {
        let dom = self.t2(&self.t2(a, b), c);
        let cod = self.t2(a, &self.t2(b, c));
        FinFn::from_rule(dom, cod, |e| {
            let (tag, x) = crate::doublecat::matrix::split_pair(e);
            if tag.as_str() == "l" {
                let (tag2, y) = crate::doublecat::matrix::split_pair(&x);
                if tag2.as_str() == "l" {
                    pair_label(&Elem::from("l"), &y)
                } else {
                    pair_label(&Elem::from("r"), &pair_label(&Elem::from("l"), &y))
                }
            } else {
                pair_label(&Elem::from("r"), &pair_label(&Elem::from("r"), &x))
            }
        })
    }
    fn t2_lunit(&self, a: &FinSetObj) -> FinFn {
        FinFn::from_rule(self.t2(&self.unit2(), a), a.clone(), |e| {
            crate::doublecat::matrix::split_pair(e).1
        })
    }
    fn t2_runit(&self, a: &FinSetObj) -> FinFn {
        FinFn::from_rule(self.t2(a, &self.unit2()), a.clone(), |e| {
            crate::doublecat::matrix::split_pair(e).1
        })
    }

    fn chihat(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj, d: &FinSetObj) -> FinFn {
        let dom = self.t2(&Self::prod(a, b), &Self::prod(c, d));
        let cod = Self::prod(&self.t2(a, c), &self.t2(b, d));
        FinFn::from_rule(dom, cod, |e| {
            let (tag, xy) = crate::doublecat::matrix::split_pair(e);
            let (x, y) = crate::doublecat::matrix::split_pair(&xy);
            pair_label(&pair_label(&tag, &x), &pair_label(&tag, &y))
        })
    }
    fn muhat(&self) -> FinFn {
        FinFn::constant(self.t2(&self.unit1(), &self.unit1()), self.unit1(), Elem::from("*"))
    }
    fn deltahat(&self) -> FinFn {
        FinFn::from_rule(self.unit2(), Self::prod(&self.unit2(), &self.unit2()), |e| e.clone())
    }
    fn tauhat(&self) -> FinFn {
        FinFn::from_rule(self.unit2(), self.unit1(), |e| e.clone())
    }

    fn invert(&self, m: &FinFn) -> Option<FinFn> {
        m.inverse()
    }
    fn hom_between(&self, a: &FinSetObj, b: &FinSetObj) -> Option<Vec<FinFn>> {
        Some(all_fns(a, b))
    }
}

/// (FinSet, x, 1, x, 1): both tensors the cartesian product. The duoidal
/// structure whose matrix intercategory admits the conjoint embedding over
/// the cartesian matrix base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FinSetProdDuoidal;

impl DuoidalCat for FinSetProdDuoidal {
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

    fn t1(&self, a: &FinSetObj, b: &FinSetObj) -> FinSetObj {
        FinSetDuoidal::prod(a, b)
    }
    fn t1_m(&self, f: &FinFn, g: &FinFn) -> FinFn {
        FinSetDuoidal.t1_m(f, g)
    }
    fn unit1(&self) -> FinSetObj {
        FinSetObj::point()
    }
    fn t1_assoc(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> FinFn {
        FinSetDuoidal.t1_assoc(a, b, c)
    }
    fn t1_lunit(&self, a: &FinSetObj) -> FinFn {
        FinSetDuoidal.t1_lunit(a)
    }
    fn t1_runit(&self, a: &FinSetObj) -> FinFn {
        FinSetDuoidal.t1_runit(a)
    }

    fn t2(&self, a: &FinSetObj, b: &FinSetObj) -> FinSetObj {
        FinSetDuoidal::prod(a, b)
    }
    fn t2_m(&self, f: &FinFn, g: &FinFn) -> FinFn {
        FinSetDuoidal.t1_m(f, g)
    }
    fn unit2(&self) -> FinSetObj {
        FinSetObj::point()
    }
    fn t2_assoc(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj) -> FinFn {
        FinSetDuoidal.t1_assoc(a, b, c)
    }
    fn t2_lunit(&self, a: &FinSetObj) -> FinFn {
        FinSetDuoidal.t1_lunit(a)
    }
    fn t2_runit(&self, a: &FinSetObj) -> FinFn {
        FinSetDuoidal.t1_runit(a)
    }

    fn chihat(&self, a: &FinSetObj, b: &FinSetObj, c: &FinSetObj, d: &FinSetObj) -> FinFn {
        // middle-four interchange for the cartesian product
        let dom = FinSetDuoidal::prod(&FinSetDuoidal::prod(a, b), &FinSetDuoidal::prod(c, d));
        let cod = FinSetDuoidal::prod(&FinSetDuoidal::prod(a, c), &FinSetDuoidal::prod(b, d));
        FinFn::from_rule(dom, cod, |e| {
            let (ab, cd) = crate::doublecat::matrix::split_pair(e);
            let (x, y) = crate::doublecat::matrix::split_pair(&ab);
            let (z, w) = crate::doublecat::matrix::split_pair(&cd);
            pair_label(&pair_label(&x, &z), &pair_label(&y, &w))
        })
    }
    fn muhat(&self) -> FinFn {
        FinSetDuoidal.t1_lunit(&FinSetObj::point())
    }
    fn deltahat(&self) -> FinFn {
        let pt = FinSetObj::point();
        FinFn::from_rule(pt.clone(), FinSetDuoidal::prod(&pt, &pt), |e| pair_label(e, e))
    }
    fn tauhat(&self) -> FinFn {
        FinFn::identity(&FinSetObj::point())
    }

    fn invert(&self, m: &FinFn) -> Option<FinFn> {
        m.inverse()
    }
    fn hom_between(&self, a: &FinSetObj, b: &FinSetObj) -> Option<Vec<FinFn>> {
        Some(all_fns(a, b))
    }
}

/// A table-presented duoidal category over a finitely presented underlying
/// category, with explicit tensor and comparison tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDuoidal {
    pub cat: crate::fincat::FinCatData,
    pub t1: BTreeMap<(String, String), String>,
    pub t1m: BTreeMap<(String, String), String>,
    pub unit1: String,
    pub t2: BTreeMap<(String, String), String>,
    pub t2m: BTreeMap<(String, String), String>,
    pub unit2: String,
    pub chihat: BTreeMap<(String, String, String, String), String>,
    pub muhat: String,
    pub deltahat: String,
    pub tauhat: String,
}

impl TableDuoidal {
    /// The one-object duoidal category: everything trivial.
    pub fn trivial() -> Self {
        let cat = crate::fincat::FinCatData::terminal();
        TableDuoidal {
            cat,
            t1: BTreeMap::from([(("*".into(), "*".into()), "*".into())]),
            t1m: BTreeMap::from([(("1*".into(), "1*".into()), "1*".into())]),
            unit1: "*".into(),
            t2: BTreeMap::from([(("*".into(), "*".into()), "*".into())]),
            t2m: BTreeMap::from([(("1*".into(), "1*".into()), "1*".into())]),
            unit2: "*".into(),
            chihat: BTreeMap::from([(
                ("*".into(), "*".into(), "*".into(), "*".into()),
                "1*".into(),
            )]),
            muhat: "1*".into(),
            deltahat: "1*".into(),
            tauhat: "1*".into(),
        }
    }

    /// Structural validation: tensors total and functorial, units strict,
    /// comparisons present with the right boundaries.
    pub fn validate(&self) -> LawReport {
        let mut r = crate::fincat::validate(&self.cat);
        if !r.passed() {
            return r;
        }
        let cat = &self.cat;
        for tensor_name in ["t1", "t2"] {
            let (t, tm, unit) = if tensor_name == "t1" {
                (&self.t1, &self.t1m, &self.unit1)
            } else {
                (&self.t2, &self.t2m, &self.unit2)
            };
            for a in &cat.objects {
                for b in &cat.objects {
                    r.check(
                        format!("duoidal.{tensor_name}.total"),
                        format!("({a},{b})"),
                        t.contains_key(&(a.clone(), b.clone())),
                    );
                }
                let lu = t.get(&(unit.clone(), a.clone()));
                let ru = t.get(&(a.clone(), unit.clone()));
                r.check(
                    format!("duoidal.{tensor_name}.unit"),
                    a.clone(),
                    lu == Some(a) && ru == Some(a),
                );
            }
            for (f, fd, fc) in &cat.morphisms {
                for (g, gd, gc) in &cat.morphisms {
                    match tm.get(&(f.clone(), g.clone())) {
                        None => r.record(
                            format!("duoidal.{tensor_name}.m.total"),
                            format!("({f},{g})"),
                            false,
                            "missing",
                        ),
                        Some(h) => {
                            let okb = cat.dom(h) == &t[&(fd.clone(), gd.clone())]
                                && cat.cod(h) == &t[&(fc.clone(), gc.clone())];
                            r.check(format!("duoidal.{tensor_name}.m.boundary"), format!("({f},{g})"), okb);
                        }
                    }
                }
            }
            // strict associativity of the object tables
            for a in &cat.objects {
                for b in &cat.objects {
                    for c in &cat.objects {
                        let lhs = &t[&(t[&(a.clone(), b.clone())].clone(), c.clone())];
                        let rhs = &t[&(a.clone(), t[&(b.clone(), c.clone())].clone())];
                        r.check(format!("duoidal.{tensor_name}.assoc"), format!("({a},{b},{c})"), lhs == rhs);
                    }
                }
            }
        }
        for a in &cat.objects {
            for b in &cat.objects {
                for c in &cat.objects {
                    for d in &cat.objects {
                        let key = (a.clone(), b.clone(), c.clone(), d.clone());
                        match self.chihat.get(&key) {
                            None => r.record("duoidal.chihat.total", format!("{key:?}"), false, "missing"),
                            Some(m) => {
                                let dom = &self.t2[&(self.t1[&(a.clone(), b.clone())].clone(), self.t1[&(c.clone(), d.clone())].clone())];
                                let cod = &self.t1[&(self.t2[&(a.clone(), c.clone())].clone(), self.t2[&(b.clone(), d.clone())].clone())];
                                r.check(
                                    "duoidal.chihat.boundary",
                                    format!("{key:?}"),
                                    cat.dom(m) == dom && cat.cod(m) == cod,
                                );
                            }
                        }
                    }
                }
            }
        }
        r
    }
}

impl DuoidalCat for TableDuoidal {
    type O = String;
    type M = String;

    fn dom(&self, m: &String) -> String {
        self.cat.dom(m).clone()
    }
    fn cod(&self, m: &String) -> String {
        self.cat.cod(m).clone()
    }
    fn id(&self, o: &String) -> String {
        self.cat.id_of(o).clone()
    }
    fn then(&self, f: &String, g: &String) -> Result<String> {
        self.cat.then(f, g)
    }

    fn t1(&self, a: &String, b: &String) -> String {
        self.t1[&(a.clone(), b.clone())].clone()
    }
    fn t1_m(&self, f: &String, g: &String) -> String {
        self.t1m[&(f.clone(), g.clone())].clone()
    }
    fn unit1(&self) -> String {
        self.unit1.clone()
    }
    fn t1_assoc(&self, a: &String, b: &String, c: &String) -> String {
        // object tables are strictly associative; the associator is the identity
        self.cat.id_of(&self.t1(&self.t1(a, b), c)).clone()
    }
    fn t1_lunit(&self, a: &String) -> String {
        self.cat.id_of(a).clone()
    }
    fn t1_runit(&self, a: &String) -> String {
        self.cat.id_of(a).clone()
    }

    fn t2(&self, a: &String, b: &String) -> String {
        self.t2[&(a.clone(), b.clone())].clone()
    }
    fn t2_m(&self, f: &String, g: &String) -> String {
        self.t2m[&(f.clone(), g.clone())].clone()
    }
    fn unit2(&self) -> String {
        self.unit2.clone()
    }
    fn t2_assoc(&self, a: &String, b: &String, c: &String) -> String {
        self.cat.id_of(&self.t2(&self.t2(a, b), c)).clone()
    }
    fn t2_lunit(&self, a: &String) -> String {
        self.cat.id_of(a).clone()
    }
    fn t2_runit(&self, a: &String) -> String {
        self.cat.id_of(a).clone()
    }

    fn chihat(&self, a: &String, b: &String, c: &String, d: &String) -> String {
        self.chihat[&(a.clone(), b.clone(), c.clone(), d.clone())].clone()
    }
    fn muhat(&self) -> String {
        self.muhat.clone()
    }
    fn deltahat(&self) -> String {
        self.deltahat.clone()
    }
    fn tauhat(&self) -> String {
        self.tauhat.clone()
    }

    fn invert(&self, m: &String) -> Option<String> {
        self.cat.inverse(m)
    }
    fn hom_between(&self, a: &String, b: &String) -> Option<Vec<String>> {
        Some(self.cat.hom(a, b))
    }
}

/// The one-object intercategory of a duoidal category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuoidalIntercat<C: DuoidalCat> {
    pub c: C,
    pub label: String,
}

impl<C: DuoidalCat> DuoidalIntercat<C> {
    pub fn new(c: C, label: impl Into<String>) -> Self {
        DuoidalIntercat {
            c,
            label: label.into(),
        }
    }
}

/// Builds the intercategory of a table duoidal category after validating it.
pub fn duoidal_intercat(d: TableDuoidal) -> Result<DuoidalIntercat<TableDuoidal>> {
    let report = d.validate();
    if !report.passed() {
        return Err(Error::invalid("duoidal_intercat", format!("{report}")));
    }
    Ok(DuoidalIntercat::new(d, "duoidal(table)"))
}

impl<C: DuoidalCat> Intercategory for DuoidalIntercat<C> {
    type Obj = ();
    type TAr = ();
    type HAr = ();
    type VAr = ();
    type HCell = ();
    type VCell = ();
    type BCell = C::O;
    type Cube = C::M;

    fn tar_src(&self, _: &()) {}
    fn tar_tgt(&self, _: &()) {}
    fn har_src(&self, _: &()) {}
    fn har_tgt(&self, _: &()) {}
    fn var_src(&self, _: &()) {}
    fn var_tgt(&self, _: &()) {}

    fn hcell_src(&self, _: &()) {}
    fn hcell_tgt(&self, _: &()) {}
    fn hcell_west(&self, _: &()) {}
    fn hcell_east(&self, _: &()) {}
    fn vcell_src(&self, _: &()) {}
    fn vcell_tgt(&self, _: &()) {}
    fn vcell_north(&self, _: &()) {}
    fn vcell_south(&self, _: &()) {}

    fn bcell_north(&self, _: &C::O) {}
    fn bcell_south(&self, _: &C::O) {}
    fn bcell_west(&self, _: &C::O) {}
    fn bcell_east(&self, _: &C::O) {}

    fn cube_src(&self, c: &C::M) -> C::O {
        self.c.dom(c)
    }
    fn cube_tgt(&self, c: &C::M) -> C::O {
        self.c.cod(c)
    }
    fn cube_north(&self, _: &C::M) {}
    fn cube_south(&self, _: &C::M) {}
    fn cube_west(&self, _: &C::M) {}
    fn cube_east(&self, _: &C::M) {}

    fn t_id_obj(&self, _: &()) {}
    fn t_id_har(&self, _: &()) {}
    fn t_id_var(&self, _: &()) {}
    fn t_id_bcell(&self, b: &C::O) -> C::M {
        self.c.id(b)
    }

    fn t_then_tar(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn t_then_hcell(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn t_then_vcell(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn t_then_cube(&self, c: &C::M, d: &C::M) -> Result<C::M> {
        self.c.then(c, d)
    }

    fn h_id_obj(&self, _: &()) {}
    fn h_id_tar(&self, _: &()) {}
    fn h_id_var(&self, _: &()) -> C::O {
        self.c.unit1()
    }
    fn h_id_vcell(&self, _: &()) -> C::M {
        self.c.id(&self.c.unit1())
    }

    fn h_then_har(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn h_then_hcell(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn h_then_bcell(&self, a: &C::O, b: &C::O) -> Result<C::O> {
        Ok(self.c.t1(a, b))
    }
    fn h_then_cube(&self, c: &C::M, d: &C::M) -> Result<C::M> {
        Ok(self.c.t1_m(c, d))
    }

    fn v_id_obj(&self, _: &()) {}
    fn v_id_tar(&self, _: &()) {}
    fn v_id_har(&self, _: &()) -> C::O {
        self.c.unit2()
    }
    fn v_id_hcell(&self, _: &()) -> C::M {
        self.c.id(&self.c.unit2())
    }

    fn v_then_var(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn v_then_vcell(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn v_then_bcell(&self, a: &C::O, b: &C::O) -> Result<C::O> {
        Ok(self.c.t2(a, b))
    }
    fn v_then_cube(&self, c: &C::M, d: &C::M) -> Result<C::M> {
        Ok(self.c.t2_m(c, d))
    }

    fn h_assoc_har(&self, _: &(), _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn h_lunit_har(&self, _: &()) {}
    fn h_runit_har(&self, _: &()) {}
    fn h_assoc_bcell(&self, a: &C::O, b: &C::O, c: &C::O) -> Result<C::M> {
        Ok(self.c.t1_assoc(a, b, c))
    }
    fn h_lunit_bcell(&self, a: &C::O) -> C::M {
        self.c.t1_lunit(a)
    }
    fn h_runit_bcell(&self, a: &C::O) -> C::M {
        self.c.t1_runit(a)
    }

    fn v_assoc_var(&self, _: &(), _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn v_lunit_var(&self, _: &()) {}
    fn v_runit_var(&self, _: &()) {}
    fn v_assoc_bcell(&self, a: &C::O, b: &C::O, c: &C::O) -> Result<C::M> {
        Ok(self.c.t2_assoc(a, b, c))
    }
    fn v_lunit_bcell(&self, a: &C::O) -> C::M {
        self.c.t2_lunit(a)
    }
    fn v_runit_bcell(&self, a: &C::O) -> C::M {
        self.c.t2_runit(a)
    }

    fn chi(&self, a: &C::O, b: &C::O, abar: &C::O, bbar: &C::O) -> Result<C::M> {
        Ok(self.c.chihat(a, b, abar, bbar))
    }
    fn mu(&self, _: &(), _: &()) -> Result<C::M> {
        Ok(self.c.muhat())
    }
    fn delta(&self, _: &(), _: &()) -> Result<C::M> {
        Ok(self.c.deltahat())
    }
    fn tau(&self, _: &()) -> C::M {
        self.c.tauhat()
    }

    fn invert_hcell(&self, _: &()) -> Option<()> {
        Some(())
    }
    fn invert_vcell(&self, _: &()) -> Option<()> {
        Some(())
    }
    fn invert_cube(&self, c: &C::M) -> Option<C::M> {
        self.c.invert(c)
    }

    fn name(&self) -> String {
        self.label.clone()
    }
}

impl<C: DuoidalCat> Enumerable for DuoidalIntercat<C> {
    fn tars_between(&self, _: &(), _: &()) -> Option<Vec<()>> {
        Some(vec![()])
    }
    fn hcells_between(&self, _: &(), _: &()) -> Option<Vec<()>> {
        Some(vec![()])
    }
    fn vcells_between(&self, _: &(), _: &()) -> Option<Vec<()>> {
        Some(vec![()])
    }
    fn cubes_between(&self, src: &C::O, tgt: &C::O) -> Option<Vec<C::M>> {
        self.c.hom_between(src, tgt)
    }
}
