//! Finitely presented categories, functors, natural transformations,
//! search-based limits and colimits, profunctors with coend composition, and
//! finite 2-categories.
//!
//! Everything is table-driven and exhaustively checkable. Limits are found by
//! enumerating cones and testing terminality, which is the definition; at
//! desk scale this is affordable and has no failure modes.

use crate::core::report::LawReport;
use crate::finset::{pair_label, Elem, FinSetObj};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

pub type ObjId = String;
pub type MorId = String;

/// A finitely presented category: explicit object and morphism lists with a
/// total composition table on composable pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FinCatData {
    pub objects: Vec<ObjId>,
    /// (id, dom, cod)
    pub morphisms: Vec<(MorId, ObjId, ObjId)>,
    pub identity: BTreeMap<ObjId, MorId>,
    /// (f, g) -> "f then g", for cod f = dom g.
    pub comp: BTreeMap<(MorId, MorId), MorId>,
}

impl FinCatData {
    pub fn dom(&self, f: &str) -> &ObjId {
        &self
            .morphisms
            .iter()
            .find(|(m, _, _)| m == f)
            .unwrap_or_else(|| panic!("unknown morphism {f}"))
            .1
    }

    pub fn cod(&self, f: &str) -> &ObjId {
        &self
            .morphisms
            .iter()
            .find(|(m, _, _)| m == f)
            .unwrap_or_else(|| panic!("unknown morphism {f}"))
            .2
    }

    pub fn id_of(&self, a: &str) -> &MorId {
        self.identity.get(a).unwrap_or_else(|| panic!("no identity for {a}"))
    }

    pub fn is_identity(&self, f: &str) -> bool {
        self.identity.values().any(|m| m == f)
    }

    /// Diagrammatic composite: f then g.
    pub fn then(&self, f: &str, g: &str) -> Result<MorId> {
        if self.cod(f) != self.dom(g) {
            return Err(Error::boundary("FinCatData::then", format!("{f} then {g}")));
        }
        self.comp
            .get(&(f.to_string(), g.to_string()))
            .cloned()
            .ok_or_else(|| Error::invalid("FinCatData::then", format!("missing composite ({f},{g})")))
    }

    pub fn hom(&self, a: &str, b: &str) -> Vec<MorId> {
        self.morphisms
            .iter()
            .filter(|(_, d, c)| d == a && c == b)
            .map(|(m, _, _)| m.clone())
            .collect()
    }

    /// Mono test by left cancellation against every parallel pair.
    pub fn is_mono(&self, f: &str) -> bool {
        let a = self.dom(f);
        for x in &self.objects {
            let homxa = self.hom(x, a);
            for g in &homxa {
                for h in &homxa {
                    if g != h && self.then(g, f).unwrap() == self.then(h, f).unwrap() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Epi test by right cancellation.
    pub fn is_epi(&self, f: &str) -> bool {
        let b = self.cod(f);
        for x in &self.objects {
            let hombx = self.hom(b, x);
            for g in &hombx {
                for h in &hombx {
                    if g != h && self.then(f, g).unwrap() == self.then(f, h).unwrap() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_iso(&self, f: &str) -> bool {
        self.inverse(f).is_some()
    }

    pub fn inverse(&self, f: &str) -> Option<MorId> {
        let (a, b) = (self.dom(f).clone(), self.cod(f).clone());
        self.hom(&b, &a).into_iter().find(|g| {
            self.then(f, g).unwrap() == *self.id_of(&a) && self.then(g, f).unwrap() == *self.id_of(&b)
        })
    }

    /// The one-object one-morphism category.
    pub fn terminal() -> Self {
        FinCatData {
            objects: vec!["*".into()],
            morphisms: vec![("1*".into(), "*".into(), "*".into())],
            identity: BTreeMap::from([("*".into(), "1*".into())]),
            comp: BTreeMap::from([(("1*".into(), "1*".into()), "1*".into())]),
        }
    }

    /// The empty category.
    pub fn empty() -> Self {
        FinCatData {
            objects: vec![],
            morphisms: vec![],
            identity: BTreeMap::new(),
            comp: BTreeMap::new(),
        }
    }

    /// Discrete category on the given objects.
    pub fn discrete(objs: &[&str]) -> Self {
        let objects: Vec<ObjId> = objs.iter().map(|s| s.to_string()).collect();
        let morphisms = objects.iter().map(|o| (format!("1{o}"), o.clone(), o.clone())).collect();
        let identity = objects.iter().map(|o| (o.clone(), format!("1{o}"))).collect();
        let comp = objects
            .iter()
            .map(|o| ((format!("1{o}"), format!("1{o}")), format!("1{o}")))
            .collect();
        FinCatData {
            objects,
            morphisms,
            identity,
            comp,
        }
    }

    /// Free category on a finite graph with composites named by path
    /// concatenation `f.g`; parallel composites are identified when
    /// `relations` maps a path name to a chosen representative.
    pub fn from_graph(
        objs: &[&str],
        arrows: &[(&str, &str, &str)],
        relations: &[(&str, &str)],
    ) -> Result<Self> {
        let mut cat = Self::discrete(objs);
        for (name, d, c) in arrows {
            cat.morphisms.push((name.to_string(), d.to_string(), c.to_string()));
        }
        let rep = |s: &str| -> String {
            for (l, r) in relations {
                if s == *l {
                    return r.to_string();
                }
            }
            s.to_string()
        };
        loop {
            let mut added = false;
            let mors = cat.morphisms.clone();
            for (f, fd, _) in &mors {
                for (g, _, gc) in &mors {
                    if cat.cod(f) != cat.dom(g) {
                        continue;
                    }
                    let key = (f.clone(), g.clone());
                    if cat.comp.contains_key(&key) {
                        continue;
                    }
                    let composite = if cat.is_identity(f) {
                        g.clone()
                    } else if cat.is_identity(g) {
                        f.clone()
                    } else {
                        rep(&format!("{f}.{g}"))
                    };
                    if !cat.morphisms.iter().any(|(m, _, _)| *m == composite) {
                        cat.morphisms.push((composite.clone(), fd.clone(), gc.clone()));
                    }
                    cat.comp.insert(key, composite);
                    added = true;
                }
            }
            if !added {
                break;
            }
            if cat.morphisms.len() > 200 {
                return Err(Error::invalid("from_graph", "graph generates too many morphisms"));
            }
        }
        Ok(cat)
    }
}

/// Checks every associativity and unit instance; an empty failure list means
/// the tables present a category.
pub fn validate(cat: &FinCatData) -> LawReport {
    let mut report = LawReport::new();
    let mut ids: BTreeSet<&MorId> = BTreeSet::new();
    for (m, _, _) in &cat.morphisms {
        if !ids.insert(m) {
            report.record("cat.morphism.unique", m.clone(), false, "duplicate morphism id");
        }
    }
    for a in &cat.objects {
        match cat.identity.get(a) {
            None => report.record("cat.identity.present", a.clone(), false, "no identity"),
            Some(i) => {
                let ok = cat.morphisms.iter().any(|(m, d, c)| m == i && d == a && c == a);
                report.record(
                    "cat.identity.boundary",
                    a.clone(),
                    ok,
                    if ok { "" } else { "identity has wrong boundary" },
                );
            }
        }
    }
    for (f, _, fc) in &cat.morphisms {
        for (g, gd, _) in &cat.morphisms {
            if fc != gd {
                continue;
            }
            match cat.comp.get(&(f.clone(), g.clone())) {
                None => report.record("cat.comp.total", format!("({f},{g})"), false, "missing composite"),
                Some(h) => {
                    let ok = cat
                        .morphisms
                        .iter()
                        .any(|(m, d, c)| m == h && d == cat.dom(f) && c == cat.cod(g));
                    report.record(
                        "cat.comp.boundary",
                        format!("({f},{g})"),
                        ok,
                        if ok { "" } else { "composite has wrong boundary" },
                    );
                }
            }
        }
    }
    if !report.passed() {
        return report; // deeper checks would panic on missing data
    }
    for (f, _, _) in &cat.morphisms {
        let l = cat.then(cat.id_of(cat.dom(f)), f).unwrap();
        report.record(
            "cat.unit.left",
            f.clone(),
            l == *f,
            if l == *f { String::new() } else { format!("1;{f} = {l}") },
        );
        let r = cat.then(f, cat.id_of(cat.cod(f))).unwrap();
        report.record(
            "cat.unit.right",
            f.clone(),
            r == *f,
            if r == *f { String::new() } else { format!("{f};1 = {r}") },
        );
    }
    for (f, _, fc) in &cat.morphisms {
        for (g, gd, gc) in &cat.morphisms {
            if fc != gd {
                continue;
            }
            for (h, hd, _) in &cat.morphisms {
                if gc != hd {
                    continue;
                }
                let lhs = cat.then(&cat.then(f, g).unwrap(), h).unwrap();
                let rhs = cat.then(f, &cat.then(g, h).unwrap()).unwrap();
                report.record(
                    "cat.assoc",
                    format!("({f},{g},{h})"),
                    lhs == rhs,
                    if lhs == rhs { String::new() } else { format!("{lhs} != {rhs}") },
                );
            }
        }
    }
    report
}

/// A functor given by explicit object and morphism tables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FunctorData {
    pub source: FinCatData,
    pub target: FinCatData,
    pub obj_map: BTreeMap<ObjId, ObjId>,
    pub mor_map: BTreeMap<MorId, MorId>,
}

impl FunctorData {
    pub fn identity(cat: &FinCatData) -> Self {
        FunctorData {
            source: cat.clone(),
            target: cat.clone(),
            obj_map: cat.objects.iter().map(|o| (o.clone(), o.clone())).collect(),
            mor_map: cat.morphisms.iter().map(|(m, _, _)| (m.clone(), m.clone())).collect(),
        }
    }

    pub fn on_obj(&self, a: &str) -> &ObjId {
        self.obj_map
            .get(a)
            .unwrap_or_else(|| panic!("functor undefined on object {a}"))
    }

    pub fn on_mor(&self, f: &str) -> &MorId {
        self.mor_map
            .get(f)
            .unwrap_or_else(|| panic!("functor undefined on morphism {f}"))
    }

    pub fn validate(&self) -> LawReport {
        let mut report = LawReport::new();
        for a in &self.source.objects {
            let ok = self.obj_map.contains_key(a) && self.target.objects.contains(self.on_obj(a));
            report.record("functor.obj.total", a.clone(), ok, "");
            if ok {
                let fid = self.on_mor(self.source.id_of(a));
                let want = self.target.id_of(self.on_obj(a));
                report.check("functor.identity", a.clone(), fid == want);
            }
        }
        for (f, d, c) in &self.source.morphisms {
            let ok = self.mor_map.contains_key(f);
            report.record("functor.mor.total", f.clone(), ok, "");
            if !ok {
                continue;
            }
            let im = self.on_mor(f);
            let bok = self.target.dom(im) == self.on_obj(d) && self.target.cod(im) == self.on_obj(c);
            report.check("functor.boundary", f.clone(), bok);
        }
        if !report.passed() {
            return report;
        }
        for (f, _, fc) in &self.source.morphisms {
            for (g, gd, _) in &self.source.morphisms {
                if fc != gd {
                    continue;
                }
                let lhs = self.on_mor(&self.source.then(f, g).unwrap()).clone();
                let rhs = self.target.then(self.on_mor(f), self.on_mor(g)).unwrap();
                report.check("functor.comp", format!("({f},{g})"), lhs == rhs);
            }
        }
        report
    }
}

/// A natural transformation between parallel functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransData {
    pub source: FunctorData,
    pub target: FunctorData,
    pub components: BTreeMap<ObjId, MorId>,
}

impl NatTransData {
    pub fn identity(f: &FunctorData) -> Self {
        NatTransData {
            source: f.clone(),
            target: f.clone(),
            components: f
                .source
                .objects
                .iter()
                .map(|a| (a.clone(), f.target.id_of(f.on_obj(a)).clone()))
                .collect(),
        }
    }

    pub fn at(&self, a: &str) -> &MorId {
        self.components.get(a).unwrap_or_else(|| panic!("no component at {a}"))
    }

    pub fn validate(&self) -> LawReport {
        let mut report = LawReport::new();
        let cat = &self.source.target;
        for a in &self.source.source.objects {
            let c = self.at(a);
            let ok = cat.dom(c) == self.source.on_obj(a) && cat.cod(c) == self.target.on_obj(a);
            report.check("nat.component.boundary", a.clone(), ok);
        }
        if !report.passed() {
            return report;
        }
        for (f, d, c) in &self.source.source.morphisms {
            let lhs = cat.then(self.source.on_mor(f), self.at(c)).unwrap();
            let rhs = cat.then(self.at(d), self.target.on_mor(f)).unwrap();
            report.check("nat.square", f.clone(), lhs == rhs);
        }
        report
    }
}

/// A cone over a diagram: an apex with one leg per shape object.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cone {
    pub apex: ObjId,
    pub legs: BTreeMap<ObjId, MorId>,
}

/// A cocone under a diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cocone {
    pub nadir: ObjId,
    pub legs: BTreeMap<ObjId, MorId>,
}

fn cones_with_apex(diagram: &FunctorData, apex: &str) -> Vec<Cone> {
    let cat = &diagram.target;
    let shape = &diagram.source;
    let mut cones = vec![Cone {
        apex: apex.to_string(),
        legs: BTreeMap::new(),
    }];
    for i in &shape.objects {
        let homs = cat.hom(apex, diagram.on_obj(i));
        let mut next = Vec::new();
        for cone in &cones {
            for leg in &homs {
                let mut legs = cone.legs.clone();
                legs.insert(i.clone(), leg.clone());
                next.push(Cone {
                    apex: apex.to_string(),
                    legs,
                });
            }
        }
        cones = next;
    }
    cones.retain(|cone| {
        shape.morphisms.iter().all(|(s, d, c)| {
            if shape.is_identity(s) {
                return true;
            }
            let via = cat.then(&cone.legs[d], diagram.on_mor(s)).unwrap();
            via == cone.legs[c]
        })
    });
    cones
}

/// All cones over the diagram, every apex.
pub fn all_cones(diagram: &FunctorData) -> Vec<Cone> {
    diagram
        .target
        .objects
        .iter()
        .flat_map(|x| cones_with_apex(diagram, x))
        .collect()
}

/// Factorizations of `cone` through `lim`: mediating morphisms `u` with
/// `u ; lim.leg_i = cone.leg_i` for every shape object.
pub fn cone_factorizations(diagram: &FunctorData, lim: &Cone, cone: &Cone) -> Vec<MorId> {
    let cat = &diagram.target;
    cat.hom(&cone.apex, &lim.apex)
        .into_iter()
        .filter(|u| {
            diagram
                .source
                .objects
                .iter()
                .all(|i| cat.then(u, &lim.legs[i]).unwrap() == cone.legs[i])
        })
        .collect()
}

/// A limiting cone found by exhaustive search, or `None` when no limit
/// exists. The first limiting cone in canonical enumeration order is chosen.
pub fn limit(diagram: &FunctorData) -> Option<Cone> {
    let cones = all_cones(diagram);
    cones
        .iter()
        .find(|cand| cones.iter().all(|other| cone_factorizations(diagram, cand, other).len() == 1))
        .cloned()
}

/// The unique mediator from `cone` to the limiting cone.
pub fn limit_mediator(diagram: &FunctorData, lim: &Cone, cone: &Cone) -> Result<MorId> {
    let mut fs = cone_factorizations(diagram, lim, cone);
    match (fs.pop(), fs.pop()) {
        (Some(u), None) => Ok(u),
        (None, _) => Err(Error::boundary("limit_mediator", "cone does not factor")),
        _ => Err(Error::invalid("limit_mediator", "factorization not unique")),
    }
}

fn cocones_with_nadir(diagram: &FunctorData, nadir: &str) -> Vec<Cocone> {
    let cat = &diagram.target;
    let shape = &diagram.source;
    let mut cocones = vec![Cocone {
        nadir: nadir.to_string(),
        legs: BTreeMap::new(),
    }];
    for i in &shape.objects {
        let homs = cat.hom(diagram.on_obj(i), nadir);
        let mut next = Vec::new();
        for cocone in &cocones {
            for leg in &homs {
                let mut legs = cocone.legs.clone();
                legs.insert(i.clone(), leg.clone());
                next.push(Cocone {
                    nadir: nadir.to_string(),
                    legs,
                });
            }
        }
        cocones = next;
    }
    cocones.retain(|cocone| {
        shape.morphisms.iter().all(|(s, d, c)| {
            if shape.is_identity(s) {
                return true;
            }
            let via = cat.then(diagram.on_mor(s), &cocone.legs[c]).unwrap();
            via == cocone.legs[d]
        })
    });
    cocones
}

pub fn all_cocones(diagram: &FunctorData) -> Vec<Cocone> {
    diagram
        .target
        .objects
        .iter()
        .flat_map(|x| cocones_with_nadir(diagram, x))
        .collect()
}

pub fn cocone_factorizations(diagram: &FunctorData, colim: &Cocone, cocone: &Cocone) -> Vec<MorId> {
    let cat = &diagram.target;
    cat.hom(&colim.nadir, &cocone.nadir)
        .into_iter()
        .filter(|u| {
            diagram
                .source
                .objects
                .iter()
                .all(|i| cat.then(&colim.legs[i], u).unwrap() == cocone.legs[i])
        })
        .collect()
}

/// Dual of [`limit`].
pub fn colimit(diagram: &FunctorData) -> Option<Cocone> {
    let cocones = all_cocones(diagram);
    cocones
        .iter()
        .find(|cand| cocones.iter().all(|other| cocone_factorizations(diagram, cand, other).len() == 1))
        .cloned()
}

pub fn colimit_mediator(diagram: &FunctorData, colim: &Cocone, cocone: &Cocone) -> Result<MorId> {
    let mut fs = cocone_factorizations(diagram, colim, cocone);
    match (fs.pop(), fs.pop()) {
        (Some(u), None) => Ok(u),
        (None, _) => Err(Error::boundary("colimit_mediator", "cocone does not factor")),
        _ => Err(Error::invalid("colimit_mediator", "factorization not unique")),
    }
}

/// The cospan shape `0 -> 2 <- 1`, used for pullbacks.
pub fn cospan_shape() -> FinCatData {
    FinCatData::from_graph(&["0", "1", "2"], &[("l", "0", "2"), ("r", "1", "2")], &[]).unwrap()
}

/// The span shape `0 <- 2 -> 1`, used for pushouts.
pub fn span_shape() -> FinCatData {
    FinCatData::from_graph(&["0", "1", "2"], &[("l", "2", "0"), ("r", "2", "1")], &[]).unwrap()
}

/// Diagram of cospan shape picking out `f : A -> C <- B : g`.
pub fn cospan_diagram(cat: &FinCatData, f: &str, g: &str) -> Result<FunctorData> {
    if cat.cod(f) != cat.cod(g) {
        return Err(Error::boundary("cospan_diagram", format!("{f}, {g}")));
    }
    let shape = cospan_shape();
    Ok(FunctorData {
        source: shape,
        target: cat.clone(),
        obj_map: BTreeMap::from([
            ("0".into(), cat.dom(f).clone()),
            ("1".into(), cat.dom(g).clone()),
            ("2".into(), cat.cod(f).clone()),
        ]),
        mor_map: BTreeMap::from([
            ("l".into(), f.to_string()),
            ("r".into(), g.to_string()),
            ("10".into(), cat.id_of(cat.dom(f)).clone()),
            ("11".into(), cat.id_of(cat.dom(g)).clone()),
            ("12".into(), cat.id_of(cat.cod(f)).clone()),
        ]),
    })
}

pub fn span_diagram(cat: &FinCatData, f: &str, g: &str) -> Result<FunctorData> {
    if cat.dom(f) != cat.dom(g) {
        return Err(Error::boundary("span_diagram", format!("{f}, {g}")));
    }
    let shape = span_shape();
    Ok(FunctorData {
        source: shape,
        target: cat.clone(),
        obj_map: BTreeMap::from([
            ("0".into(), cat.cod(f).clone()),
            ("1".into(), cat.cod(g).clone()),
            ("2".into(), cat.dom(f).clone()),
        ]),
        mor_map: BTreeMap::from([
            ("l".into(), f.to_string()),
            ("r".into(), g.to_string()),
            ("10".into(), cat.id_of(cat.cod(f)).clone()),
            ("11".into(), cat.id_of(cat.cod(g)).clone()),
            ("12".into(), cat.id_of(cat.dom(f)).clone()),
        ]),
    })
}

/// A profunctor `P : src -|-> tgt`: a set `P(a,b)` for every pair of objects,
/// contravariant in `a` (left action by src morphisms) and covariant in `b`
/// (right action by tgt morphisms).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProfData {
    pub src: FinCatData,
    pub tgt: FinCatData,
    pub sets: BTreeMap<(ObjId, ObjId), FinSetObj>,
    /// (f : a' -> a in src, b, x in P(a,b)) -> x.f in P(a',b)
    pub lact: BTreeMap<(MorId, ObjId, Elem), Elem>,
    /// (g : b -> b' in tgt, a, x in P(a,b)) -> g.x in P(a,b')
    pub ract: BTreeMap<(MorId, ObjId, Elem), Elem>,
}

impl ProfData {
    pub fn set(&self, a: &str, b: &str) -> &FinSetObj {
        self.sets
            .get(&(a.to_string(), b.to_string()))
            .unwrap_or_else(|| panic!("profunctor has no set at ({a},{b})"))
    }

    pub fn act_left(&self, f: &str, b: &str, x: &Elem) -> &Elem {
        self.lact
            .get(&(f.to_string(), b.to_string(), x.clone()))
            .unwrap_or_else(|| panic!("left action undefined at ({f},{b},{x})"))
    }

    pub fn act_right(&self, g: &str, a: &str, x: &Elem) -> &Elem {
        self.ract
            .get(&(g.to_string(), a.to_string(), x.clone()))
            .unwrap_or_else(|| panic!("right action undefined at ({g},{a},{x})"))
    }

    /// The hom profunctor of a category, the vertical identity in the double
    /// category of categories and profunctors.
    pub fn hom_of(cat: &FinCatData) -> Self {
        let mut sets = BTreeMap::new();
        for a in &cat.objects {
            for b in &cat.objects {
                sets.insert(
                    (a.clone(), b.clone()),
                    FinSetObj::new(cat.hom(a, b).into_iter().map(Elem::new)),
                );
            }
        }
        let mut lact = BTreeMap::new();
        let mut ract = BTreeMap::new();
        for (f, fd, fc) in &cat.morphisms {
            for b in &cat.objects {
                for x in cat.hom(fc, b) {
                    lact.insert(
                        (f.clone(), b.clone(), Elem::new(x.clone())),
                        Elem::new(cat.then(f, &x).unwrap()),
                    );
                }
            }
            for a in &cat.objects {
                for x in cat.hom(a, fd) {
                    ract.insert(
                        (f.clone(), a.clone(), Elem::new(x.clone())),
                        Elem::new(cat.then(&x, f).unwrap()),
                    );
                }
            }
        }
        ProfData {
            src: cat.clone(),
            tgt: cat.clone(),
            sets,
            lact,
            ract,
        }
    }

    /// Constant profunctor with the same fiber everywhere and identity
    /// actions.
    pub fn constant(src: &FinCatData, tgt: &FinCatData, fiber: &FinSetObj) -> Self {
        let mut sets = BTreeMap::new();
        for a in &src.objects {
            for b in &tgt.objects {
                sets.insert((a.clone(), b.clone()), fiber.clone());
            }
        }
        let mut lact = BTreeMap::new();
        for (f, _, _) in &src.morphisms {
            for b in &tgt.objects {
                for x in fiber.elems() {
                    lact.insert((f.clone(), b.clone(), x.clone()), x.clone());
                }
            }
        }
        let mut ract = BTreeMap::new();
        for (g, _, _) in &tgt.morphisms {
            for a in &src.objects {
                for x in fiber.elems() {
                    ract.insert((g.clone(), a.clone(), x.clone()), x.clone());
                }
            }
        }
        ProfData {
            src: src.clone(),
            tgt: tgt.clone(),
            sets,
            lact,
            ract,
        }
    }

    /// Action functoriality: unit and composition laws for both actions, and
    /// the two actions commute.
    pub fn validate(&self) -> LawReport {
        let mut report = LawReport::new();
        for a in &self.src.objects {
            for b in &self.tgt.objects {
                for x in self.set(a, b).elems() {
                    let lx = self.act_left(self.src.id_of(a), b, x);
                    report.check("prof.lact.unit", format!("({a},{b},{x})"), lx == x);
                    let rx = self.act_right(self.tgt.id_of(b), a, x);
                    report.check("prof.ract.unit", format!("({a},{b},{x})"), rx == x);
                }
            }
        }
        for (f, _, fc) in &self.src.morphisms {
            for (f2, _, _) in &self.src.morphisms {
                if self.src.cod(f2) != self.src.dom(f) {
                    continue;
                }
                let comp = self.src.then(f2, f).unwrap();
                for b in &self.tgt.objects {
                    for x in self.set(fc, b).elems() {
                        let step = self.act_left(f2, b, self.act_left(f, b, x)).clone();
                        let direct = self.act_left(&comp, b, x).clone();
                        report.check("prof.lact.comp", format!("({f2},{f},{b},{x})"), step == direct);
                    }
                }
            }
        }
        for (g, gd, _) in &self.tgt.morphisms {
            for (g2, _, _) in &self.tgt.morphisms {
                if self.tgt.dom(g2) != self.tgt.cod(g) {
                    continue;
                }
                let comp = self.tgt.then(g, g2).unwrap();
                for a in &self.src.objects {
                    for x in self.set(a, gd).elems() {
                        let step = self.act_right(g2, a, self.act_right(g, a, x)).clone();
                        let direct = self.act_right(&comp, a, x).clone();
                        report.check("prof.ract.comp", format!("({g},{g2},{a},{x})"), step == direct);
                    }
                }
            }
        }
        for (f, fd, fc) in &self.src.morphisms {
            for (g, gd, _) in &self.tgt.morphisms {
                for x in self.set(fc, gd).elems() {
                    let lr = self.act_right(g, fd, self.act_left(f, gd, x)).clone();
                    let rl = self.act_left(f, self.tgt.cod(g), self.act_right(g, fc, x)).clone();
                    report.check("prof.act.commute", format!("({f},{g},{x})"), lr == rl);
                }
            }
        }
        report
    }
}

/// Element-level bookkeeping for a coend composite: which tagged triple
/// `(b, x, y)` each class label stands for, and conversely the class label
/// of every triple.
#[derive(Debug, Clone, Default)]
pub struct ProfTrace {
    /// (a, c, class label) -> least representative triple
    pub parse: BTreeMap<(ObjId, ObjId, Elem), (ObjId, Elem, Elem)>,
    /// (a, c, triple) -> class label
    pub class: BTreeMap<(ObjId, ObjId, ObjId, Elem, Elem), Elem>,
}

impl ProfTrace {
    pub fn class_of(&self, a: &str, c: &str, b: &str, x: &Elem, y: &Elem) -> &Elem {
        self.class
            .get(&(a.to_string(), c.to_string(), b.to_string(), x.clone(), y.clone()))
            .unwrap_or_else(|| panic!("no class for ({a},{c},{b},{x},{y})"))
    }

    pub fn rep_of(&self, a: &str, c: &str, e: &Elem) -> &(ObjId, Elem, Elem) {
        self.parse
            .get(&(a.to_string(), c.to_string(), e.clone()))
            .unwrap_or_else(|| panic!("no representative for ({a},{c},{e})"))
    }
}

/// Coend composition of profunctors: on `(a,c)` the quotient of
/// `Sum_b P(a,b) x Q(b,c)` by the equivalence generated by
/// `(x.f, y) ~ (x, f.y)`, computed by union-find. Class representatives are
/// the least elements in the global label order.
pub fn prof_compose(p: &ProfData, q: &ProfData) -> Result<ProfData> {
    prof_compose_traced(p, q).map(|(c, _)| c)
}

/// [`prof_compose`] plus the element-level trace.
pub fn prof_compose_traced(p: &ProfData, q: &ProfData) -> Result<(ProfData, ProfTrace)> {
    if p.tgt != q.src {
        return Err(Error::boundary("prof_compose", "middle categories differ"));
    }
    let mid = &p.tgt;
    let carrier = |a: &ObjId, c: &ObjId| -> Vec<(ObjId, Elem, Elem)> {
        let mut v = Vec::new();
        for b in &mid.objects {
            for x in p.set(a, b).elems() {
                for y in q.set(b, c).elems() {
                    v.push((b.clone(), x.clone(), y.clone()));
                }
            }
        }
        v
    };
    let pair_elem = |b: &ObjId, x: &Elem, y: &Elem| pair_label(&Elem::new(b.clone()), &pair_label(x, y));

    fn find(uf: &mut Vec<usize>, i: usize) -> usize {
        if uf[i] != i {
            let r = find(uf, uf[i]);
            uf[i] = r;
        }
        uf[i]
    }

    let mut sets = BTreeMap::new();
    let mut reps: BTreeMap<(ObjId, ObjId), BTreeMap<(ObjId, Elem, Elem), (ObjId, Elem, Elem)>> = BTreeMap::new();
    for a in &p.src.objects {
        for c in &q.tgt.objects {
            let items = carrier(a, c);
            let idx: BTreeMap<&(ObjId, Elem, Elem), usize> =
                items.iter().enumerate().map(|(i, t)| (t, i)).collect();
            let mut uf: Vec<usize> = (0..items.len()).collect();
            // (x.f, y) ~ (x, f.y) for f : b -> b', x in P(a,b), y in Q(b',c)
            for (f, fd, fc) in &mid.morphisms {
                for x in p.set(a, fd).elems() {
                    for y in q.set(fc, c).elems() {
                        let xr = p.act_right(f, a, x).clone();
                        let yl = q.act_left(f, c, y).clone();
                        let i = idx[&(fc.clone(), xr, y.clone())];
                        let j = idx[&(fd.clone(), x.clone(), yl)];
                        let (ri, rj) = (find(&mut uf, i), find(&mut uf, j));
                        if ri != rj {
                            let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
                            uf[hi] = lo;
                        }
                    }
                }
            }
            let mut least: BTreeMap<usize, (ObjId, Elem, Elem)> = BTreeMap::new();
            for (i, t) in items.iter().enumerate() {
                let r = find(&mut uf, i);
                let cur = least.entry(r).or_insert_with(|| t.clone());
                if t < cur {
                    *cur = t.clone();
                }
            }
            let mut rep_map = BTreeMap::new();
            for (i, t) in items.iter().enumerate() {
                let r = find(&mut uf, i);
                rep_map.insert(t.clone(), least[&r].clone());
            }
            let set = FinSetObj::new(
                least
                    .values()
                    .map(|(b, x, y)| pair_elem(b, x, y))
                    .collect::<BTreeSet<_>>(),
            );
            sets.insert((a.clone(), c.clone()), set);
            reps.insert((a.clone(), c.clone()), rep_map);
        }
    }
    let rep_label = |a: &ObjId, c: &ObjId, t: &(ObjId, Elem, Elem)| -> Elem {
        let r = &reps[&(a.clone(), c.clone())][t];
        pair_elem(&r.0, &r.1, &r.2)
    };
    let parse: BTreeMap<(ObjId, ObjId, Elem), (ObjId, Elem, Elem)> = reps
        .iter()
        .flat_map(|((a, c), m)| {
            m.values()
                .map(|t| ((a.clone(), c.clone(), pair_elem(&t.0, &t.1, &t.2)), t.clone()))
                .collect::<Vec<_>>()
        })
        .collect();

    let mut lact = BTreeMap::new();
    for (f, _, fc) in &p.src.morphisms {
        for c in &q.tgt.objects {
            for e in sets[&(fc.clone(), c.clone())].elems() {
                let (b, x, y) = parse[&(fc.clone(), c.clone(), e.clone())].clone();
                let xf = p.act_left(f, &b, &x).clone();
                lact.insert(
                    (f.clone(), c.clone(), e.clone()),
                    rep_label(p.src.dom(f), c, &(b, xf, y)),
                );
            }
        }
    }
    let mut ract = BTreeMap::new();
    for (g, gd, _) in &q.tgt.morphisms {
        for a in &p.src.objects {
            for e in sets[&(a.clone(), gd.clone())].elems() {
                let (b, x, y) = parse[&(a.clone(), gd.clone(), e.clone())].clone();
                let gy = q.act_right(g, &b, &y).clone();
                ract.insert(
                    (g.clone(), a.clone(), e.clone()),
                    rep_label(a, q.tgt.cod(g), &(b, x, gy)),
                );
            }
        }
    }
    let mut trace = ProfTrace::default();
    for ((a, c), m) in &reps {
        for (t, rep) in m {
            let label = pair_elem(&rep.0, &rep.1, &rep.2);
            trace
                .class
                .insert((a.clone(), c.clone(), t.0.clone(), t.1.clone(), t.2.clone()), label.clone());
            trace.parse.insert((a.clone(), c.clone(), label), rep.clone());
        }
    }
    Ok((
        ProfData {
            src: p.src.clone(),
            tgt: q.tgt.clone(),
            sets,
            lact,
            ract,
        },
        trace,
    ))
}

/// The pullback category of two functors into a common target: objects are
/// pairs of objects with equal images, morphisms pairs of morphisms, both
/// labeled canonically. Returns the category with its two projections.
pub fn cat_pullback(f: &FunctorData, g: &FunctorData) -> Result<(FinCatData, FunctorData, FunctorData)> {
    if f.target != g.target {
        return Err(Error::boundary("cat_pullback", "targets differ"));
    }
    let pl = |a: &str, b: &str| pair_label(&Elem::new(a.to_string()), &Elem::new(b.to_string())).0;
    let mut objects = Vec::new();
    for a in &f.source.objects {
        for b in &g.source.objects {
            if f.on_obj(a) == g.on_obj(b) {
                objects.push(pl(a, b));
            }
        }
    }
    let mut morphisms = Vec::new();
    for (m1, d1, c1) in &f.source.morphisms {
        for (m2, d2, c2) in &g.source.morphisms {
            if f.on_mor(m1) == g.on_mor(m2) {
                morphisms.push((pl(m1, m2), pl(d1, d2), pl(c1, c2)));
            }
        }
    }
    let identity: BTreeMap<ObjId, MorId> = f
        .source
        .objects
        .iter()
        .flat_map(|a| {
            g.source.objects.iter().filter_map(|b| {
                (f.on_obj(a) == g.on_obj(b))
                    .then(|| (pl(a, b), pl(f.source.id_of(a), g.source.id_of(b))))
            })
        })
        .collect();
    let mut comp = BTreeMap::new();
    for (m, _, mc) in &morphisms {
        for (n, nd, _) in &morphisms {
            if mc != nd {
                continue;
            }
            let (m1, m2) = split_pair_ids(m);
            let (n1, n2) = split_pair_ids(n);
            comp.insert(
                (m.clone(), n.clone()),
                pl(&f.source.then(&m1, &n1)?, &g.source.then(&m2, &n2)?),
            );
        }
    }
    let cat = FinCatData {
        objects,
        morphisms,
        identity,
        comp,
    };
    let proj = |first: bool, src_of: &FinCatData| -> FunctorData {
        FunctorData {
            source: cat.clone(),
            target: src_of.clone(),
            obj_map: cat
                .objects
                .iter()
                .map(|o| {
                    let (a, b) = split_pair_ids(o);
                    (o.clone(), if first { a } else { b })
                })
                .collect(),
            mor_map: cat
                .morphisms
                .iter()
                .map(|(m, _, _)| {
                    let (a, b) = split_pair_ids(m);
                    (m.clone(), if first { a } else { b })
                })
                .collect(),
        }
    };
    let p1 = proj(true, &f.source);
    let p2 = proj(false, &g.source);
    Ok((cat, p1, p2))
}

/// Splits a canonical pair label at the top-level comma.
pub fn split_pair_ids(s: &str) -> (String, String) {
    let e = crate::doublecat::matrix::split_pair(&Elem::new(s.to_string()));
    (e.0 .0, e.1 .0)
}

/// Mediating functor into a pullback category from a commuting cone of
/// functors.
pub fn cat_pb_mediate(
    pbcat: &FinCatData,
    u: &FunctorData,
    w: &FunctorData,
) -> Result<FunctorData> {
    if u.source != w.source {
        return Err(Error::boundary("cat_pb_mediate", "cone sources differ"));
    }
    let pl = |a: &str, b: &str| pair_label(&Elem::new(a.to_string()), &Elem::new(b.to_string())).0;
    Ok(FunctorData {
        source: u.source.clone(),
        target: pbcat.clone(),
        obj_map: u
            .source
            .objects
            .iter()
            .map(|a| (a.clone(), pl(u.on_obj(a), w.on_obj(a))))
            .collect(),
        mor_map: u
            .source
            .morphisms
            .iter()
            .map(|(m, _, _)| (m.clone(), pl(u.on_mor(m), w.on_mor(m))))
            .collect(),
    })
}

/// A finite strict 2-category: objects, 1-cells with a strict composition
/// table, 2-cells with vertical and horizontal composition tables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fin2CatData {
    pub objects: Vec<ObjId>,
    /// (id, dom, cod)
    pub one_cells: Vec<(MorId, ObjId, ObjId)>,
    pub id1: BTreeMap<ObjId, MorId>,
    pub comp1: BTreeMap<(MorId, MorId), MorId>,
    /// (id, dom 1-cell, cod 1-cell)
    pub two_cells: Vec<(MorId, MorId, MorId)>,
    pub id2: BTreeMap<MorId, MorId>,
    /// vertical: (alpha : f => g, beta : g => h) -> f => h
    pub vcomp: BTreeMap<(MorId, MorId), MorId>,
    /// horizontal: (alpha over A->B, beta over B->C) -> composite over A->C
    pub hcomp: BTreeMap<(MorId, MorId), MorId>,
}

impl Fin2CatData {
    pub fn dom1(&self, f: &str) -> &ObjId {
        &self
            .one_cells
            .iter()
            .find(|(m, _, _)| m == f)
            .unwrap_or_else(|| panic!("unknown 1-cell {f}"))
            .1
    }
    pub fn cod1(&self, f: &str) -> &ObjId {
        &self
            .one_cells
            .iter()
            .find(|(m, _, _)| m == f)
            .unwrap_or_else(|| panic!("unknown 1-cell {f}"))
            .2
    }
    pub fn dom2(&self, a: &str) -> &MorId {
        &self
            .two_cells
            .iter()
            .find(|(m, _, _)| m == a)
            .unwrap_or_else(|| panic!("unknown 2-cell {a}"))
            .1
    }
    pub fn cod2(&self, a: &str) -> &MorId {
        &self
            .two_cells
            .iter()
            .find(|(m, _, _)| m == a)
            .unwrap_or_else(|| panic!("unknown 2-cell {a}"))
            .2
    }
    pub fn then1(&self, f: &str, g: &str) -> Result<MorId> {
        if self.cod1(f) != self.dom1(g) {
            return Err(Error::boundary("Fin2Cat::then1", format!("{f} then {g}")));
        }
        self.comp1
            .get(&(f.to_string(), g.to_string()))
            .cloned()
            .ok_or_else(|| Error::invalid("Fin2Cat::then1", format!("missing ({f},{g})")))
    }
    pub fn vthen(&self, a: &str, b: &str) -> Result<MorId> {
        if self.cod2(a) != self.dom2(b) {
            return Err(Error::boundary("Fin2Cat::vthen", format!("{a} then {b}")));
        }
        self.vcomp
            .get(&(a.to_string(), b.to_string()))
            .cloned()
            .ok_or_else(|| Error::invalid("Fin2Cat::vthen", format!("missing ({a},{b})")))
    }
    pub fn hthen(&self, a: &str, b: &str) -> Result<MorId> {
        if self.cod1(self.dom2(a)) != self.dom1(self.dom2(b)) {
            return Err(Error::boundary("Fin2Cat::hthen", format!("{a} beside {b}")));
        }
        self.hcomp
            .get(&(a.to_string(), b.to_string()))
            .cloned()
            .ok_or_else(|| Error::invalid("Fin2Cat::hthen", format!("missing ({a},{b})")))
    }
    pub fn id2_of(&self, f: &str) -> &MorId {
        self.id2.get(f).unwrap_or_else(|| panic!("no identity 2-cell on {f}"))
    }
    pub fn is_id2(&self, a: &str) -> bool {
        self.id2.values().any(|m| m == a)
    }
    /// Left whisker: f * beta for a 1-cell f and a 2-cell beta.
    pub fn whisker_l(&self, f: &str, beta: &str) -> Result<MorId> {
        self.hthen(self.id2_of(f), beta)
    }
    /// Right whisker: alpha * g.
    pub fn whisker_r(&self, alpha: &str, g: &str) -> Result<MorId> {
        self.hthen(alpha, self.id2_of(g))
    }

    /// The one-object, one-1-cell, one-2-cell 2-category.
    pub fn trivial() -> Self {
        Fin2CatData {
            objects: vec!["*".into()],
            one_cells: vec![("e".into(), "*".into(), "*".into())],
            id1: BTreeMap::from([("*".into(), "e".into())]),
            comp1: BTreeMap::from([(("e".into(), "e".into()), "e".into())]),
            two_cells: vec![("1e".into(), "e".into(), "e".into())],
            id2: BTreeMap::from([("e".into(), "1e".into())]),
            vcomp: BTreeMap::from([(("1e".into(), "1e".into()), "1e".into())]),
            hcomp: BTreeMap::from([(("1e".into(), "1e".into()), "1e".into())]),
        }
    }

    /// A monoid presented as a one-object 2-category with only identity
    /// 2-cells.
    pub fn from_monoid(elems: &[&str], unit: &str, table: &[(&str, &str, &str)]) -> Self {
        let one_cells = elems
            .iter()
            .map(|e| (e.to_string(), "*".to_string(), "*".to_string()))
            .collect();
        let comp1 = table
            .iter()
            .map(|(a, b, c)| ((a.to_string(), b.to_string()), c.to_string()))
            .collect();
        let two_cells: Vec<(MorId, MorId, MorId)> = elems
            .iter()
            .map(|e| (format!("1{e}"), e.to_string(), e.to_string()))
            .collect();
        let id2 = elems.iter().map(|e| (e.to_string(), format!("1{e}"))).collect();
        let vcomp = elems
            .iter()
            .map(|e| ((format!("1{e}"), format!("1{e}")), format!("1{e}")))
            .collect();
        let hcomp = table
            .iter()
            .map(|(a, b, c)| ((format!("1{a}"), format!("1{b}")), format!("1{c}")))
            .collect();
        Fin2CatData {
            objects: vec!["*".into()],
            one_cells,
            id1: BTreeMap::from([("*".into(), unit.to_string())]),
            comp1,
            two_cells,
            id2,
            vcomp,
            hcomp,
        }
    }
}

/// Exhaustive 2-category law check: both compositions associative and
/// unital, boundaries consistent, and the middle-four interchange holds.
pub fn validate2(tc: &Fin2CatData) -> LawReport {
    let mut report = LawReport::new();
    let under = FinCatData {
        objects: tc.objects.clone(),
        morphisms: tc.one_cells.clone(),
        identity: tc.id1.clone(),
        comp: tc.comp1.clone(),
    };
    report.merge(validate(&under));
    for (a, _, _) in &tc.two_cells {
        let ok = tc.dom1(tc.dom2(a)) == tc.dom1(tc.cod2(a)) && tc.cod1(tc.dom2(a)) == tc.cod1(tc.cod2(a));
        report.check("two.boundary.parallel", a.clone(), ok);
    }
    if !report.passed() {
        return report;
    }
    for f in tc.one_cells.iter().map(|(m, _, _)| m) {
        let i = tc.id2_of(f);
        report.check("two.id2.boundary", f.clone(), tc.dom2(i) == f && tc.cod2(i) == f);
    }
    let composable_v: Vec<(&MorId, &MorId)> = tc
        .two_cells
        .iter()
        .flat_map(|(a, _, ac)| {
            tc.two_cells
                .iter()
                .filter(move |(_, bd, _)| bd == ac)
                .map(move |(b, _, _)| (a, b))
        })
        .collect();
    for (a, b) in &composable_v {
        match tc.vthen(a, b) {
            Err(_) => report.record("two.vcomp.total", format!("({a},{b})"), false, "missing"),
            Ok(c) => {
                let ok = tc.dom2(&c) == tc.dom2(a) && tc.cod2(&c) == tc.cod2(b);
                report.check("two.vcomp.boundary", format!("({a},{b})"), ok);
            }
        }
    }
    if !report.passed() {
        return report;
    }
    for (a, b) in &composable_v {
        for (c, cd, _) in &tc.two_cells {
            if cd != tc.cod2(b) {
                continue;
            }
            let lhs = tc.vthen(&tc.vthen(a, b).unwrap(), c).unwrap();
            let rhs = tc.vthen(a, &tc.vthen(b, c).unwrap()).unwrap();
            report.check("two.vcomp.assoc", format!("({a},{b},{c})"), lhs == rhs);
        }
    }
    for (a, ad, ac) in &tc.two_cells {
        let l = tc.vthen(tc.id2_of(ad), a).unwrap();
        report.check("two.vcomp.unit.left", a.clone(), l == *a);
        let r = tc.vthen(a, tc.id2_of(ac)).unwrap();
        report.check("two.vcomp.unit.right", a.clone(), r == *a);
    }
    let composable_h: Vec<(&MorId, &MorId)> = tc
        .two_cells
        .iter()
        .flat_map(|(a, ad, _)| {
            let b_obj = tc.cod1(ad).clone();
            tc.two_cells
                .iter()
                .filter(move |(_, bd, _)| tc.dom1(bd) == &b_obj)
                .map(move |(b, _, _)| (a, b))
        })
        .collect();
    for (a, b) in &composable_h {
        match tc.hthen(a, b) {
            Err(_) => report.record("two.hcomp.total", format!("({a},{b})"), false, "missing"),
            Ok(c) => {
                let want_dom = tc.then1(tc.dom2(a), tc.dom2(b)).unwrap();
                let want_cod = tc.then1(tc.cod2(a), tc.cod2(b)).unwrap();
                let ok = tc.dom2(&c) == &want_dom && tc.cod2(&c) == &want_cod;
                report.check("two.hcomp.boundary", format!("({a},{b})"), ok);
            }
        }
    }
    if !report.passed() {
        return report;
    }
    for (a, b) in &composable_h {
        for (c, cd, _) in &tc.two_cells {
            if tc.dom1(cd) != tc.cod1(tc.dom2(b)) {
                continue;
            }
            let lhs = tc.hthen(&tc.hthen(a, b).unwrap(), c).unwrap();
            let rhs = tc.hthen(a, &tc.hthen(b, c).unwrap()).unwrap();
            report.check("two.hcomp.assoc", format!("({a},{b},{c})"), lhs == rhs);
        }
    }
    for (a, ad, ac) in &tc.two_cells {
        let li = tc.id2_of(tc.id1[tc.dom1(ad)].as_str());
        let l = tc.hthen(li, a).unwrap();
        report.check("two.hcomp.unit.left", a.clone(), l == *a);
        let ri = tc.id2_of(tc.id1[tc.cod1(ac)].as_str());
        let r = tc.hthen(a, ri).unwrap();
        report.check("two.hcomp.unit.right", a.clone(), r == *a);
    }
    for (f, _, fc) in &tc.one_cells {
        for (g, gd, _) in &tc.one_cells {
            if fc != gd {
                continue;
            }
            let got = tc.hthen(tc.id2_of(f), tc.id2_of(g)).unwrap();
            let want = tc.id2_of(&tc.then1(f, g).unwrap()).clone();
            report.check("two.hcomp.id", format!("({f},{g})"), got == want);
        }
    }
    for (a, b) in &composable_v {
        for (c, d) in &composable_v {
            if tc.dom1(tc.dom2(c)) != tc.cod1(tc.dom2(a)) {
                continue;
            }
            let lhs = tc.hthen(&tc.vthen(a, b).unwrap(), &tc.vthen(c, d).unwrap()).unwrap();
            let rhs = tc.vthen(&tc.hthen(a, c).unwrap(), &tc.hthen(b, d).unwrap()).unwrap();
            report.check("two.interchange", format!("({a},{b};{c},{d})"), lhs == rhs);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_category_is_valid() {
        assert!(validate(&FinCatData::terminal()).passed());
    }

    #[test]
    fn free_arrow_is_valid() {
        let cat = FinCatData::from_graph(&["0", "1"], &[("a", "0", "1")], &[]).unwrap();
        assert_eq!(cat.morphisms.len(), 3);
        assert!(validate(&cat).passed());
    }

    #[test]
    fn corrupted_composite_is_reported() {
        let mut cat = FinCatData::from_graph(&["0", "1"], &[("a", "0", "1")], &[]).unwrap();
        cat.comp.insert(("10".into(), "a".into()), "10".into());
        let report = validate(&cat);
        assert!(!report.passed());
        assert!(report
            .failures()
            .any(|e| e.law == "cat.comp.boundary" || e.law == "cat.unit.left"));
    }

    #[test]
    fn limit_of_empty_diagram_is_terminal() {
        let cat = FinCatData::from_graph(&["t", "x"], &[("u", "x", "t")], &[]).unwrap();
        let diagram = FunctorData {
            source: FinCatData::empty(),
            target: cat,
            obj_map: BTreeMap::new(),
            mor_map: BTreeMap::new(),
        };
        let lim = limit(&diagram).unwrap();
        assert_eq!(lim.apex, "t");
    }

    #[test]
    fn pullback_in_free_commutative_square() {
        let cat = FinCatData::from_graph(
            &["p", "a", "b", "c"],
            &[("f", "p", "a"), ("g", "p", "b"), ("h", "a", "c"), ("k", "b", "c")],
            &[("g.k", "f.h")],
        )
        .unwrap();
        assert!(validate(&cat).passed());
        let diagram = cospan_diagram(&cat, "h", "k").unwrap();
        let lim = limit(&diagram).unwrap();
        assert_eq!(lim.apex, "p");
        assert_eq!(lim.legs["0"], "f");
        assert_eq!(lim.legs["1"], "g");
        // the limiting cone mediates uniquely from every cone
        for cone in all_cones(&diagram) {
            assert_eq!(cone_factorizations(&diagram, &lim, &cone).len(), 1);
        }
    }

    #[test]
    fn no_cone_in_discrete_category() {
        let cat = FinCatData::discrete(&["x", "y"]);
        let shape = FinCatData::discrete(&["0", "1"]);
        let diagram = FunctorData {
            source: shape,
            target: cat,
            obj_map: BTreeMap::from([("0".into(), "x".into()), ("1".into(), "y".into())]),
            mor_map: BTreeMap::from([("10".into(), "1x".into()), ("11".into(), "1y".into())]),
        };
        assert!(limit(&diagram).is_none());
    }

    #[test]
    fn colimit_dualizes() {
        let cat = FinCatData::from_graph(&["i", "x"], &[("u", "i", "x")], &[]).unwrap();
        let diagram = FunctorData {
            source: FinCatData::empty(),
            target: cat,
            obj_map: BTreeMap::new(),
            mor_map: BTreeMap::new(),
        };
        let colim = colimit(&diagram).unwrap();
        assert_eq!(colim.nadir, "i");
    }

    #[test]
    fn hom_profunctor_is_lawful() {
        let cat = FinCatData::from_graph(&["0", "1"], &[("a", "0", "1")], &[]).unwrap();
        assert!(ProfData::hom_of(&cat).validate().passed());
    }

    #[test]
    fn hom_composed_with_p_is_p_componentwise() {
        let one = FinCatData::terminal();
        let p = ProfData::constant(&one, &one, &FinSetObj::from_labels(["x", "y"]));
        let hom = ProfData::hom_of(&one);
        let c = prof_compose(&hom, &p).unwrap();
        for s in c.sets.values() {
            assert_eq!(s.len(), 2);
        }
    }

    #[test]
    fn empty_middle_matching_gives_empty_composite() {
        // p(*,-) supported at 0 only, q(-,*) supported at 1 only; composing
        // over the discrete two-object middle gives the empty profunctor.
        let one = FinCatData::terminal();
        let two = FinCatData::discrete(&["0", "1"]);
        let fiber = FinSetObj::point();
        let mut p = ProfData::constant(&one, &two, &FinSetObj::empty());
        p.sets.insert(("*".into(), "0".into()), fiber.clone());
        for x in fiber.elems() {
            p.ract.insert(("10".into(), "*".into(), x.clone()), x.clone());
            p.lact.insert(("1*".into(), "0".into(), x.clone()), x.clone());
        }
        let mut q = ProfData::constant(&two, &one, &FinSetObj::empty());
        q.sets.insert(("1".into(), "*".into()), fiber.clone());
        for x in fiber.elems() {
            q.lact.insert(("11".into(), "*".into(), x.clone()), x.clone());
            q.ract.insert(("1*".into(), "1".into(), x.clone()), x.clone());
        }
        assert!(p.validate().passed());
        assert!(q.validate().passed());
        let c = prof_compose(&p, &q).unwrap();
        assert!(c.set("*", "*").is_empty());
    }

    #[test]
    fn product_sized_composite_over_point_middle() {
        let one = FinCatData::terminal();
        let p = ProfData::constant(&one, &one, &FinSetObj::from_labels(["a", "b"]));
        let q = ProfData::constant(&one, &one, &FinSetObj::from_labels(["u", "v", "w"]));
        let c = prof_compose(&p, &q).unwrap();
        assert_eq!(c.set("*", "*").len(), 6);
    }

    #[test]
    fn trivial_two_category_valid() {
        assert!(validate2(&Fin2CatData::trivial()).passed());
        let monoid = Fin2CatData::from_monoid(
            &["e", "w"],
            "e",
            &[("e", "e", "e"), ("e", "w", "w"), ("w", "e", "w"), ("w", "w", "w")],
        );
        assert!(validate2(&monoid).passed());
    }

    #[test]
    fn corrupted_interchange_reported() {
        let mut m = Fin2CatData::from_monoid(
            &["e", "w"],
            "e",
            &[("e", "e", "e"), ("e", "w", "w"), ("w", "e", "w"), ("w", "w", "w")],
        );
        m.hcomp.insert(("1w".into(), "1w".into()), "1e".into());
        assert!(!validate2(&m).passed());
    }
}
