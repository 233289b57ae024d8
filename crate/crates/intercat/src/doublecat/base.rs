//! Computable base categories: the interface the span/cospan constructions
//! need from a category, and the two implementations used throughout — the
//! category of finite sets with its canonical choices, and finitely
//! presented categories with search-based choices.

use crate::fincat::{
    colimit, cospan_diagram, limit, span_diagram, Cocone, Cone,
    FinCatData,
};
use crate::finset::{
    classify, pullback_mediator, pullback_variant, pushout_mediator, pushout_variant, CospFS,
    FinFn, FinSetObj, PbVariant, SpanFS,
};
use crate::{Error, Result};
use std::fmt::Debug;

/// Everything a sort element must support: structural equality, a total
/// order for canonical enumeration, and debug rendering for witnesses.
pub trait Data: Clone + Eq + Ord + Debug {}
impl<T: Clone + Eq + Ord + Debug> Data for T {}

/// A chosen pullback: apex with the two projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pb<O, M> {
    pub apex: O,
    pub p1: M,
    pub p2: M,
}

/// A chosen pushout: nadir with the two injections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Po<O, M> {
    pub nadir: O,
    pub j1: M,
    pub j2: M,
}

/// A category with computable structure: identities, composition, and
/// (where they exist) chosen pullbacks and pushouts with mediators.
pub trait CompCat {
    type O: Data;
    type M: Data;

    fn dom(&self, m: &Self::M) -> Self::O;
    fn cod(&self, m: &Self::M) -> Self::O;
    fn id(&self, o: &Self::O) -> Self::M;
    /// Diagrammatic composite: f then g.
    fn then(&self, f: &Self::M, g: &Self::M) -> Result<Self::M>;

    fn is_identity(&self, m: &Self::M) -> bool {
        *m == self.id(&self.dom(m))
    }

    /// Chosen pullback of the cospan `f : A -> C <- B : g`.
    fn pullback(&self, f: &Self::M, g: &Self::M) -> Result<Pb<Self::O, Self::M>>;

    /// An alternative chosen pullback with the same universal property but a
    /// different canonical presentation. Instances that cannot offer one just
    /// return the primary choice. Used to realize deliberately non-normal
    /// pullback structures.
    fn pullback_alt(&self, f: &Self::M, g: &Self::M) -> Result<Pb<Self::O, Self::M>> {
        self.pullback(f, g)
    }

    /// Unique mediator into a chosen pullback from the commuting cone
    /// `(u, w)` with `u;f = w;g`.
    fn pb_mediate(&self, pb: &Pb<Self::O, Self::M>, u: &Self::M, w: &Self::M) -> Result<Self::M>;

    /// Chosen pushout of the span `f : C -> A`, `g : C -> B`.
    fn pushout(&self, f: &Self::M, g: &Self::M) -> Result<Po<Self::O, Self::M>>;

    fn pushout_alt(&self, f: &Self::M, g: &Self::M) -> Result<Po<Self::O, Self::M>> {
        self.pushout(f, g)
    }

    /// Unique mediator out of a chosen pushout against the commuting cocone
    /// `(u, w)` with `f;u = g;w`.
    fn po_mediate(&self, src: (&Self::M, &Self::M), po: &Po<Self::O, Self::M>, u: &Self::M, w: &Self::M) -> Result<Self::M>;

    fn is_mono(&self, m: &Self::M) -> bool;
    fn is_epi(&self, m: &Self::M) -> bool;
    fn is_iso(&self, m: &Self::M) -> bool {
        self.invert(m).is_some()
    }
    fn invert(&self, m: &Self::M) -> Option<Self::M>;

    /// All morphisms between two objects, when enumerable.
    fn hom_between(&self, a: &Self::O, b: &Self::O) -> Option<Vec<Self::M>>;
}

/// The category of finite sets and functions with the canonical labeled
/// pullbacks and pushouts. `variant` selects the chosen pullback/pushout
/// presentation; `alt` choices are the swapped-label ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FinSetCat {
    pub collapse_identities: bool,
}

impl FinSetCat {
    pub fn new() -> Self {
        FinSetCat {
            collapse_identities: false,
        }
    }

    fn variant(&self) -> PbVariant {
        if self.collapse_identities {
            PbVariant::Collapsed
        } else {
            PbVariant::Plain
        }
    }
}

impl CompCat for FinSetCat {
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

    fn pullback(&self, f: &FinFn, g: &FinFn) -> Result<Pb<FinSetObj, FinFn>> {
        let span = pullback_variant(&CospFS::new(f.clone(), g.clone())?, self.variant());
        Ok(Pb {
            apex: span.apex().clone(),
            p1: span.left,
            p2: span.right,
        })
    }

    fn pullback_alt(&self, f: &FinFn, g: &FinFn) -> Result<Pb<FinSetObj, FinFn>> {
        let span = pullback_variant(&CospFS::new(f.clone(), g.clone())?, PbVariant::Swapped);
        Ok(Pb {
            apex: span.apex().clone(),
            p1: span.left,
            p2: span.right,
        })
    }

    fn pb_mediate(&self, pb: &Pb<FinSetObj, FinFn>, u: &FinFn, w: &FinFn) -> Result<FinFn> {
        let span = SpanFS::new(pb.p1.clone(), pb.p2.clone())?;
        pullback_mediator(&span, u, w)
    }

    fn pushout(&self, f: &FinFn, g: &FinFn) -> Result<Po<FinSetObj, FinFn>> {
        let cosp = pushout_variant(&SpanFS::new(f.clone(), g.clone())?, self.variant());
        Ok(Po {
            nadir: cosp.nadir().clone(),
            j1: cosp.left,
            j2: cosp.right,
        })
    }

    fn pushout_alt(&self, f: &FinFn, g: &FinFn) -> Result<Po<FinSetObj, FinFn>> {
        let cosp = pushout_variant(&SpanFS::new(f.clone(), g.clone())?, PbVariant::Swapped);
        Ok(Po {
            nadir: cosp.nadir().clone(),
            j1: cosp.left,
            j2: cosp.right,
        })
    }

    fn po_mediate(&self, src: (&FinFn, &FinFn), po: &Po<FinSetObj, FinFn>, u: &FinFn, w: &FinFn) -> Result<FinFn> {
        let span = SpanFS::new(src.0.clone(), src.1.clone())?;
        let cosp = CospFS::new(po.j1.clone(), po.j2.clone())?;
        pushout_mediator(&span, &cosp, u, w)
    }

    fn is_mono(&self, m: &FinFn) -> bool {
        classify(m).mono
    }
    fn is_epi(&self, m: &FinFn) -> bool {
        classify(m).epi
    }
    fn invert(&self, m: &FinFn) -> Option<FinFn> {
        m.inverse()
    }

    fn hom_between(&self, a: &FinSetObj, b: &FinSetObj) -> Option<Vec<FinFn>> {
        Some(crate::finset::all_fns(a, b))
    }
}

/// A finitely presented category as a computable category. Pullbacks and
/// pushouts are found by exhaustive cone search; mono/epi are decided by
/// cancellability, which is the correct notion in an arbitrary category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCat {
    pub cat: FinCatData,
}

impl TableCat {
    pub fn new(cat: FinCatData) -> Self {
        TableCat { cat }
    }
}

impl CompCat for TableCat {
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

    fn pullback(&self, f: &String, g: &String) -> Result<Pb<String, String>> {
        let diagram = cospan_diagram(&self.cat, f, g)?;
        let Cone { apex, legs } = limit(&diagram)
            .ok_or_else(|| Error::Missing(format!("pullback of ({f},{g})")))?;
        Ok(Pb {
            apex,
            p1: legs["0"].clone(),
            p2: legs["1"].clone(),
        })
    }

    fn pb_mediate(&self, pb: &Pb<String, String>, u: &String, w: &String) -> Result<String> {
        // the mediator is the unique morphism into the apex commuting with
        // both projections; found by search
        let src = self.cat.dom(u).clone();
        let mut found = None;
        for cand in self.cat.hom(&src, &pb.apex) {
            if self.cat.then(&cand, &pb.p1)? == *u && self.cat.then(&cand, &pb.p2)? == *w {
                if found.is_some() {
                    return Err(Error::invalid("pb_mediate", "non-unique mediator"));
                }
                found = Some(cand);
            }
        }
        found.ok_or_else(|| Error::boundary("pb_mediate", "cone does not factor"))
    }

    fn pushout(&self, f: &String, g: &String) -> Result<Po<String, String>> {
        let diagram = span_diagram(&self.cat, f, g)?;
        let Cocone { nadir, legs } = colimit(&diagram)
            .ok_or_else(|| Error::Missing(format!("pushout of ({f},{g})")))?;
        Ok(Po {
            nadir,
            j1: legs["0"].clone(),
            j2: legs["1"].clone(),
        })
    }

    fn po_mediate(&self, _src: (&String, &String), po: &Po<String, String>, u: &String, w: &String) -> Result<String> {
        let tgt = self.cat.cod(u).clone();
        let mut found = None;
        for cand in self.cat.hom(&po.nadir, &tgt) {
            if self.cat.then(&po.j1, &cand)? == *u && self.cat.then(&po.j2, &cand)? == *w {
                if found.is_some() {
                    return Err(Error::invalid("po_mediate", "non-unique mediator"));
                }
                found = Some(cand);
            }
        }
        found.ok_or_else(|| Error::boundary("po_mediate", "cocone does not factor"))
    }

    fn is_mono(&self, m: &String) -> bool {
        self.cat.is_mono(m)
    }
    fn is_epi(&self, m: &String) -> bool {
        self.cat.is_epi(m)
    }
    fn invert(&self, m: &String) -> Option<String> {
        self.cat.inverse(m)
    }

    fn hom_between(&self, a: &String, b: &String) -> Option<Vec<String>> {
        Some(self.cat.hom(a, b))
    }
}

/// Verifies that a claimed pullback satisfies the universal property against
/// all cones built from `test_objects`: every commuting cone factors through
/// the apex exactly once.
pub fn verify_pullback<C: CompCat>(
    c: &C,
    f: &C::M,
    g: &C::M,
    pb: &Pb<C::O, C::M>,
    test_objects: &[C::O],
) -> bool {
    // projections commute
    let Ok(lhs) = c.then(&pb.p1, f) else { return false };
    let Ok(rhs) = c.then(&pb.p2, g) else { return false };
    if lhs != rhs {
        return false;
    }
    for x in test_objects {
        let Some(homs_a) = c.hom_between(x, &c.dom(f)) else { return true };
        let homs_b = c.hom_between(x, &c.dom(g)).unwrap_or_default();
        for u in &homs_a {
            for w in &homs_b {
                if c.then(u, f).ok() != c.then(w, g).ok() {
                    continue;
                }
                let mediators: Vec<_> = c
                    .hom_between(x, &pb.apex)
                    .unwrap_or_default()
                    .into_iter()
                    .filter(|m| c.then(m, &pb.p1).ok().as_ref() == Some(u) && c.then(m, &pb.p2).ok().as_ref() == Some(w))
                    .collect();
                if mediators.len() != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Dual of [`verify_pullback`].
pub fn verify_pushout<C: CompCat>(
    c: &C,
    f: &C::M,
    g: &C::M,
    po: &Po<C::O, C::M>,
    test_objects: &[C::O],
) -> bool {
    let Ok(lhs) = c.then(f, &po.j1) else { return false };
    let Ok(rhs) = c.then(g, &po.j2) else { return false };
    if lhs != rhs {
        return false;
    }
    for x in test_objects {
        let Some(homs_a) = c.hom_between(&c.cod(f), x) else { return true };
        let homs_b = c.hom_between(&c.cod(g), x).unwrap_or_default();
        for u in &homs_a {
            for w in &homs_b {
                if c.then(f, u).ok() != c.then(g, w).ok() {
                    continue;
                }
                let mediators: Vec<_> = c
                    .hom_between(&po.nadir, x)
                    .unwrap_or_default()
                    .into_iter()
                    .filter(|m| c.then(&po.j1, m).ok().as_ref() == Some(u) && c.then(&po.j2, m).ok().as_ref() == Some(w))
                    .collect();
                if mediators.len() != 1 {
                    return false;
                }
            }
        }
    }
    true
}
