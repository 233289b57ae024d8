//! Finite sets and functions with canonical, deterministic pullbacks,
//! pushouts, spans and cospans.
//!
//! Every operation here is pure and returns the same labels for the same
//! inputs. Pullback apexes are sets of pair labels `"(a,b)"` ordered
//! lexicographically; pushout nadirs are quotient classes labeled by the
//! sorted list of their tagged members, e.g. `"{L:a,R:c}"`. Mediators are
//! computed by search against these chosen objects, so they work uniformly
//! for the plain, swapped and collapsed pullback variants used by the double
//! category layer.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A set element. Labels are compared by exact equality and ordered
/// lexicographically; this order is the canonical global order on elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub String);

impl Elem {
    pub fn new(label: impl Into<String>) -> Self {
        Elem(label.into())
    }
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Elem {
    fn from(s: &str) -> Self {
        Elem(s.to_string())
    }
}

/// Label of the canonical pair element of a pullback apex.
pub fn pair_label(a: &Elem, b: &Elem) -> Elem {
    Elem(format!("({},{})", a.0, b.0))
}

/// A finite set: an ordered, duplicate-free sequence of elements. Equality
/// of objects is sequence equality, so two sets are equal exactly when they
/// have the same labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FinSetObj {
    elems: Vec<Elem>,
}

impl FinSetObj {
    /// Builds a set from the given elements, sorting them into the canonical
    /// global order. Panics on duplicate labels: a duplicate means two
    /// distinct elements collided, which is a construction bug upstream.
    pub fn new(elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut v: Vec<Elem> = elems.into_iter().collect();
        v.sort();
        for w in v.windows(2) {
            assert!(w[0] != w[1], "duplicate label {:?} in FinSetObj", w[0]);
        }
        FinSetObj { elems: v }
    }

    pub fn from_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        Self::new(labels.into_iter().map(|s| Elem(s.into())))
    }

    pub fn empty() -> Self {
        FinSetObj { elems: vec![] }
    }

    /// The singleton `{*}`.
    pub fn point() -> Self {
        Self::from_labels(["*"])
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: &Elem) -> bool {
        self.elems.binary_search(e).is_ok()
    }
}

impl fmt::Display for FinSetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A total function between finite sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FinFn {
    pub dom: FinSetObj,
    pub cod: FinSetObj,
    map: BTreeMap<Elem, Elem>,
}

impl FinFn {
    pub fn new(
        dom: FinSetObj,
        cod: FinSetObj,
        map: impl IntoIterator<Item = (Elem, Elem)>,
    ) -> Result<Self> {
        let map: BTreeMap<Elem, Elem> = map.into_iter().collect();
        for d in dom.elems() {
            let img = map
                .get(d)
                .ok_or_else(|| Error::invalid("FinFn", format!("no image for {d}")))?;
            if !cod.contains(img) {
                return Err(Error::invalid(
                    "FinFn",
                    format!("image {img} of {d} is not in the codomain"),
                ));
            }
        }
        if map.len() != dom.len() {
            return Err(Error::invalid("FinFn", "map defined outside the domain"));
        }
        Ok(FinFn { dom, cod, map })
    }

    /// Builds a function from a rule; every image must land in `cod`.
    pub fn from_rule(dom: FinSetObj, cod: FinSetObj, f: impl Fn(&Elem) -> Elem) -> Self {
        let map: BTreeMap<Elem, Elem> = dom.elems().iter().map(|e| (e.clone(), f(e))).collect();
        for img in map.values() {
            assert!(cod.contains(img), "from_rule image {img} not in codomain");
        }
        FinFn { dom, cod, map }
    }

    pub fn identity(obj: &FinSetObj) -> Self {
        Self::from_rule(obj.clone(), obj.clone(), |e| e.clone())
    }

    /// The unique function into a singleton-or-larger set from the empty set,
    /// or more generally a constant function.
    pub fn constant(dom: FinSetObj, cod: FinSetObj, value: Elem) -> Self {
        assert!(cod.contains(&value));
        Self::from_rule(dom, cod, |_| value.clone())
    }

    pub fn apply(&self, e: &Elem) -> &Elem {
        self.map
            .get(e)
            .unwrap_or_else(|| panic!("{e} is not in the domain"))
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.map.iter().all(|(a, b)| a == b)
    }

    /// Diagrammatic composition: `self` then `g`.
    pub fn then(&self, g: &FinFn) -> Result<FinFn> {
        if self.cod != g.dom {
            return Err(Error::boundary(
                "FinFn::then",
                format!("cod {} != dom {}", self.cod, g.dom),
            ));
        }
        Ok(FinFn::from_rule(self.dom.clone(), g.cod.clone(), |e| {
            g.apply(self.apply(e)).clone()
        }))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.map.values().all(|v| seen.insert(v.clone()))
    }

    pub fn is_surjective(&self) -> bool {
        let image: BTreeSet<&Elem> = self.map.values().collect();
        self.cod.elems().iter().all(|c| image.contains(c))
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<FinFn> {
        if !self.is_bijective() {
            return None;
        }
        let map: BTreeMap<Elem, Elem> = self.map.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
        Some(FinFn {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            map,
        })
    }
}

impl fmt::Display for FinFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (a, b)) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}>{b}")?;
        }
        write!(f, "]")
    }
}

/// Mono/epi/iso classification of a function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapClass {
    pub mono: bool,
    pub epi: bool,
    pub iso: bool,
}

/// In finite sets mono = injective, epi = surjective, iso = bijective.
pub fn classify(f: &FinFn) -> MapClass {
    let mono = f.is_injective();
    let epi = f.is_surjective();
    MapClass {
        mono,
        epi,
        iso: mono && epi,
    }
}

/// A span `A <- apex -> B`; both legs share the apex as domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpanFS {
    pub left: FinFn,
    pub right: FinFn,
}

impl SpanFS {
    pub fn new(left: FinFn, right: FinFn) -> Result<Self> {
        if left.dom != right.dom {
            return Err(Error::boundary("SpanFS", "legs do not share an apex"));
        }
        Ok(SpanFS { left, right })
    }

    pub fn apex(&self) -> &FinSetObj {
        &self.left.dom
    }

    pub fn identity(obj: &FinSetObj) -> Self {
        SpanFS {
            left: FinFn::identity(obj),
            right: FinFn::identity(obj),
        }
    }
}

/// A cospan `A -> nadir <- B`; both legs share the nadir as codomain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CospFS {
    pub left: FinFn,
    pub right: FinFn,
}

impl CospFS {
    pub fn new(left: FinFn, right: FinFn) -> Result<Self> {
        if left.cod != right.cod {
            return Err(Error::boundary("CospFS", "legs do not share a nadir"));
        }
        Ok(CospFS { left, right })
    }

    pub fn nadir(&self) -> &FinSetObj {
        &self.left.cod
    }

    pub fn identity(obj: &FinSetObj) -> Self {
        CospFS {
            left: FinFn::identity(obj),
            right: FinFn::identity(obj),
        }
    }
}

/// Which chosen pullback to take. `Plain` is the canonical pair-labeled
/// pullback. `Collapsed` additionally returns the nadir itself when both
/// legs are identities, so that diagonal pairs never appear. `Swapped`
/// reverses the pair labels; it is the deliberately non-normal choice used
/// to exercise the non-normal regime of the span construction's `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PbVariant {
    Plain,
    Collapsed,
    Swapped,
}

/// Chosen pullback of a cospan. The apex is the set of pairs `(a,b)` with
/// `left(a) = right(b)`, the projections are the coordinate maps.
pub fn pullback(c: &CospFS) -> SpanFS {
    pullback_variant(c, PbVariant::Plain)
}

pub fn pullback_variant(c: &CospFS, variant: PbVariant) -> SpanFS {
    if variant == PbVariant::Collapsed && c.left.is_identity() && c.right.is_identity() {
        return SpanFS::identity(&c.left.dom);
    }
    let mut elems = Vec::new();
    let mut proj1 = Vec::new();
    let mut proj2 = Vec::new();
    for a in c.left.dom.elems() {
        for b in c.right.dom.elems() {
            if c.left.apply(a) == c.right.apply(b) {
                let p = match variant {
                    PbVariant::Swapped => pair_label(b, a),
                    _ => pair_label(a, b),
                };
                elems.push(p.clone());
                proj1.push((p.clone(), a.clone()));
                proj2.push((p, b.clone()));
            }
        }
    }
    let apex = FinSetObj::new(elems);
    let left = FinFn::new(apex.clone(), c.left.dom.clone(), proj1).expect("pullback proj1");
    let right = FinFn::new(apex, c.right.dom.clone(), proj2).expect("pullback proj2");
    SpanFS { left, right }
}

/// Mediator for a chosen pullback: given the pullback span of `c` and a
/// commuting cone `(u, w)` (so `u;c.left = w;c.right`), returns the unique
/// factorization through the apex. Works for any pullback variant because it
/// searches the apex for the matching element.
pub fn pullback_mediator(pb: &SpanFS, u: &FinFn, w: &FinFn) -> Result<FinFn> {
    if u.dom != w.dom {
        return Err(Error::boundary("pullback_mediator", "cone legs disagree"));
    }
    let apex = pb.apex().clone();
    let mut map = Vec::new();
    for x in u.dom.elems() {
        let (a, b) = (u.apply(x), w.apply(x));
        let mut hit = None;
        for q in apex.elems() {
            if pb.left.apply(q) == a && pb.right.apply(q) == b {
                if hit.is_some() {
                    return Err(Error::invalid("pullback_mediator", "non-unique factorization"));
                }
                hit = Some(q.clone());
            }
        }
        match hit {
            Some(q) => map.push((x.clone(), q)),
            None => {
                return Err(Error::boundary(
                    "pullback_mediator",
                    format!("cone at {x} does not factor"),
                ))
            }
        }
    }
    FinFn::new(u.dom.clone(), apex, map)
}

const TAG_LEFT: &str = "L";
const TAG_RIGHT: &str = "R";

/// Chosen pushout of a span. The nadir is the quotient of the disjoint union
/// of the two codomains by the equivalence generated by `left(x) ~ right(x)`;
/// each class is labeled by the sorted list of its tagged members.
pub fn pushout(s: &SpanFS) -> CospFS {
    pushout_variant(s, PbVariant::Plain)
}

pub fn pushout_variant(s: &SpanFS, variant: PbVariant) -> CospFS {
    if variant == PbVariant::Collapsed && s.left.is_identity() && s.right.is_identity() {
        return CospFS::identity(&s.left.cod);
    }
    // Tagged carrier: L-elements of left.cod, R-elements of right.cod.
    let mut nodes: Vec<(&'static str, Elem)> = Vec::new();
    for b in s.left.cod.elems() {
        nodes.push((TAG_LEFT, b.clone()));
    }
    for c in s.right.cod.elems() {
        nodes.push((TAG_RIGHT, c.clone()));
    }
    let index = |tag: &str, e: &Elem| -> usize {
        nodes
            .iter()
            .position(|(t, x)| *t == tag && x == e)
            .expect("pushout node")
    };
    let mut uf = UnionFind::new(nodes.len());
    for a in s.left.dom.elems() {
        uf.union(
            index(TAG_LEFT, s.left.apply(a)),
            index(TAG_RIGHT, s.right.apply(a)),
        );
    }
    // Class labels: sorted list of tagged members.
    let mut classes: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (i, (tag, e)) in nodes.iter().enumerate() {
        classes
            .entry(uf.find(i))
            .or_default()
            .push(format!("{tag}:{e}"));
    }
    let label_of_root: BTreeMap<usize, Elem> = classes
        .iter()
        .map(|(root, members)| {
            let mut m = members.clone();
            m.sort();
            let swap = variant == PbVariant::Swapped;
            if swap {
                m.reverse();
            }
            (*root, Elem(format!("{{{}}}", m.join(","))))
        })
        .collect();
    let nadir = FinSetObj::new(label_of_root.values().cloned());
    let leg = |tag: &'static str, side: &FinFn| -> FinFn {
        FinFn::from_rule(side.cod.clone(), nadir.clone(), |e| {
            label_of_root[&uf.find_done(index(tag, e))].clone()
        })
    };
    let left = leg(TAG_LEFT, &s.left);
    let right = leg(TAG_RIGHT, &s.right);
    CospFS { left, right }
}

/// Mediator for a chosen pushout: given a commuting cocone `(u, w)` under the
/// span (`s.left;u = s.right;w`), returns the unique map from the nadir.
pub fn pushout_mediator(s: &SpanFS, po: &CospFS, u: &FinFn, w: &FinFn) -> Result<FinFn> {
    if u.cod != w.cod {
        return Err(Error::boundary("pushout_mediator", "cocone legs disagree"));
    }
    let mut map: BTreeMap<Elem, Elem> = BTreeMap::new();
    let mut put = |k: &Elem, v: &Elem| -> Result<()> {
        if let Some(old) = map.get(k) {
            if old != v {
                return Err(Error::boundary(
                    "pushout_mediator",
                    format!("cocone does not coequalize at {k}"),
                ));
            }
        } else {
            map.insert(k.clone(), v.clone());
        }
        Ok(())
    };
    for b in s.left.cod.elems() {
        put(po.left.apply(b), u.apply(b))?;
    }
    for c in s.right.cod.elems() {
        put(po.right.apply(c), w.apply(c))?;
    }
    FinFn::new(po.nadir().clone(), u.cod.clone(), map)
}

/// Horizontal span composition by pullback of the middle cospan.
pub fn span_compose(s1: &SpanFS, s2: &SpanFS) -> Result<SpanFS> {
    span_compose_variant(s1, s2, PbVariant::Plain)
}

pub fn span_compose_variant(s1: &SpanFS, s2: &SpanFS, variant: PbVariant) -> Result<SpanFS> {
    if s1.right.cod != s2.left.cod {
        return Err(Error::boundary("span_compose", "middle objects differ"));
    }
    let mid = CospFS::new(s1.right.clone(), s2.left.clone())?;
    let pb = pullback_variant(&mid, variant);
    Ok(SpanFS {
        left: pb.left.then(&s1.left)?,
        right: pb.right.then(&s2.right)?,
    })
}

/// Vertical cospan composition by pushout of the middle span.
pub fn cospan_compose(c1: &CospFS, c2: &CospFS) -> Result<CospFS> {
    cospan_compose_variant(c1, c2, PbVariant::Plain)
}

pub fn cospan_compose_variant(c1: &CospFS, c2: &CospFS, variant: PbVariant) -> Result<CospFS> {
    if c1.right.dom != c2.left.dom {
        return Err(Error::boundary("cospan_compose", "middle objects differ"));
    }
    let mid = SpanFS::new(c1.right.clone(), c2.left.clone())?;
    let po = pushout_variant(&mid, variant);
    Ok(CospFS {
        left: c1.left.then(&po.left)?,
        right: c2.right.then(&po.right)?,
    })
}

/// Enumerates all functions `dom -> cod`. `|cod|^|dom|` entries.
pub fn all_fns(dom: &FinSetObj, cod: &FinSetObj) -> Vec<FinFn> {
    if dom.is_empty() {
        return vec![FinFn::from_rule(dom.clone(), cod.clone(), |e| e.clone())];
    }
    if cod.is_empty() {
        return vec![];
    }
    let n = dom.len();
    let k = cod.len();
    let total = k.checked_pow(n as u32).expect("all_fns overflow");
    let mut out = Vec::with_capacity(total);
    let mut digits = vec![0usize; n];
    loop {
        let map: Vec<(Elem, Elem)> = dom
            .elems()
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), cod.elems()[digits[i]].clone()))
            .collect();
        out.push(FinFn::new(dom.clone(), cod.clone(), map).expect("all_fns"));
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            digits[i] += 1;
            if digits[i] == k {
                digits[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }
    // find on an already-compressed structure, usable through a shared ref
    fn find_done(&self, mut i: usize) -> usize {
        while self.parent[i] != i {
            i = self.parent[i];
        }
        i
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins, keeps results independent of call order
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Cartesian product with canonical pair labels, with projections.
pub fn product(a: &FinSetObj, b: &FinSetObj) -> (FinSetObj, FinFn, FinFn) {
    let terminal = FinSetObj::point();
    let star = Elem::new("*");
    let c = CospFS::new(
        FinFn::constant(a.clone(), terminal.clone(), star.clone()),
        FinFn::constant(b.clone(), terminal, star),
    )
    .expect("product cospan");
    let pb = pullback(&c);
    (pb.apex().clone(), pb.left, pb.right)
}

/// Binary coproduct with canonical tagged labels, with injections.
pub fn coproduct(a: &FinSetObj, b: &FinSetObj) -> (FinSetObj, FinFn, FinFn) {
    let s = SpanFS::new(
        FinFn::from_rule(FinSetObj::empty(), a.clone(), |e| e.clone()),
        FinFn::from_rule(FinSetObj::empty(), b.clone(), |e| e.clone()),
    )
    .expect("coproduct span");
    let po = pushout(&s);
    (po.nadir().clone(), po.left, po.right)
}

/// Indexed coproduct Sum_i X_i with injections, labels `(i,x)`.
pub fn indexed_sum(parts: &[(Elem, FinSetObj)]) -> (FinSetObj, Vec<FinFn>) {
    let mut elems = Vec::new();
    for (i, x) in parts {
        for e in x.elems() {
            elems.push(pair_label(i, e));
        }
    }
    let total = FinSetObj::new(elems);
    let injections = parts
        .iter()
        .map(|(i, x)| FinFn::from_rule(x.clone(), total.clone(), |e| pair_label(i, e)))
        .collect();
    (total, injections)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[&str]) -> FinSetObj {
        FinSetObj::from_labels(labels.iter().copied())
    }

    fn f(dom: &[&str], cod: &[&str], pairs: &[(&str, &str)]) -> FinFn {
        FinFn::new(
            set(dom),
            set(cod),
            pairs
                .iter()
                .map(|(a, b)| (Elem::from(*a), Elem::from(*b))),
        )
        .unwrap()
    }

    #[test]
    fn pullback_over_terminal_is_product() {
        let c = CospFS::new(f(&["x", "y"], &["*"], &[("x", "*"), ("y", "*")]), f(&["a"], &["*"], &[("a", "*")])).unwrap();
        let pb = pullback(&c);
        assert_eq!(pb.apex(), &set(&["(x,a)", "(y,a)"]));
    }

    #[test]
    fn kernel_pair_of_identity_is_diagonal() {
        let id = FinFn::identity(&set(&["a", "b"]));
        let pb = pullback(&CospFS::new(id.clone(), id).unwrap());
        assert_eq!(pb.apex(), &set(&["(a,a)", "(b,b)"]));
        assert!(pb.left.is_bijective());
    }

    #[test]
    fn pullback_filters_matching_pairs() {
        // f: {0,1} -> {p,q} (0|->p, 1|->q), g: {u,v} -> {p,q} (both |-> p).
        let c = CospFS::new(
            f(&["0", "1"], &["p", "q"], &[("0", "p"), ("1", "q")]),
            f(&["u", "v"], &["p", "q"], &[("u", "p"), ("v", "p")]),
        )
        .unwrap();
        let pb = pullback(&c);
        assert_eq!(pb.apex(), &set(&["(0,u)", "(0,v)"]));
    }

    #[test]
    fn pushout_over_empty_apex_is_coproduct() {
        let s = SpanFS::new(
            FinFn::from_rule(FinSetObj::empty(), set(&["a"]), |e| e.clone()),
            FinFn::from_rule(FinSetObj::empty(), set(&["b"]), |e| e.clone()),
        )
        .unwrap();
        let po = pushout(&s);
        assert_eq!(po.nadir().len(), 2);
    }

    #[test]
    fn pushout_of_identities_is_codomain_up_to_relabel() {
        let id = FinFn::identity(&set(&["a", "b"]));
        let po = pushout(&SpanFS::new(id.clone(), id).unwrap());
        assert_eq!(po.nadir(), &set(&["{L:a,R:a}", "{L:b,R:b}"]));
        assert!(po.left.is_bijective());
        let collapsed = pushout_variant(
            &SpanFS::identity(&set(&["a", "b"])),
            PbVariant::Collapsed,
        );
        assert!(collapsed.left.is_identity());
    }

    #[test]
    fn pushout_glues_along_span() {
        // apex {m}, left m|->a into {a,b}, right m|->c into {c}
        let s = SpanFS::new(
            f(&["m"], &["a", "b"], &[("m", "a")]),
            f(&["m"], &["c"], &[("m", "c")]),
        )
        .unwrap();
        let po = pushout(&s);
        assert_eq!(po.nadir().len(), 2);
        assert_eq!(po.left.apply(&Elem::from("a")), po.right.apply(&Elem::from("c")));
        assert_ne!(po.left.apply(&Elem::from("b")), po.left.apply(&Elem::from("a")));
    }

    #[test]
    fn classify_basic_cases() {
        let id = FinFn::identity(&set(&["a"]));
        assert_eq!(classify(&id), MapClass { mono: true, epi: true, iso: true });
        let collapse = f(&["a", "b"], &["*"], &[("a", "*"), ("b", "*")]);
        assert_eq!(classify(&collapse), MapClass { mono: false, epi: true, iso: false });
        let from_empty = FinFn::from_rule(FinSetObj::empty(), set(&["*"]), |e| e.clone());
        assert_eq!(classify(&from_empty), MapClass { mono: true, epi: false, iso: false });
    }

    #[test]
    fn compose_with_identity_span_is_bijective_relabel() {
        let h = SpanFS::new(
            f(&["m", "n"], &["a"], &[("m", "a"), ("n", "a")]),
            f(&["m", "n"], &["b", "c"], &[("m", "b"), ("n", "c")]),
        )
        .unwrap();
        let idsp = SpanFS::identity(&set(&["b", "c"]));
        let comp = span_compose(&h, &idsp).unwrap();
        assert_eq!(comp.apex().len(), h.apex().len());
        assert_eq!(comp.left.cod, h.left.cod);
        assert_eq!(comp.right.cod, idsp.right.cod);
    }

    #[test]
    fn mediators_factor_uniquely() {
        let c = CospFS::new(
            f(&["0", "1"], &["p"], &[("0", "p"), ("1", "p")]),
            f(&["u"], &["p"], &[("u", "p")]),
        )
        .unwrap();
        let pb = pullback(&c);
        let x = set(&["t"]);
        let u = f(&["t"], &["0", "1"], &[("t", "1")]);
        let w = FinFn::constant(x, c.right.dom.clone(), Elem::from("u"));
        let m = pullback_mediator(&pb, &u, &w).unwrap();
        assert_eq!(m.then(&pb.left).unwrap(), u);
        assert_eq!(m.then(&pb.right).unwrap(), w);
    }
}
