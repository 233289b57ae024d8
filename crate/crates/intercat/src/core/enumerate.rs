//! Boundary-constrained enumeration of an intercategory's sorts.
//! Enumerability is per-boundary: even when a sort is globally infinite, the
//! elements between two fixed boundaries are often a finite, listable set.

use super::Intercategory;

/// Complete, duplicate-free listings of sort elements between fixed
/// boundaries; `None` when the instance cannot enumerate the request.
pub trait Enumerable: Intercategory {
    /// All transversal arrows `a -> b`.
    fn tars_between(&self, a: &Self::Obj, b: &Self::Obj) -> Option<Vec<Self::TAr>>;

    /// All horizontal cells `src => tgt`, any transversal sides.
    fn hcells_between(&self, src: &Self::HAr, tgt: &Self::HAr) -> Option<Vec<Self::HCell>>;

    /// All vertical cells `src => tgt`, any transversal sides.
    fn vcells_between(&self, src: &Self::VAr, tgt: &Self::VAr) -> Option<Vec<Self::VCell>>;

    /// All cubes `src -> tgt`, any side faces.
    fn cubes_between(&self, src: &Self::BCell, tgt: &Self::BCell) -> Option<Vec<Self::Cube>>;
}
