//! The eight-sorted intercategory interface, its three compositions and four
//! interchangers, the probe-based law engine, invertibility testing, and
//! morphism checking.
//!
//! Conventions used throughout:
//! - transversal arrows `f : A -> B` compose strictly (`.`), with identities
//!   written `1`;
//! - horizontal arrows `h : A -> B` compose weakly (`|`), identities `id`;
//! - vertical arrows `v : A -|-> B` compose weakly (`/`), identities `Id`;
//! - a horizontal cell goes from one horizontal arrow to another with
//!   transversal west/east sides; a vertical cell dually with north/south
//!   sides; a basic cell has horizontal north/south and vertical west/east
//!   boundaries; a cube is a transversal morphism of basic cells with
//!   horizontal-cell north/south faces and vertical-cell west/east faces.
//! - All composition is written diagrammatically: `x_then_y(a, b)` is `a`
//!   followed by `b`.

pub mod enumerate;
pub mod invert;
pub mod laws;
pub mod morphism;
pub mod report;

pub use enumerate::Enumerable;
pub use invert::{is_identity_cube, test_invertible};
pub use laws::{check_laws, chirality, IntercatProbes, StructureVerdict};
pub use morphism::{check_morphism, IntercatMorphism, MorphKind};
pub use report::{LawReport, Verdict};

use crate::doublecat::Data;
use crate::Result;

/// An intercategory presented elementarily: eight sorts, three compositions,
/// structural isomorphisms, and the four interchangers.
pub trait Intercategory {
    type Obj: Data;
    type TAr: Data;
    type HAr: Data;
    type VAr: Data;
    type HCell: Data;
    type VCell: Data;
    type BCell: Data;
    type Cube: Data;

    // boundaries
    fn tar_src(&self, f: &Self::TAr) -> Self::Obj;
    fn tar_tgt(&self, f: &Self::TAr) -> Self::Obj;
    fn har_src(&self, h: &Self::HAr) -> Self::Obj;
    fn har_tgt(&self, h: &Self::HAr) -> Self::Obj;
    fn var_src(&self, v: &Self::VAr) -> Self::Obj;
    fn var_tgt(&self, v: &Self::VAr) -> Self::Obj;

    fn hcell_src(&self, c: &Self::HCell) -> Self::HAr;
    fn hcell_tgt(&self, c: &Self::HCell) -> Self::HAr;
    fn hcell_west(&self, c: &Self::HCell) -> Self::TAr;
    fn hcell_east(&self, c: &Self::HCell) -> Self::TAr;

    fn vcell_src(&self, c: &Self::VCell) -> Self::VAr;
    fn vcell_tgt(&self, c: &Self::VCell) -> Self::VAr;
    fn vcell_north(&self, c: &Self::VCell) -> Self::TAr;
    fn vcell_south(&self, c: &Self::VCell) -> Self::TAr;

    fn bcell_north(&self, b: &Self::BCell) -> Self::HAr;
    fn bcell_south(&self, b: &Self::BCell) -> Self::HAr;
    fn bcell_west(&self, b: &Self::BCell) -> Self::VAr;
    fn bcell_east(&self, b: &Self::BCell) -> Self::VAr;

    fn cube_src(&self, c: &Self::Cube) -> Self::BCell;
    fn cube_tgt(&self, c: &Self::Cube) -> Self::BCell;
    fn cube_north(&self, c: &Self::Cube) -> Self::HCell;
    fn cube_south(&self, c: &Self::Cube) -> Self::HCell;
    fn cube_west(&self, c: &Self::Cube) -> Self::VCell;
    fn cube_east(&self, c: &Self::Cube) -> Self::VCell;

    // transversal composition: four strict categories
    fn t_id_obj(&self, a: &Self::Obj) -> Self::TAr;
    fn t_id_har(&self, h: &Self::HAr) -> Self::HCell;
    fn t_id_var(&self, v: &Self::VAr) -> Self::VCell;
    fn t_id_bcell(&self, b: &Self::BCell) -> Self::Cube;

    fn t_then_tar(&self, f: &Self::TAr, g: &Self::TAr) -> Result<Self::TAr>;
    fn t_then_hcell(&self, c: &Self::HCell, d: &Self::HCell) -> Result<Self::HCell>;
    fn t_then_vcell(&self, c: &Self::VCell, d: &Self::VCell) -> Result<Self::VCell>;
    fn t_then_cube(&self, c: &Self::Cube, d: &Self::Cube) -> Result<Self::Cube>;

    // horizontal composition
    fn h_id_obj(&self, a: &Self::Obj) -> Self::HAr;
    fn h_id_tar(&self, f: &Self::TAr) -> Self::HCell;
    fn h_id_var(&self, v: &Self::VAr) -> Self::BCell;
    fn h_id_vcell(&self, c: &Self::VCell) -> Self::Cube;

    fn h_then_har(&self, h: &Self::HAr, k: &Self::HAr) -> Result<Self::HAr>;
    fn h_then_hcell(&self, c: &Self::HCell, d: &Self::HCell) -> Result<Self::HCell>;
    fn h_then_bcell(&self, a: &Self::BCell, b: &Self::BCell) -> Result<Self::BCell>;
    fn h_then_cube(&self, c: &Self::Cube, d: &Self::Cube) -> Result<Self::Cube>;

    // vertical composition
    fn v_id_obj(&self, a: &Self::Obj) -> Self::VAr;
    fn v_id_tar(&self, f: &Self::TAr) -> Self::VCell;
    fn v_id_har(&self, h: &Self::HAr) -> Self::BCell;
    fn v_id_hcell(&self, c: &Self::HCell) -> Self::Cube;

    fn v_then_var(&self, u: &Self::VAr, w: &Self::VAr) -> Result<Self::VAr>;
    fn v_then_vcell(&self, c: &Self::VCell, d: &Self::VCell) -> Result<Self::VCell>;
    fn v_then_bcell(&self, a: &Self::BCell, b: &Self::BCell) -> Result<Self::BCell>;
    fn v_then_cube(&self, c: &Self::Cube, d: &Self::Cube) -> Result<Self::Cube>;

    // structural isomorphisms, horizontal direction
    fn h_assoc_har(&self, h1: &Self::HAr, h2: &Self::HAr, h3: &Self::HAr) -> Result<Self::HCell>;
    fn h_lunit_har(&self, h: &Self::HAr) -> Self::HCell;
    fn h_runit_har(&self, h: &Self::HAr) -> Self::HCell;
    fn h_assoc_bcell(&self, a: &Self::BCell, b: &Self::BCell, c: &Self::BCell) -> Result<Self::Cube>;
    fn h_lunit_bcell(&self, a: &Self::BCell) -> Self::Cube;
    fn h_runit_bcell(&self, a: &Self::BCell) -> Self::Cube;

    // structural isomorphisms, vertical direction
    fn v_assoc_var(&self, u: &Self::VAr, v: &Self::VAr, w: &Self::VAr) -> Result<Self::VCell>;
    fn v_lunit_var(&self, v: &Self::VAr) -> Self::VCell;
    fn v_runit_var(&self, v: &Self::VAr) -> Self::VCell;
    fn v_assoc_bcell(&self, a: &Self::BCell, b: &Self::BCell, c: &Self::BCell) -> Result<Self::Cube>;
    fn v_lunit_bcell(&self, a: &Self::BCell) -> Self::Cube;
    fn v_runit_bcell(&self, a: &Self::BCell) -> Self::Cube;

    // interchangers; all four are special cubes
    /// `chi : (a|b) / (abar|bbar)  ->  (a/abar) | (b/bbar)`
    fn chi(
        &self,
        a: &Self::BCell,
        b: &Self::BCell,
        abar: &Self::BCell,
        bbar: &Self::BCell,
    ) -> Result<Self::Cube>;
    /// `mu : id_v / id_w -> id_{v/w}`
    fn mu(&self, v: &Self::VAr, w: &Self::VAr) -> Result<Self::Cube>;
    /// `delta : Id_{h|k} -> Id_h | Id_k`
    fn delta(&self, h: &Self::HAr, k: &Self::HAr) -> Result<Self::Cube>;
    /// `tau : Id_{id_A} -> id_{Id_A}`
    fn tau(&self, a: &Self::Obj) -> Self::Cube;

    // inverses, when the instance can compute them
    fn invert_hcell(&self, c: &Self::HCell) -> Option<Self::HCell>;
    fn invert_vcell(&self, c: &Self::VCell) -> Option<Self::VCell>;
    fn invert_cube(&self, c: &Self::Cube) -> Option<Self::Cube>;

    /// A cube is special when its four side faces are transversal
    /// identities.
    fn is_special_cube(&self, c: &Self::Cube) -> bool {
        let n = self.cube_north(c);
        let s = self.cube_south(c);
        let w = self.cube_west(c);
        let e = self.cube_east(c);
        n == self.t_id_har(&self.hcell_src(&n))
            && s == self.t_id_har(&self.hcell_src(&s))
            && w == self.t_id_var(&self.vcell_src(&w))
            && e == self.t_id_var(&self.vcell_src(&e))
    }

    /// Short instance name for reports.
    fn name(&self) -> String {
        "intercategory".to_string()
    }
}

/// A cube together with its verified specialness flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialCube<C> {
    pub cube: C,
}

impl<C> SpecialCube<C> {
    /// Wraps a cube after verifying that its horizontal and vertical faces
    /// are transversal identities.
    pub fn new<I>(a: &I, cube: C) -> Result<Self>
    where
        I: Intercategory<Cube = C>,
    {
        if !a.is_special_cube(&cube) {
            return Err(crate::Error::invalid(
                "SpecialCube",
                "side faces are not transversal identities",
            ));
        }
        Ok(SpecialCube { cube })
    }
}
