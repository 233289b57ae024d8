//! Double categories as intercategories: the cylinder construction (basic
//! cells are the double category's cells, cubes are commutative cylinders)
//! and the quintet construction (both arrow directions are the vertical
//! arrows, basic cells are quintets), plus the discrete-bifibration property
//! that characterizes the instances arising from double bicategories.

use crate::core::enumerate::Enumerable;
use crate::core::laws::IntercatProbes;
use crate::core::Intercategory;
use crate::doublecat::DoubleCat;
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Cylinders
// ---------------------------------------------------------------------------

/// A commutative cylinder: `west . tgt = src . east` in the cell category.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cylinder<C> {
    pub src: C,
    pub tgt: C,
    pub west: C,
    pub east: C,
}

/// The intercategory of cylinders in a double category: transversal arrows
/// and horizontal cells are identities, vertical cells are the special
/// cells, basic cells are all cells, and all interchangers are identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylinderIntercat<D: DoubleCat> {
    pub d: D,
    pub label: String,
}

impl<D: DoubleCat> CylinderIntercat<D> {
    pub fn new(d: D, label: impl Into<String>) -> Self {
        CylinderIntercat {
            d,
            label: label.into(),
        }
    }

    pub fn mk_cube(&self, src: D::Cell, tgt: D::Cell, west: D::Cell, east: D::Cell) -> Result<Cylinder<D::Cell>> {
        let d = &self.d;
        if !d.is_special(&west) || !d.is_special(&east) {
            return Err(Error::invalid("Cylinder", "side faces must be special cells"));
        }
        if d.cell_h_then(&west, &tgt)? != d.cell_h_then(&src, &east)? {
            return Err(Error::boundary("Cylinder", "cylinder does not commute"));
        }
        Ok(Cylinder { src, tgt, west, east })
    }
}

impl<D: DoubleCat> Intercategory for CylinderIntercat<D> {
    type Obj = D::Obj;
    type TAr = D::Obj;
    type HAr = D::HAr;
    type VAr = D::VAr;
    type HCell = D::HAr;
    type VCell = D::Cell;
    type BCell = D::Cell;
    type Cube = Cylinder<D::Cell>;

    fn tar_src(&self, f: &D::Obj) -> D::Obj {
        f.clone()
    }
    fn tar_tgt(&self, f: &D::Obj) -> D::Obj {
        f.clone()
    }
    fn har_src(&self, h: &D::HAr) -> D::Obj {
        self.d.h_dom(h)
    }
    fn har_tgt(&self, h: &D::HAr) -> D::Obj {
        self.d.h_cod(h)
    }
    fn var_src(&self, v: &D::VAr) -> D::Obj {
        self.d.v_src(v)
    }
    fn var_tgt(&self, v: &D::VAr) -> D::Obj {
        self.d.v_tgt(v)
    }

    fn hcell_src(&self, c: &D::HAr) -> D::HAr {
        c.clone()
    }
    fn hcell_tgt(&self, c: &D::HAr) -> D::HAr {
        c.clone()
    }
    fn hcell_west(&self, c: &D::HAr) -> D::Obj {
        self.d.h_dom(c)
    }
    fn hcell_east(&self, c: &D::HAr) -> D::Obj {
        self.d.h_cod(c)
    }

    fn vcell_src(&self, c: &D::Cell) -> D::VAr {
        self.d.cell_west(c)
    }
    fn vcell_tgt(&self, c: &D::Cell) -> D::VAr {
        self.d.cell_east(c)
    }
    fn vcell_north(&self, c: &D::Cell) -> D::Obj {
        self.d.v_src(&self.d.cell_west(c))
    }
    fn vcell_south(&self, c: &D::Cell) -> D::Obj {
        self.d.v_tgt(&self.d.cell_west(c))
    }

    fn bcell_north(&self, b: &D::Cell) -> D::HAr {
        self.d.cell_top(b)
    }
    fn bcell_south(&self, b: &D::Cell) -> D::HAr {
        self.d.cell_bot(b)
    }
    fn bcell_west(&self, b: &D::Cell) -> D::VAr {
        self.d.cell_west(b)
    }
    fn bcell_east(&self, b: &D::Cell) -> D::VAr {
        self.d.cell_east(b)
    }

    fn cube_src(&self, c: &Self::Cube) -> D::Cell {
        c.src.clone()
    }
    fn cube_tgt(&self, c: &Self::Cube) -> D::Cell {
        c.tgt.clone()
    }
    fn cube_north(&self, c: &Self::Cube) -> D::HAr {
        self.d.cell_top(&c.src)
    }
    fn cube_south(&self, c: &Self::Cube) -> D::HAr {
        self.d.cell_bot(&c.src)
    }
    fn cube_west(&self, c: &Self::Cube) -> D::Cell {
        c.west.clone()
    }
    fn cube_east(&self, c: &Self::Cube) -> D::Cell {
        c.east.clone()
    }

    fn t_id_obj(&self, a: &D::Obj) -> D::Obj {
        a.clone()
    }
    fn t_id_har(&self, h: &D::HAr) -> D::HAr {
        h.clone()
    }
    fn t_id_var(&self, v: &D::VAr) -> D::Cell {
        self.d.cell_h_id(v)
    }
    fn t_id_bcell(&self, b: &D::Cell) -> Self::Cube {
        Cylinder {
            src: b.clone(),
            tgt: b.clone(),
            west: self.d.cell_h_id(&self.d.cell_west(b)),
            east: self.d.cell_h_id(&self.d.cell_east(b)),
        }
    }

    fn t_then_tar(&self, f: &D::Obj, g: &D::Obj) -> Result<D::Obj> {
        if f != g {
            return Err(Error::boundary("Cylinder::t_then_tar", "identities at distinct objects"));
        }
        Ok(f.clone())
    }
    fn t_then_hcell(&self, c: &D::HAr, d: &D::HAr) -> Result<D::HAr> {
        if c != d {
            return Err(Error::boundary("Cylinder::t_then_hcell", "identity cells differ"));
        }
        Ok(c.clone())
    }
    fn t_then_vcell(&self, c: &D::Cell, e: &D::Cell) -> Result<D::Cell> {
        self.d.cell_h_then(c, e)
    }
    fn t_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        if c.tgt != e.src {
            return Err(Error::boundary("Cylinder::t_then_cube", "cubes not composable"));
        }
        self.mk_cube(
            c.src.clone(),
            e.tgt.clone(),
            self.d.cell_h_then(&c.west, &e.west)?,
            self.d.cell_h_then(&c.east, &e.east)?,
        )
    }

    fn h_id_obj(&self, a: &D::Obj) -> D::HAr {
        self.d.h_id(a)
    }
    fn h_id_tar(&self, f: &D::Obj) -> D::HAr {
        self.d.h_id(f)
    }
    fn h_id_var(&self, v: &D::VAr) -> D::Cell {
        self.d.cell_h_id(v)
    }
    fn h_id_vcell(&self, c: &D::Cell) -> Self::Cube {
        Cylinder {
            src: self.d.cell_h_id(&self.d.cell_west(c)),
            tgt: self.d.cell_h_id(&self.d.cell_east(c)),
            west: c.clone(),
            east: c.clone(),
        }
    }

    fn h_then_har(&self, h: &D::HAr, k: &D::HAr) -> Result<D::HAr> {
        self.d.h_then(h, k)
    }
    fn h_then_hcell(&self, c: &D::HAr, e: &D::HAr) -> Result<D::HAr> {
        self.d.h_then(c, e)
    }
    fn h_then_bcell(&self, a: &D::Cell, b: &D::Cell) -> Result<D::Cell> {
        self.d.cell_h_then(a, b)
    }
    fn h_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        if self.d.cell_east(&c.src) != self.d.cell_west(&e.src) || c.east != e.west {
            return Err(Error::boundary("Cylinder::h_then_cube", "cubes not beside each other"));
        }
        self.mk_cube(
            self.d.cell_h_then(&c.src, &e.src)?,
            self.d.cell_h_then(&c.tgt, &e.tgt)?,
            c.west.clone(),
            e.east.clone(),
        )
    }

    fn v_id_obj(&self, a: &D::Obj) -> D::VAr {
        self.d.v_id(a)
    }
    fn v_id_tar(&self, f: &D::Obj) -> D::Cell {
        self.d.cell_h_id(&self.d.v_id(f))
    }
    fn v_id_har(&self, h: &D::HAr) -> D::Cell {
        self.d.cell_v_id(h)
    }
    fn v_id_hcell(&self, c: &D::HAr) -> Self::Cube {
        let b = self.d.cell_v_id(c);
        Cylinder {
            src: b.clone(),
            tgt: b,
            west: self.d.cell_h_id(&self.d.v_id(&self.d.h_dom(c))),
            east: self.d.cell_h_id(&self.d.v_id(&self.d.h_cod(c))),
        }
    }

    fn v_then_var(&self, u: &D::VAr, w: &D::VAr) -> Result<D::VAr> {
        self.d.v_then(u, w)
    }
    fn v_then_vcell(&self, c: &D::Cell, e: &D::Cell) -> Result<D::Cell> {
        self.d.cell_v_then(c, e)
    }
    fn v_then_bcell(&self, a: &D::Cell, b: &D::Cell) -> Result<D::Cell> {
        self.d.cell_v_then(a, b)
    }
    fn v_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        if self.d.cell_bot(&c.src) != self.d.cell_top(&e.src) {
            return Err(Error::boundary("Cylinder::v_then_cube", "cubes not stackable"));
        }
        self.mk_cube(
            self.d.cell_v_then(&c.src, &e.src)?,
            self.d.cell_v_then(&c.tgt, &e.tgt)?,
            self.d.cell_v_then(&c.west, &e.west)?,
            self.d.cell_v_then(&c.east, &e.east)?,
        )
    }

    fn h_assoc_har(&self, h1: &D::HAr, h2: &D::HAr, h3: &D::HAr) -> Result<D::HAr> {
        // horizontal composition is strict
        self.d.h_then(&self.d.h_then(h1, h2)?, h3)
    }
    fn h_lunit_har(&self, h: &D::HAr) -> D::HAr {
        h.clone()
    }
    fn h_runit_har(&self, h: &D::HAr) -> D::HAr {
        h.clone()
    }
    fn h_assoc_bcell(&self, a: &D::Cell, b: &D::Cell, c: &D::Cell) -> Result<Self::Cube> {
        let all = self.d.cell_h_then(&self.d.cell_h_then(a, b)?, c)?;
        Ok(self.t_id_bcell(&all))
    }
    fn h_lunit_bcell(&self, a: &D::Cell) -> Self::Cube {
        self.t_id_bcell(a)
    }
    fn h_runit_bcell(&self, a: &D::Cell) -> Self::Cube {
        self.t_id_bcell(a)
    }

    fn v_assoc_var(&self, u: &D::VAr, v: &D::VAr, w: &D::VAr) -> Result<D::Cell> {
        self.d.v_assoc(u, v, w)
    }
    fn v_lunit_var(&self, v: &D::VAr) -> D::Cell {
        self.d.v_lunit(v)
    }
    fn v_runit_var(&self, v: &D::VAr) -> D::Cell {
        self.d.v_runit(v)
    }
    fn v_assoc_bcell(&self, a: &D::Cell, b: &D::Cell, c: &D::Cell) -> Result<Self::Cube> {
        let lhs = self.d.cell_v_then(&self.d.cell_v_then(a, b)?, c)?;
        let rhs = self.d.cell_v_then(a, &self.d.cell_v_then(b, c)?)?;
        self.mk_cube(
            lhs,
            rhs,
            self.d.v_assoc(&self.d.cell_west(a), &self.d.cell_west(b), &self.d.cell_west(c))?,
            self.d.v_assoc(&self.d.cell_east(a), &self.d.cell_east(b), &self.d.cell_east(c))?,
        )
    }
    fn v_lunit_bcell(&self, a: &D::Cell) -> Self::Cube {
        let src = self
            .d
            .cell_v_then(&self.d.cell_v_id(&self.d.cell_top(a)), a)
            .expect("cylinder v_lunit");
        self.mk_cube(
            src,
            a.clone(),
            self.d.v_lunit(&self.d.cell_west(a)),
            self.d.v_lunit(&self.d.cell_east(a)),
        )
        .expect("cylinder v_lunit cube")
    }
    fn v_runit_bcell(&self, a: &D::Cell) -> Self::Cube {
        let src = self
            .d
            .cell_v_then(a, &self.d.cell_v_id(&self.d.cell_bot(a)))
            .expect("cylinder v_runit");
        self.mk_cube(
            src,
            a.clone(),
            self.d.v_runit(&self.d.cell_west(a)),
            self.d.v_runit(&self.d.cell_east(a)),
        )
        .expect("cylinder v_runit cube")
    }

    fn chi(&self, a: &D::Cell, b: &D::Cell, abar: &D::Cell, bbar: &D::Cell) -> Result<Self::Cube> {
        // interchange holds on the nose in a double category
        let src = self
            .d
            .cell_v_then(&self.d.cell_h_then(a, b)?, &self.d.cell_h_then(abar, bbar)?)?;
        let tgt = self
            .d
            .cell_h_then(&self.d.cell_v_then(a, abar)?, &self.d.cell_v_then(b, bbar)?)?;
        if src != tgt {
            return Err(Error::invalid("Cylinder::chi", "interchange failed in the base"));
        }
        Ok(self.t_id_bcell(&src))
    }
    fn mu(&self, v: &D::VAr, w: &D::VAr) -> Result<Self::Cube> {
        Ok(self.t_id_bcell(&self.d.cell_h_id(&self.d.v_then(v, w)?)))
    }
    fn delta(&self, h: &D::HAr, k: &D::HAr) -> Result<Self::Cube> {
        Ok(self.t_id_bcell(&self.d.cell_v_id(&self.d.h_then(h, k)?)))
    }
    fn tau(&self, a: &D::Obj) -> Self::Cube {
        self.t_id_bcell(&self.d.cell_h_id(&self.d.v_id(a)))
    }

    fn invert_hcell(&self, c: &D::HAr) -> Option<D::HAr> {
        Some(c.clone())
    }
    fn invert_vcell(&self, c: &D::Cell) -> Option<D::Cell> {
        self.d.cell_invert(c)
    }
    fn invert_cube(&self, c: &Self::Cube) -> Option<Self::Cube> {
        Some(Cylinder {
            src: c.tgt.clone(),
            tgt: c.src.clone(),
            west: self.d.cell_invert(&c.west)?,
            east: self.d.cell_invert(&c.east)?,
        })
    }

    fn name(&self) -> String {
        self.label.clone()
    }
}

impl<D: DoubleCat> Enumerable for CylinderIntercat<D> {
    fn tars_between(&self, a: &D::Obj, b: &D::Obj) -> Option<Vec<D::Obj>> {
        Some(if a == b { vec![a.clone()] } else { vec![] })
    }
    fn hcells_between(&self, src: &D::HAr, tgt: &D::HAr) -> Option<Vec<D::HAr>> {
        Some(if src == tgt { vec![src.clone()] } else { vec![] })
    }
    fn vcells_between(&self, src: &D::VAr, tgt: &D::VAr) -> Option<Vec<D::Cell>> {
        let all = self.d.cells_constrained(src, tgt, None, None)?;
        Some(all.into_iter().filter(|c| self.d.is_special(c)).collect())
    }
    fn cubes_between(&self, src: &D::Cell, tgt: &D::Cell) -> Option<Vec<Self::Cube>> {
        let wests = self.vcells_between(&self.d.cell_west(src), &self.d.cell_west(tgt))?;
        let easts = self.vcells_between(&self.d.cell_east(src), &self.d.cell_east(tgt))?;
        let mut out = Vec::new();
        for w in &wests {
            for e in &easts {
                if let Ok(c) = self.mk_cube(src.clone(), tgt.clone(), w.clone(), e.clone()) {
                    out.push(c);
                }
            }
        }
        Some(out)
    }
}

// ---------------------------------------------------------------------------
// Quintets
// ---------------------------------------------------------------------------

/// A quintet: a square of vertical arrows filled by a special cell
/// `north . east -> west . south`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Quintet<V, C> {
    pub north: V,
    pub west: V,
    pub east: V,
    pub south: V,
    pub content: C,
}

/// A cube of quintets: cells on the four sides satisfying the pasting
/// equation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuintetCube<V, C> {
    pub src: Quintet<V, C>,
    pub tgt: Quintet<V, C>,
    pub north: C,
    pub south: C,
    pub west: C,
    pub east: C,
}

/// The intercategory of quintets in a double category: transversal arrows
/// are the horizontal arrows, both weak directions are the vertical arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuintetIntercat<D: DoubleCat> {
    pub d: D,
    pub label: String,
}

impl<D: DoubleCat> QuintetIntercat<D> {
    pub fn new(d: D, label: impl Into<String>) -> Self {
        QuintetIntercat {
            d,
            label: label.into(),
        }
    }

    pub fn mk_bcell(
        &self,
        north: D::VAr,
        west: D::VAr,
        east: D::VAr,
        south: D::VAr,
        content: D::Cell,
    ) -> Result<Quintet<D::VAr, D::Cell>> {
        let d = &self.d;
        let ok = d.is_special(&content)
            && d.cell_west(&content) == d.v_then(&north, &east)?
            && d.cell_east(&content) == d.v_then(&west, &south)?;
        if !ok {
            return Err(Error::boundary("Quintet", "content does not fill the square"));
        }
        Ok(Quintet {
            north,
            west,
            east,
            south,
            content,
        })
    }

    pub fn mk_cube(
        &self,
        src: Quintet<D::VAr, D::Cell>,
        tgt: Quintet<D::VAr, D::Cell>,
        north: D::Cell,
        south: D::Cell,
        west: D::Cell,
        east: D::Cell,
    ) -> Result<QuintetCube<D::VAr, D::Cell>> {
        let d = &self.d;
        // pasting equation: (north/east) ; tgt.content == src.content ; (west/south)
        let lhs = d.cell_h_then(&d.cell_v_then(&north, &east)?, &tgt.content)?;
        let rhs = d.cell_h_then(&src.content, &d.cell_v_then(&west, &south)?)?;
        if lhs != rhs {
            return Err(Error::boundary("QuintetCube", "pasting equation fails"));
        }
        Ok(QuintetCube {
            src,
            tgt,
            north,
            south,
            west,
            east,
        })
    }
}

impl<D: DoubleCat> Intercategory for QuintetIntercat<D> {
    type Obj = D::Obj;
    type TAr = D::HAr;
    type HAr = D::VAr;
    type VAr = D::VAr;
    type HCell = D::Cell;
    type VCell = D::Cell;
    type BCell = Quintet<D::VAr, D::Cell>;
    type Cube = QuintetCube<D::VAr, D::Cell>;

    fn tar_src(&self, f: &D::HAr) -> D::Obj {
        self.d.h_dom(f)
    }
    fn tar_tgt(&self, f: &D::HAr) -> D::Obj {
        self.d.h_cod(f)
    }
    fn har_src(&self, h: &D::VAr) -> D::Obj {
        self.d.v_src(h)
    }
    fn har_tgt(&self, h: &D::VAr) -> D::Obj {
        self.d.v_tgt(h)
    }
    fn var_src(&self, v: &D::VAr) -> D::Obj {
        self.d.v_src(v)
    }
    fn var_tgt(&self, v: &D::VAr) -> D::Obj {
        self.d.v_tgt(v)
    }

    fn hcell_src(&self, c: &D::Cell) -> D::VAr {
        self.d.cell_west(c)
    }
    fn hcell_tgt(&self, c: &D::Cell) -> D::VAr {
        self.d.cell_east(c)
    }
    fn hcell_west(&self, c: &D::Cell) -> D::HAr {
        self.d.cell_top(c)
    }
    fn hcell_east(&self, c: &D::Cell) -> D::HAr {
        self.d.cell_bot(c)
    }

    fn vcell_src(&self, c: &D::Cell) -> D::VAr {
        self.d.cell_west(c)
    }
    fn vcell_tgt(&self, c: &D::Cell) -> D::VAr {
        self.d.cell_east(c)
    }
    fn vcell_north(&self, c: &D::Cell) -> D::HAr {
        self.d.cell_top(c)
    }
    fn vcell_south(&self, c: &D::Cell) -> D::HAr {
        self.d.cell_bot(c)
    }

    fn bcell_north(&self, b: &Self::BCell) -> D::VAr {
        b.north.clone()
    }
    fn bcell_south(&self, b: &Self::BCell) -> D::VAr {
        b.south.clone()
    }
    fn bcell_west(&self, b: &Self::BCell) -> D::VAr {
        b.west.clone()
    }
    fn bcell_east(&self, b: &Self::BCell) -> D::VAr {
        b.east.clone()
    }

    fn cube_src(&self, c: &Self::Cube) -> Self::BCell {
        c.src.clone()
    }
    fn cube_tgt(&self, c: &Self::Cube) -> Self::BCell {
        c.tgt.clone()
    }
    fn cube_north(&self, c: &Self::Cube) -> D::Cell {
        c.north.clone()
    }
    fn cube_south(&self, c: &Self::Cube) -> D::Cell {
        c.south.clone()
    }
    fn cube_west(&self, c: &Self::Cube) -> D::Cell {
        c.west.clone()
    }
    fn cube_east(&self, c: &Self::Cube) -> D::Cell {
        c.east.clone()
    }

    fn t_id_obj(&self, a: &D::Obj) -> D::HAr {
        self.d.h_id(a)
    }
    fn t_id_har(&self, h: &D::VAr) -> D::Cell {
        self.d.cell_h_id(h)
    }
    fn t_id_var(&self, v: &D::VAr) -> D::Cell {
        self.d.cell_h_id(v)
    }
    fn t_id_bcell(&self, b: &Self::BCell) -> Self::Cube {
        QuintetCube {
            src: b.clone(),
            tgt: b.clone(),
            north: self.d.cell_h_id(&b.north),
            south: self.d.cell_h_id(&b.south),
            west: self.d.cell_h_id(&b.west),
            east: self.d.cell_h_id(&b.east),
        }
    }

    fn t_then_tar(&self, f: &D::HAr, g: &D::HAr) -> Result<D::HAr> {
        self.d.h_then(f, g)
    }
    fn t_then_hcell(&self, c: &D::Cell, d: &D::Cell) -> Result<D::Cell> {
        self.d.cell_h_then(c, d)
    }
    fn t_then_vcell(&self, c: &D::Cell, d: &D::Cell) -> Result<D::Cell> {
        self.d.cell_h_then(c, d)
    }
    fn t_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        if c.tgt != e.src {
            return Err(Error::boundary("Quintet::t_then_cube", "cubes not composable"));
        }
        self.mk_cube(
            c.src.clone(),
            e.tgt.clone(),
            self.d.cell_h_then(&c.north, &e.north)?,
            self.d.cell_h_then(&c.south, &e.south)?,
            self.d.cell_h_then(&c.west, &e.west)?,
            self.d.cell_h_then(&c.east, &e.east)?,
        )
    }

    fn h_id_obj(&self, a: &D::Obj) -> D::VAr {
        self.d.v_id(a)
    }
    fn h_id_tar(&self, f: &D::HAr) -> D::Cell {
        self.d.cell_v_id(f)
    }
    fn h_id_var(&self, v: &D::VAr) -> Self::BCell {
        let d = &self.d;
        let content = d
            .cell_h_then(&d.v_lunit(v), &d.cell_invert(&d.v_runit(v)).expect("runit invertible"))
            .expect("quintet h identity");
        Quintet {
            north: d.v_id(&d.v_src(v)),
            west: v.clone(),
            east: v.clone(),
            south: d.v_id(&d.v_tgt(v)),
            content,
        }
    }
    fn h_id_vcell(&self, c: &D::Cell) -> Self::Cube {
        let d = &self.d;
        let src = self.h_id_var(&d.cell_west(c));
        let tgt = self.h_id_var(&d.cell_east(c));
        QuintetCube {
            src,
            tgt,
            north: d.cell_v_id(&d.cell_top(c)),
            south: d.cell_v_id(&d.cell_bot(c)),
            west: c.clone(),
            east: c.clone(),
        }
    }

    fn h_then_har(&self, h: &D::VAr, k: &D::VAr) -> Result<D::VAr> {
        self.d.v_then(h, k)
    }
    fn h_then_hcell(&self, c: &D::Cell, e: &D::Cell) -> Result<D::Cell> {
        self.d.cell_v_then(c, e)
    }
    fn h_then_bcell(&self, a: &Self::BCell, b: &Self::BCell) -> Result<Self::BCell> {
        let d = &self.d;
        if a.east != b.west {
            return Err(Error::boundary("Quintet::h_then_bcell", "east != west"));
        }
        // content: (n.n').e' -> n.(n'.e') -> n.(e.s') -> (n.e).s' -> (w.s).s' -> w.(s.s')
        let step1 = d.v_assoc(&a.north, &b.north, &b.east)?;
        let step2 = d.cell_v_then(&d.cell_h_id(&a.north), &b.content)?;
        let step3 = d.cell_invert(&d.v_assoc(&a.north, &a.east, &b.south)?).ok_or_else(|| Error::invalid("Quintet", "associator not invertible"))?;
        let step4 = d.cell_v_then(&a.content, &d.cell_h_id(&b.south))?;
        let step5 = d.v_assoc(&a.west, &a.south, &b.south)?;
        let content = d.cell_h_then(
            &d.cell_h_then(&d.cell_h_then(&d.cell_h_then(&step1, &step2)?, &step3)?, &step4)?,
            &step5,
        )?;
        self.mk_bcell(
            d.v_then(&a.north, &b.north)?,
            a.west.clone(),
            b.east.clone(),
            d.v_then(&a.south, &b.south)?,
            content,
        )
    }
    fn h_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        let src = self.h_then_bcell(&c.src, &e.src)?;
        let tgt = self.h_then_bcell(&c.tgt, &e.tgt)?;
        self.mk_cube(
            src,
            tgt,
            self.d.cell_v_then(&c.north, &e.north)?,
            self.d.cell_v_then(&c.south, &e.south)?,
            c.west.clone(),
            e.east.clone(),
        )
    }

    fn v_id_obj(&self, a: &D::Obj) -> D::VAr {
        self.d.v_id(a)
    }
    fn v_id_tar(&self, f: &D::HAr) -> D::Cell {
        self.d.cell_v_id(f)
    }
    fn v_id_har(&self, h: &D::VAr) -> Self::BCell {
        let d = &self.d;
        let content = d
            .cell_h_then(&d.v_runit(h), &d.cell_invert(&d.v_lunit(h)).expect("lunit invertible"))
            .expect("quintet v identity");
        Quintet {
            north: h.clone(),
            west: d.v_id(&d.v_src(h)),
            east: d.v_id(&d.v_tgt(h)),
            south: h.clone(),
            content,
        }
    }
    fn v_id_hcell(&self, c: &D::Cell) -> Self::Cube {
        let d = &self.d;
        let src = self.v_id_har(&d.cell_west(c));
        let tgt = self.v_id_har(&d.cell_east(c));
        QuintetCube {
            src,
            tgt,
            north: c.clone(),
            south: c.clone(),
            west: d.cell_v_id(&d.cell_top(c)),
            east: d.cell_v_id(&d.cell_bot(c)),
        }
    }

    fn v_then_var(&self, u: &D::VAr, w: &D::VAr) -> Result<D::VAr> {
        self.d.v_then(u, w)
    }
    fn v_then_vcell(&self, c: &D::Cell, e: &D::Cell) -> Result<D::Cell> {
        self.d.cell_v_then(c, e)
    }
    fn v_then_bcell(&self, a: &Self::BCell, b: &Self::BCell) -> Result<Self::BCell> {
        let d = &self.d;
        if a.south != b.north {
            return Err(Error::boundary("Quintet::v_then_bcell", "south != north"));
        }
        // content: n.(e.e') -> (n.e).e' -> (w.s).e' -> w.(s.e') -> w.(w'.s') -> (w.w').s'
        let step1 = d
            .cell_invert(&d.v_assoc(&a.north, &a.east, &b.east)?)
            .ok_or_else(|| Error::invalid("Quintet", "associator not invertible"))?;
        let step2 = d.cell_v_then(&a.content, &d.cell_h_id(&b.east))?;
        let step3 = d.v_assoc(&a.west, &a.south, &b.east)?;
        let step4 = d.cell_v_then(&d.cell_h_id(&a.west), &b.content)?;
        let step5 = d
            .cell_invert(&d.v_assoc(&a.west, &b.west, &b.south)?)
            .ok_or_else(|| Error::invalid("Quintet", "associator not invertible"))?;
        let content = d.cell_h_then(
            &d.cell_h_then(&d.cell_h_then(&d.cell_h_then(&step1, &step2)?, &step3)?, &step4)?,
            &step5,
        )?;
        self.mk_bcell(
            a.north.clone(),
            d.v_then(&a.west, &b.west)?,
            d.v_then(&a.east, &b.east)?,
            b.south.clone(),
            content,
        )
    }
    fn v_then_cube(&self, c: &Self::Cube, e: &Self::Cube) -> Result<Self::Cube> {
        let src = self.v_then_bcell(&c.src, &e.src)?;
        let tgt = self.v_then_bcell(&c.tgt, &e.tgt)?;
        self.mk_cube(
            src,
            tgt,
            c.north.clone(),
            e.south.clone(),
            self.d.cell_v_then(&c.west, &e.west)?,
            self.d.cell_v_then(&c.east, &e.east)?,
        )
    }

    fn h_assoc_har(&self, h1: &D::VAr, h2: &D::VAr, h3: &D::VAr) -> Result<D::Cell> {
        self.d.v_assoc(h1, h2, h3)
    }
    fn h_lunit_har(&self, h: &D::VAr) -> D::Cell {
        self.d.v_lunit(h)
    }
    fn h_runit_har(&self, h: &D::VAr) -> D::Cell {
        self.d.v_runit(h)
    }
    fn h_assoc_bcell(&self, a: &Self::BCell, b: &Self::BCell, c: &Self::BCell) -> Result<Self::Cube> {
        let d = &self.d;
        let lhs = self.h_then_bcell(&self.h_then_bcell(a, b)?, c)?;
        let rhs = self.h_then_bcell(a, &self.h_then_bcell(b, c)?)?;
        self.mk_cube(
            lhs,
            rhs,
            d.v_assoc(&a.north, &b.north, &c.north)?,
            d.v_assoc(&a.south, &b.south, &c.south)?,
            d.cell_h_id(&a.west),
            d.cell_h_id(&c.east),
        )
    }
    fn h_lunit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let src = self
            .h_then_bcell(&self.h_id_var(&a.west), a)
            .expect("quintet h_lunit");
        self.mk_cube(
            src,
            a.clone(),
            d.v_lunit(&a.north),
            d.v_lunit(&a.south),
            d.cell_h_id(&a.west),
            d.cell_h_id(&a.east),
        )
        .expect("quintet h_lunit cube")
    }
    fn h_runit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let src = self
            .h_then_bcell(a, &self.h_id_var(&a.east))
            .expect("quintet h_runit");
        self.mk_cube(
            src,
            a.clone(),
            d.v_runit(&a.north),
            d.v_runit(&a.south),
            d.cell_h_id(&a.west),
            d.cell_h_id(&a.east),
        )
        .expect("quintet h_runit cube")
    }

    fn v_assoc_var(&self, u: &D::VAr, v: &D::VAr, w: &D::VAr) -> Result<D::Cell> {
        self.d.v_assoc(u, v, w)
    }
    fn v_lunit_var(&self, v: &D::VAr) -> D::Cell {
        self.d.v_lunit(v)
    }
    fn v_runit_var(&self, v: &D::VAr) -> D::Cell {
        self.d.v_runit(v)
    }
    fn v_assoc_bcell(&self, a: &Self::BCell, b: &Self::BCell, c: &Self::BCell) -> Result<Self::Cube> {
        let d = &self.d;
        let lhs = self.v_then_bcell(&self.v_then_bcell(a, b)?, c)?;
        let rhs = self.v_then_bcell(a, &self.v_then_bcell(b, c)?)?;
        self.mk_cube(
            lhs,
            rhs,
            d.cell_h_id(&a.north),
            d.cell_h_id(&c.south),
            d.v_assoc(&a.west, &b.west, &c.west)?,
            d.v_assoc(&a.east, &b.east, &c.east)?,
        )
    }
    fn v_lunit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let src = self
            .v_then_bcell(&self.v_id_har(&a.north), a)
            .expect("quintet v_lunit");
        self.mk_cube(
            src,
            a.clone(),
            d.cell_h_id(&a.north),
            d.cell_h_id(&a.south),
            d.v_lunit(&a.west),
            d.v_lunit(&a.east),
        )
        .expect("quintet v_lunit cube")
    }
    fn v_runit_bcell(&self, a: &Self::BCell) -> Self::Cube {
        let d = &self.d;
        let src = self
            .v_then_bcell(a, &self.v_id_har(&a.south))
            .expect("quintet v_runit");
        self.mk_cube(
            src,
            a.clone(),
            d.cell_h_id(&a.north),
            d.cell_h_id(&a.south),
            d.v_runit(&a.west),
            d.v_runit(&a.east),
        )
        .expect("quintet v_runit cube")
    }

    fn chi(
        &self,
        a: &Self::BCell,
        b: &Self::BCell,
        abar: &Self::BCell,
        bbar: &Self::BCell,
    ) -> Result<Self::Cube> {
        let src = self.v_then_bcell(&self.h_then_bcell(a, b)?, &self.h_then_bcell(abar, bbar)?)?;
        let tgt = self.h_then_bcell(&self.v_then_bcell(a, abar)?, &self.v_then_bcell(b, bbar)?)?;
        self.mk_cube(
            src.clone(),
            tgt,
            self.d.cell_h_id(&src.north),
            self.d.cell_h_id(&src.south),
            self.d.cell_h_id(&src.west),
            self.d.cell_h_id(&src.east),
        )
    }
    fn mu(&self, v: &D::VAr, w: &D::VAr) -> Result<Self::Cube> {
        let src = self.v_then_bcell(&self.h_id_var(v), &self.h_id_var(w))?;
        let tgt = self.h_id_var(&self.d.v_then(v, w)?);
        self.mk_cube(
            src.clone(),
            tgt,
            self.d.cell_h_id(&src.north),
            self.d.cell_h_id(&src.south),
            self.d.cell_h_id(&src.west),
            self.d.cell_h_id(&src.east),
        )
    }
    fn delta(&self, h: &D::VAr, k: &D::VAr) -> Result<Self::Cube> {
        let src = self.v_id_har(&self.d.v_then(h, k)?);
        let tgt = self.h_then_bcell(&self.v_id_har(h), &self.v_id_har(k))?;
        self.mk_cube(
            src.clone(),
            tgt,
            self.d.cell_h_id(&src.north),
            self.d.cell_h_id(&src.south),
            self.d.cell_h_id(&src.west),
            self.d.cell_h_id(&src.east),
        )
    }
    fn tau(&self, a: &D::Obj) -> Self::Cube {
        let src = self.v_id_har(&self.d.v_id(a));
        let tgt = self.h_id_var(&self.d.v_id(a));
        self.mk_cube(
            src.clone(),
            tgt,
            self.d.cell_h_id(&src.north),
            self.d.cell_h_id(&src.south),
            self.d.cell_h_id(&src.west),
            self.d.cell_h_id(&src.east),
        )
        .expect("quintet tau")
    }

    fn invert_hcell(&self, c: &D::Cell) -> Option<D::Cell> {
        self.d.cell_invert(c)
    }
    fn invert_vcell(&self, c: &D::Cell) -> Option<D::Cell> {
        self.d.cell_invert(c)
    }
    fn invert_cube(&self, c: &Self::Cube) -> Option<Self::Cube> {
        Some(QuintetCube {
            src: c.tgt.clone(),
            tgt: c.src.clone(),
            north: self.d.cell_invert(&c.north)?,
            south: self.d.cell_invert(&c.south)?,
            west: self.d.cell_invert(&c.west)?,
            east: self.d.cell_invert(&c.east)?,
        })
    }

    fn name(&self) -> String {
        self.label.clone()
    }
}

// ---------------------------------------------------------------------------
// Property (*)
// ---------------------------------------------------------------------------

/// Result of the discrete-bifibration check: unique lifts along the source
/// boundary (west/north faces) and along the target boundary (east/south
/// faces), tested separately because the defining orientation is not pinned
/// down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarReport {
    pub source_lifts_unique: bool,
    pub target_lifts_unique: bool,
    pub witness: Option<String>,
    pub checked: usize,
}

impl StarReport {
    pub fn holds(&self) -> bool {
        self.source_lifts_unique && self.target_lifts_unique
    }
}

/// Checks, by exhaustion over the probe corpus, that the boundary
/// assignment from the transversal category of basic cells and cubes to the
/// product of the vertical-cell and horizontal-cell categories has unique
/// lifts. Requires identity transversal arrows.
pub fn property_star<I: Intercategory + Enumerable>(a: &I, probes: &IntercatProbes<I>) -> crate::Result<StarReport> {
    for f in &probes.tars {
        if *f != a.t_id_obj(&a.tar_src(f)) {
            return Err(Error::invalid(
                "property_star",
                "instance has non-identity transversal arrows",
            ));
        }
    }
    let mut report = StarReport {
        source_lifts_unique: true,
        target_lifts_unique: true,
        witness: None,
        checked: 0,
    };
    for sigma in &probes.bcells {
        for psi in &probes.vcells {
            if a.vcell_src(psi) != a.bcell_west(sigma) {
                continue;
            }
            for phi in &probes.hcells {
                if a.hcell_src(phi) != a.bcell_north(sigma) {
                    continue;
                }
                // count cubes from sigma with the given west/north faces,
                // over all probe targets
                let mut count = 0usize;
                for tau in &probes.bcells {
                    if a.bcell_west(tau) != a.vcell_tgt(psi) || a.bcell_north(tau) != a.hcell_tgt(phi) {
                        continue;
                    }
                    if let Some(cubes) = a.cubes_between(sigma, tau) {
                        count += cubes
                            .iter()
                            .filter(|c| a.cube_west(c) == *psi && a.cube_north(c) == *phi)
                            .count();
                    }
                }
                report.checked += 1;
                if count != 1 {
                    report.source_lifts_unique = false;
                    if report.witness.is_none() {
                        report.witness = Some(format!(
                            "source lift count {count} for cell {sigma:?} along ({psi:?}, {phi:?})"
                        ));
                    }
                }
            }
        }
    }
    for sigma in &probes.bcells {
        for psi in &probes.vcells {
            if a.vcell_tgt(psi) != a.bcell_east(sigma) {
                continue;
            }
            for phi in &probes.hcells {
                if a.hcell_tgt(phi) != a.bcell_south(sigma) {
                    continue;
                }
                let mut count = 0usize;
                for tau in &probes.bcells {
                    if a.bcell_east(tau) != a.vcell_src(psi) || a.bcell_south(tau) != a.hcell_src(phi) {
                        continue;
                    }
                    if let Some(cubes) = a.cubes_between(tau, sigma) {
                        count += cubes
                            .iter()
                            .filter(|c| a.cube_east(c) == *psi && a.cube_south(c) == *phi)
                            .count();
                    }
                }
                report.checked += 1;
                if count != 1 {
                    report.target_lifts_unique = false;
                    if report.witness.is_none() {
                        report.witness = Some(format!(
                            "target lift count {count} for cell {sigma:?} along ({psi:?}, {phi:?})"
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}
