//! Invertibility testing for special cubes: instance-provided componentwise
//! inverses first, exhaustive search over an enumeration as the fallback.

use super::enumerate::Enumerable;
use super::report::Verdict;
use super::Intercategory;

/// True when the cube is a transversal identity.
pub fn is_identity_cube<I: Intercategory>(a: &I, c: &I::Cube) -> bool {
    let src = a.cube_src(c);
    src == a.cube_tgt(c) && *c == a.t_id_bcell(&src)
}

fn two_sided<I: Intercategory>(a: &I, c: &I::Cube, inv: &I::Cube) -> bool {
    let (src, tgt) = (a.cube_src(c), a.cube_tgt(c));
    a.cube_src(inv) == tgt
        && a.cube_tgt(inv) == src
        && a.t_then_cube(c, inv).ok() == Some(a.t_id_bcell(&src))
        && a.t_then_cube(inv, c).ok() == Some(a.t_id_bcell(&tgt))
}

/// Tests a cube for invertibility in the transversal category of basic
/// cells and cubes. Returns the verdict and the inverse when one was found.
pub fn test_invertible<I: Intercategory>(a: &I, c: &I::Cube) -> (Verdict, Option<I::Cube>) {
    if is_identity_cube(a, c) {
        return (Verdict::Identity, Some(c.clone()));
    }
    match a.invert_cube(c) {
        Some(inv) if two_sided(a, c, &inv) => (Verdict::Invertible, Some(inv)),
        Some(_) => (Verdict::NotInvertible, None),
        None => (Verdict::NotInvertible, None),
    }
}

/// Like [`test_invertible`] but falls back to an exhaustive search over the
/// instance's cube enumeration when the instance offers no componentwise
/// inverse.
pub fn test_invertible_enum<I: Intercategory + Enumerable>(a: &I, c: &I::Cube) -> (Verdict, Option<I::Cube>) {
    if is_identity_cube(a, c) {
        return (Verdict::Identity, Some(c.clone()));
    }
    if let Some(inv) = a.invert_cube(c) {
        if two_sided(a, c, &inv) {
            return (Verdict::Invertible, Some(inv));
        }
    }
    match a.cubes_between(&a.cube_tgt(c), &a.cube_src(c)) {
        None => (Verdict::Undecided, None),
        Some(cands) => {
            for inv in cands {
                if two_sided(a, c, &inv) {
                    return (Verdict::Invertible, Some(inv));
                }
            }
            (Verdict::NotInvertible, None)
        }
    }
}
