//! Span(Cat): the profunctor configuration over the one-object and arrow
//! categories produces an interchanger chi with empty source component and
//! singleton target, hence not invertible.

use intercat::constructions::fixtures::{span_cat, span_cat_counterexample};
use intercat::core::{test_invertible, Intercategory, Verdict};

#[test]
fn span_cat_chi_source_is_empty_target_is_singleton() {
    let a = span_cat();
    let (alpha, beta, abar, bbar) = span_cat_counterexample(&a);
    let chi = a.chi(&alpha, &beta, &abar, &bbar).unwrap();
    let src = a.cube_src(&chi);
    let tgt = a.cube_tgt(&chi);
    // middle profunctor of the source: all component sets empty
    let src_sets: usize = src.lcell.west.sets.values().map(|s| s.len()).sum();
    let tgt_sets: usize = tgt.lcell.west.sets.values().map(|s| s.len()).sum();
    assert_eq!(src_sets, 0, "composite through the empty pullback category is 0");
    assert_eq!(tgt_sets, 1, "product of four singletons over the glued middle");
    let (verdict, _) = test_invertible(&a, &chi);
    assert_eq!(verdict, Verdict::NotInvertible);
}
