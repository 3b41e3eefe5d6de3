mod common;

use std::sync::Arc;

use catkit_core::collage::*;
use catkit_core::fincat::{standard, validate_category, FinCat, Functor};
use catkit_core::finset::FinSet;
use catkit_core::guard::SizeGuard;
use catkit_core::kan::{construct_pointwise_ran, Triangle};
use catkit_core::profmod::Module;
use common::{arc, collapse, point};

fn two() -> Arc<FinCat> {
    arc(standard::walking_arrow())
}

fn one() -> Arc<FinCat> {
    arc(standard::terminal())
}

fn set(labels: &[&str]) -> FinSet {
    FinSet::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
}

fn singleton_module() -> Module {
    Module::from_maps(
        one(),
        one(),
        vec![set(&["m"])],
        |_, _, _| unreachable!(),
        |_, _, _| unreachable!(),
    )
    .unwrap()
}

fn guard() -> SizeGuard {
    SizeGuard::default()
}

#[test]
fn collage_of_singleton_is_the_walking_arrow() {
    let cb = build_collage(&singleton_module(), &guard()).unwrap();
    assert_eq!(cb.cat.n_objects(), 2);
    assert_eq!(cb.cat.n_morphisms(), 3);
    assert!(validate_category(&cb.cat).is_holds());
    // The cross morphism keeps its label verbatim.
    assert!(cb.cat.find_morphism("m").is_some());
    assert!(validate_collage(&cb).unwrap().is_holds());
}

#[test]
fn collage_of_empty_module_is_a_disjoint_union() {
    let m = Module::from_maps(
        two(),
        two(),
        vec![FinSet::empty(); 4],
        |_, _, _| unreachable!(),
        |_, _, _| unreachable!(),
    )
    .unwrap();
    let cb = build_collage(&m, &guard()).unwrap();
    assert_eq!(cb.cat.n_objects(), 4);
    assert_eq!(cb.cat.n_morphisms(), 6);
    assert!(validate_collage(&cb).unwrap().is_holds());
}

#[test]
fn collage_of_point_representable_counts() {
    // M : 1 ⇸ 2 with sizes (1, 0): 3 objects, 5 morphisms.
    let j = point(&two(), "0");
    let m = catkit_core::profmod::lower_representable(&j);
    let cb = build_collage(&m, &guard()).unwrap();
    assert_eq!(cb.cat.n_objects(), 3);
    assert_eq!(cb.cat.n_morphisms(), 5);
    assert!(validate_collage(&cb).unwrap().is_holds());
}

#[test]
fn collage_with_colliding_labels_qualifies_crosses() {
    // The identity module of 1 has element `id0`, which collides with the
    // embedded identity names only after tagging; use a module whose
    // element label equals a tagged name to force qualification.
    let m = Module::from_maps(
        one(),
        one(),
        vec![set(&["a.id0"])],
        |_, _, _| unreachable!(),
        |_, _, _| unreachable!(),
    )
    .unwrap();
    let cb = build_collage(&m, &guard()).unwrap();
    assert!(validate_category(&cb.cat).is_holds());
    assert_eq!(cb.cat.n_morphisms(), 3);
    assert!(cb.cat.find_morphism("x.0.0.a\\.id0").is_some());
}

#[test]
fn collage_universal_property_counts() {
    // Singleton M into X = 2: three functors, three triples.
    let report = check_collage_universal(&singleton_module(), &two(), &guard()).unwrap();
    assert!(report.is_holds(), "{report}");

    // Empty module: functors from the disjoint union are pairs.
    let m = Module::from_maps(
        one(),
        one(),
        vec![FinSet::empty()],
        |_, _, _| unreachable!(),
        |_, _, _| unreachable!(),
    )
    .unwrap();
    let report = check_collage_universal(&m, &two(), &guard()).unwrap();
    assert!(report.is_holds(), "{report}");
}

#[test]
fn cocomma_of_identity_span_is_the_walking_arrow() {
    let id = Functor::identity(&one());
    let (sq, cb) = cocomma_square(&id, &id, &guard()).unwrap();
    assert_eq!(cb.cat.n_objects(), 2);
    assert_eq!(cb.cat.n_morphisms(), 3);
    assert!(catkit_core::kan::check_bc(&sq).unwrap().is_holds());
}

#[test]
fn cocomma_of_empty_span_is_disjoint_union() {
    let empty = arc(standard::empty());
    let q = Functor::new(empty.clone(), one(), vec![], vec![]).unwrap();
    let p = Functor::new(empty.clone(), two(), vec![], vec![]).unwrap();
    let (sq, cb) = cocomma_square(&q, &p, &guard()).unwrap();
    assert_eq!(cb.cat.n_objects(), 3);
    assert!(catkit_core::kan::check_bc(&sq).unwrap().is_holds());
}

#[test]
fn cocomma_squares_are_bc() {
    let spans = vec![
        (point(&two(), "0"), point(&two(), "1")),
        (collapse(&two()), Functor::identity(&two())),
        (Functor::identity(&two()), collapse(&two())),
    ];
    for (q, p) in spans {
        let (sq, _) = cocomma_square(&q, &p, &guard()).unwrap();
        assert!(
            catkit_core::kan::check_bc(&sq).unwrap().is_holds(),
            "cocomma of {q:?}, {p:?}"
        );
    }
}

#[test]
fn induced_functor_of_identity_triangle_collapses() {
    let f = Functor::identity(&one());
    let t = Triangle::identity(&f);
    let (cb, h) = induced_functor_from_triangle(&t, &guard()).unwrap();
    assert_eq!(cb.cat.n_objects(), 2);
    assert_eq!(h.target().n_objects(), 1);
    // Restricting along the inclusions recovers f and r on the nose.
    assert_eq!(cb.i1.then(&h).unwrap(), t.f);
    assert_eq!(cb.i0.then(&h).unwrap(), t.r);
}

#[test]
fn induced_functor_on_the_poset_instance() {
    let j = point(&two(), "0");
    let f = point(&two(), "0");
    let t = construct_pointwise_ran(&j, &f).unwrap();
    let (cb, h) = induced_functor_from_triangle(&t, &guard()).unwrap();
    assert_eq!(cb.cat.n_objects(), 3);
    assert_eq!(cb.i1.then(&h).unwrap(), t.f);
    assert_eq!(cb.i0.then(&h).unwrap(), t.r);
}

#[test]
fn equivformext_agrees_on_good_and_broken_triangles() {
    // Identity triangle: both verdicts hold.
    let f = point(&two(), "1");
    let t = Triangle::identity(&f);
    let report = check_equivformext(&t, &guard()).unwrap();
    assert!(report.is_holds(), "{report}");

    // The poset ran triangle.
    let j = point(&two(), "0");
    let f = point(&two(), "0");
    let t = construct_pointwise_ran(&j, &f).unwrap();
    let report = check_equivformext(&t, &guard()).unwrap();
    assert!(report.is_holds(), "{report}");

    // Deliberately wrong r: both checks must fail, hence agree.
    let r = collapse(&two()).then(&point(&two(), "0")).unwrap();
    let broken = Triangle::new(
        j,
        f.clone(),
        r,
        catkit_core::fincat::NatTrans::identity(&f),
    )
    .unwrap();
    assert!(!catkit_core::kan::check_pointwise_right_extension(&broken)
        .unwrap()
        .is_holds());
    let report = check_equivformext(&broken, &guard()).unwrap();
    assert!(report.is_holds(), "{report}");
}

#[test]
fn k_compatibility_condition_two() {
    // Empty module into 1.
    let m0 = Module::from_maps(
        one(),
        one(),
        vec![FinSet::empty()],
        |_, _, _| unreachable!(),
        |_, _, _| unreachable!(),
    )
    .unwrap();
    assert!(check_k_compat_condition2(&m0, &one(), 1, &guard())
        .unwrap()
        .is_holds());

    // Singleton module into 1 and into 2.
    assert!(check_k_compat_condition2(&singleton_module(), &one(), 1, &guard())
        .unwrap()
        .is_holds());
    assert!(check_k_compat_condition2(&singleton_module(), &two(), 1, &guard())
        .unwrap()
        .is_holds());
}
