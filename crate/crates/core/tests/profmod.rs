mod common;

use std::sync::Arc;

use catkit_core::fincat::{standard, FinCat, Functor, NatTrans};
use catkit_core::finset::FinSet;
use catkit_core::guard::SizeGuard;
use catkit_core::profmod::*;
use common::{arc, assert_composite_matches_oracle, collapse, point};

fn set(labels: &[&str]) -> FinSet {
    FinSet::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
}

fn two() -> Arc<FinCat> {
    arc(standard::walking_arrow())
}

fn one() -> Arc<FinCat> {
    arc(standard::terminal())
}

/// `M : 1 ⇸ 2` with `M(0) = {m}`, `M(1) = ∅`.
fn module_m() -> Module {
    Module::from_maps(
        one(),
        two(),
        vec![set(&["m"]), FinSet::empty()],
        |_, _, _| unreachable!("no action source"),
        |_, _, _| unreachable!("only identities in 1"),
    )
    .unwrap()
}

/// `N : 2 ⇸ 1` with `N(0) = {n0}`, `N(1) = {n1}`, the arrow acting
/// `n0 ↦ n1`.
fn module_n() -> Module {
    Module::from_maps(
        two(),
        one(),
        vec![set(&["n0"]), set(&["n1"])],
        |_, _, _| unreachable!("only identities in 1"),
        |_, _, e| {
            assert_eq!(e, "n0");
            "n1".into()
        },
    )
    .unwrap()
}

#[test]
fn identity_module_of_walking_arrow() {
    let i = Module::identity(&two());
    assert_eq!(i.component(0, 0).len(), 1);
    assert_eq!(i.component(0, 1).len(), 1); // the arrow 0 → 1
    assert_eq!(i.component(1, 0).len(), 0);
    assert_eq!(i.component(1, 1).len(), 1);
}

#[test]
fn composite_of_spec_example_has_one_element() {
    let m = module_m();
    let n = module_n();
    let comp = compose_modules(&m, &n).unwrap();
    assert_eq!(comp.module.component(0, 0).len(), 1);
    assert_composite_matches_oracle(&m, &n, &comp);
}

#[test]
fn unitors_are_isomorphisms() {
    for m in [
        module_m(),
        module_n(),
        Module::identity(&two()),
        lower_representable(&point(&two(), "0")),
    ] {
        let pre = unitor_pre(&m).unwrap();
        assert!(pre.is_iso(), "unitor_pre not iso");
        let post = unitor_post(&m).unwrap();
        assert!(post.is_iso(), "unitor_post not iso");
    }
}

#[test]
fn associator_is_an_isomorphism() {
    let m = module_m();
    let n = module_n();
    let i1 = Module::identity(&one());
    let a = associator(&m, &n, &i1).unwrap();
    assert!(a.is_iso());
    let a2 = associator(&i1, &m, &n).unwrap();
    assert!(a2.is_iso());
}

#[test]
fn representable_sizes_of_point_inclusion() {
    let j = point(&two(), "0");
    let lower = lower_representable(&j);
    assert_eq!(lower.component(0, 0).len(), 1);
    assert_eq!(lower.component(1, 0).len(), 0);
    let upper = upper_representable(&j);
    assert_eq!(upper.component(0, 0).len(), 1);
    assert_eq!(upper.component(0, 1).len(), 1);
}

#[test]
fn representable_adjunction_triangle_identities() {
    for f in [
        point(&two(), "0"),
        point(&two(), "1"),
        collapse(&two()),
        Functor::identity(&two()),
        Functor::identity(&one()),
    ] {
        let adj = representable_modules(&f).unwrap();
        assert!(check_triangle_identities(&adj).unwrap());
    }
}

#[test]
fn unit_is_iso_exactly_for_fully_faithful() {
    let incl = point(&two(), "0");
    assert!(incl.is_fully_faithful());
    assert!(representable_modules(&incl).unwrap().unit.is_iso());

    let c = collapse(&two());
    assert!(!c.is_fully_faithful());
    let unit = representable_modules(&c).unwrap().unit;
    assert!(!unit.is_iso());
    assert!(unit.non_iso_witness().is_some());
}

#[test]
fn extension_component_sizes() {
    // A = 1, B = 2, X = 1: M sizes (1, 0), N size 2.
    let m = module_m();
    let n = Module::from_maps(
        one(),
        one(),
        vec![set(&["p", "q"])],
        |_, _, _| unreachable!(),
        |_, _, _| unreachable!(),
    )
    .unwrap();
    let ext = right_extension_module(&m, &n).unwrap();
    assert_eq!(ext.module.component(0, 0).len(), 2);
    assert_eq!(ext.module.component(0, 1).len(), 1);
}

#[test]
fn extension_along_identity_module_is_isomorphic() {
    let n = module_n();
    let i = Module::identity(&two());
    let ext = right_extension_module(&i, &n).unwrap();
    let guard = SizeGuard::default();
    assert!(find_module_iso(&ext.module, &n, &guard).unwrap().is_some());
}

#[test]
fn lifting_component_size() {
    // A = X = 1, B = 2, m sizes (1, 0), n sizes (1, 1).
    let m = module_m();
    let n = Module::from_maps(
        one(),
        two(),
        vec![set(&["u0"]), set(&["u1"])],
        |_, _, e| {
            assert_eq!(e, "u1");
            "u0".into()
        },
        |_, _, _| unreachable!("only identities in 1"),
    )
    .unwrap();
    let lift = right_lifting_module(&m, &n).unwrap();
    assert_eq!(lift.module.component(0, 0).len(), 1);
}

#[test]
fn lifting_through_identity_module_is_isomorphic() {
    let n = module_n();
    let i = Module::identity(&one());
    let lift = right_lifting_module(&i, &n).unwrap();
    let guard = SizeGuard::default();
    assert!(find_module_iso(&lift.module, &n, &guard).unwrap().is_some());
}

#[test]
fn left_preadjoint_of_upper_is_lower() {
    let j = point(&two(), "0");
    let upper = upper_representable(&j);
    let lower = lower_representable(&j);
    let pre = left_preadjoint(&upper).unwrap();
    let guard = SizeGuard::default();
    assert!(find_module_iso(&pre.module, &lower, &guard)
        .unwrap()
        .is_some());
}

#[test]
fn extension_universal_property_small() {
    let m = module_m();
    let n = Module::from_maps(
        one(),
        one(),
        vec![set(&["p", "q"])],
        |_, _, _| unreachable!(),
        |_, _, _| unreachable!(),
    )
    .unwrap();
    let ext = right_extension_module(&m, &n).unwrap();
    let guard = SizeGuard::default();
    let report = check_right_extension_universal(&m, &n, &ext, 2, &guard).unwrap();
    assert!(report.is_holds(), "{report}");
}

#[test]
fn lifting_universal_property_small() {
    let m = module_m();
    let n = Module::from_maps(
        one(),
        two(),
        vec![set(&["u0"]), set(&["u1"])],
        |_, _, e| {
            assert_eq!(e, "u1");
            "u0".into()
        },
        |_, _, _| unreachable!("only identities in 1"),
    )
    .unwrap();
    let lift = right_lifting_module(&m, &n).unwrap();
    let guard = SizeGuard::default();
    let report = check_right_lifting_universal(&m, &n, &lift, 2, &guard).unwrap();
    assert!(report.is_holds(), "{report}");
}

#[test]
fn extension_currying_iso() {
    // hom(m1 ; m2, n) ≅ hom(m2, hom(m1, n)) on representables of points.
    let j = point(&two(), "0");
    let m1 = lower_representable(&j);
    let m2 = Module::identity(&two());
    let n = lower_representable(&point(&two(), "1"));
    let (cmp, _, _, _) = extension_currying(&m1, &m2, &n).unwrap();
    assert!(cmp.is_iso());
}

#[test]
fn lifting_currying_iso() {
    let j = point(&two(), "0");
    let l = upper_representable(&j);
    let m = Module::identity(&one());
    let n = module_n();
    let (cmp, _, _, _) = lifting_currying(&l, &m, &n).unwrap();
    assert!(cmp.is_iso());
}

#[test]
fn mate_generic_equals_explicit_on_identity_square() {
    let c = two();
    let id = Functor::identity(&c);
    let lam = NatTrans::identity(&id);
    let generic = mate_of_square(&id, &id, &id, &id, &lam).unwrap();
    let explicit = mate_of_square_explicit(&id, &id, &id, &id, &lam).unwrap();
    assert_eq!(generic, explicit);
    assert!(generic.is_iso());
}

#[test]
fn mate_on_empty_comma_square_is_empty_iso() {
    use catkit_core::fincat::comma_category;
    let b = point(&two(), "1");
    let j = point(&two(), "0");
    let cc = comma_category(&b, &j).unwrap();
    assert_eq!(cc.cat.n_objects(), 0);
    let generic = mate_of_square(&cc.d0, &cc.d1, &j, &b, &cc.lambda).unwrap();
    let explicit = mate_of_square_explicit(&cc.d0, &cc.d1, &j, &b, &cc.lambda).unwrap();
    assert_eq!(generic, explicit);
    assert!(generic.is_iso());
    assert_eq!(generic.source().component(0, 0).len(), 0);
}

#[test]
fn mate_on_comma_square_is_iso() {
    use catkit_core::fincat::comma_category;
    let b = Functor::identity(&two());
    let j = point(&two(), "0");
    let cc = comma_category(&b, &j).unwrap();
    let generic = mate_of_square(&cc.d0, &cc.d1, &j, &b, &cc.lambda).unwrap();
    let explicit = mate_of_square_explicit(&cc.d0, &cc.d1, &j, &b, &cc.lambda).unwrap();
    assert_eq!(generic, explicit);
    assert!(generic.is_iso(), "{:?}", generic.non_iso_witness());
}

#[test]
fn enumerate_modules_counts_presheaves_on_terminal() {
    // Modules 1 ⇸ 1 with at most 2 elements: sets of size 0, 1, 2.
    let guard = SizeGuard::default();
    let ms = enumerate_modules(&one(), &one(), 2, &guard).unwrap();
    assert_eq!(ms.len(), 3);
}
