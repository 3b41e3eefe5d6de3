mod common;

use std::sync::Arc;

use catkit_core::error::Error;
use catkit_core::fincat::{comma_category, standard, FinCat, Functor, NatTrans};
use catkit_core::guard::SizeGuard;
use catkit_core::kan::*;
use common::{arc, collapse, point};

fn two() -> Arc<FinCat> {
    arc(standard::walking_arrow())
}

fn one() -> Arc<FinCat> {
    arc(standard::terminal())
}

/// The poset-2 instance: `j : 1 → 2` at 0, `f : 1 → 2` at ⊥.
fn poset_instance() -> (Functor, Functor) {
    (point(&two(), "0"), point(&two(), "0"))
}

#[test]
fn identity_triangle_is_pointwise_and_weak() {
    let f = point(&two(), "1");
    let t = Triangle::identity(&f);
    assert!(check_pointwise_right_extension(&t).unwrap().is_holds());
    assert!(check_weak_right_extension(&t, &SizeGuard::default())
        .unwrap()
        .is_holds());
}

#[test]
fn ran_of_bottom_along_point_is_the_chain() {
    let (j, f) = poset_instance();
    let t = construct_pointwise_ran(&j, &f).unwrap();
    assert_eq!(t.r.on_object(0), 0); // R(0) = ⊥
    assert_eq!(t.r.on_object(1), 1); // R(1) = ⊤
    assert!(check_pointwise_right_extension(&t).unwrap().is_holds());
    assert!(check_weak_right_extension(&t, &SizeGuard::default())
        .unwrap()
        .is_holds());
}

#[test]
fn constant_bottom_fails_both_checks() {
    let (j, f) = poset_instance();
    let r = collapse(&two()).then(&point(&two(), "0")).unwrap();
    let rho = NatTrans::identity(&f); // r∘j = f here, so the identity is typed
    let t = Triangle::new(j, f, r, rho).unwrap();
    let report = check_pointwise_right_extension(&t).unwrap();
    assert!(!report.is_holds());
    let w = report.first_failure().unwrap().witness.clone().unwrap();
    assert!(w.contains("maps 0 elements to 1"), "witness: {w}");
    assert!(!check_weak_right_extension(&t, &SizeGuard::default())
        .unwrap()
        .is_holds());
}

#[test]
fn pointwise_implies_weak_on_the_identity_square_paste() {
    let (j, f) = poset_instance();
    let t = construct_pointwise_ran(&j, &f).unwrap();
    let sq = Square::identity(&t.j);
    let (pasted, report) = paste_bc_on_extension(&sq, &t, &SizeGuard::default()).unwrap();
    assert!(report.is_holds());
    assert_eq!(pasted.f, t.f);
    assert_eq!(pasted.r, t.r);
}

#[test]
fn ran_needs_a_terminal_object() {
    let j = point(&two(), "0");
    let disc = arc(standard::discrete(2));
    let f = Functor::new(one(), disc.clone(), vec![0], vec![0]).unwrap();
    match construct_pointwise_ran(&j, &f) {
        Err(Error::NotRepresentable(b)) => assert_eq!(b, "1"),
        other => panic!("expected NotRepresentable, got {other:?}"),
    }
}

#[test]
fn fully_faithful_unit_is_invertible() {
    let (j, f) = poset_instance();
    assert!(j.is_fully_faithful());
    let t = construct_pointwise_ran(&j, &f).unwrap();
    assert!(check_fully_faithful_invertibility(&t).unwrap().is_holds());

    let id_t = Triangle::identity(&f);
    assert!(check_fully_faithful_invertibility(&id_t).unwrap().is_holds());
}

#[test]
fn invertibility_check_guards_its_precondition() {
    // j the collapse 2 → 1 is not fully faithful.
    let j = collapse(&two());
    let f = collapse(&two());
    let r = Functor::identity(&one());
    let t = Triangle::new(j, f.clone(), r, NatTrans::identity(&f)).unwrap();
    assert!(matches!(
        check_fully_faithful_invertibility(&t),
        Err(Error::PreconditionFailed(_))
    ));
}

#[test]
fn identity_square_is_bc() {
    let j = point(&two(), "0");
    assert!(check_bc(&Square::identity(&j)).unwrap().is_holds());
}

#[test]
fn comma_squares_are_bc() {
    let cases = vec![
        (Functor::identity(&two()), point(&two(), "0")),
        (point(&two(), "1"), point(&two(), "0")),
        (point(&two(), "0"), point(&two(), "0")),
        (collapse(&two()), Functor::identity(&one())),
    ];
    for (b, j) in cases {
        let cc = comma_category(&b, &j).unwrap();
        let sq = Square::new(cc.d0, cc.d1, j.clone(), b.clone(), cc.lambda).unwrap();
        assert!(check_bc(&sq).unwrap().is_holds(), "comma of {b:?}, {j:?}");
    }
}

#[test]
fn empty_top_square_is_not_bc() {
    // S = ∅, A = U = B = 1, j = b = id: the mate compares ∅ with a point.
    let empty = arc(standard::empty());
    let id1 = Functor::identity(&one());
    let e = Functor::new(empty.clone(), one(), vec![], vec![]).unwrap();
    let lam = NatTrans::new(
        e.then(&id1).unwrap(),
        e.then(&id1).unwrap(),
        vec![],
    )
    .unwrap();
    let sq = Square::new(e.clone(), e, id1.clone(), id1, lam).unwrap();
    let report = check_bc(&sq).unwrap();
    assert!(!report.is_holds());
}

#[test]
fn pasting_a_comma_square_preserves_weak_extension() {
    let (j, f) = poset_instance();
    let t = construct_pointwise_ran(&j, &f).unwrap();
    let b = point(&two(), "1");
    let cc = comma_category(&b, &j).unwrap();
    let sq = Square::new(cc.d0, cc.d1, j, b, cc.lambda).unwrap();
    let (_, report) = paste_bc_on_extension(&sq, &t, &SizeGuard::default()).unwrap();
    assert!(report.is_holds());
}

#[test]
fn non_bc_square_is_rejected_by_pasting() {
    let (j, f) = poset_instance();
    let t = construct_pointwise_ran(&j, &f).unwrap();
    // The empty-source square over j (with U = 1, b at 0) is not BC: the
    // mate compares an empty coend with 2(0, 0).
    let empty = arc(standard::empty());
    let e1 = Functor::new(empty.clone(), one(), vec![], vec![]).unwrap();
    let e2 = Functor::new(empty.clone(), two(), vec![], vec![]).unwrap();
    let lam = NatTrans::new(e2.clone(), e2.clone(), vec![]).unwrap();
    let sq = Square::new(e1.clone(), e1, j, point(&two(), "0"), lam).unwrap();
    assert!(!check_bc(&sq).unwrap().is_holds());
    assert!(matches!(
        paste_bc_on_extension(&sq, &t, &SizeGuard::default()),
        Err(Error::PreconditionFailed(_))
    ));
}

#[test]
fn product_squares_are_bc() {
    use catkit_core::fincat::product_functor;
    let h = point(&two(), "0"); // H = 1, K = 2
    let u = point(&two(), "1"); // A = 1, B = 2
    let id_h = Functor::identity(h.source());
    let id_k = Functor::identity(h.target());
    let p = product_functor(&id_h, &u);
    let q = product_functor(&h, &Functor::identity(u.source()));
    let j = product_functor(&id_k, &u);
    let b = product_functor(&h, &Functor::identity(u.target()));
    let bp = p.then(&b).unwrap();
    let lam = NatTrans::identity(&bp);
    let sq = Square::new(p, q, j, b, lam).unwrap();
    assert!(check_bc(&sq).unwrap().is_holds());
}

#[test]
fn lan_is_constant_on_the_poset_instance() {
    let (j, f) = poset_instance();
    let lt = construct_pointwise_lan(&j, &f).unwrap();
    assert_eq!(lt.lan.on_object(0), 0);
    assert_eq!(lt.lan.on_object(1), 0);
    // The dual triangle is an honest pointwise right extension.
    assert!(check_pointwise_right_extension(&lt.dual).unwrap().is_holds());
    // The unit pastes to a bijection: Nat(lan, g) ≅ Nat(f, g∘j).
    let guard = SizeGuard::default();
    let x = lt.f.target().clone();
    for g in catkit_core::fincat::enumerate_functors(lt.j.target(), &x, &guard).unwrap() {
        let lhs = catkit_core::fincat::enumerate_nat_trans(&lt.lan, &g, &guard).unwrap();
        let gj = lt.j.then(&g).unwrap();
        let rhs = catkit_core::fincat::enumerate_nat_trans(&lt.f, &gj, &guard).unwrap();
        let mut pasted: Vec<Vec<usize>> = Vec::new();
        for theta in &lhs {
            let tj = catkit_core::fincat::whisker_inner(theta, &lt.j).unwrap();
            pasted.push(lt.unit.then(&tj).unwrap().components().to_vec());
        }
        pasted.sort();
        pasted.dedup();
        assert_eq!(pasted.len(), lhs.len());
        assert_eq!(lhs.len(), rhs.len());
    }
}

#[test]
fn lan_along_identity_is_the_functor_itself() {
    let f = point(&two(), "1");
    let lt = construct_pointwise_lan(&Functor::identity(f.source()), &f).unwrap();
    assert_eq!(lt.lan, f);
}

#[test]
fn mates_of_pasted_squares_factor_through_pasted_mates() {
    // Two comma squares pasted along their shared edge: the mate of the
    // paste must be invertible whenever both mates are (both commas are
    // BC, and the pasted square is again a comma-like BC square here).
    let j = point(&two(), "0");
    let b = Functor::identity(&two());
    let cc = comma_category(&b, &j).unwrap();
    let sq = Square::new(cc.d0.clone(), cc.d1, j, b, cc.lambda).unwrap();
    let cc2 = comma_category(&Functor::identity(&two()), &sq.p).unwrap();
    let top = Square::new(
        cc2.d0.clone(),
        cc2.d1,
        sq.p.clone(),
        Functor::identity(&two()),
        cc2.lambda,
    )
    .unwrap();
    let pasted = paste_squares(&top, &sq).unwrap();
    assert!(check_bc(&top).unwrap().is_holds());
    assert!(check_bc(&sq).unwrap().is_holds());
    assert!(check_bc(&pasted).unwrap().is_holds());
}
