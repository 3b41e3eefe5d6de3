//! Finite categories, functors and natural transformations, with the
//! derived categories the rest of the crate needs: opposites, products,
//! full subcategories, comma categories and functor categories.

mod build;
mod cat;
mod enumerate;
mod functor;
mod nat;

pub use build::{
    comma_category, full_subcategory, opposite_category, opposite_functor, opposite_nat,
    product_category, product_functor, standard, CommaCategory,
};
pub use cat::{validate_category, FinCat, MorData};
pub use enumerate::{
    count_functors_brute, enumerate_functors, enumerate_nat_trans, functor_category,
    FunctorCategory,
};
pub use functor::{compose_functors, same_category, Functor};
pub use nat::{whisker_inner, whisker_outer, NatTrans};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::guard::SizeGuard;

    fn arc(c: FinCat) -> Arc<FinCat> {
        Arc::new(c)
    }

    #[test]
    fn terminal_category_validates() {
        assert!(validate_category(&standard::terminal()).is_holds());
        assert!(validate_category(&standard::walking_arrow()).is_holds());
        assert!(validate_category(&standard::empty()).is_holds());
        assert!(validate_category(&standard::iso_pair()).is_holds());
    }

    #[test]
    fn missing_composite_is_reported() {
        // The walking arrow with the (id1, a01) entry dropped.
        let c = FinCat::new(
            vec!["0".into(), "1".into()],
            vec![
                ("id0".into(), "0".into(), "0".into()),
                ("id1".into(), "1".into(), "1".into()),
                ("a01".into(), "0".into(), "1".into()),
            ],
            vec![("0".into(), "id0".into()), ("1".into(), "id1".into())],
            vec![
                ("id0".into(), "id0".into(), "id0".into()),
                ("id1".into(), "id1".into(), "id1".into()),
                ("a01".into(), "id0".into(), "a01".into()),
            ],
        )
        .unwrap();
        let report = validate_category(&c);
        assert!(!report.is_holds());
        assert_eq!(report.first_failure().unwrap().id, "missing-composite");
    }

    #[test]
    fn opposite_is_involutive() {
        for c in [
            standard::terminal(),
            standard::walking_arrow(),
            standard::chain(3),
            standard::iso_pair(),
        ] {
            let op = opposite_category(&c);
            assert!(validate_category(&op).is_holds());
            assert_eq!(opposite_category(&op), c);
        }
        assert_eq!(
            opposite_category(&standard::terminal()),
            standard::terminal()
        );
    }

    #[test]
    fn opposite_reverses_the_arrow() {
        let c = standard::walking_arrow();
        let op = opposite_category(&c);
        let m = op.find_morphism("a01").unwrap();
        assert_eq!(op.morphism(m).src, 1);
        assert_eq!(op.morphism(m).tgt, 0);
    }

    #[test]
    fn product_counts() {
        let two = standard::walking_arrow();
        let p = product_category(&two, &two);
        assert_eq!(p.n_objects(), 4);
        assert_eq!(p.n_morphisms(), 9);
        assert!(validate_category(&p).is_holds());

        let e = product_category(&standard::empty(), &two);
        assert_eq!(e.n_objects(), 0);
    }

    #[test]
    fn product_with_terminal_is_isomorphic() {
        let two = standard::walking_arrow();
        let p = product_category(&standard::terminal(), &two);
        assert_eq!(p.n_objects(), two.n_objects());
        assert_eq!(p.n_morphisms(), two.n_morphisms());
        // Same composition table up to the pair relabelling.
        for g in 0..p.n_morphisms() {
            for f in 0..p.n_morphisms() {
                assert_eq!(p.compose(g, f), two.compose(g, f));
            }
        }
    }

    #[test]
    fn functor_category_of_walking_arrows() {
        let two = arc(standard::walking_arrow());
        let fc = functor_category(&two, &two, &SizeGuard::default()).unwrap();
        assert_eq!(fc.functors.len(), 3);
        assert_eq!(fc.transformations.len(), 6);
        assert!(validate_category(&fc.cat).is_holds());
    }

    #[test]
    fn functor_category_from_terminal_matches_target() {
        let one = arc(standard::terminal());
        let x = arc(standard::chain(3));
        let fc = functor_category(&one, &x, &SizeGuard::default()).unwrap();
        assert_eq!(fc.functors.len(), x.n_objects());
        assert_eq!(fc.transformations.len(), x.n_morphisms());
    }

    #[test]
    fn functor_category_from_empty_is_terminal() {
        let e = arc(standard::empty());
        let x = arc(standard::walking_arrow());
        let fc = functor_category(&e, &x, &SizeGuard::default()).unwrap();
        assert_eq!(fc.functors.len(), 1);
        assert_eq!(fc.transformations.len(), 1);
    }

    #[test]
    fn enumeration_agrees_with_brute_force() {
        let cats = [
            standard::terminal(),
            standard::walking_arrow(),
            standard::discrete(2),
            standard::chain(3),
            standard::iso_pair(),
        ];
        let guard = SizeGuard::default();
        for a in &cats {
            for x in &cats {
                let fast = enumerate_functors(&arc(a.clone()), &arc(x.clone()), &guard)
                    .unwrap()
                    .len();
                let brute = count_functors_brute(a, x, 1_000_000).unwrap();
                assert_eq!(fast, brute, "mismatch for {a:?} -> {x:?}");
            }
        }
    }

    #[test]
    fn fully_faithful_examples() {
        let one = arc(standard::terminal());
        let two = arc(standard::walking_arrow());
        assert!(Functor::identity(&two).is_fully_faithful());

        let incl = Functor::from_labels(
            one.clone(),
            two.clone(),
            &[("0".into(), "0".into())],
            &[("id0".into(), "id0".into())],
        )
        .unwrap();
        assert!(incl.is_fully_faithful());

        let collapse = Functor::from_labels(
            two.clone(),
            one.clone(),
            &[("0".into(), "0".into()), ("1".into(), "0".into())],
            &[
                ("id0".into(), "id0".into()),
                ("id1".into(), "id0".into()),
                ("a01".into(), "id0".into()),
            ],
        )
        .unwrap();
        assert!(!collapse.is_fully_faithful());
    }

    #[test]
    fn full_subcategory_examples() {
        let two = arc(standard::walking_arrow());
        let (all, incl) = full_subcategory(&two, &[0, 1]).unwrap();
        assert_eq!(*all, *two);
        assert!(incl.is_fully_faithful());

        let (none, _) = full_subcategory(&two, &[]).unwrap();
        assert_eq!(none.n_objects(), 0);

        let (bottom, incl) = full_subcategory(&two, &[0]).unwrap();
        assert_eq!(bottom.n_objects(), 1);
        assert_eq!(bottom.n_morphisms(), 1);
        assert!(incl.is_fully_faithful());

        assert!(full_subcategory(&two, &[7]).is_err());
    }

    fn point(two: &Arc<FinCat>, at: &str) -> Functor {
        let one = arc(standard::terminal());
        Functor::from_labels(
            one,
            two.clone(),
            &[("0".into(), at.into())],
            &[("id0".into(), format!("id{at}"))],
        )
        .unwrap()
    }

    #[test]
    fn comma_of_identities_on_terminal() {
        let one = arc(standard::terminal());
        let id = Functor::identity(&one);
        let cc = comma_category(&id, &id).unwrap();
        assert_eq!(cc.cat.n_objects(), 1);
        assert_eq!(cc.cat.n_morphisms(), 1);
    }

    #[test]
    fn comma_with_no_connecting_arrow_is_empty() {
        let two = arc(standard::walking_arrow());
        let b = point(&two, "1");
        let j = point(&two, "0");
        let cc = comma_category(&b, &j).unwrap();
        assert_eq!(cc.cat.n_objects(), 0);
    }

    #[test]
    fn comma_of_identity_and_point() {
        let two = arc(standard::walking_arrow());
        let b = Functor::identity(&two);
        let j = point(&two, "0");
        let cc = comma_category(&b, &j).unwrap();
        assert_eq!(cc.cat.n_objects(), 1);
        assert_eq!(cc.d0.on_object(0), 0);
        assert!(validate_category(&cc.cat).is_holds());
    }

    #[test]
    fn comma_outputs_validate() {
        let two = arc(standard::walking_arrow());
        let three = arc(standard::chain(3));
        let f = Functor::from_labels(
            two.clone(),
            three.clone(),
            &[("0".into(), "0".into()), ("1".into(), "2".into())],
            &[
                ("id0".into(), "id0".into()),
                ("id1".into(), "id2".into()),
                ("a01".into(), "a02".into()),
            ],
        )
        .unwrap();
        let g = Functor::from_labels(
            two.clone(),
            three.clone(),
            &[("0".into(), "1".into()), ("1".into(), "2".into())],
            &[
                ("id0".into(), "id1".into()),
                ("id1".into(), "id2".into()),
                ("a01".into(), "a12".into()),
            ],
        )
        .unwrap();
        let cc = comma_category(&f, &g).unwrap();
        assert!(validate_category(&cc.cat).is_holds());
        // The 2-cell is natural by construction; spot-check its boundary.
        assert_eq!(cc.lambda.source(), &cc.d0.then(&f).unwrap());
        assert_eq!(cc.lambda.target(), &cc.d1.then(&g).unwrap());
    }

    #[test]
    fn whiskering_and_vertical_composition() {
        let two = arc(standard::walking_arrow());
        let fc = functor_category(&two, &two, &SizeGuard::default()).unwrap();
        // Walking-arrow functor category is the chain F0 ≤ F1 ≤ F2.
        let t01 = &fc.transformations[fc.cat.find_morphism("t1").unwrap()];
        assert_eq!(t01.source(), &fc.functors[0]);
        let id = NatTrans::identity(&fc.functors[0]);
        let composed = id.then(t01).unwrap();
        assert_eq!(&composed, t01);
    }
}
