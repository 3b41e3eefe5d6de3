//! The composition laws for extensions and liftings: the canonical
//! comparisons `hom(m1 ; m2, n) ⇒ hom(m2, hom(m1, n))` and
//! `hom^(l ; m, n) ⇒ hom^(l, hom^(m, n))`, both invertible.

use crate::error::Result;
use crate::finset::FinFn;

use super::compose::compose_modules;
use super::hom::{right_extension_module, right_lifting_module, RightExtension, RightLifting};
use super::module::{ModMorphism, Module};

/// For `m1 : A ⇸ B`, `m2 : B ⇸ C`, `n : A ⇸ X`, the comparison that
/// curries a family over the composite into a family of families.
pub fn extension_currying(
    m1: &Module,
    m2: &Module,
    n: &Module,
) -> Result<(ModMorphism, RightExtension, RightExtension, RightExtension)> {
    let m12 = compose_modules(m1, m2)?;
    let lhs = right_extension_module(&m12.module, n)?;
    let h1 = right_extension_module(m1, n)?;
    let h2 = right_extension_module(m2, &h1.module)?;

    let na = m1.source().n_objects();
    let nb = m1.target().n_objects();
    let nc = m2.target().n_objects();
    let nx = n.target().n_objects();

    let mut comps = Vec::with_capacity(nx * nc);
    for x in 0..nx {
        for c in 0..nc {
            let dom = lhs.module.component(x, c).clone();
            let cod = h2.module.component(x, c).clone();
            comps.push(FinFn::from_index_fn(dom, cod, |e| {
                let phi = lhs.family(x, c, e);
                // ψ_b sends y ∈ m2(c, b) to the family
                // a ↦ (x' ↦ φ_a(class(b, x', y))).
                let psi: Vec<FinFn> = (0..nb)
                    .map(|b| {
                        FinFn::from_index_fn(
                            m2.component(c, b).clone(),
                            h1.module.component(x, b).clone(),
                            |yi| {
                                let chi: Vec<FinFn> = (0..na)
                                    .map(|a| {
                                        FinFn::from_index_fn(
                                            m1.component(b, a).clone(),
                                            n.component(x, a).clone(),
                                            |xi| {
                                                phi[a].apply_ix(m12.class_of(c, a, b, xi, yi))
                                            },
                                        )
                                    })
                                    .collect();
                                h1.family_index(x, b, &chi)
                                    .expect("curried family is natural")
                            },
                        )
                    })
                    .collect();
                h2.family_index(x, c, &psi)
                    .expect("curried family of families is natural")
            }));
        }
    }
    let morphism = ModMorphism::new(lhs.module.clone(), h2.module.clone(), comps)?;
    Ok((morphism, lhs, h1, h2))
}

/// For `l : C ⇸ A`, `m : A ⇸ B`, `n : X ⇸ B`, the lifting analogue.
pub fn lifting_currying(
    l: &Module,
    m: &Module,
    n: &Module,
) -> Result<(ModMorphism, RightLifting, RightLifting, RightLifting)> {
    let lm = compose_modules(l, m)?;
    let lhs = right_lifting_module(&lm.module, n)?;
    let l1 = right_lifting_module(m, n)?;
    let l2 = right_lifting_module(l, &l1.module)?;

    let na = m.source().n_objects();
    let nb = m.target().n_objects();
    let nc = l.source().n_objects();
    let nx = n.source().n_objects();

    let mut comps = Vec::with_capacity(nc * nx);
    for c in 0..nc {
        for x in 0..nx {
            let dom = lhs.module.component(c, x).clone();
            let cod = l2.module.component(c, x).clone();
            comps.push(FinFn::from_index_fn(dom, cod, |e| {
                let phi = lhs.family(c, x, e);
                let theta: Vec<FinFn> = (0..na)
                    .map(|a| {
                        FinFn::from_index_fn(
                            l.component(a, c).clone(),
                            l1.module.component(a, x).clone(),
                            |zi| {
                                let psi: Vec<FinFn> = (0..nb)
                                    .map(|b| {
                                        FinFn::from_index_fn(
                                            m.component(b, a).clone(),
                                            n.component(b, x).clone(),
                                            |wi| phi[b].apply_ix(lm.class_of(b, c, a, zi, wi)),
                                        )
                                    })
                                    .collect();
                                l1.family_index(a, x, &psi)
                                    .expect("curried family is natural")
                            },
                        )
                    })
                    .collect();
                l2.family_index(c, x, &theta)
                    .expect("curried family of families is natural")
            }));
        }
    }
    let morphism = ModMorphism::new(lhs.module.clone(), l2.module.clone(), comps)?;
    Ok((morphism, lhs, l1, l2))
}
