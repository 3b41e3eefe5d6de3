//! Representable modules `F_*` and `F^*` for a functor `F`, the adjunction
//! `F_* ⊣ F^*`, induced morphisms of representables, and the canonical
//! comparisons `(F_* ; G_*) ≅ (GF)_*` and `(G^* ; F^*) ≅ (GF)^*`.

use crate::error::Result;
use crate::fincat::{FinCat, Functor, NatTrans};
use crate::finset::{FinFn, FinSet};

use super::algebra::{associator, from_composite, unitor_post, unitor_pre, whisker_post, whisker_pre};
use super::compose::compose_modules;
use super::module::{Adjunction, ModMorphism, Module};

fn hom_set(cat: &FinCat, x: usize, y: usize) -> FinSet {
    FinSet::new(
        cat.hom(x, y)
            .into_iter()
            .map(|m| cat.morphism(m).name.clone())
            .collect(),
    )
    .expect("morphism names are distinct")
}

/// Element index of a morphism inside a hom-set carrier.
fn elem_of(set: &FinSet, cat: &FinCat, mor: usize) -> usize {
    set.index_of(&cat.morphism(mor).name)
        .expect("morphism lies in this hom-set")
}

/// Morphism index named by a hom-set carrier element.
fn mor_of(set: &FinSet, cat: &FinCat, i: usize) -> usize {
    cat.find_morphism(set.label(i))
        .expect("element names a morphism")
}

/// `F_* : A ⇸ B` with `F_*(b, a) = B(b, Fa)`; left action precomposes,
/// right action postcomposes with the image of the acting morphism.
pub fn lower_representable(f: &Functor) -> Module {
    let a_cat = f.source().clone();
    let b_cat = f.target().clone();
    let (na, nb) = (a_cat.n_objects(), b_cat.n_objects());
    let components: Vec<FinSet> = (0..nb)
        .flat_map(|b| (0..na).map(move |a| (b, a)))
        .map(|(b, a)| hom_set(&b_cat, b, f.on_object(a)))
        .collect();
    let component = |b: usize, a: usize| &components[b * na + a];
    let mut act_left = Vec::new();
    for beta in 0..b_cat.n_morphisms() {
        let d = b_cat.morphism(beta);
        for a in 0..na {
            let (dom, cod) = (component(d.tgt, a), component(d.src, a));
            act_left.push(FinFn::from_index_fn(dom.clone(), cod.clone(), |i| {
                let g = mor_of(dom, &b_cat, i);
                elem_of(cod, &b_cat, b_cat.compose(g, beta).expect("valid table"))
            }));
        }
    }
    let mut act_right = Vec::new();
    for alpha in 0..a_cat.n_morphisms() {
        let d = a_cat.morphism(alpha);
        for b in 0..nb {
            let (dom, cod) = (component(b, d.src), component(b, d.tgt));
            act_right.push(FinFn::from_index_fn(dom.clone(), cod.clone(), |i| {
                let g = mor_of(dom, &b_cat, i);
                elem_of(
                    cod,
                    &b_cat,
                    b_cat.compose(f.on_morphism(alpha), g).expect("valid table"),
                )
            }));
        }
    }
    Module::new(a_cat, b_cat, components, act_left, act_right)
        .expect("representable tables are functorial")
}

/// `F^* : B ⇸ A` with `F^*(a, b) = B(Fa, b)`.
pub fn upper_representable(f: &Functor) -> Module {
    let a_cat = f.source().clone();
    let b_cat = f.target().clone();
    let (na, nb) = (a_cat.n_objects(), b_cat.n_objects());
    let components: Vec<FinSet> = (0..na)
        .flat_map(|a| (0..nb).map(move |b| (a, b)))
        .map(|(a, b)| hom_set(&b_cat, f.on_object(a), b))
        .collect();
    let component = |a: usize, b: usize| &components[a * nb + b];
    let mut act_left = Vec::new();
    for alpha in 0..a_cat.n_morphisms() {
        let d = a_cat.morphism(alpha);
        for b in 0..nb {
            let (dom, cod) = (component(d.tgt, b), component(d.src, b));
            act_left.push(FinFn::from_index_fn(dom.clone(), cod.clone(), |i| {
                let g = mor_of(dom, &b_cat, i);
                elem_of(
                    cod,
                    &b_cat,
                    b_cat.compose(g, f.on_morphism(alpha)).expect("valid table"),
                )
            }));
        }
    }
    let mut act_right = Vec::new();
    for beta in 0..b_cat.n_morphisms() {
        let d = b_cat.morphism(beta);
        for a in 0..na {
            let (dom, cod) = (component(a, d.src), component(a, d.tgt));
            act_right.push(FinFn::from_index_fn(dom.clone(), cod.clone(), |i| {
                let g = mor_of(dom, &b_cat, i);
                elem_of(cod, &b_cat, b_cat.compose(beta, g).expect("valid table"))
            }));
        }
    }
    Module::new(b_cat, a_cat, components, act_left, act_right)
        .expect("representable tables are functorial")
}

/// `t : F ⇒ G` induces `t_* : F_* ⇒ G_*` by postcomposition with its
/// components.
pub fn nat_lower(t: &NatTrans) -> Result<ModMorphism> {
    let src = lower_representable(t.source());
    let tgt = lower_representable(t.target());
    let b_cat = t.source().target().clone();
    let na = t.source().source().n_objects();
    let nb = b_cat.n_objects();
    let mut comps = Vec::with_capacity(na * nb);
    for b in 0..nb {
        for a in 0..na {
            let (dom, cod) = (src.component(b, a), tgt.component(b, a));
            comps.push(FinFn::from_index_fn(dom.clone(), cod.clone(), |i| {
                let g = mor_of(dom, &b_cat, i);
                elem_of(
                    cod,
                    &b_cat,
                    b_cat.compose(t.component(a), g).expect("valid table"),
                )
            }));
        }
    }
    ModMorphism::new(src, tgt, comps)
}

/// Unit `I_A ⇒ (F_* ; F^*)`: `α : a₁ → a₂` goes to the class of
/// `(Fα, 1)` at the middle object `F a₁`.
pub fn representable_unit(f: &Functor) -> Result<ModMorphism> {
    let a_cat = f.source().clone();
    let b_cat = f.target().clone();
    let ia = Module::identity(&a_cat);
    let lower = lower_representable(f);
    let upper = upper_representable(f);
    let comp = compose_modules(&lower, &upper)?;
    let n = a_cat.n_objects();
    let mut comps = Vec::with_capacity(n * n);
    for a1 in 0..n {
        for a2 in 0..n {
            let dom = ia.component(a1, a2).clone();
            let cod = comp.module.component(a1, a2).clone();
            let dom_ref = ia.component(a1, a2);
            comps.push(FinFn::from_index_fn(dom.clone(), cod, |i| {
                let alpha = mor_of(dom_ref, &a_cat, i);
                let b = f.on_object(a1);
                let x = elem_of(lower.component(b, a2), &b_cat, f.on_morphism(alpha));
                let y = elem_of(upper.component(a1, b), &b_cat, b_cat.identity(b));
                comp.class_of(a1, a2, b, x, y)
            }));
        }
    }
    ModMorphism::new(ia, comp.module, comps)
}

/// Counit `(F^* ; F_*) ⇒ I_B`: the class of `(x : Fa → b₂, y : b₁ → Fa)`
/// goes to `x ∘ y`.
pub fn representable_counit(f: &Functor) -> Result<ModMorphism> {
    let b_cat = f.target().clone();
    let ib = Module::identity(&b_cat);
    let lower = lower_representable(f);
    let upper = upper_representable(f);
    let comp = compose_modules(&upper, &lower)?;
    from_composite(&comp, &ib, |b1, b2, (a, xi, yi)| {
        let x = mor_of(upper.component(a, b2), &b_cat, xi);
        let y = mor_of(lower.component(b1, a), &b_cat, yi);
        let xy = b_cat.compose(x, y).expect("valid table");
        elem_of(ib.component(b1, b2), &b_cat, xy)
    })
}

/// The adjunction `F_* ⊣ F^*`.
pub fn representable_modules(f: &Functor) -> Result<Adjunction> {
    Ok(Adjunction {
        lower: lower_representable(f),
        upper: upper_representable(f),
        unit: representable_unit(f)?,
        counit: representable_counit(f)?,
    })
}

/// Both triangle identities, assembled from unitors, associators and
/// whiskering.
pub fn check_triangle_identities(adj: &Adjunction) -> Result<bool> {
    let l = &adj.lower;
    let r = &adj.upper;

    let chain1 = unitor_pre(l)?
        .inverse()
        .expect("unitors are invertible")
        .then(&whisker_post(&adj.unit, l)?)?
        .then(&associator(l, r, l)?)?
        .then(&whisker_pre(l, &adj.counit)?)?
        .then(&unitor_post(l)?)?;
    if chain1 != ModMorphism::identity(l) {
        return Ok(false);
    }

    let chain2 = unitor_post(r)?
        .inverse()
        .expect("unitors are invertible")
        .then(&whisker_pre(r, &adj.unit)?)?
        .then(
            &associator(r, l, r)?
                .inverse()
                .expect("associators are invertible"),
        )?
        .then(&whisker_post(&adj.counit, r)?)?
        .then(&unitor_pre(r)?)?;
    Ok(chain2 == ModMorphism::identity(r))
}

/// `(F_* ; G_*) ⇒ (GF)_*` for `F : A → B`, `G : B → C`: the class of
/// `(x : b → Fa, y : c → Gb)` goes to `Gx ∘ y`. Invertible by Yoneda.
pub fn representable_compose_lower(f: &Functor, g: &Functor) -> Result<ModMorphism> {
    let gf = f.then(g)?;
    let lf = lower_representable(f);
    let lg = lower_representable(g);
    let lgf = lower_representable(&gf);
    let c_cat = g.target().clone();
    let comp = compose_modules(&lf, &lg)?;
    from_composite(&comp, &lgf, |c, a, (b, xi, yi)| {
        let x = mor_of(lf.component(b, a), f.target(), xi);
        let y = mor_of(lg.component(c, b), &c_cat, yi);
        let gx_y = c_cat.compose(g.on_morphism(x), y).expect("valid table");
        elem_of(lgf.component(c, a), &c_cat, gx_y)
    })
}

/// `(G^* ; F^*) ⇒ (GF)^*` for `F : A → B`, `G : B → C`: the class of
/// `(x : Gb → c, y : Fa → b)` goes to `x ∘ Gy`. Invertible by Yoneda.
pub fn representable_compose_upper(f: &Functor, g: &Functor) -> Result<ModMorphism> {
    let gf = f.then(g)?;
    let uf = upper_representable(f);
    let ug = upper_representable(g);
    let ugf = upper_representable(&gf);
    let c_cat = g.target().clone();
    let comp = compose_modules(&ug, &uf)?;
    from_composite(&comp, &ugf, |a, c, (b, xi, yi)| {
        let x = mor_of(ug.component(b, c), &c_cat, xi);
        let y = mor_of(uf.component(a, b), f.target(), yi);
        let x_gy = c_cat.compose(x, g.on_morphism(y)).expect("valid table");
        elem_of(ugf.component(a, c), &c_cat, x_gy)
    })
}
