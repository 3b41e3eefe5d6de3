//! The 2-dimensional algebra of module morphisms: whiskering by modules,
//! coherence morphisms (unitors, associator), and helpers built on them.
//!
//! Composition is written left to right throughout: `compose_modules(m, n)`
//! applies `m` first, and comments write it `(m ; n)`.

use crate::error::Result;
use crate::finset::FinFn;

use super::compose::{compose_modules, ModuleComposite};
use super::module::{ModMorphism, Module};

/// `(I_A ; M) ⇒ M`: the class of `(α, y)` goes to `y · α`. Invertible.
pub fn unitor_pre(m: &Module) -> Result<ModMorphism> {
    let a_cat = m.source().clone();
    let ia = Module::identity(&a_cat);
    let comp = compose_modules(&ia, m)?;
    let (na, nb) = (a_cat.n_objects(), m.target().n_objects());
    let mut comps = Vec::with_capacity(na * nb);
    for b in 0..nb {
        for a in 0..na {
            let dom = comp.module.component(b, a).clone();
            let cod = m.component(b, a).clone();
            comps.push(FinFn::from_index_fn(dom, cod, |q| {
                let (mid, xi, yi) = comp.rep(b, a, q);
                let alpha = a_cat
                    .find_morphism(ia.component(mid, a).label(xi))
                    .expect("identity module elements are morphisms");
                m.act_right_fn(alpha, b).apply_ix(yi)
            }));
        }
    }
    ModMorphism::new(comp.module, m.clone(), comps)
}

/// `(M ; I_B) ⇒ M`: the class of `(x, β)` goes to `β · x`. Invertible.
pub fn unitor_post(m: &Module) -> Result<ModMorphism> {
    let b_cat = m.target().clone();
    let ib = Module::identity(&b_cat);
    let comp = compose_modules(m, &ib)?;
    let (na, nb) = (m.source().n_objects(), b_cat.n_objects());
    let mut comps = Vec::with_capacity(na * nb);
    for b in 0..nb {
        for a in 0..na {
            let dom = comp.module.component(b, a).clone();
            let cod = m.component(b, a).clone();
            comps.push(FinFn::from_index_fn(dom, cod, |q| {
                let (mid, xi, yi) = comp.rep(b, a, q);
                let beta = b_cat
                    .find_morphism(ib.component(b, mid).label(yi))
                    .expect("identity module elements are morphisms");
                m.act_left_fn(beta, a).apply_ix(xi)
            }));
        }
    }
    ModMorphism::new(comp.module, m.clone(), comps)
}

/// `((m ; n) ; p) ⇒ (m ; (n ; p))`. Invertible.
pub fn associator(m: &Module, n: &Module, p: &Module) -> Result<ModMorphism> {
    let mn = compose_modules(m, n)?;
    let np = compose_modules(n, p)?;
    let lhs = compose_modules(&mn.module, p)?;
    let rhs = compose_modules(m, &np.module)?;
    let na = m.source().n_objects();
    let nd = p.target().n_objects();
    let mut comps = Vec::with_capacity(na * nd);
    for d in 0..nd {
        for a in 0..na {
            let dom = lhs.module.component(d, a).clone();
            let cod = rhs.module.component(d, a).clone();
            comps.push(FinFn::from_index_fn(dom, cod, |q| {
                let (c, w, zi) = lhs.rep(d, a, q);
                let (b, xi, yi) = mn.rep(c, a, w);
                rhs.class_of(d, a, b, xi, np.class_of(d, b, c, yi, zi))
            }));
        }
    }
    ModMorphism::new(lhs.module, rhs.module, comps)
}

/// Whisker a morphism on the left by a module: for `t : M1 ⇒ M2 : A ⇸ B`
/// and `k : Z ⇸ A`, the morphism `(k ; M1) ⇒ (k ; M2)`.
pub fn whisker_pre(k: &Module, t: &ModMorphism) -> Result<ModMorphism> {
    let src = compose_modules(k, t.source())?;
    let tgt = compose_modules(k, t.target())?;
    let nz = k.source().n_objects();
    let nb = t.source().target().n_objects();
    let mut comps = Vec::with_capacity(nz * nb);
    for b in 0..nb {
        for z in 0..nz {
            let dom = src.module.component(b, z).clone();
            let cod = tgt.module.component(b, z).clone();
            comps.push(FinFn::from_index_fn(dom, cod, |q| {
                let (a, xi, yi) = src.rep(b, z, q);
                tgt.class_of(b, z, a, xi, t.component(b, a).apply_ix(yi))
            }));
        }
    }
    ModMorphism::new(src.module, tgt.module, comps)
}

/// Whisker a morphism on the right by a module: for `t : M1 ⇒ M2 : A ⇸ B`
/// and `k : B ⇸ C`, the morphism `(M1 ; k) ⇒ (M2 ; k)`.
pub fn whisker_post(t: &ModMorphism, k: &Module) -> Result<ModMorphism> {
    let src = compose_modules(t.source(), k)?;
    let tgt = compose_modules(t.target(), k)?;
    let na = t.source().source().n_objects();
    let nc = k.target().n_objects();
    let mut comps = Vec::with_capacity(na * nc);
    for c in 0..nc {
        for a in 0..na {
            let dom = src.module.component(c, a).clone();
            let cod = tgt.module.component(c, a).clone();
            comps.push(FinFn::from_index_fn(dom, cod, |q| {
                let (b, yi, zi) = src.rep(c, a, q);
                tgt.class_of(c, a, b, t.component(b, a).apply_ix(yi), zi)
            }));
        }
    }
    ModMorphism::new(src.module, tgt.module, comps)
}

/// Build a morphism out of a composite by giving its value on
/// decompositions; the caller's function must respect the coend relations.
pub fn from_composite(
    src: &ModuleComposite,
    tgt: &Module,
    f: impl Fn(usize, usize, (usize, usize, usize)) -> usize,
) -> Result<ModMorphism> {
    let na = src.module.source().n_objects();
    let nb = src.module.target().n_objects();
    let mut comps = Vec::with_capacity(na * nb);
    for b in 0..nb {
        for a in 0..na {
            let dom = src.module.component(b, a).clone();
            let cod = tgt.component(b, a).clone();
            comps.push(FinFn::from_index_fn(dom, cod, |q| {
                f(b, a, src.rep(b, a, q))
            }));
        }
    }
    ModMorphism::new(src.module.clone(), tgt.clone(), comps)
}
