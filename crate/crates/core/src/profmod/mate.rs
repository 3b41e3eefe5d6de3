//! The mate of a square of functors: from `λ : bp ⇒ jq` to
//! `λ̄ : (q^* ; p_*) ⇒ (j_* ; b^*)`, built two ways — generically by
//! pasting the unit of `b` and the counit of `q`, and directly by the
//! closed formula sending the class of `(σ : qs → a, μ : u → ps)` to
//! `Jσ ∘ λ_s ∘ Bμ` paired with an identity.

use crate::error::Result;
use crate::fincat::{Functor, NatTrans};

use super::algebra::{associator, from_composite, unitor_post, unitor_pre, whisker_post, whisker_pre};
use super::compose::compose_modules;
use super::module::ModMorphism;
use super::represent::{
    lower_representable, nat_lower, representable_compose_lower, representable_counit,
    representable_unit, upper_representable,
};

/// The mate by unit/counit pasting.
pub fn mate_of_square(
    p: &Functor,
    q: &Functor,
    j: &Functor,
    b: &Functor,
    lambda: &NatTrans,
) -> Result<ModMorphism> {
    let q_up = upper_representable(q);
    let p_low = lower_representable(p);
    let j_low = lower_representable(j);
    let b_up = upper_representable(b);
    let b_low = lower_representable(b);
    let q_low = lower_representable(q);

    let t0 = compose_modules(&q_up, &p_low)?; // (q^* ; p_*)
    let bb = compose_modules(&b_low, &b_up)?; // (b_* ; b^*)
    let jb = compose_modules(&j_low, &b_up)?; // (j_* ; b^*)

    // (q^* ; p_*) ⇒ ((q^* ; p_*) ; I_U)
    let s0 = unitor_post(&t0.module)?
        .inverse()
        .expect("unitors are invertible");
    // … ⇒ ((q^* ; p_*) ; (b_* ; b^*))
    let s1 = whisker_pre(&t0.module, &representable_unit(b)?)?;
    // … ⇒ (q^* ; (p_* ; (b_* ; b^*)))
    let s2 = associator(&q_up, &p_low, &bb.module)?;
    // … ⇒ (q^* ; ((p_* ; b_*) ; b^*))
    let s3 = whisker_pre(
        &q_up,
        &associator(&p_low, &b_low, &b_up)?
            .inverse()
            .expect("associators are invertible"),
    )?;
    // Middle comparison: (p_* ; b_*) ⇒ (bp)_* ⇒ (jq)_* ⇒ (q_* ; j_*).
    let mid = representable_compose_lower(p, b)?
        .then(&nat_lower(lambda)?)?
        .then(
            &representable_compose_lower(q, j)?
                .inverse()
                .expect("Yoneda comparison is invertible"),
        )?;
    // … ⇒ (q^* ; ((q_* ; j_*) ; b^*))
    let s4 = whisker_pre(&q_up, &whisker_post(&mid, &b_up)?)?;
    // … ⇒ (q^* ; (q_* ; (j_* ; b^*)))
    let s5 = whisker_pre(&q_up, &associator(&q_low, &j_low, &b_up)?)?;
    // … ⇒ ((q^* ; q_*) ; (j_* ; b^*))
    let s6 = associator(&q_up, &q_low, &jb.module)?
        .inverse()
        .expect("associators are invertible");
    // … ⇒ (I_A ; (j_* ; b^*))
    let s7 = whisker_post(&representable_counit(q)?, &jb.module)?;
    // … ⇒ (j_* ; b^*)
    let s8 = unitor_pre(&jb.module)?;

    s0.then(&s1)?
        .then(&s2)?
        .then(&s3)?
        .then(&s4)?
        .then(&s5)?
        .then(&s6)?
        .then(&s7)?
        .then(&s8)
}

/// The mate by the closed formula; agrees with [`mate_of_square`].
pub fn mate_of_square_explicit(
    p: &Functor,
    q: &Functor,
    j: &Functor,
    b: &Functor,
    lambda: &NatTrans,
) -> Result<ModMorphism> {
    let q_up = upper_representable(q);
    let p_low = lower_representable(p);
    let j_low = lower_representable(j);
    let b_up = upper_representable(b);
    let amb = j.target().clone();
    let a_cat = q.target().clone();
    let u_cat = p.target().clone();

    let t0 = compose_modules(&q_up, &p_low)?;
    let jb = compose_modules(&j_low, &b_up)?;

    from_composite(&t0, &jb.module, |u, a, (s, sigma_i, mu_i)| {
        let sigma = a_cat
            .find_morphism(q_up.component(s, a).label(sigma_i))
            .expect("element names a morphism");
        let mu = u_cat
            .find_morphism(p_low.component(u, s).label(mu_i))
            .expect("element names a morphism");
        let gamma = amb
            .compose(
                j.on_morphism(sigma),
                amb.compose(lambda.component(s), b.on_morphism(mu))
                    .expect("valid table"),
            )
            .expect("valid table");
        let bu = b.on_object(u);
        let x = j_low
            .component(bu, a)
            .index_of(&amb.morphism(gamma).name)
            .expect("composite lies in the hom-set");
        let y = b_up
            .component(u, bu)
            .index_of(&amb.morphism(amb.identity(bu)).name)
            .expect("identity lies in the hom-set");
        jb.class_of(u, a, bu, x, y)
    })
}
