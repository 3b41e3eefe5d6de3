//! Collages of modules: the glued category with the module's elements as
//! cross morphisms, its universal property, the basic collage facts,
//! cocomma squares, and the equivalence between extensions along a
//! functor and extensions along the collage inclusion.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{
    compose_functors, enumerate_functors, enumerate_nat_trans, same_category, validate_category,
    FinCat, Functor, MorData, NatTrans,
};
use crate::finset::{enumerate_functions, FinFn};
use crate::guard::SizeGuard;
use crate::kan::{
    check_pointwise_right_extension, check_weak_right_extension, Square, Triangle,
};
use crate::label::{join_labels, tagged_label};
use crate::profmod::{
    associator, compose_modules, find_representing_functor, from_composite, lower_representable,
    representable_modules, representable_unit, unitor_post, upper_representable, whisker_post,
    whisker_pre, ModMorphism, Module,
};
use crate::report::{Claim, Report};

/// A collage `C(M)` with its inclusions and universal 2-morphism
/// `ν : (M ; i0_*) ⇒ i1_*`.
#[derive(Debug, Clone)]
pub struct CollageBundle {
    pub module: Module,
    pub cat: Arc<FinCat>,
    /// `i0 : B → C(M)` (the target side).
    pub i0: Functor,
    /// `i1 : A → C(M)` (the source side).
    pub i1: Functor,
    pub nu: ModMorphism,
    /// Collage morphism index of the cross morphism for element `e` of
    /// `M(b, a)`.
    cross_ix: HashMap<(usize, usize, usize), usize>,
    /// Reverse: collage morphism index to `(b, a, e)`.
    cross_of: HashMap<usize, (usize, usize, usize)>,
}

impl CollageBundle {
    pub fn cross_morphism(&self, b: usize, a: usize, elem: usize) -> usize {
        self.cross_ix[&(b, a, elem)]
    }

    pub fn cross_decomposition(&self, mor: usize) -> Option<(usize, usize, usize)> {
        self.cross_of.get(&mor).copied()
    }
}

/// Build the collage: objects are the tagged disjoint union (`a.…` for the
/// source side, `b.…` for the target side), hom-sets from `i0 b` to
/// `i1 a` are the module components, and there are no morphisms back.
/// Cross morphisms keep the element labels verbatim; if that would
/// collide with another morphism name, every cross label is qualified as
/// `x.b.a.element` instead.
pub fn build_collage(m: &Module, guard: &SizeGuard) -> Result<CollageBundle> {
    let a_cat = m.source().clone();
    let b_cat = m.target().clone();
    let (na, nb) = (a_cat.n_objects(), b_cat.n_objects());
    let n_cross: usize = m.total_elements();
    guard.check_category(
        na + nb,
        a_cat.n_morphisms() + b_cat.n_morphisms() + n_cross,
        "collage",
    )?;

    let mut objects: Vec<String> = Vec::with_capacity(na + nb);
    for a in 0..na {
        objects.push(tagged_label("a", a_cat.object_label(a)));
    }
    for b in 0..nb {
        objects.push(tagged_label("b", b_cat.object_label(b)));
    }
    let a_obj = |a: usize| a;
    let b_obj = |b: usize| na + b;

    // Morphisms: A part, then B part, then cross morphisms in (b, a,
    // element) order.
    let mut morphisms: Vec<MorData> = Vec::new();
    for mda in a_cat.morphisms() {
        morphisms.push(MorData {
            name: tagged_label("a", &mda.name),
            src: a_obj(mda.src),
            tgt: a_obj(mda.tgt),
        });
    }
    for mdb in b_cat.morphisms() {
        morphisms.push(MorData {
            name: tagged_label("b", &mdb.name),
            src: b_obj(mdb.src),
            tgt: b_obj(mdb.tgt),
        });
    }
    let a_mor = |i: usize| i;
    let b_mor = |i: usize| a_cat.n_morphisms() + i;
    let cross_base = a_cat.n_morphisms() + b_cat.n_morphisms();

    let mut cross_labels: Vec<String> = Vec::new();
    let mut cross_list: Vec<(usize, usize, usize)> = Vec::new();
    for b in 0..nb {
        for a in 0..na {
            for e in 0..m.component(b, a).len() {
                cross_labels.push(m.component(b, a).label(e).to_string());
                cross_list.push((b, a, e));
            }
        }
    }
    // Verbatim labels unless they collide with anything.
    let mut all: Vec<&String> = morphisms.iter().map(|d| &d.name).collect();
    all.extend(cross_labels.iter());
    let mut sorted = all.clone();
    sorted.sort();
    let collides = sorted.windows(2).any(|w| w[0] == w[1]);
    if collides {
        cross_labels = cross_list
            .iter()
            .map(|&(b, a, e)| {
                join_labels([
                    "x",
                    b_cat.object_label(b),
                    a_cat.object_label(a),
                    m.component(b, a).label(e),
                ])
            })
            .collect();
    }
    let mut cross_ix = HashMap::new();
    let mut cross_of = HashMap::new();
    for (k, (&(b, a, e), name)) in cross_list.iter().zip(cross_labels.iter()).enumerate() {
        let ix = cross_base + k;
        cross_ix.insert((b, a, e), ix);
        cross_of.insert(ix, (b, a, e));
        morphisms.push(MorData {
            name: name.clone(),
            src: b_obj(b),
            tgt: a_obj(a),
        });
    }

    let identities: Vec<usize> = (0..na)
        .map(|a| a_mor(a_cat.identity(a)))
        .chain((0..nb).map(|b| b_mor(b_cat.identity(b))))
        .collect();

    let n = morphisms.len();
    let mut table = vec![None; n * n];
    for g in 0..a_cat.n_morphisms() {
        for f in 0..a_cat.n_morphisms() {
            if let Some(gf) = a_cat.compose(g, f) {
                table[a_mor(g) * n + a_mor(f)] = Some(a_mor(gf));
            }
        }
    }
    for g in 0..b_cat.n_morphisms() {
        for f in 0..b_cat.n_morphisms() {
            if let Some(gf) = b_cat.compose(g, f) {
                table[b_mor(g) * n + b_mor(f)] = Some(b_mor(gf));
            }
        }
    }
    for (k, &(b, a, e)) in cross_list.iter().enumerate() {
        let cm = cross_base + k;
        // cross ∘ B-part: precompose along the left action.
        for beta in 0..b_cat.n_morphisms() {
            let d = b_cat.morphism(beta);
            if d.tgt == b {
                let e2 = m.act_left_fn(beta, a).apply_ix(e);
                table[cm * n + b_mor(beta)] = Some(cross_ix[&(d.src, a, e2)]);
            }
        }
        // A-part ∘ cross: postcompose along the right action.
        for alpha in 0..a_cat.n_morphisms() {
            let d = a_cat.morphism(alpha);
            if d.src == a {
                let e2 = m.act_right_fn(alpha, b).apply_ix(e);
                table[a_mor(alpha) * n + cm] = Some(cross_ix[&(b, d.tgt, e2)]);
            }
        }
    }
    let cat = Arc::new(FinCat::from_parts(objects, morphisms, identities, table)?);

    let i1 = Functor::new(
        a_cat.clone(),
        cat.clone(),
        (0..na).map(a_obj).collect(),
        (0..a_cat.n_morphisms()).map(a_mor).collect(),
    )?;
    let i0 = Functor::new(
        b_cat.clone(),
        cat.clone(),
        (0..nb).map(b_obj).collect(),
        (0..b_cat.n_morphisms()).map(b_mor).collect(),
    )?;

    // ν : (M ; i0_*) ⇒ i1_*, the class of (e, γ : c → i0 b) to the
    // collage composite (cross e) ∘ γ.
    let i0_low = lower_representable(&i0);
    let i1_low = lower_representable(&i1);
    let comp = compose_modules(m, &i0_low)?;
    let nu = from_composite(&comp, &i1_low, |c, a, (b, ei, gi)| {
        let gamma = cat
            .find_morphism(i0_low.component(c, b).label(gi))
            .expect("element names a morphism");
        let cx = cross_ix[&(b, a, ei)];
        let composite = cat.compose(cx, gamma).expect("valid table");
        i1_low
            .component(c, a)
            .index_of(&cat.morphism(composite).name)
            .expect("composite lies in the hom-set")
    })?;

    Ok(CollageBundle {
        module: m.clone(),
        cat,
        i0,
        i1,
        nu,
        cross_ix,
        cross_of,
    })
}

/// The canonical comparison `(i1_* ; i0^*) ⇒ M` by composition in the
/// collage.
pub fn collage_restriction(cb: &CollageBundle) -> Result<ModMorphism> {
    let i1_low = lower_representable(&cb.i1);
    let i0_up = upper_representable(&cb.i0);
    let comp = compose_modules(&i1_low, &i0_up)?;
    let cat = &cb.cat;
    from_composite(&comp, &cb.module, |b, a, (c, xi, yi)| {
        let x = cat
            .find_morphism(i1_low.component(c, a).label(xi))
            .expect("element names a morphism");
        let y = cat
            .find_morphism(i0_up.component(b, c).label(yi))
            .expect("element names a morphism");
        let xy = cat.compose(x, y).expect("valid table");
        let (b2, a2, e) = cb
            .cross_decomposition(xy)
            .expect("composite across the collage is a cross morphism");
        debug_assert_eq!((b2, a2), (b, a));
        e
    })
}

/// The mate `M ⇒ (i1_* ; i0^*)` of ν under `i0_* ⊣ i0^*`.
pub fn collage_corestriction(cb: &CollageBundle) -> Result<ModMorphism> {
    let i0_low = lower_representable(&cb.i0);
    let i0_up = upper_representable(&cb.i0);
    let m = &cb.module;
    unitor_post(m)?
        .inverse()
        .expect("unitors are invertible")
        .then(&whisker_pre(m, &representable_unit(&cb.i0)?)?)?
        .then(
            &associator(m, &i0_low, &i0_up)?
                .inverse()
                .expect("associators are invertible"),
        )?
        .then(&whisker_post(&cb.nu, &i0_up)?)
}

/// The collage facts: both inclusions are maps with invertible units, and
/// restriction along them recovers the module compatibly with ν.
pub fn collage_facts_check(cb: &CollageBundle) -> Result<Report> {
    let mut report = Report::holds();
    let unit0 = representable_modules(&cb.i0)?.unit;
    report.push(Claim::check(
        "i0-unit-invertible",
        unit0.is_iso(),
        unit0.non_iso_witness().unwrap_or_default(),
    ));
    let unit1 = representable_modules(&cb.i1)?.unit;
    report.push(Claim::check(
        "i1-unit-invertible",
        unit1.is_iso(),
        unit1.non_iso_witness().unwrap_or_default(),
    ));
    let kappa = collage_restriction(cb)?;
    report.push(Claim::check(
        "restriction-iso",
        kappa.is_iso(),
        kappa.non_iso_witness().unwrap_or_default(),
    ));
    let nu_bar = collage_corestriction(cb)?;
    let round = nu_bar.then(&kappa)?;
    report.push(Claim::check(
        "restriction-compatible-with-nu",
        round == ModMorphism::identity(&cb.module),
        "the mate of ν does not invert the restriction".to_string(),
    ));
    Ok(report)
}

/// A functor out of the collage together with the triple it restricts to.
type Triple = (Vec<usize>, Vec<usize>, Vec<Vec<usize>>);

fn restrict_to_triple(cb: &CollageBundle, h: &Functor) -> Result<Triple> {
    let f = compose_functors(h, &cb.i1)?;
    let g = compose_functors(h, &cb.i0)?;
    let m = &cb.module;
    let (na, nb) = (m.source().n_objects(), m.target().n_objects());
    let mut t = Vec::new();
    for b in 0..nb {
        for a in 0..na {
            t.push(
                (0..m.component(b, a).len())
                    .map(|e| h.on_morphism(cb.cross_morphism(b, a, e)))
                    .collect(),
            );
        }
    }
    Ok((
        f.object_map().to_vec(),
        g.object_map().to_vec(),
        t,
    ))
}

/// Eq-style universal property of the collage at desk scale: functors
/// `C(M) → X` correspond to triples `(F, G, t)` with `t` natural in both
/// variables, bijectively on objects and on hom-sets.
pub fn check_collage_universal(m: &Module, x: &Arc<FinCat>, guard: &SizeGuard) -> Result<Report> {
    let cb = build_collage(m, guard)?;
    let mut report = Report::holds();

    let hs = enumerate_functors(&cb.cat, x, guard)?;
    let mut triples_seen: Vec<Triple> = Vec::new();
    for h in &hs {
        triples_seen.push(restrict_to_triple(&cb, h)?);
    }
    {
        let mut sorted = triples_seen.clone();
        sorted.sort();
        sorted.dedup();
        report.push(Claim::check(
            "restriction-injective",
            sorted.len() == triples_seen.len(),
            "two functors restrict to the same triple".to_string(),
        ));
    }

    // Independent enumeration of the triples.
    let fs = enumerate_functors(m.source(), x, guard)?;
    let gs = enumerate_functors(m.target(), x, guard)?;
    let (na, nb) = (m.source().n_objects(), m.target().n_objects());
    let mut triple_count = 0usize;
    for f in &fs {
        for g in &gs {
            // Candidate families t(b, a) : M(b,a) → X(G b, F a).
            let candidates: Vec<Vec<FinFn>> = (0..nb)
                .flat_map(|b| (0..na).map(move |a| (b, a)))
                .map(|(b, a)| {
                    let cod = crate::finset::FinSet::new(
                        x.hom(g.on_object(b), f.on_object(a))
                            .into_iter()
                            .map(|mm| x.morphism(mm).name.clone())
                            .collect(),
                    )
                    .expect("morphism names are distinct");
                    enumerate_functions(m.component(b, a), &cod)
                })
                .collect();
            let naturals = count_natural_families(m, x, f, g, &candidates);
            triple_count += naturals;
            guard.check_enumeration(triple_count, "collage triples")?;
        }
    }
    report.push(Claim::check(
        "objects-bijection",
        triple_count == hs.len(),
        format!("{} functors vs {} triples", hs.len(), triple_count),
    ));

    // Hom-sets: transformations H ⇒ H' correspond to compatible pairs.
    let mut homs_ok = true;
    let mut witness = String::new();
    'outer: for (hi, h) in hs.iter().enumerate() {
        for (hj, h2) in hs.iter().enumerate() {
            let nats = enumerate_nat_trans(h, h2, guard)?;
            let f1 = compose_functors(h, &cb.i1)?;
            let f2 = compose_functors(h2, &cb.i1)?;
            let g1 = compose_functors(h, &cb.i0)?;
            let g2 = compose_functors(h2, &cb.i0)?;
            let phis = enumerate_nat_trans(&f1, &f2, guard)?;
            let psis = enumerate_nat_trans(&g1, &g2, guard)?;
            let t1 = &triples_seen[hi].2;
            let t2 = &triples_seen[hj].2;
            let mut compatible = 0usize;
            for phi in &phis {
                for psi in &psis {
                    let ok = (0..nb).all(|b| {
                        (0..na).all(|a| {
                            (0..m.component(b, a).len()).all(|e| {
                                let lhs = x.compose(phi.component(a), t1[b * na + a][e]);
                                let rhs = x.compose(t2[b * na + a][e], psi.component(b));
                                lhs.is_some() && lhs == rhs
                            })
                        })
                    });
                    if ok {
                        compatible += 1;
                    }
                }
            }
            if compatible != nats.len() {
                homs_ok = false;
                witness = format!(
                    "hom ({hi}, {hj}): {} transformations vs {} compatible pairs",
                    nats.len(),
                    compatible
                );
                break 'outer;
            }
        }
    }
    report.push(Claim::check("homs-bijection", homs_ok, witness));
    Ok(report)
}

fn count_natural_families(
    m: &Module,
    x: &Arc<FinCat>,
    f: &Functor,
    g: &Functor,
    candidates: &[Vec<FinFn>],
) -> usize {
    let mut count = 0usize;
    let mut current: Vec<Option<FinFn>> = vec![None; candidates.len()];
    fn rec(
        m: &Module,
        x: &Arc<FinCat>,
        f: &Functor,
        g: &Functor,
        candidates: &[Vec<FinFn>],
        pos: usize,
        current: &mut Vec<Option<FinFn>>,
        count: &mut usize,
    ) {
        let na = m.source().n_objects();
        if pos == candidates.len() {
            *count += 1;
            return;
        }
        'cand: for cand in &candidates[pos] {
            current[pos] = Some(cand.clone());
            // Check naturality for actions whose endpoints are assigned.
            let a_cat = m.source();
            let b_cat = m.target();
            for beta in 0..b_cat.n_morphisms() {
                let d = b_cat.morphism(beta);
                for a in 0..na {
                    let (hi, lo) = (d.tgt * na + a, d.src * na + a);
                    if hi.max(lo) != pos || current[hi].is_none() || current[lo].is_none() {
                        continue;
                    }
                    // t(M(β) e) = t(e) ∘ G(β)
                    let thi = current[hi].as_ref().unwrap();
                    let tlo = current[lo].as_ref().unwrap();
                    for e in 0..m.component(d.tgt, a).len() {
                        let e2 = m.act_left_fn(beta, a).apply_ix(e);
                        let lhs = x.find_morphism(tlo.cod().label(tlo.apply_ix(e2)));
                        let rhs_m = x.find_morphism(thi.cod().label(thi.apply_ix(e))).unwrap();
                        let rhs = x.compose(rhs_m, g.on_morphism(beta));
                        if lhs != rhs {
                            current[pos] = None;
                            continue 'cand;
                        }
                    }
                }
            }
            for alpha in 0..a_cat.n_morphisms() {
                let d = a_cat.morphism(alpha);
                for b in 0..m.target().n_objects() {
                    let (lo, hi) = (b * na + d.src, b * na + d.tgt);
                    if lo.max(hi) != pos || current[lo].is_none() || current[hi].is_none() {
                        continue;
                    }
                    // t(M(α) e) = F(α) ∘ t(e)
                    let tlo = current[lo].as_ref().unwrap();
                    let thi = current[hi].as_ref().unwrap();
                    for e in 0..m.component(b, d.src).len() {
                        let e2 = m.act_right_fn(alpha, b).apply_ix(e);
                        let lhs = x.find_morphism(thi.cod().label(thi.apply_ix(e2)));
                        let rhs_m = x.find_morphism(tlo.cod().label(tlo.apply_ix(e))).unwrap();
                        let rhs = x.compose(f.on_morphism(alpha), rhs_m);
                        if lhs != rhs {
                            current[pos] = None;
                            continue 'cand;
                        }
                    }
                }
            }
            rec(m, x, f, g, candidates, pos + 1, current, count);
            current[pos] = None;
        }
    }
    rec(m, x, f, g, candidates, 0, &mut current, &mut count);
    count
}

/// The cocomma square of a span: `λ : i0∘p ⇒ i1∘q` into the collage of
/// `(q^* ; p_*)`.
pub fn cocomma_square(q: &Functor, p: &Functor, guard: &SizeGuard) -> Result<(Square, CollageBundle)> {
    if !same_category(q.source(), p.source()) {
        return Err(Error::BoundaryMismatch("cocomma needs a common source".into()));
    }
    let w = compose_modules(&upper_representable(q), &lower_representable(p))?;
    let cb = build_collage(&w.module, guard)?;
    let s_cat = q.source().clone();
    let a_cat = q.target();
    let u_cat = p.target();
    let comps: Vec<usize> = (0..s_cat.n_objects())
        .map(|s| {
            let qs = q.on_object(s);
            let ps = p.on_object(s);
            let sigma = upper_representable(q)
                .component(s, qs)
                .index_of(&a_cat.morphism(a_cat.identity(qs)).name)
                .expect("identity in hom-set");
            let mu = lower_representable(p)
                .component(ps, s)
                .index_of(&u_cat.morphism(u_cat.identity(ps)).name)
                .expect("identity in hom-set");
            let class = w.class_of(ps, qs, s, sigma, mu);
            cb.cross_morphism(ps, qs, class)
        })
        .collect();
    let lambda = NatTrans::new(
        compose_functors(&cb.i0, p)?,
        compose_functors(&cb.i1, q)?,
        comps,
    )?;
    let square = Square::new(p.clone(), q.clone(), cb.i1.clone(), cb.i0.clone(), lambda)?;
    Ok((square, cb))
}

/// The 1-morphism `⟨r, ρ⟩ : C(j_*) → X` induced by a triangle, with
/// `⟨r, ρ⟩ ∘ i1 = f` and `⟨r, ρ⟩ ∘ i0 = r` on the nose.
pub fn induced_functor_from_triangle(
    t: &Triangle,
    guard: &SizeGuard,
) -> Result<(CollageBundle, Functor)> {
    let j_low = lower_representable(&t.j);
    let cb = build_collage(&j_low, guard)?;
    let x_cat = t.f.target().clone();
    let a_cat = t.j.source();
    let b_cat = t.j.target().clone();
    let na = a_cat.n_objects();

    let mut object_map = Vec::with_capacity(cb.cat.n_objects());
    for a in 0..na {
        object_map.push(t.f.on_object(a));
    }
    for b in 0..b_cat.n_objects() {
        object_map.push(t.r.on_object(b));
    }
    let mut morphism_map = Vec::with_capacity(cb.cat.n_morphisms());
    for alpha in 0..a_cat.n_morphisms() {
        morphism_map.push(t.f.on_morphism(alpha));
    }
    for beta in 0..b_cat.n_morphisms() {
        morphism_map.push(t.r.on_morphism(beta));
    }
    for k in 0..j_low.total_elements() {
        let (b, a, e) = cb
            .cross_decomposition(a_cat.n_morphisms() + b_cat.n_morphisms() + k)
            .expect("cross morphisms follow the parts");
        let mor = b_cat
            .find_morphism(j_low.component(b, a).label(e))
            .expect("element names a morphism");
        let img = x_cat
            .compose(t.rho.component(a), t.r.on_morphism(mor))
            .expect("valid table");
        morphism_map.push(img);
    }
    let h = Functor::new(cb.cat.clone(), x_cat, object_map, morphism_map)?;
    Ok((cb, h))
}

/// The extension-equivalence check: the original triangle and the induced
/// triangle along `i1` must receive the same weak-extension and the same
/// pointwise verdicts.
pub fn check_equivformext(t: &Triangle, guard: &SizeGuard) -> Result<Report> {
    let (cb, h) = induced_functor_from_triangle(t, guard)?;
    let t2 = Triangle::new(
        cb.i1.clone(),
        t.f.clone(),
        h,
        NatTrans::identity(&t.f),
    )?;
    let weak1 = check_weak_right_extension(t, guard)?.is_holds();
    let weak2 = check_weak_right_extension(&t2, guard)?.is_holds();
    let pw1 = check_pointwise_right_extension(t)?.is_holds();
    let pw2 = check_pointwise_right_extension(&t2)?.is_holds();
    let mut report = Report::holds();
    report.push(Claim::check(
        "weak-verdicts-agree",
        weak1 == weak2,
        format!("triangle: {weak1}, collage triangle: {weak2}"),
    ));
    report.push(Claim::check(
        "pointwise-verdicts-agree",
        pw1 == pw2,
        format!("triangle: {pw1}, collage triangle: {pw2}"),
    ));
    Ok(report)
}

/// Compatibility condition: any module out of the collage whose
/// restrictions along both inclusions are representable is itself
/// representable. Modules are enumerated with components of at most
/// `max_elem` elements.
pub fn check_k_compat_condition2(
    m: &Module,
    x: &Arc<FinCat>,
    max_elem: usize,
    guard: &SizeGuard,
) -> Result<Report> {
    let cb = build_collage(m, guard)?;
    let i0_low = lower_representable(&cb.i0);
    let i1_low = lower_representable(&cb.i1);
    let hs = crate::profmod::enumerate_modules(&cb.cat, x, max_elem, guard)?;
    let mut report = Report::holds();
    let mut relevant = 0usize;
    for (hi, h) in hs.iter().enumerate() {
        let r0 = compose_modules(&i0_low, h)?;
        let r1 = compose_modules(&i1_low, h)?;
        if find_representing_functor(&r0.module, guard)?.is_none() {
            continue;
        }
        if find_representing_functor(&r1.module, guard)?.is_none() {
            continue;
        }
        relevant += 1;
        if find_representing_functor(h, guard)?.is_none() {
            report.push(Claim::fails(
                "k-compatibility-2",
                format!("module #{hi} has representable restrictions but is not representable"),
            ));
            return Ok(report);
        }
    }
    report.push(Claim::holds_with_note(
        "k-compatibility-2",
        format!("{relevant} of {} enumerated modules had representable restrictions", hs.len()),
    ));
    Ok(report)
}

/// Validate the whole bundle: the collage category, full faithfulness of
/// the inclusions, and the collage facts.
pub fn validate_collage(cb: &CollageBundle) -> Result<Report> {
    let mut report = validate_category(&cb.cat);
    report.push(Claim::check(
        "i0-fully-faithful",
        cb.i0.is_fully_faithful(),
        "i0 is not fully faithful".to_string(),
    ));
    report.push(Claim::check(
        "i1-fully-faithful",
        cb.i1.is_fully_faithful(),
        "i1 is not fully faithful".to_string(),
    ));
    Ok(report.merge(collage_facts_check(cb)?))
}
