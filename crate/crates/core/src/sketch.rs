//! Sketches on an object and their models: a sketch is a triangle
//! `τ : w∘u ⇒ v` whose leg `u` is a fully faithful coopfibration,
//! witnessed structurally as a collage inclusion; a model is a functor
//! sending the triangle to a pointwise right extension. Includes model
//! enumeration, completeness of the codomain, the inverter description of
//! the model category, and the exponent equivalence at desk scale.

use std::sync::Arc;

use crate::collage::build_collage;
use crate::error::{Error, Result};
use crate::fincat::{
    compose_functors, enumerate_nat_trans, full_subcategory, functor_category, product_functor,
    same_category, whisker_inner, whisker_outer, FinCat, Functor, FunctorCategory, NatTrans,
};
use crate::guard::SizeGuard;
use crate::kan::{check_pointwise_right_extension, construct_pointwise_ran, Triangle};
use crate::profmod::Module;
use crate::report::{Claim, Report};

/// How the coopfibration property of `u` is justified: collage inclusions
/// are coopfibrations by construction; anything else is an unchecked
/// assertion and flagged as such in reports.
#[derive(Debug, Clone)]
pub enum CoopfibrationWitness {
    Asserted,
    Collage(Module),
}

#[derive(Debug, Clone)]
pub struct Sketch {
    pub u: Functor,
    pub v: Functor,
    pub w: Functor,
    pub tau: NatTrans,
    pub witness: CoopfibrationWitness,
}

impl Sketch {
    pub fn new(
        u: Functor,
        v: Functor,
        w: Functor,
        tau: NatTrans,
        witness: CoopfibrationWitness,
    ) -> Result<Sketch> {
        if !same_category(u.source(), v.source())
            || !same_category(u.target(), w.source())
            || !same_category(v.target(), w.target())
        {
            return Err(Error::BoundaryMismatch("sketch boundaries do not compose".into()));
        }
        let wu = compose_functors(&w, &u)?;
        if tau.source() != &wu || tau.target() != &v {
            return Err(Error::BoundaryMismatch(
                "the 2-morphism must go from w∘u to v".into(),
            ));
        }
        Ok(Sketch { u, v, w, tau, witness })
    }

    /// The sketch whose models in `X` are the terminal objects of `X`:
    /// the empty module's collage inclusion `∅ → C(∅ ⇸ 1)`.
    pub fn terminal_object(guard: &SizeGuard) -> Result<Sketch> {
        let empty = Arc::new(crate::fincat::standard::empty());
        let one = Arc::new(crate::fincat::standard::terminal());
        let m = Module::new(empty.clone(), one.clone(), vec![], vec![], vec![])?;
        let cb = build_collage(&m, guard)?;
        let b = cb.cat.clone();
        let v = Functor::new(empty, one.clone(), vec![], vec![])?;
        let w = Functor::new(b, one.clone(), vec![0], vec![0])?;
        let tau = NatTrans::new(compose_functors(&w, &cb.i1)?, v.clone(), vec![])?;
        Sketch::new(cb.i1, v, w, tau, CoopfibrationWitness::Collage(m))
    }

    /// A sketch with `u` the collage inclusion of the empty-target module
    /// on `a` (so `u` is an isomorphic copy of the identity): every
    /// functor out of `a` is a model. `v = w∘u` and `τ` is the identity.
    pub fn identity_on(a: &Arc<FinCat>, w: Functor, guard: &SizeGuard) -> Result<Sketch> {
        let empty = Arc::new(crate::fincat::standard::empty());
        let m = Module::new(a.clone(), empty, vec![], vec![], vec![])?;
        let cb = build_collage(&m, guard)?;
        if !same_category(w.source(), &cb.cat) {
            return Err(Error::BoundaryMismatch(
                "w must start at the collage copy of a".into(),
            ));
        }
        let v = compose_functors(&w, &cb.i1)?;
        let tau = NatTrans::identity(&v);
        Sketch::new(cb.i1, v, w, tau, CoopfibrationWitness::Collage(m))
    }
}

pub fn validate_sketch(s: &Sketch, guard: &SizeGuard) -> Result<Report> {
    let mut report = Report::holds();
    report.push(Claim::check(
        "u-fully-faithful",
        s.u.is_fully_faithful(),
        "u is not fully faithful".to_string(),
    ));
    match &s.witness {
        CoopfibrationWitness::Asserted => report.push(Claim::holds_with_note(
            "coopfibration-witness",
            "asserted; not verified",
        )),
        CoopfibrationWitness::Collage(m) => {
            let cb = build_collage(m, guard)?;
            let ok = *cb.cat == **s.u.target() && cb.i1 == s.u;
            report.push(Claim::check(
                "coopfibration-witness",
                ok,
                "(B, u) is not the collage inclusion of the stored module".to_string(),
            ));
        }
    }
    Ok(report)
}

/// The triangle a candidate model must turn into a pointwise right
/// extension: `(u, f∘v, f∘w, fτ)`.
pub fn model_triangle(s: &Sketch, f: &Functor) -> Result<Triangle> {
    let fv = compose_functors(f, &s.v)?;
    let fw = compose_functors(f, &s.w)?;
    let ftau = whisker_outer(f, &s.tau)?;
    Triangle::new(s.u.clone(), fv, fw, ftau)
}

pub fn is_model(s: &Sketch, f: &Functor) -> Result<bool> {
    let t = model_triangle(s, f)?;
    let holds = check_pointwise_right_extension(&t)?.is_holds();
    if holds {
        // A model's structure 2-morphism is invertible.
        let x = t.f.target();
        debug_assert!(
            (0..t.j.source().n_objects()).all(|a| x.is_iso_morphism(t.rho.component(a))),
            "model with non-invertible structure 2-morphism"
        );
    }
    Ok(holds)
}

/// The models of a sketch inside the functor category `[C, X]`, as a full
/// subcategory.
pub struct ModelSet {
    pub ambient: FunctorCategory,
    /// Ambient object indices of the models, ascending.
    pub models: Vec<usize>,
    pub category: Arc<FinCat>,
    pub inclusion: Functor,
}

impl ModelSet {
    fn from_indices(ambient: FunctorCategory, models: Vec<usize>) -> Result<ModelSet> {
        let (category, inclusion) = full_subcategory(&ambient.cat, &models)?;
        Ok(ModelSet {
            ambient,
            models,
            category,
            inclusion,
        })
    }
}

pub fn enumerate_models(s: &Sketch, x: &Arc<FinCat>, guard: &SizeGuard) -> Result<ModelSet> {
    let ambient = functor_category(s.v.target(), x, guard)?;
    let mut models = Vec::new();
    for (i, f) in ambient.functors.iter().enumerate() {
        if is_model(s, f)? {
            models.push(i);
        }
    }
    ModelSet::from_indices(ambient, models)
}

/// The right-extension adjunction `[u,1] ⊣ ran_u` between functor
/// categories, with all data at the table level.
pub struct RanAdjunction {
    /// `[A, X]`.
    pub source_exp: FunctorCategory,
    /// `[B, X]`.
    pub target_exp: FunctorCategory,
    /// Precomposition `[B,X] → [A,X]`.
    pub precompose: Functor,
    /// `ran_u : [A,X] → [B,X]`.
    pub ran: Functor,
    /// `1 ⇒ ran ∘ precompose` in `[B,X]`.
    pub unit: NatTrans,
    /// `precompose ∘ ran ⇒ 1` in `[A,X]`; its component at `g` is `ρ_g`.
    pub counit: NatTrans,
    /// Per `[A,X]`-object: the extension triangle of that functor.
    pub triangles: Vec<Triangle>,
}

pub struct UCompleteness {
    pub report: Report,
    pub adjunction: Option<RanAdjunction>,
}

/// Check that every `g : A → X` has a pointwise right extension along
/// `u`, and when so, package the induced adjunction.
pub fn check_u_complete(u: &Functor, x: &Arc<FinCat>, guard: &SizeGuard) -> Result<UCompleteness> {
    let source_exp = functor_category(u.source(), x, guard)?;
    let mut triangles = Vec::with_capacity(source_exp.functors.len());
    let mut report = Report::holds();
    for (gi, g) in source_exp.functors.iter().enumerate() {
        match construct_pointwise_ran(u, g) {
            Ok(t) => triangles.push(t),
            Err(Error::NotRepresentable(b)) => {
                report.push(Claim::fails(
                    "u-complete",
                    format!("functor F{gi} has no pointwise extension at `{b}`"),
                ));
                return Ok(UCompleteness {
                    report,
                    adjunction: None,
                });
            }
            Err(e) => return Err(e),
        }
    }
    report.push(Claim::holds_with_note(
        "u-complete",
        format!("{} functors extend", source_exp.functors.len()),
    ));

    let target_exp = functor_category(u.target(), x, guard)?;
    let find_src = |f: &Functor| -> usize {
        source_exp.functor_index(f).expect("functor enumerated")
    };
    let find_tgt = |f: &Functor| -> usize {
        target_exp.functor_index(f).expect("functor enumerated")
    };

    // Precomposition [B,X] → [A,X].
    let pre_obj: Vec<usize> = target_exp
        .functors
        .iter()
        .map(|h| find_src(&u.then(h).expect("composable")))
        .collect();
    let pre_mor: Vec<usize> = target_exp
        .transformations
        .iter()
        .map(|t| {
            source_exp
                .transformation_index(&whisker_inner(t, u).expect("composable"))
                .expect("transformation enumerated")
        })
        .collect();
    let precompose = Functor::new(
        target_exp.cat.clone(),
        source_exp.cat.clone(),
        pre_obj,
        pre_mor,
    )?;

    // ran on objects is the constructed extension; on morphisms it is the
    // unique transformation pasting compatibly.
    let ran_obj: Vec<usize> = triangles.iter().map(|t| find_tgt(&t.r)).collect();
    let mut ran_mor = Vec::with_capacity(source_exp.transformations.len());
    for t in &source_exp.transformations {
        let gi = find_src(t.source());
        let gj = find_src(t.target());
        let paste_target = triangles[gi].rho.then(t)?;
        let mut found = None;
        for sigma in enumerate_nat_trans(&triangles[gi].r, &triangles[gj].r, guard)? {
            let pasted = whisker_inner(&sigma, u)?.then(&triangles[gj].rho)?;
            if pasted == paste_target {
                found = Some(sigma);
                break;
            }
        }
        let sigma = found.ok_or_else(|| {
            Error::InvalidStructure("no induced morphism between extensions".into())
        })?;
        ran_mor.push(
            target_exp
                .transformation_index(&sigma)
                .expect("transformation enumerated"),
        );
    }
    let ran = Functor::new(
        source_exp.cat.clone(),
        target_exp.cat.clone(),
        ran_obj,
        ran_mor,
    )?;

    // Counit at g is ρ_g; unit at h is the unique transposition of the
    // identity on h∘u.
    let counit_comps: Vec<usize> = triangles
        .iter()
        .map(|t| {
            source_exp
                .transformation_index(&t.rho)
                .expect("transformation enumerated")
        })
        .collect();
    let counit = NatTrans::new(
        compose_functors(&precompose, &ran)?,
        Functor::identity(&source_exp.cat),
        counit_comps,
    )?;
    let mut unit_comps = Vec::with_capacity(target_exp.functors.len());
    for (hi, h) in target_exp.functors.iter().enumerate() {
        let hu_ix = precompose.on_object(hi);
        let tri = &triangles[hu_ix];
        let mut found = None;
        for theta in enumerate_nat_trans(h, &tri.r, guard)? {
            let pasted = whisker_inner(&theta, u)?.then(&tri.rho)?;
            if pasted == NatTrans::identity(&source_exp.functors[hu_ix]) {
                found = Some(theta);
                break;
            }
        }
        let theta =
            found.ok_or_else(|| Error::InvalidStructure("no unit component found".into()))?;
        unit_comps.push(
            target_exp
                .transformation_index(&theta)
                .expect("transformation enumerated"),
        );
    }
    let unit = NatTrans::new(
        Functor::identity(&target_exp.cat),
        compose_functors(&ran, &precompose)?,
        unit_comps,
    )?;

    Ok(UCompleteness {
        report,
        adjunction: Some(RanAdjunction {
            source_exp,
            target_exp,
            precompose,
            ran,
            unit,
            counit,
            triangles,
        }),
    })
}

/// The component form of both triangle identities of `[u,1] ⊣ ran_u`.
pub fn check_ran_adjunction_triangles(adj: &RanAdjunction) -> bool {
    let sc = &adj.source_exp.cat;
    let tc = &adj.target_exp.cat;
    // For each h in [B,X]: counit_{P h} ∘ P(unit_h) = 1.
    for h in 0..tc.n_objects() {
        let ph = adj.precompose.on_object(h);
        let lhs = sc.compose(
            adj.counit.component(ph),
            adj.precompose.on_morphism(adj.unit.component(h)),
        );
        if lhs != Some(sc.identity(ph)) {
            return false;
        }
    }
    // For each g in [A,X]: R(counit_g) ∘ unit_{R g} = 1.
    for g in 0..sc.n_objects() {
        let rg = adj.ran.on_object(g);
        let lhs = tc.compose(
            adj.ran.on_morphism(adj.counit.component(g)),
            adj.unit.component(rg),
        );
        if lhs != Some(tc.identity(rg)) {
            return false;
        }
    }
    true
}

/// Completeness for `1_K ⊗ u` over a supplied list of categories `K`; the
/// universal statement is approximated by the list and flagged as such.
pub fn check_pointwise_u_complete(
    u: &Functor,
    x: &Arc<FinCat>,
    ks: &[Arc<FinCat>],
    guard: &SizeGuard,
) -> Result<Report> {
    let mut report = Report::holds();
    for (i, k) in ks.iter().enumerate() {
        let idk = Functor::identity(k);
        let pu = product_functor(&idk, u);
        let uc = check_u_complete(&pu, x, guard)?;
        report.push(Claim::check(
            format!("complete-for-K{i}"),
            uc.report.is_holds(),
            uc.report
                .first_failure()
                .and_then(|c| c.witness.clone())
                .unwrap_or_default(),
        ));
    }
    report.push(Claim::holds_with_note(
        "quantifier-scope",
        format!("checked over {} supplied categories, not all K", ks.len()),
    ));
    Ok(report)
}

/// The inverter description of the model category: a functor is a model
/// exactly when the mate `fw ⇒ ran_u(fv)` of `fτ` is invertible. Returns
/// the inverter as a model set and a report of its agreement with direct
/// enumeration.
pub fn inverter_models(
    s: &Sketch,
    x: &Arc<FinCat>,
    guard: &SizeGuard,
) -> Result<(ModelSet, Report)> {
    let uc = check_u_complete(&s.u, x, guard)?;
    let adj = uc.adjunction.ok_or_else(|| {
        Error::PreconditionFailed("the target category is not u-complete".into())
    })?;
    let ambient = functor_category(s.v.target(), x, guard)?;
    let mut inverter = Vec::new();
    for (fi, f) in ambient.functors.iter().enumerate() {
        let fv = compose_functors(f, &s.v)?;
        let fw = compose_functors(f, &s.w)?;
        let ftau = whisker_outer(f, &s.tau)?;
        let gi = adj
            .source_exp
            .functor_index(&fv)
            .expect("functor enumerated");
        let tri = &adj.triangles[gi];
        // The mate of fτ: the unique σ : fw ⇒ ran(fv) with
        // ρ ∘ (σ ◦ u) = fτ.
        let mut mate = None;
        for sigma in enumerate_nat_trans(&fw, &tri.r, guard)? {
            let pasted = whisker_inner(&sigma, &s.u)?.then(&tri.rho)?;
            if pasted == ftau {
                mate = Some(sigma);
                break;
            }
        }
        let mate = mate.ok_or_else(|| {
            Error::InvalidStructure("the mate of the sketch 2-morphism does not exist".into())
        })?;
        if mate.is_iso() {
            inverter.push(fi);
        }
    }

    let by_definition = enumerate_models(s, x, guard)?;
    let mut report = Report::holds();
    report.push(Claim::check(
        "inverter-equals-models",
        by_definition.models == inverter,
        format!(
            "inverter picks {:?}, direct enumeration picks {:?}",
            inverter, by_definition.models
        ),
    ));
    Ok((ModelSet::from_indices(ambient, inverter)?, report))
}

/// Count the isomorphism classes of a category's objects.
fn iso_class_count(c: &FinCat) -> usize {
    let n = c.n_objects();
    let mut seen = vec![false; n];
    let mut count = 0;
    for x in 0..n {
        if seen[x] {
            continue;
        }
        count += 1;
        for y in x..n {
            if c.are_isomorphic_objects(x, y) {
                seen[y] = true;
            }
        }
    }
    count
}

/// The exponent equivalence `Mdl(T, [K, X]) ≃ [K, mdl(T, X)]`, checked as
/// a bijection on objects under currying, hom-set bijections, equality of
/// isomorphism-class counts, and a naturality spot check over the
/// endofunctors of `K`.
pub fn check_exponent_equivalence(
    s: &Sketch,
    k: &Arc<FinCat>,
    x: &Arc<FinCat>,
    guard: &SizeGuard,
) -> Result<Report> {
    let pre = check_pointwise_u_complete(&s.u, x, &[k.clone()], guard)?;
    if !pre.is_holds() {
        return Err(Error::PreconditionFailed(
            "X is not (1_K ⊗ u)-complete".into(),
        ));
    }
    let (mdl, inv_report) = inverter_models(s, x, guard)?;
    if !inv_report.is_holds() {
        return Err(Error::PreconditionFailed(
            "the inverter disagrees with the model enumeration".into(),
        ));
    }

    let y = functor_category(k, x, guard)?;
    let models_y = enumerate_models(s, &y.cat, guard)?;
    let km = functor_category(k, &mdl.category, guard)?;

    let mut report = Report::holds();

    // Curry each model C → [K,X] into a functor K → mdl.
    let mut curried_ixs = Vec::new();
    let mut curry_ok = true;
    let mut witness = String::new();
    for &gi in &models_y.models {
        let g = &models_y.ambient.functors[gi];
        match curry_model(s, &y, &mdl, &km, k, x, g)? {
            Some(ix) => curried_ixs.push(ix),
            None => {
                curry_ok = false;
                witness = format!("model F{gi} does not curry into the model category");
                break;
            }
        }
    }
    report.push(Claim::check("currying-lands-in-models", curry_ok, witness));
    if !curry_ok {
        return Ok(report);
    }
    {
        let mut sorted = curried_ixs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        report.push(Claim::check(
            "objects-bijection",
            sorted.len() == curried_ixs.len() && curried_ixs.len() == km.functors.len(),
            format!(
                "{} models curry to {} distinct functors of {}",
                models_y.models.len(),
                sorted.len(),
                km.functors.len()
            ),
        ));
    }

    // Hom-sets transpose bijectively.
    let mut homs_ok = true;
    let mut witness = String::new();
    'outer: for (i, &gi) in models_y.models.iter().enumerate() {
        for (j, &gj) in models_y.models.iter().enumerate() {
            let g1 = &models_y.ambient.functors[gi];
            let g2 = &models_y.ambient.functors[gj];
            let thetas = enumerate_nat_trans(g1, g2, guard)?;
            let f1 = &km.functors[curried_ixs[i]];
            let f2 = &km.functors[curried_ixs[j]];
            let sigmas = enumerate_nat_trans(f1, f2, guard)?;
            // Transpose each θ and find it among the σ.
            let mut transposed = Vec::new();
            for theta in &thetas {
                match transpose_transformation(&y, &mdl, theta, f1, f2) {
                    Some(t) => transposed.push(t.components().to_vec()),
                    None => {
                        homs_ok = false;
                        witness = format!("a transformation F{gi} ⇒ F{gj} does not transpose");
                        break 'outer;
                    }
                }
            }
            transposed.sort();
            transposed.dedup();
            if transposed.len() != thetas.len() || thetas.len() != sigmas.len() {
                homs_ok = false;
                witness = format!(
                    "hom (F{gi}, F{gj}): {} transformations vs {} transposed",
                    sigmas.len(),
                    thetas.len()
                );
                break 'outer;
            }
        }
    }
    report.push(Claim::check("homs-bijection", homs_ok, witness));

    // Isomorphism classes agree.
    let (mdl_y_cat, _) = full_subcategory(&models_y.ambient.cat, &models_y.models)?;
    report.push(Claim::check(
        "iso-classes-agree",
        iso_class_count(&mdl_y_cat) == iso_class_count(&km.cat),
        format!(
            "{} classes vs {}",
            iso_class_count(&mdl_y_cat),
            iso_class_count(&km.cat)
        ),
    ));

    // Naturality spot check: currying commutes with precomposition by
    // every endofunctor of K (the identity included).
    let endos = crate::fincat::enumerate_functors(k, k, guard)?;
    let mut nat_ok = true;
    let mut witness = String::new();
    'nat: for k_endo in &endos {
        // [k',1] : [K,X] → [K,X] on the functor category.
        let pre_obj: Vec<usize> = y
            .functors
            .iter()
            .map(|h| {
                y.functor_index(&k_endo.then(h).expect("composable"))
                    .expect("enumerated")
            })
            .collect();
        let pre_mor: Vec<usize> = y
            .transformations
            .iter()
            .map(|t| {
                y.transformation_index(&whisker_inner(t, k_endo).expect("composable"))
                    .expect("enumerated")
            })
            .collect();
        let pre_fun = Functor::new(y.cat.clone(), y.cat.clone(), pre_obj, pre_mor)?;
        for (i, &gi) in models_y.models.iter().enumerate() {
            let g = &models_y.ambient.functors[gi];
            let g2 = g.then(&pre_fun)?;
            let lhs = match curry_model(s, &y, &mdl, &km, k, x, &g2)? {
                Some(ix) => ix,
                None => {
                    nat_ok = false;
                    witness = "precomposed model fails to curry".into();
                    break 'nat;
                }
            };
            // curry(g) ∘ k' in [K, mdl].
            let rhs_fun = k_endo.then(&km.functors[curried_ixs[i]])?;
            let rhs = km.functor_index(&rhs_fun).expect("enumerated");
            if lhs != rhs {
                nat_ok = false;
                witness = format!("naturality square fails at model F{gi}");
                break 'nat;
            }
        }
    }
    report.push(Claim::check("naturality-spot-check", nat_ok, witness));

    Ok(report)
}

/// Curry a model `g : C → [K,X]` into a functor `K → mdl`, returning its
/// index in `[K, mdl]`, or `None` if some value fails to be a model.
fn curry_model(
    s: &Sketch,
    y: &FunctorCategory,
    mdl: &ModelSet,
    km: &FunctorCategory,
    k: &Arc<FinCat>,
    x: &Arc<FinCat>,
    g: &Functor,
) -> Result<Option<usize>> {
    let c_cat = s.v.target();
    let k_cat = k.clone();
    let x_cat = x.clone();
    let nc = c_cat.n_objects();

    // Object part: k0 ↦ the functor c ↦ g(c)(k0), located inside mdl.
    let mut obj_map = Vec::with_capacity(k_cat.n_objects());
    for k0 in 0..k_cat.n_objects() {
        let f = Functor::new(
            c_cat.clone(),
            x_cat.clone(),
            (0..nc)
                .map(|c| y.functors[g.on_object(c)].on_object(k0))
                .collect(),
            (0..c_cat.n_morphisms())
                .map(|gm| y.transformations[g.on_morphism(gm)].component(k0))
                .collect(),
        );
        // The morphism part above uses components of transformations; for
        // identities of C this is the identity component, as required.
        let f = match f {
            Ok(f) => f,
            Err(_) => return Ok(None),
        };
        let amb_ix = match mdl.ambient.functor_index(&f) {
            Some(i) => i,
            None => return Ok(None),
        };
        match mdl.models.iter().position(|&mi| mi == amb_ix) {
            Some(pos) => obj_map.push(pos),
            None => return Ok(None),
        }
    }
    // Morphism part: κ ↦ the transformation with components g(c)(κ).
    let mut mor_map = Vec::with_capacity(k_cat.n_morphisms());
    for kappa in 0..k_cat.n_morphisms() {
        let src_f = &mdl.ambient.functors[mdl.models[obj_map[k_cat.morphism(kappa).src]]];
        let tgt_f = &mdl.ambient.functors[mdl.models[obj_map[k_cat.morphism(kappa).tgt]]];
        let t = NatTrans::new(
            src_f.clone(),
            tgt_f.clone(),
            (0..nc)
                .map(|c| y.functors[g.on_object(c)].on_morphism(kappa))
                .collect(),
        );
        let t = match t {
            Ok(t) => t,
            Err(_) => return Ok(None),
        };
        let amb_ix = match mdl.ambient.transformation_index(&t) {
            Some(i) => i,
            None => return Ok(None),
        };
        // Translate the ambient morphism into the full subcategory.
        let name = &mdl.ambient.cat.morphism(amb_ix).name;
        match mdl.category.find_morphism(name) {
            Some(i) => mor_map.push(i),
            None => return Ok(None),
        }
    }
    let curried = match Functor::new(k_cat, mdl.category.clone(), obj_map, mor_map) {
        Ok(f) => f,
        Err(_) => return Ok(None),
    };
    Ok(km.functor_index(&curried))
}

/// Transpose `θ : g ⇒ g'` between models `C → [K,X]` into a
/// transformation between the curried functors `K → mdl`.
fn transpose_transformation(
    y: &FunctorCategory,
    mdl: &ModelSet,
    theta: &NatTrans,
    curried_src: &Functor,
    curried_tgt: &Functor,
) -> Option<NatTrans> {
    let k_cat = curried_src.source();
    let nc = theta.source().source().n_objects();
    let mut comps = Vec::with_capacity(k_cat.n_objects());
    for k0 in 0..k_cat.n_objects() {
        // Component at k0: the [C,X]-transformation with components
        // θ_c at k0.
        let src_f = &mdl.ambient.functors[mdl.models[curried_src.on_object(k0)]];
        let tgt_f = &mdl.ambient.functors[mdl.models[curried_tgt.on_object(k0)]];
        let t = NatTrans::new(
            src_f.clone(),
            tgt_f.clone(),
            (0..nc)
                .map(|c| y.transformations[theta.component(c)].component(k0))
                .collect(),
        )
        .ok()?;
        let amb_ix = mdl.ambient.transformation_index(&t)?;
        let name = &mdl.ambient.cat.morphism(amb_ix).name;
        comps.push(mdl.category.find_morphism(name)?);
    }
    NatTrans::new(curried_src.clone(), curried_tgt.clone(), comps).ok()
}
