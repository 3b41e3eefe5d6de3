//! Extension checkers and constructors in Cat: pointwise right extensions
//! (checked through the module-level criterion), weak right extensions
//! (checked by brute-force enumeration of the defining bijection), exact
//! (BC) squares, and the pasting of BC squares onto extensions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{
    compose_functors, enumerate_functors, enumerate_nat_trans, opposite_functor, same_category,
    whisker_inner, whisker_outer, FinCat, Functor, NatTrans,
};
use crate::finset::FinFn;
use crate::guard::SizeGuard;
use crate::profmod::{
    lower_representable, mate_of_square, right_extension_module, ModMorphism, RightExtension,
};
use crate::report::{Claim, Report};

/// A triangle `ρ : r∘j ⇒ f` with `j : A → B`, `f : A → X`, `r : B → X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub j: Functor,
    pub f: Functor,
    pub r: Functor,
    pub rho: NatTrans,
}

impl Triangle {
    pub fn new(j: Functor, f: Functor, r: Functor, rho: NatTrans) -> Result<Triangle> {
        if !same_category(j.source(), f.source())
            || !same_category(j.target(), r.source())
            || !same_category(f.target(), r.target())
        {
            return Err(Error::BoundaryMismatch("triangle boundaries do not compose".into()));
        }
        let rj = compose_functors(&r, &j)?;
        if rho.source() != &rj || rho.target() != &f {
            return Err(Error::BoundaryMismatch(
                "the 2-morphism must go from r∘j to f".into(),
            ));
        }
        Ok(Triangle { j, f, r, rho })
    }

    /// The identity triangle on `f` (along the identity of its source).
    pub fn identity(f: &Functor) -> Triangle {
        let j = Functor::identity(f.source());
        Triangle {
            j,
            f: f.clone(),
            r: f.clone(),
            rho: NatTrans::identity(f),
        }
    }
}

/// A square `λ : b∘p ⇒ j∘q` with `p : S → U`, `q : S → A`, `j : A → B`,
/// `b : U → B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square {
    pub p: Functor,
    pub q: Functor,
    pub j: Functor,
    pub b: Functor,
    pub lambda: NatTrans,
}

impl Square {
    pub fn new(p: Functor, q: Functor, j: Functor, b: Functor, lambda: NatTrans) -> Result<Square> {
        if !same_category(p.source(), q.source())
            || !same_category(p.target(), b.source())
            || !same_category(q.target(), j.source())
            || !same_category(j.target(), b.target())
        {
            return Err(Error::BoundaryMismatch("square boundaries do not compose".into()));
        }
        let bp = compose_functors(&b, &p)?;
        let jq = compose_functors(&j, &q)?;
        if lambda.source() != &bp || lambda.target() != &jq {
            return Err(Error::BoundaryMismatch(
                "the 2-morphism must go from b∘p to j∘q".into(),
            ));
        }
        Ok(Square { p, q, j, b, lambda })
    }

    pub fn identity(j: &Functor) -> Square {
        let ids = Functor::identity(j.source());
        let idt = Functor::identity(j.target());
        Square {
            p: j.clone(),
            q: ids,
            j: j.clone(),
            b: idt,
            lambda: NatTrans::identity(j),
        }
    }

    pub fn mate(&self) -> Result<ModMorphism> {
        mate_of_square(&self.p, &self.q, &self.j, &self.b, &self.lambda)
    }
}

/// The canonical comparison `R_* ⇒ hom_A(J_*, F_*)` of a triangle: it
/// sends `ξ : x → Rb` to the family `β ↦ ρ_a ∘ R(β) ∘ ξ`.
pub fn canonical_comparison(t: &Triangle) -> Result<(ModMorphism, RightExtension)> {
    let j_low = lower_representable(&t.j);
    let f_low = lower_representable(&t.f);
    let r_low = lower_representable(&t.r);
    let ext = right_extension_module(&j_low, &f_low)?;

    let b_cat = t.j.target().clone();
    let x_cat = t.f.target().clone();
    let a_cat = t.j.source().clone();
    let (na, nb, nx) = (a_cat.n_objects(), b_cat.n_objects(), x_cat.n_objects());

    let mut comps = Vec::with_capacity(nx * nb);
    for x in 0..nx {
        for b in 0..nb {
            let dom = r_low.component(x, b).clone();
            let cod = ext.module.component(x, b).clone();
            let dom_ref = r_low.component(x, b);
            comps.push(FinFn::from_index_fn(dom, cod, |i| {
                let xi = x_cat
                    .find_morphism(dom_ref.label(i))
                    .expect("element names a morphism");
                let fam: Vec<FinFn> = (0..na)
                    .map(|a| {
                        let hom_ba = j_low.component(b, a);
                        let target = f_low.component(x, a);
                        FinFn::from_index_fn(hom_ba.clone(), target.clone(), |bi| {
                            let beta = b_cat
                                .find_morphism(hom_ba.label(bi))
                                .expect("element names a morphism");
                            let composite = x_cat
                                .compose(
                                    t.rho.component(a),
                                    x_cat.compose(t.r.on_morphism(beta), xi).expect("valid table"),
                                )
                                .expect("valid table");
                            target
                                .index_of(&x_cat.morphism(composite).name)
                                .expect("composite lies in the hom-set")
                        })
                    })
                    .collect();
                ext.family_index(x, b, &fam)
                    .expect("comparison family is natural")
            }));
        }
    }
    let cmp = ModMorphism::new(r_low, ext.module.clone(), comps)?;
    Ok((cmp, ext))
}

/// Pointwise right extension check: every component of the canonical
/// comparison must be a bijection.
pub fn check_pointwise_right_extension(t: &Triangle) -> Result<Report> {
    let (cmp, _) = canonical_comparison(t)?;
    let mut report = Report::holds();
    match cmp.non_iso_witness() {
        None => report.push(Claim::holds("pointwise-extension")),
        Some(w) => report.push(Claim::fails("pointwise-extension", w)),
    }
    Ok(report)
}

/// Construct the pointwise right Kan extension of `f` along `j` by
/// representability search: at each object the canonical comparison must
/// be made bijective by some representing object and universal element.
pub fn construct_pointwise_ran(j: &Functor, f: &Functor) -> Result<Triangle> {
    if !same_category(j.source(), f.source()) {
        return Err(Error::BoundaryMismatch("ran needs a common source".into()));
    }
    let j_low = lower_representable(j);
    let f_low = lower_representable(f);
    let ext = right_extension_module(&j_low, &f_low)?;
    let hom = &ext.module;

    let a_cat = j.source().clone();
    let b_cat = j.target().clone();
    let x_cat = f.target().clone();
    let (na, nb, nx) = (a_cat.n_objects(), b_cat.n_objects(), x_cat.n_objects());

    // For each b, search candidate objects in canonical order and all
    // candidate universal elements; first success wins.
    let mut r_obj = vec![usize::MAX; nb];
    let mut eta = vec![usize::MAX; nb]; // universal element of hom(rb, b)
    for b in 0..nb {
        'search: for rb in 0..nx {
            'cand: for e in 0..hom.component(rb, b).len() {
                // Pairing X(x, rb) → hom(x, b), ξ ↦ ξ · η, must be
                // bijective for every x.
                for x in 0..nx {
                    let homset = x_cat.hom(x, rb);
                    if homset.len() != hom.component(x, b).len() {
                        continue 'cand;
                    }
                    let mut seen = vec![false; hom.component(x, b).len()];
                    for xi in homset {
                        let image = hom.act_left_fn(xi, b).apply_ix(e);
                        if seen[image] {
                            continue 'cand;
                        }
                        seen[image] = true;
                    }
                }
                r_obj[b] = rb;
                eta[b] = e;
                break 'search;
            }
        }
        if r_obj[b] == usize::MAX {
            return Err(Error::NotRepresentable(b_cat.object_label(b).to_string()));
        }
    }

    // Functoriality: R(β) is the unique ξ : rb → rb' with
    // ξ · η_{b'} = β · η_b.
    let mut r_mor = vec![usize::MAX; b_cat.n_morphisms()];
    for beta in 0..b_cat.n_morphisms() {
        let d = b_cat.morphism(beta);
        let moved = hom.act_right_fn(beta, r_obj[d.src]).apply_ix(eta[d.src]);
        for xi in x_cat.hom(r_obj[d.src], r_obj[d.tgt]) {
            if hom.act_left_fn(xi, d.tgt).apply_ix(eta[d.tgt]) == moved {
                r_mor[beta] = xi;
                break;
            }
        }
        if r_mor[beta] == usize::MAX {
            return Err(Error::InvalidStructure(
                "no functorial action found; representability search was unsound".into(),
            ));
        }
    }
    let r = Functor::new(b_cat.clone(), x_cat.clone(), r_obj.clone(), r_mor)?;

    // ρ_a is the a-component of the universal family at J a applied to
    // the identity.
    let mut rho_comps = vec![usize::MAX; na];
    for a in 0..na {
        let ja = j.on_object(a);
        let fam = ext.family(r_obj[ja], ja, eta[ja]);
        let id_elem = j_low
            .component(ja, a)
            .index_of(&b_cat.morphism(b_cat.identity(ja)).name)
            .expect("identity lies in the hom-set");
        let img = fam[a].apply_ix(id_elem);
        let name = f_low.component(r_obj[ja], a).label(img);
        rho_comps[a] = x_cat.find_morphism(name).expect("element names a morphism");
    }
    let rho = NatTrans::new(compose_functors(&r, j)?, f.clone(), rho_comps)?;
    Triangle::new(j.clone(), f.clone(), r, rho)
}

/// Weak right extension check: for every functor `g : B → X`, pasting
/// `θ ↦ ρ ∘ (θ ◦ j)` must biject `Nat(g, r)` with `Nat(g∘j, f)`.
pub fn check_weak_right_extension(t: &Triangle, guard: &SizeGuard) -> Result<Report> {
    let mut report = Report::holds();
    let gs = enumerate_functors(t.j.target(), t.f.target(), guard)?;
    for (gi, g) in gs.iter().enumerate() {
        let thetas = enumerate_nat_trans(g, &t.r, guard)?;
        let gj = compose_functors(g, &t.j)?;
        let phis = enumerate_nat_trans(&gj, &t.f, guard)?;
        let mut pasted = Vec::with_capacity(thetas.len());
        for theta in &thetas {
            pasted.push(whisker_inner(theta, &t.j)?.then(&t.rho)?);
        }
        let mut distinct = pasted.clone();
        distinct.sort_by_key(|t| t.components().to_vec());
        distinct.dedup();
        if distinct.len() != pasted.len() || pasted.len() != phis.len() {
            report.push(Claim::fails(
                "weak-extension",
                format!(
                    "functor #{gi}: {} transformations paste to {} distinct of {}",
                    thetas.len(),
                    distinct.len(),
                    phis.len()
                ),
            ));
            return Ok(report);
        }
    }
    report.push(Claim::holds_with_note(
        "weak-extension",
        format!("bijection verified against {} functors", gs.len()),
    ));
    Ok(report)
}

/// For a pointwise right extension along a fully faithful `j`, the unit
/// `ρ` must be invertible.
pub fn check_fully_faithful_invertibility(t: &Triangle) -> Result<Report> {
    if !t.j.is_fully_faithful() {
        return Err(Error::PreconditionFailed("j is not fully faithful".into()));
    }
    if !check_pointwise_right_extension(t)?.is_holds() {
        return Err(Error::PreconditionFailed(
            "triangle is not a pointwise right extension".into(),
        ));
    }
    let mut report = Report::holds();
    let x_cat = t.f.target();
    let a_cat = t.j.source();
    match (0..a_cat.n_objects()).find(|&a| !x_cat.is_iso_morphism(t.rho.component(a))) {
        None => report.push(Claim::holds("unit-invertible")),
        Some(a) => report.push(Claim::fails(
            "unit-invertible",
            format!(
                "component of the unit at `{}` is not invertible",
                a_cat.object_label(a)
            ),
        )),
    }
    Ok(report)
}

/// BC (exactness) check: the mate of the square must be invertible.
pub fn check_bc(sq: &Square) -> Result<Report> {
    let mate = sq.mate()?;
    let mut report = Report::holds();
    match mate.non_iso_witness() {
        None => report.push(Claim::holds("bc-square")),
        Some(w) => report.push(Claim::fails("bc-square", w)),
    }
    Ok(report)
}

/// Paste a BC square on top of a pointwise right extension; the result is
/// a (weak) right extension of `f∘q` along `p`, which is checked.
pub fn paste_bc_on_extension(
    sq: &Square,
    t: &Triangle,
    guard: &SizeGuard,
) -> Result<(Triangle, Report)> {
    if sq.j != t.j {
        return Err(Error::PreconditionFailed(
            "the square's bottom edge must be the triangle's extension edge".into(),
        ));
    }
    if !check_pointwise_right_extension(t)?.is_holds() {
        return Err(Error::PreconditionFailed(
            "triangle is not a pointwise right extension".into(),
        ));
    }
    if !check_bc(sq)?.is_holds() {
        return Err(Error::PreconditionFailed("square is not BC".into()));
    }
    let pasted = paste_square_on_triangle(sq, t)?;
    let report = check_weak_right_extension(&pasted, guard)?;
    Ok((pasted, report))
}

/// The pasted triangle `(p, f∘q, r∘b, (ρ ◦ q) ∘ (r ◦ λ))`.
pub fn paste_square_on_triangle(sq: &Square, t: &Triangle) -> Result<Triangle> {
    let fq = compose_functors(&t.f, &sq.q)?;
    let rb = compose_functors(&t.r, &sq.b)?;
    let r_lambda = whisker_outer(&t.r, &sq.lambda)?;
    let rho_q = whisker_inner(&t.rho, &sq.q)?;
    let rho2 = r_lambda.then(&rho_q)?;
    Triangle::new(sq.p.clone(), fq, rb, rho2)
}

/// Horizontal pasting of squares: `top` sits above `sq` along `sq.p`,
/// i.e. `top.j = sq.p`. The composite square has legs `(top.p, sq.q ∘
/// top.q, sq.j, sq.b ∘ top.b)`.
pub fn paste_squares(top: &Square, sq: &Square) -> Result<Square> {
    if top.j != sq.p {
        return Err(Error::PreconditionFailed(
            "squares do not share the middle edge".into(),
        ));
    }
    let q2 = compose_functors(&sq.q, &top.q)?;
    let b2 = compose_functors(&sq.b, &top.b)?;
    let lam = whisker_outer(&sq.b, &top.lambda)?.then(&whisker_inner(&sq.lambda, &top.q)?)?;
    Square::new(top.p.clone(), q2, sq.j.clone(), b2, lam)
}

/// A pointwise left Kan extension, computed by dualizing, constructing
/// the right extension there, and dualizing back. The 2-morphism goes
/// `f ⇒ lan ∘ j`.
#[derive(Debug, Clone)]
pub struct LanTriangle {
    pub j: Functor,
    pub f: Functor,
    pub lan: Functor,
    pub unit: NatTrans,
    /// The right-extension triangle of the dualized data.
    pub dual: Triangle,
}

pub fn construct_pointwise_lan(j: &Functor, f: &Functor) -> Result<LanTriangle> {
    let jo = opposite_functor(j);
    let fo = opposite_functor(f);
    let dual = construct_pointwise_ran(&jo, &fo)?;
    let lan = undual_functor(&dual.r, j.target(), f.target());
    let lj = compose_functors(&lan, j)?;
    // ρ : R∘j_op ⇒ f_op in the opposite reads as f ⇒ lan∘j.
    let unit = NatTrans::new(f.clone(), lj, dual.rho.components().to_vec())?;
    Ok(LanTriangle {
        j: j.clone(),
        f: f.clone(),
        lan,
        unit,
        dual,
    })
}

/// Rebuild a functor between the original categories from its opposite.
fn undual_functor(g: &Functor, source: &Arc<FinCat>, target: &Arc<FinCat>) -> Functor {
    Functor::new(
        source.clone(),
        target.clone(),
        g.object_map().to_vec(),
        g.morphism_map().to_vec(),
    )
    .expect("dualizing twice restores functoriality")
}
