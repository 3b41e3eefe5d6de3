//! Right extensions and right liftings of modules, computed as ends: the
//! component is the set of action-compatible families of functions,
//! obtained by filtering products of function spaces by naturality.

use crate::error::{Error, Result};
use crate::finset::{enumerate_functions, FinFn, FinSet};
use crate::guard::SizeGuard;
use crate::label::join_labels;
use crate::report::{Claim, Report};

use super::algebra::{from_composite, whisker_post, whisker_pre};
use super::compose::compose_modules;
use super::enumerate::{enumerate_mod_morphisms, enumerate_modules};
use super::module::{ModMorphism, Module};

/// A family of functions indexed by the objects of the end variable.
type Family = Vec<FinFn>;

fn family_label(fam: &[FinFn]) -> String {
    join_labels(fam.iter().map(FinFn::function_label))
}

/// Backtracking enumeration of families `(φ_i)` with `φ_i` drawn from
/// `candidates[i]`; after assigning position `pos` the partial family is
/// checked by `partial_ok`, which sees assignments at indices `≤ pos`.
fn enumerate_families(
    candidates: &[Vec<FinFn>],
    partial_ok: impl Fn(usize, &[Option<FinFn>]) -> bool,
) -> Vec<Family> {
    fn rec(
        candidates: &[Vec<FinFn>],
        partial_ok: &impl Fn(usize, &[Option<FinFn>]) -> bool,
        pos: usize,
        current: &mut Vec<Option<FinFn>>,
        out: &mut Vec<Family>,
    ) {
        if pos == candidates.len() {
            out.push(current.iter().map(|f| f.clone().unwrap()).collect());
            return;
        }
        for f in &candidates[pos] {
            current[pos] = Some(f.clone());
            if partial_ok(pos, current) {
                rec(candidates, partial_ok, pos + 1, current, out);
            }
            current[pos] = None;
        }
    }
    let mut out = Vec::new();
    let mut current: Vec<Option<FinFn>> = vec![None; candidates.len()];
    rec(candidates, &partial_ok, 0, &mut current, &mut out);
    out
}

/// The right extension `hom_A(M, N) : B ⇸ X` of `n : A ⇸ X` along
/// `m : A ⇸ B`, together with its evaluation 2-morphism
/// `ev : (m ; hom) ⇒ n`.
pub struct RightExtension {
    pub module: Module,
    pub ev: ModMorphism,
    /// `families[x * nB + b]`, aligned with the component's sorted order:
    /// the family at element `e` of component `(x, b)`.
    families: Vec<Vec<Family>>,
}

impl RightExtension {
    pub fn family(&self, x: usize, b: usize, elem: usize) -> &[FinFn] {
        let nb = self.module.source().n_objects();
        &self.families[x * nb + b][elem]
    }

    pub fn family_index(&self, x: usize, b: usize, fam: &[FinFn]) -> Option<usize> {
        self.module.component(x, b).index_of(&family_label(fam))
    }
}

pub fn right_extension_module(m: &Module, n: &Module) -> Result<RightExtension> {
    if !crate::fincat::same_category(m.source(), n.source()) {
        return Err(Error::BoundaryMismatch(
            "right extension needs modules with a common source".into(),
        ));
    }
    let a_cat = m.source().clone();
    let b_cat = m.target().clone();
    let x_cat = n.target().clone();
    let (na, nb, nx) = (a_cat.n_objects(), b_cat.n_objects(), x_cat.n_objects());

    let mut families_all: Vec<Vec<Family>> = Vec::with_capacity(nx * nb);
    let mut components: Vec<FinSet> = Vec::with_capacity(nx * nb);
    for x in 0..nx {
        for b in 0..nb {
            let candidates: Vec<Vec<FinFn>> = (0..na)
                .map(|a| enumerate_functions(m.component(b, a), n.component(x, a)))
                .collect();
            // Naturality: for α : a → a', φ_{a'} ∘ M(α) = N(α) ∘ φ_a,
            // checked as soon as both endpoints are assigned.
            let mut kept = enumerate_families(&candidates, |pos, cur| {
                (0..a_cat.n_morphisms()).all(|alpha| {
                    let d = a_cat.morphism(alpha);
                    if d.src > pos || d.tgt > pos || (d.src != pos && d.tgt != pos) {
                        return true;
                    }
                    let lhs = m
                        .act_right_fn(alpha, b)
                        .then(cur[d.tgt].as_ref().unwrap())
                        .expect("boundaries line up");
                    let rhs = cur[d.src]
                        .as_ref()
                        .unwrap()
                        .then(n.act_right_fn(alpha, x))
                        .expect("boundaries line up");
                    lhs == rhs
                })
            });
            kept.sort_by_key(|f| family_label(f));
            components.push(FinSet::new(kept.iter().map(|f| family_label(f)).collect())?);
            families_all.push(kept);
        }
    }

    let comp = |x: usize, b: usize| &components[x * nb + b];
    let fams = |x: usize, b: usize| &families_all[x * nb + b];

    // Covariant action along β : b → b': precompose each φ_a with the
    // left action of m.
    let mut act_right = Vec::with_capacity(b_cat.n_morphisms() * nx);
    for beta in 0..b_cat.n_morphisms() {
        let d = b_cat.morphism(beta);
        for x in 0..nx {
            let dom = comp(x, d.src).clone();
            let cod = comp(x, d.tgt).clone();
            act_right.push(FinFn::from_index_fn(dom, cod, |e| {
                let fam = &fams(x, d.src)[e];
                let moved: Family = (0..na)
                    .map(|a| m.act_left_fn(beta, a).then(&fam[a]).expect("boundaries line up"))
                    .collect();
                comp(x, d.tgt)
                    .index_of(&family_label(&moved))
                    .expect("moved family is natural")
            }));
        }
    }
    // Contravariant action along ξ : x' → x: postcompose with the left
    // action of n.
    let mut act_left = Vec::with_capacity(x_cat.n_morphisms() * nb);
    for xi in 0..x_cat.n_morphisms() {
        let d = x_cat.morphism(xi);
        for b in 0..nb {
            let dom = comp(d.tgt, b).clone();
            let cod = comp(d.src, b).clone();
            act_left.push(FinFn::from_index_fn(dom, cod, |e| {
                let fam = &fams(d.tgt, b)[e];
                let moved: Family = (0..na)
                    .map(|a| fam[a].then(n.act_left_fn(xi, a)).expect("boundaries line up"))
                    .collect();
                comp(d.src, b)
                    .index_of(&family_label(&moved))
                    .expect("moved family is natural")
            }));
        }
    }

    let module = Module::new(b_cat, x_cat, components, act_left, act_right)?;

    let composite = compose_modules(m, &module)?;
    let ev = from_composite(&composite, n, |x, a, (b, mi, fi)| {
        families_all[x * nb + b][fi][a].apply_ix(mi)
    })?;

    Ok(RightExtension {
        module,
        ev,
        families: families_all,
    })
}

/// The right lifting `hom^B(M, N) : X ⇸ A` of `n : X ⇸ B` through
/// `m : A ⇸ B`, with `ev : (hom ; m) ⇒ n`.
pub struct RightLifting {
    pub module: Module,
    pub ev: ModMorphism,
    /// `families[a * nX + x]`, aligned with the component order.
    families: Vec<Vec<Family>>,
}

impl RightLifting {
    pub fn family(&self, a: usize, x: usize, elem: usize) -> &[FinFn] {
        let nx = self.module.source().n_objects();
        &self.families[a * nx + x][elem]
    }

    pub fn family_index(&self, a: usize, x: usize, fam: &[FinFn]) -> Option<usize> {
        self.module.component(a, x).index_of(&family_label(fam))
    }
}

pub fn right_lifting_module(m: &Module, n: &Module) -> Result<RightLifting> {
    if !crate::fincat::same_category(m.target(), n.target()) {
        return Err(Error::BoundaryMismatch(
            "right lifting needs modules with a common target".into(),
        ));
    }
    let a_cat = m.source().clone();
    let b_cat = m.target().clone();
    let x_cat = n.source().clone();
    let (na, nb, nx) = (a_cat.n_objects(), b_cat.n_objects(), x_cat.n_objects());

    let mut families_all: Vec<Vec<Family>> = Vec::with_capacity(na * nx);
    let mut components: Vec<FinSet> = Vec::with_capacity(na * nx);
    for a in 0..na {
        for x in 0..nx {
            let candidates: Vec<Vec<FinFn>> = (0..nb)
                .map(|b| enumerate_functions(m.component(b, a), n.component(b, x)))
                .collect();
            // Naturality: for β : b → b', ψ_b ∘ M(β) = N(β) ∘ ψ_{b'}.
            let mut kept = enumerate_families(&candidates, |pos, cur| {
                (0..b_cat.n_morphisms()).all(|beta| {
                    let d = b_cat.morphism(beta);
                    if d.src > pos || d.tgt > pos || (d.src != pos && d.tgt != pos) {
                        return true;
                    }
                    let lhs = m
                        .act_left_fn(beta, a)
                        .then(cur[d.src].as_ref().unwrap())
                        .expect("boundaries line up");
                    let rhs = cur[d.tgt]
                        .as_ref()
                        .unwrap()
                        .then(n.act_left_fn(beta, x))
                        .expect("boundaries line up");
                    lhs == rhs
                })
            });
            kept.sort_by_key(|f| family_label(f));
            components.push(FinSet::new(kept.iter().map(|f| family_label(f)).collect())?);
            families_all.push(kept);
        }
    }

    let comp = |a: usize, x: usize| &components[a * nx + x];
    let fams = |a: usize, x: usize| &families_all[a * nx + x];

    // Contravariant action along α : a' → a.
    let mut act_left = Vec::with_capacity(a_cat.n_morphisms() * nx);
    for alpha in 0..a_cat.n_morphisms() {
        let d = a_cat.morphism(alpha);
        for x in 0..nx {
            let dom = comp(d.tgt, x).clone();
            let cod = comp(d.src, x).clone();
            act_left.push(FinFn::from_index_fn(dom, cod, |e| {
                let fam = &fams(d.tgt, x)[e];
                let moved: Family = (0..nb)
                    .map(|b| m.act_right_fn(alpha, b).then(&fam[b]).expect("boundaries line up"))
                    .collect();
                comp(d.src, x)
                    .index_of(&family_label(&moved))
                    .expect("moved family is natural")
            }));
        }
    }
    // Covariant action along χ : x → x'.
    let mut act_right = Vec::with_capacity(x_cat.n_morphisms() * na);
    for chi in 0..x_cat.n_morphisms() {
        let d = x_cat.morphism(chi);
        for a in 0..na {
            let dom = comp(a, d.src).clone();
            let cod = comp(a, d.tgt).clone();
            act_right.push(FinFn::from_index_fn(dom, cod, |e| {
                let fam = &fams(a, d.src)[e];
                let moved: Family = (0..nb)
                    .map(|b| fam[b].then(n.act_right_fn(chi, b)).expect("boundaries line up"))
                    .collect();
                comp(a, d.tgt)
                    .index_of(&family_label(&moved))
                    .expect("moved family is natural")
            }));
        }
    }

    let module = Module::new(x_cat, a_cat, components, act_left, act_right)?;

    let composite = compose_modules(&module, m)?;
    let ev = from_composite(&composite, n, |b, x, (a, fi, mi)| {
        families_all[a * nx + x][fi][b].apply_ix(mi)
    })?;

    Ok(RightLifting {
        module,
        ev,
        families: families_all,
    })
}

/// The left preadjoint of `n : X ⇸ B`: the right extension of the
/// identity module of `X` along `n`.
pub fn left_preadjoint(n: &Module) -> Result<RightExtension> {
    right_extension_module(n, &Module::identity(n.source()))
}

/// Verify the defining bijection of the right extension: for every module
/// `g : B ⇸ X` (enumerated up to `max_elem` elements per component),
/// pasting with `ev` maps morphisms `g ⇒ hom` bijectively onto morphisms
/// `(m ; g) ⇒ n`.
pub fn check_right_extension_universal(
    m: &Module,
    n: &Module,
    ext: &RightExtension,
    max_elem: usize,
    guard: &SizeGuard,
) -> Result<Report> {
    let gs = enumerate_modules(m.target(), n.target(), max_elem, guard)?;
    let mut report = Report::holds();
    let mut checked = 0usize;
    for (gi, g) in gs.iter().enumerate() {
        let into_hom = enumerate_mod_morphisms(g, &ext.module, guard)?;
        let composite = compose_modules(m, g)?;
        let direct = enumerate_mod_morphisms(&composite.module, n, guard)?;
        let mut pasted = Vec::with_capacity(into_hom.len());
        for phi in &into_hom {
            pasted.push(whisker_pre(m, phi)?.then(&ext.ev)?);
        }
        let mut distinct = pasted.clone();
        distinct.sort_by_key(|t| format!("{t:?}"));
        distinct.dedup();
        if distinct.len() != pasted.len() || pasted.len() != direct.len() {
            report.push(Claim::fails(
                "extension-universal",
                format!(
                    "candidate module #{gi}: {} morphisms into hom paste to {} distinct of {} total",
                    into_hom.len(),
                    distinct.len(),
                    direct.len()
                ),
            ));
            return Ok(report);
        }
        checked += 1;
    }
    report.push(Claim::holds_with_note(
        "extension-universal",
        format!("all {checked} candidate modules checked"),
    ));
    Ok(report)
}

/// Dual check for the right lifting: morphisms `k ⇒ hom` biject with
/// `(k ; m) ⇒ n` under pasting with `ev`.
pub fn check_right_lifting_universal(
    m: &Module,
    n: &Module,
    lift: &RightLifting,
    max_elem: usize,
    guard: &SizeGuard,
) -> Result<Report> {
    let ks = enumerate_modules(n.source(), m.source(), max_elem, guard)?;
    let mut report = Report::holds();
    let mut checked = 0usize;
    for (ki, k) in ks.iter().enumerate() {
        let into_hom = enumerate_mod_morphisms(k, &lift.module, guard)?;
        let composite = compose_modules(k, m)?;
        let direct = enumerate_mod_morphisms(&composite.module, n, guard)?;
        let mut pasted = Vec::with_capacity(into_hom.len());
        for phi in &into_hom {
            pasted.push(whisker_post(phi, m)?.then(&lift.ev)?);
        }
        let mut distinct = pasted.clone();
        distinct.sort_by_key(|t| format!("{t:?}"));
        distinct.dedup();
        if distinct.len() != pasted.len() || pasted.len() != direct.len() {
            report.push(Claim::fails(
                "lifting-universal",
                format!(
                    "candidate module #{ki}: {} morphisms into hom paste to {} distinct of {} total",
                    into_hom.len(),
                    distinct.len(),
                    direct.len()
                ),
            ));
            return Ok(report);
        }
        checked += 1;
    }
    report.push(Claim::holds_with_note(
        "lifting-universal",
        format!("all {checked} candidate modules checked"),
    ));
    Ok(report)
}
