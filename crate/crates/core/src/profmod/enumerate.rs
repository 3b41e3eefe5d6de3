//! Exhaustive enumeration of modules and module morphisms between small
//! categories, isomorphism search, and representability testing. These
//! back the universal-property checks, so they stay deliberately naive.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{enumerate_functors, FinCat, Functor};
use crate::finset::{enumerate_functions, FinFn, FinSet};
use crate::guard::SizeGuard;

use super::module::{ModMorphism, Module};
use super::represent::lower_representable;

/// All modules `src ⇸ tgt` whose components have at most `max_elem`
/// elements, labelled `g0, g1, …` per component.
pub fn enumerate_modules(
    src: &Arc<FinCat>,
    tgt: &Arc<FinCat>,
    max_elem: usize,
    guard: &SizeGuard,
) -> Result<Vec<Module>> {
    let (ns, nt) = (src.n_objects(), tgt.n_objects());
    let n_comp = ns * nt;
    let mut total: u64 = 1;
    for _ in 0..n_comp {
        total = total.saturating_mul((max_elem + 1) as u64);
        if total > guard.max_enumerated as u64 {
            return Err(Error::SizeGuardExceeded(
                "module carrier enumeration".into(),
            ));
        }
    }

    let mut out = Vec::new();
    let mut sizes = vec![0usize; n_comp];
    loop {
        let components: Vec<FinSet> = sizes
            .iter()
            .map(|&k| {
                FinSet::new((0..k).map(|i| format!("g{i}")).collect()).expect("distinct labels")
            })
            .collect();
        enumerate_actions(src, tgt, &components, guard, &mut out)?;
        guard.check_enumeration(out.len(), "modules")?;

        let mut k = n_comp;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            sizes[k] += 1;
            if sizes[k] <= max_elem {
                break;
            }
            sizes[k] = 0;
        }
    }
}

enum Slot {
    Left(usize, usize),  // (target morphism, source object)
    Right(usize, usize), // (source morphism, target object)
}

fn enumerate_actions(
    src: &Arc<FinCat>,
    tgt: &Arc<FinCat>,
    components: &[FinSet],
    _guard: &SizeGuard,
    out: &mut Vec<Module>,
) -> Result<()> {
    let ns = src.n_objects();
    let comp = |b: usize, a: usize| &components[b * ns + a];

    // Pre-fill identity actions; list the free slots.
    let mut act_left: Vec<Option<FinFn>> = vec![None; tgt.n_morphisms() * ns];
    let mut act_right: Vec<Option<FinFn>> = vec![None; src.n_morphisms() * tgt.n_objects()];
    let mut slots = Vec::new();
    for beta in 0..tgt.n_morphisms() {
        for a in 0..ns {
            if tgt.is_identity(beta) {
                act_left[beta * ns + a] =
                    Some(FinFn::identity(comp(tgt.morphism(beta).src, a)));
            } else {
                slots.push(Slot::Left(beta, a));
            }
        }
    }
    for alpha in 0..src.n_morphisms() {
        for b in 0..tgt.n_objects() {
            if src.is_identity(alpha) {
                act_right[alpha * tgt.n_objects() + b] =
                    Some(FinFn::identity(comp(b, src.morphism(alpha).src)));
            } else {
                slots.push(Slot::Right(alpha, b));
            }
        }
    }

    fn consistent(
        src: &FinCat,
        tgt: &FinCat,
        ns: usize,
        act_left: &[Option<FinFn>],
        act_right: &[Option<FinFn>],
    ) -> bool {
        let nb = tgt.n_objects();
        for b1 in 0..tgt.n_morphisms() {
            for b2 in 0..tgt.n_morphisms() {
                if let Some(c) = tgt.compose(b1, b2) {
                    for a in 0..ns {
                        if let (Some(f1), Some(f2), Some(fc)) = (
                            act_left[b1 * ns + a].as_ref(),
                            act_left[b2 * ns + a].as_ref(),
                            act_left[c * ns + a].as_ref(),
                        ) {
                            if f1.then(f2).expect("boundaries line up") != *fc {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        for a1 in 0..src.n_morphisms() {
            for a2 in 0..src.n_morphisms() {
                if let Some(c) = src.compose(a2, a1) {
                    for b in 0..nb {
                        if let (Some(f1), Some(f2), Some(fc)) = (
                            act_right[a1 * nb + b].as_ref(),
                            act_right[a2 * nb + b].as_ref(),
                            act_right[c * nb + b].as_ref(),
                        ) {
                            if f1.then(f2).expect("boundaries line up") != *fc {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        for beta in 0..tgt.n_morphisms() {
            let db = tgt.morphism(beta);
            for alpha in 0..src.n_morphisms() {
                let da = src.morphism(alpha);
                if let (Some(l1), Some(r1), Some(r2), Some(l2)) = (
                    act_left[beta * ns + da.src].as_ref(),
                    act_right[alpha * nb + db.src].as_ref(),
                    act_right[alpha * nb + db.tgt].as_ref(),
                    act_left[beta * ns + da.tgt].as_ref(),
                ) {
                    let p1 = l1.then(r1).expect("boundaries line up");
                    let p2 = r2.then(l2).expect("boundaries line up");
                    if p1 != p2 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn rec(
        src: &Arc<FinCat>,
        tgt: &Arc<FinCat>,
        components: &[FinSet],
        slots: &[Slot],
        pos: usize,
        act_left: &mut Vec<Option<FinFn>>,
        act_right: &mut Vec<Option<FinFn>>,
        out: &mut Vec<Module>,
    ) {
        let ns = src.n_objects();
        let comp = |b: usize, a: usize| &components[b * ns + a];
        if pos == slots.len() {
            let m = Module::new(
                src.clone(),
                tgt.clone(),
                components.to_vec(),
                act_left.iter().map(|f| f.clone().unwrap()).collect(),
                act_right.iter().map(|f| f.clone().unwrap()).collect(),
            )
            .expect("search only yields valid modules");
            out.push(m);
            return;
        }
        let (dom, cod, ix_left, ix) = match slots[pos] {
            Slot::Left(beta, a) => {
                let d = tgt.morphism(beta);
                (comp(d.tgt, a), comp(d.src, a), true, beta * ns + a)
            }
            Slot::Right(alpha, b) => {
                let d = src.morphism(alpha);
                (
                    comp(b, d.src),
                    comp(b, d.tgt),
                    false,
                    alpha * tgt.n_objects() + b,
                )
            }
        };
        for cand in enumerate_functions(dom, cod) {
            if ix_left {
                act_left[ix] = Some(cand);
            } else {
                act_right[ix] = Some(cand);
            }
            if consistent(src, tgt, ns, act_left, act_right) {
                rec(src, tgt, components, slots, pos + 1, act_left, act_right, out);
            }
            if ix_left {
                act_left[ix] = None;
            } else {
                act_right[ix] = None;
            }
        }
    }

    rec(
        src,
        tgt,
        components,
        &slots,
        0,
        &mut act_left,
        &mut act_right,
        out,
    );
    Ok(())
}

/// All module morphisms `m ⇒ n`, enumerated componentwise with incremental
/// naturality pruning.
pub fn enumerate_mod_morphisms(
    m: &Module,
    n: &Module,
    guard: &SizeGuard,
) -> Result<Vec<ModMorphism>> {
    if !m.same_boundaries(n) {
        return Err(Error::BoundaryMismatch(
            "enumeration needs parallel modules".into(),
        ));
    }
    let raw = search_mod_morphisms(m, n, false, Some(guard))?;
    Ok(raw)
}

/// First componentwise-bijective natural family `m ⇒ n`, if any.
pub fn find_module_iso(m: &Module, n: &Module, guard: &SizeGuard) -> Result<Option<ModMorphism>> {
    if !m.same_boundaries(n) {
        return Err(Error::BoundaryMismatch(
            "isomorphism search needs parallel modules".into(),
        ));
    }
    let na = m.source().n_objects();
    let nb = m.target().n_objects();
    for b in 0..nb {
        for a in 0..na {
            if m.component(b, a).len() != n.component(b, a).len() {
                return Ok(None);
            }
        }
    }
    Ok(search_mod_morphisms(m, n, true, Some(guard))?.into_iter().next())
}

/// When `iso_search` is set, candidates are restricted to bijections and
/// the search stops at the first hit.
fn search_mod_morphisms(
    m: &Module,
    n: &Module,
    iso_search: bool,
    guard: Option<&SizeGuard>,
) -> Result<Vec<ModMorphism>> {
    let src_cat = m.source().clone();
    let tgt_cat = m.target().clone();
    let (na, nb) = (src_cat.n_objects(), tgt_cat.n_objects());
    // Component order is (b, a) row-major, matching ModMorphism.
    let candidates: Vec<Vec<FinFn>> = (0..nb)
        .flat_map(|b| (0..na).map(move |a| (b, a)))
        .map(|(b, a)| {
            enumerate_functions(m.component(b, a), n.component(b, a))
                .into_iter()
                .filter(|f| !iso_search || f.is_bijection())
                .collect()
        })
        .collect();

    let mut out: Vec<ModMorphism> = Vec::new();
    let mut current: Vec<Option<FinFn>> = vec![None; na * nb];

    fn rec(
        m: &Module,
        n: &Module,
        candidates: &[Vec<FinFn>],
        pos: usize,
        current: &mut Vec<Option<FinFn>>,
        out: &mut Vec<ModMorphism>,
        first_only: bool,
        cap: usize,
    ) -> Result<()> {
        if first_only && !out.is_empty() {
            return Ok(());
        }
        let src_cat = m.source();
        let tgt_cat = m.target();
        let na = src_cat.n_objects();
        if pos == candidates.len() {
            if out.len() + 1 > cap {
                return Err(Error::SizeGuardExceeded("module morphisms".into()));
            }
            out.push(
                ModMorphism::new(
                    m.clone(),
                    n.clone(),
                    current.iter().map(|f| f.clone().unwrap()).collect(),
                )
                .expect("search only yields natural families"),
            );
            return Ok(());
        }
        'cand: for f in &candidates[pos] {
            current[pos] = Some(f.clone());
            // Check naturality squares fully assigned and touching `pos`.
            for beta in 0..tgt_cat.n_morphisms() {
                let d = tgt_cat.morphism(beta);
                for a in 0..na {
                    let (hi, lo) = (d.tgt * na + a, d.src * na + a);
                    if hi.max(lo) != pos || current[hi].is_none() || current[lo].is_none() {
                        continue;
                    }
                    let lhs = current[hi]
                        .as_ref()
                        .unwrap()
                        .then(n.act_left_fn(beta, a))
                        .expect("boundaries line up");
                    let rhs = m
                        .act_left_fn(beta, a)
                        .then(current[lo].as_ref().unwrap())
                        .expect("boundaries line up");
                    if lhs != rhs {
                        current[pos] = None;
                        continue 'cand;
                    }
                }
            }
            for alpha in 0..src_cat.n_morphisms() {
                let d = src_cat.morphism(alpha);
                for b in 0..tgt_cat.n_objects() {
                    let (lo, hi) = (b * na + d.src, b * na + d.tgt);
                    if lo.max(hi) != pos || current[lo].is_none() || current[hi].is_none() {
                        continue;
                    }
                    let lhs = current[lo]
                        .as_ref()
                        .unwrap()
                        .then(n.act_right_fn(alpha, b))
                        .expect("boundaries line up");
                    let rhs = m
                        .act_right_fn(alpha, b)
                        .then(current[hi].as_ref().unwrap())
                        .expect("boundaries line up");
                    if lhs != rhs {
                        current[pos] = None;
                        continue 'cand;
                    }
                }
            }
            rec(m, n, candidates, pos + 1, current, out, first_only, cap)?;
            current[pos] = None;
        }
        Ok(())
    }

    let cap = guard.map(|g| g.max_enumerated).unwrap_or(usize::MAX);
    rec(m, n, &candidates, 0, &mut current, &mut out, iso_search, cap)?;
    Ok(out)
}

/// Search for a functor whose lower representable is isomorphic to `h`.
pub fn find_representing_functor(h: &Module, guard: &SizeGuard) -> Result<Option<Functor>> {
    for f in enumerate_functors(h.source(), h.target(), guard)? {
        let rep = lower_representable(&f);
        if find_module_iso(h, &rep, guard)?.is_some() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}
