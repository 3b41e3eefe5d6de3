//! Exhaustive enumeration of functors and natural transformations, and the
//! functor category built from them.
//!
//! Enumeration order is part of the contract: functors are ordered
//! lexicographically by object map then morphism map, transformations by
//! (source index, target index, component tuple). Objects of a functor
//! category are named `F0, F1, …` and morphisms `t0, t1, …` in that order.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::guard::SizeGuard;

use super::cat::{FinCat, MorData};
use super::functor::Functor;
use super::nat::NatTrans;

/// All functors `a → x`, in canonical order.
pub fn enumerate_functors(
    a: &Arc<FinCat>,
    x: &Arc<FinCat>,
    guard: &SizeGuard,
) -> Result<Vec<Functor>> {
    let n_obj = a.n_objects();
    if n_obj > 0 && x.n_objects() == 0 {
        return Ok(Vec::new());
    }
    let non_identity: Vec<usize> = (0..a.n_morphisms()).filter(|&m| !a.is_identity(m)).collect();
    let mut out: Vec<Functor> = Vec::new();

    let mut object_map = vec![0usize; n_obj];
    loop {
        // With objects fixed, assign non-identity morphisms by backtracking.
        let mut morphism_map: Vec<usize> = (0..a.n_morphisms())
            .map(|m| {
                if a.is_identity(m) {
                    x.identity(object_map[a.morphism(m).src])
                } else {
                    usize::MAX
                }
            })
            .collect();
        assign_morphisms(
            a,
            x,
            &object_map,
            &non_identity,
            0,
            &mut morphism_map,
            &mut |mm| {
                out.push(
                    Functor::new(a.clone(), x.clone(), object_map.clone(), mm.to_vec())
                        .expect("search only yields functorial tables"),
                );
            },
        );
        guard.check_enumeration(out.len(), "functors")?;

        // Advance the object map.
        let mut k = n_obj;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            object_map[k] += 1;
            if object_map[k] < x.n_objects() {
                break;
            }
            object_map[k] = 0;
        }
    }
}

fn assign_morphisms(
    a: &FinCat,
    x: &FinCat,
    object_map: &[usize],
    remaining: &[usize],
    pos: usize,
    morphism_map: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if pos == remaining.len() {
        emit(morphism_map);
        return;
    }
    let m = remaining[pos];
    let d = a.morphism(m);
    for cand in x.hom(object_map[d.src], object_map[d.tgt]) {
        morphism_map[m] = cand;
        if composites_consistent(a, x, morphism_map, m) {
            assign_morphisms(a, x, object_map, remaining, pos + 1, morphism_map, emit);
        }
        morphism_map[m] = usize::MAX;
    }
}

/// Check every composition constraint whose three participants are all
/// assigned and involve `just_set`.
fn composites_consistent(a: &FinCat, x: &FinCat, mm: &[usize], just_set: usize) -> bool {
    let n = a.n_morphisms();
    for g in 0..n {
        if mm[g] == usize::MAX {
            continue;
        }
        for f in 0..n {
            if mm[f] == usize::MAX {
                continue;
            }
            if let Some(gf) = a.compose(g, f) {
                if gf != just_set && g != just_set && f != just_set {
                    continue;
                }
                if mm[gf] == usize::MAX {
                    continue;
                }
                if x.compose(mm[g], mm[f]) != Some(mm[gf]) {
                    return false;
                }
            }
        }
    }
    true
}

/// All natural transformations `f ⇒ g`, ordered by component tuple.
pub fn enumerate_nat_trans(f: &Functor, g: &Functor, guard: &SizeGuard) -> Result<Vec<NatTrans>> {
    let a = f.source();
    let x = f.target();
    let n_obj = a.n_objects();
    let candidates: Vec<Vec<usize>> = (0..n_obj)
        .map(|o| x.hom(f.on_object(o), g.on_object(o)))
        .collect();
    let mut out = Vec::new();
    let mut comps = vec![usize::MAX; n_obj];
    fn rec(
        a: &FinCat,
        x: &FinCat,
        f: &Functor,
        g: &Functor,
        candidates: &[Vec<usize>],
        o: usize,
        comps: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if o == candidates.len() {
            out.push(comps.clone());
            return;
        }
        'cand: for &c in &candidates[o] {
            comps[o] = c;
            // Naturality squares whose both ends are assigned.
            for m in 0..a.n_morphisms() {
                let d = a.morphism(m);
                if (d.src == o || d.src < o) && (d.tgt == o || d.tgt < o) {
                    let lhs = x.compose(g.on_morphism(m), comps[d.src]);
                    let rhs = x.compose(comps[d.tgt], f.on_morphism(m));
                    if lhs != rhs {
                        continue 'cand;
                    }
                }
            }
            rec(a, x, f, g, candidates, o + 1, comps, out);
        }
        comps[o] = usize::MAX;
    }
    let mut raw = Vec::new();
    rec(a, x, f, g, &candidates, 0, &mut comps, &mut raw);
    guard.check_enumeration(raw.len(), "natural transformations")?;
    for comps in raw {
        out.push(
            NatTrans::new(f.clone(), g.clone(), comps)
                .expect("search only yields natural families"),
        );
    }
    Ok(out)
}

/// The category `[a, x]` together with the functors and transformations
/// its objects and morphisms stand for.
pub struct FunctorCategory {
    pub cat: Arc<FinCat>,
    pub functors: Vec<Functor>,
    pub transformations: Vec<NatTrans>,
}

impl FunctorCategory {
    pub fn functor_index(&self, f: &Functor) -> Option<usize> {
        self.functors.iter().position(|g| g == f)
    }

    pub fn transformation_index(&self, t: &NatTrans) -> Option<usize> {
        self.transformations.iter().position(|s| s == t)
    }
}

pub fn functor_category(
    a: &Arc<FinCat>,
    x: &Arc<FinCat>,
    guard: &SizeGuard,
) -> Result<FunctorCategory> {
    let functors = enumerate_functors(a, x, guard)?;
    let mut transformations: Vec<NatTrans> = Vec::new();
    let mut mors: Vec<MorData> = Vec::new();
    let mut by_key: HashMap<(usize, usize, Vec<usize>), usize> = HashMap::new();
    let mut identities = vec![usize::MAX; functors.len()];
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for t in enumerate_nat_trans(f, g, guard)? {
                let ix = transformations.len();
                guard.check_enumeration(ix + 1, "functor category morphisms")?;
                by_key.insert((i, j, t.components().to_vec()), ix);
                if i == j && t.components().iter().enumerate().all(|(o, &c)| {
                    c == x.identity(f.on_object(o))
                }) {
                    identities[i] = ix;
                }
                mors.push(MorData {
                    name: format!("t{ix}"),
                    src: i,
                    tgt: j,
                });
                transformations.push(t);
            }
        }
    }
    let n = transformations.len();
    let mut table = vec![None; n * n];
    for (gi, g) in transformations.iter().enumerate() {
        for (fi, f) in transformations.iter().enumerate() {
            if mors[fi].tgt != mors[gi].src {
                continue;
            }
            let comp = f.then(g).expect("composable transformations");
            let key = (mors[fi].src, mors[gi].tgt, comp.components().to_vec());
            table[gi * n + fi] = Some(by_key[&key]);
        }
    }
    let cat = Arc::new(FinCat::from_parts(
        (0..functors.len()).map(|i| format!("F{i}")).collect(),
        mors,
        identities,
        table,
    )?);
    Ok(FunctorCategory {
        cat,
        functors,
        transformations,
    })
}

/// Brute-force functor count used as an independent oracle in tests: build
/// every object map and every raw morphism map, filter by functoriality.
pub fn count_functors_brute(a: &FinCat, x: &FinCat, cap: usize) -> Result<usize> {
    let n_obj = a.n_objects();
    if n_obj > 0 && x.n_objects() == 0 {
        return Ok(0);
    }
    let mut count = 0usize;
    let mut object_map = vec![0usize; n_obj.max(1)];
    if n_obj == 0 {
        object_map.clear();
    }
    loop {
        count += count_morphism_maps(a, x, &object_map, cap)?;
        if count > cap {
            return Err(Error::SizeGuardExceeded("brute-force functor count".into()));
        }
        let mut k = object_map.len();
        loop {
            if k == 0 {
                return Ok(count);
            }
            k -= 1;
            object_map[k] += 1;
            if object_map[k] < x.n_objects() {
                break;
            }
            object_map[k] = 0;
        }
    }
}

fn count_morphism_maps(a: &FinCat, x: &FinCat, object_map: &[usize], cap: usize) -> Result<usize> {
    let n = a.n_morphisms();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|m| {
            let d = a.morphism(m);
            x.hom(object_map[d.src], object_map[d.tgt])
        })
        .collect();
    let mut mm = vec![0usize; n];
    let mut idx = vec![0usize; n];
    let mut count = 0usize;
    if candidates.iter().any(|c| c.is_empty()) && n > 0 {
        return Ok(0);
    }
    if n == 0 {
        return Ok(1);
    }
    'outer: loop {
        for m in 0..n {
            mm[m] = candidates[m][idx[m]];
        }
        // Full functoriality check, no pruning.
        let mut ok = true;
        for o in 0..a.n_objects() {
            if mm[a.identity(o)] != x.identity(object_map[o]) {
                ok = false;
                break;
            }
        }
        if ok {
            'pairs: for g in 0..n {
                for f in 0..n {
                    if let Some(gf) = a.compose(g, f) {
                        if x.compose(mm[g], mm[f]) != Some(mm[gf]) {
                            ok = false;
                            break 'pairs;
                        }
                    }
                }
            }
        }
        if ok {
            count += 1;
            if count > cap {
                return Err(Error::SizeGuardExceeded("brute-force morphism maps".into()));
            }
        }
        let mut k = n;
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < candidates[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
    Ok(count)
}
