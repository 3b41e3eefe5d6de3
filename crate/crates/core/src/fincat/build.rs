//! Derived categories: opposites, products, full subcategories, comma
//! categories, and a few standard small categories used throughout tests
//! and fixtures.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::label::{join_labels, pair_label};

use super::cat::{FinCat, MorData};
use super::functor::{same_category, Functor};
use super::nat::NatTrans;

/// Source and target swapped, composition transposed. Involutive on the
/// nose: labels and orders are preserved.
pub fn opposite_category(c: &FinCat) -> FinCat {
    let n = c.n_morphisms();
    let morphisms = c
        .morphisms()
        .map(|m| MorData {
            name: m.name.clone(),
            src: m.tgt,
            tgt: m.src,
        })
        .collect();
    let mut table = vec![None; n * n];
    for g in 0..n {
        for f in 0..n {
            table[g * n + f] = c.compose(f, g);
        }
    }
    FinCat::from_parts(
        c.objects().map(String::from).collect(),
        morphisms,
        (0..c.n_objects()).map(|o| c.identity(o)).collect(),
        table,
    )
    .expect("opposite of a well-formed table is well-formed")
}

pub fn opposite_functor(f: &Functor) -> Functor {
    Functor::new(
        Arc::new(opposite_category(f.source())),
        Arc::new(opposite_category(f.target())),
        f.object_map().to_vec(),
        f.morphism_map().to_vec(),
    )
    .expect("opposite functor tables are functorial")
}

/// The same components, read against the opposite functors; reverses the
/// direction of the 2-cell.
pub fn opposite_nat(t: &NatTrans) -> NatTrans {
    NatTrans::new(
        opposite_functor(t.target()),
        opposite_functor(t.source()),
        t.components().to_vec(),
    )
    .expect("opposite transformation is natural")
}

/// Cartesian product category; objects and morphisms are pairs, with
/// componentwise composition.
pub fn product_category(k: &FinCat, a: &FinCat) -> FinCat {
    let objects: Vec<String> = k
        .objects()
        .flat_map(|x| a.objects().map(move |y| pair_label(x, y)))
        .collect();
    let obj_ix = |x: usize, y: usize| x * a.n_objects() + y;
    let mut morphisms = Vec::with_capacity(k.n_morphisms() * a.n_morphisms());
    for m1 in k.morphisms() {
        for m2 in a.morphisms() {
            morphisms.push(MorData {
                name: pair_label(&m1.name, &m2.name),
                src: obj_ix(m1.src, m2.src),
                tgt: obj_ix(m1.tgt, m2.tgt),
            });
        }
    }
    let mor_ix = |x: usize, y: usize| x * a.n_morphisms() + y;
    let identities = (0..k.n_objects())
        .flat_map(|x| (0..a.n_objects()).map(move |y| mor_ix(k.identity(x), a.identity(y))))
        .collect();
    let n = morphisms.len();
    let mut table = vec![None; n * n];
    for g1 in 0..k.n_morphisms() {
        for g2 in 0..a.n_morphisms() {
            for f1 in 0..k.n_morphisms() {
                for f2 in 0..a.n_morphisms() {
                    if let (Some(c1), Some(c2)) = (k.compose(g1, f1), a.compose(g2, f2)) {
                        table[mor_ix(g1, g2) * n + mor_ix(f1, f2)] = Some(mor_ix(c1, c2));
                    }
                }
            }
        }
    }
    FinCat::from_parts(objects, morphisms, identities, table)
        .expect("product of well-formed tables is well-formed")
}

/// `f × g` between the product categories built by [`product_category`].
pub fn product_functor(f: &Functor, g: &Functor) -> Functor {
    let src = Arc::new(product_category(f.source(), g.source()));
    let tgt = Arc::new(product_category(f.target(), g.target()));
    let (gs_o, gt_o) = (g.source().n_objects(), g.target().n_objects());
    let (gs_m, gt_m) = (g.source().n_morphisms(), g.target().n_morphisms());
    let object_map = (0..f.source().n_objects())
        .flat_map(|x| {
            (0..gs_o).map(move |y| (x, y))
        })
        .map(|(x, y)| f.on_object(x) * gt_o + g.on_object(y))
        .collect();
    let morphism_map = (0..f.source().n_morphisms())
        .flat_map(|x| (0..gs_m).map(move |y| (x, y)))
        .map(|(x, y)| f.on_morphism(x) * gt_m + g.on_morphism(y))
        .collect();
    Functor::new(src, tgt, object_map, morphism_map)
        .expect("componentwise maps are functorial")
}

/// Restrict to a subset of objects, keeping every morphism between them.
/// Returns the subcategory and its (fully faithful) inclusion.
pub fn full_subcategory(c: &Arc<FinCat>, objs: &[usize]) -> Result<(Arc<FinCat>, Functor)> {
    for &o in objs {
        if o >= c.n_objects() {
            return Err(Error::UnknownObject(format!("object index {o}")));
        }
    }
    let mut kept = objs.to_vec();
    kept.sort_unstable();
    kept.dedup();
    let obj_back: Vec<usize> = kept.clone();
    let obj_fwd: Vec<Option<usize>> = {
        let mut v = vec![None; c.n_objects()];
        for (new, &old) in kept.iter().enumerate() {
            v[old] = Some(new);
        }
        v
    };
    let mor_back: Vec<usize> = (0..c.n_morphisms())
        .filter(|&m| {
            let d = c.morphism(m);
            obj_fwd[d.src].is_some() && obj_fwd[d.tgt].is_some()
        })
        .collect();
    let mor_fwd: Vec<Option<usize>> = {
        let mut v = vec![None; c.n_morphisms()];
        for (new, &old) in mor_back.iter().enumerate() {
            v[old] = Some(new);
        }
        v
    };
    let morphisms = mor_back
        .iter()
        .map(|&m| {
            let d = c.morphism(m);
            MorData {
                name: d.name.clone(),
                src: obj_fwd[d.src].unwrap(),
                tgt: obj_fwd[d.tgt].unwrap(),
            }
        })
        .collect();
    let identities = obj_back
        .iter()
        .map(|&o| mor_fwd[c.identity(o)].unwrap())
        .collect();
    let n = mor_back.len();
    let mut table = vec![None; n * n];
    for (gi, &g) in mor_back.iter().enumerate() {
        for (fi, &f) in mor_back.iter().enumerate() {
            if let Some(gf) = c.compose(g, f) {
                table[gi * n + fi] = mor_fwd[gf];
            }
        }
    }
    let sub = Arc::new(FinCat::from_parts(
        obj_back.iter().map(|&o| c.object_label(o).to_string()).collect(),
        morphisms,
        identities,
        table,
    )?);
    let inclusion = Functor::new(sub.clone(), c.clone(), obj_back, mor_back)?;
    Ok((sub, inclusion))
}

/// The comma category of `b : U → B` and `j : A → B`, with its two
/// projections and the canonical 2-cell `λ : b∘d0 ⇒ j∘d1`.
pub struct CommaCategory {
    pub cat: Arc<FinCat>,
    pub d0: Functor,
    pub d1: Functor,
    pub lambda: NatTrans,
}

pub fn comma_category(b: &Functor, j: &Functor) -> Result<CommaCategory> {
    if !same_category(b.target(), j.target()) {
        return Err(Error::BoundaryMismatch("comma needs a common target".into()));
    }
    let u = b.source().clone();
    let a = j.source().clone();
    let amb = b.target();

    // Objects: triples (V, β : bV → jX, X), ordered by (V, β, X).
    let mut objs: Vec<(usize, usize, usize)> = Vec::new();
    for v in 0..u.n_objects() {
        for beta in 0..amb.n_morphisms() {
            for x in 0..a.n_objects() {
                let d = amb.morphism(beta);
                if d.src == b.on_object(v) && d.tgt == j.on_object(x) {
                    objs.push((v, beta, x));
                }
            }
        }
    }
    objs.sort_unstable();
    let obj_labels: Vec<String> = objs
        .iter()
        .map(|&(v, beta, x)| {
            join_labels([
                u.object_label(v),
                &amb.morphism(beta).name,
                a.object_label(x),
            ])
        })
        .collect();
    // Morphisms: pairs (υ, α) with jα ∘ β = β' ∘ bυ.
    let mut mors: Vec<(usize, usize, usize, usize)> = Vec::new(); // (src obj, tgt obj, υ, α)
    for (si, &(v, beta, x)) in objs.iter().enumerate() {
        for (ti, &(v2, beta2, x2)) in objs.iter().enumerate() {
            for ups in u.hom(v, v2) {
                for alpha in a.hom(x, x2) {
                    let lhs = amb.compose(j.on_morphism(alpha), beta);
                    let rhs = amb.compose(beta2, b.on_morphism(ups));
                    if lhs.is_some() && lhs == rhs {
                        mors.push((si, ti, ups, alpha));
                    }
                }
            }
        }
    }
    mors.sort_unstable();
    let morphisms: Vec<MorData> = mors
        .iter()
        .map(|&(si, ti, ups, alpha)| {
            let (v, beta, x) = objs[si];
            let (_, beta2, _) = objs[ti];
            // The target leg β' is not determined by (β, υ, α), so it is
            // part of the name.
            MorData {
                name: join_labels([
                    u.object_label(v),
                    &amb.morphism(beta).name,
                    a.object_label(x),
                    &u.morphism(ups).name,
                    &a.morphism(alpha).name,
                    &amb.morphism(beta2).name,
                ]),
                src: si,
                tgt: ti,
            }
        })
        .collect();
    let mor_ix = |t: &(usize, usize, usize, usize)| mors.binary_search(t).unwrap();
    let identities = objs
        .iter()
        .enumerate()
        .map(|(i, &(v, _, x))| mor_ix(&(i, i, u.identity(v), a.identity(x))))
        .collect();
    let n = mors.len();
    let mut table = vec![None; n * n];
    for (gi, &(gs, gt, gu, ga)) in mors.iter().enumerate() {
        for (fi, &(fs, ft, fu, fa)) in mors.iter().enumerate() {
            if ft != gs {
                continue;
            }
            let cu = u.compose(gu, fu).expect("valid table");
            let ca = a.compose(ga, fa).expect("valid table");
            table[gi * n + fi] = Some(mor_ix(&(fs, gt, cu, ca)));
        }
    }
    let cat = Arc::new(FinCat::from_parts(obj_labels, morphisms, identities, table)?);

    let d0 = Functor::new(
        cat.clone(),
        u.clone(),
        objs.iter().map(|&(v, _, _)| v).collect(),
        mors.iter().map(|&(_, _, ups, _)| ups).collect(),
    )?;
    let d1 = Functor::new(
        cat.clone(),
        a.clone(),
        objs.iter().map(|&(_, _, x)| x).collect(),
        mors.iter().map(|&(_, _, _, alpha)| alpha).collect(),
    )?;
    let lambda = NatTrans::new(
        d0.then(b)?,
        d1.then(j)?,
        objs.iter().map(|&(_, beta, _)| beta).collect(),
    )?;
    Ok(CommaCategory { cat, d0, d1, lambda })
}

/// Small standard categories.
pub mod standard {
    use super::*;

    /// Discrete category on `n` objects labelled `0..n`.
    pub fn discrete(n: usize) -> FinCat {
        let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let morphisms: Vec<MorData> = (0..n)
            .map(|i| MorData {
                name: format!("id{i}"),
                src: i,
                tgt: i,
            })
            .collect();
        let mut table = vec![None; n * n];
        for i in 0..n {
            table[i * n + i] = Some(i);
        }
        FinCat::from_parts(objects, morphisms, (0..n).collect(), table).unwrap()
    }

    pub fn empty() -> FinCat {
        discrete(0)
    }

    /// The terminal category `1`.
    pub fn terminal() -> FinCat {
        discrete(1)
    }

    /// The linear order `0 → 1 → … → n-1`; non-identity arrows are named
    /// `a{i}{j}`.
    pub fn chain(n: usize) -> FinCat {
        let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        let mut ix = vec![vec![None; n]; n];
        for i in 0..n {
            for j in i..n {
                let name = if i == j {
                    format!("id{i}")
                } else {
                    format!("a{i}{j}")
                };
                ix[i][j] = Some(morphisms.len());
                morphisms.push(MorData { name, src: i, tgt: j });
            }
        }
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let f = ix[i][j].unwrap();
                    let g = ix[j][k].unwrap();
                    table[g * m + f] = ix[i][k];
                }
            }
        }
        let identities = (0..n).map(|i| ix[i][i].unwrap()).collect();
        FinCat::from_parts(objects, morphisms, identities, table).unwrap()
    }

    /// The walking arrow `2` (the poset `0 ≤ 1`).
    pub fn walking_arrow() -> FinCat {
        chain(2)
    }

    /// Two objects with a pair of mutually inverse arrows between them.
    pub fn iso_pair() -> FinCat {
        FinCat::new(
            vec!["0".into(), "1".into()],
            vec![
                ("id0".into(), "0".into(), "0".into()),
                ("id1".into(), "1".into(), "1".into()),
                ("u".into(), "0".into(), "1".into()),
                ("v".into(), "1".into(), "0".into()),
            ],
            vec![("0".into(), "id0".into()), ("1".into(), "id1".into())],
            vec![
                ("id0".into(), "id0".into(), "id0".into()),
                ("id1".into(), "id1".into(), "id1".into()),
                ("u".into(), "id0".into(), "u".into()),
                ("id1".into(), "u".into(), "u".into()),
                ("v".into(), "id1".into(), "v".into()),
                ("id0".into(), "v".into(), "v".into()),
                ("v".into(), "u".into(), "id0".into()),
                ("u".into(), "v".into(), "id1".into()),
            ],
        )
        .unwrap()
    }

    /// A category from a preorder relation: at most one arrow `i → j`
    /// whenever `rel[i][j]`. The relation must be reflexive; this closes
    /// it transitively.
    pub fn from_preorder(n: usize, mut rel: Vec<Vec<bool>>) -> FinCat {
        for i in 0..n {
            rel[i][i] = true;
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                for j in 0..n {
                    if rel[i][j] {
                        for k in 0..n {
                            if rel[j][k] && !rel[i][k] {
                                rel[i][k] = true;
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        let mut ix = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                if rel[i][j] {
                    let name = if i == j {
                        format!("id{i}")
                    } else {
                        format!("a{i}{j}")
                    };
                    ix[i][j] = Some(morphisms.len());
                    morphisms.push(MorData { name, src: i, tgt: j });
                }
            }
        }
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if let (Some(f), Some(g)) = (ix[i][j], ix[j][k]) {
                        table[g * m + f] = ix[i][k];
                    }
                }
            }
        }
        let identities = (0..n).map(|i| ix[i][i].unwrap()).collect();
        FinCat::from_parts(objects, morphisms, identities, table).unwrap()
    }
}
