//! Seeded random generation of small categories, functors, modules,
//! triangles, squares and sketches for the property suites and the CLI's
//! `generate` subcommand.
//!
//! Distributions: object counts are uniform on 0–3; category styles are
//! discrete (20%), a random preorder closed reflexively and transitively
//! (50%), or a preorder enriched with up to two extra arrows whose
//! composition table is rejection-sampled to a valid one, falling back to
//! the plain preorder after 300 failures (30%). Preorder edges appear
//! with probability 0.35. Modules are random colimits of representables:
//! 0–2 generators uniform, 0–2 congruence identifications, then further
//! identifications until every component has at most 3 elements. Functors
//! and transformations are uniform over their full enumerations.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fincat::{
    compose_functors, enumerate_functors, enumerate_nat_trans, standard, validate_category, FinCat,
    Functor, MorData, NatTrans,
};
use crate::finset::{FinFn, FinSet};
use crate::guard::SizeGuard;
use crate::kan::{construct_pointwise_ran, Triangle};
use crate::profmod::Module;

pub struct Generator {
    rng: ChaCha8Rng,
    pub guard: SizeGuard,
}

impl Generator {
    pub fn new(seed: u64) -> Generator {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            guard: SizeGuard::default(),
        }
    }

    pub fn with_guard(seed: u64, guard: SizeGuard) -> Generator {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            guard,
        }
    }

    fn preorder(&mut self, n: usize) -> FinCat {
        let mut rel = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && self.rng.gen_bool(0.35) {
                    rel[i][j] = true;
                }
            }
        }
        standard::from_preorder(n, rel)
    }

    /// A preorder with up to two extra arrows and a rejection-sampled
    /// composition table.
    fn enriched(&mut self, n: usize) -> FinCat {
        let base = self.preorder(n);
        if n == 0 {
            return base;
        }
        let extras = self.rng.gen_range(1..=2usize);
        let mut morphisms: Vec<(String, usize, usize)> = base
            .morphisms()
            .map(|d| (d.name.clone(), d.src, d.tgt))
            .collect();
        for e in 0..extras {
            let src = self.rng.gen_range(0..n);
            let tgt = self.rng.gen_range(0..n);
            // Respect the hom-size bound of 2.
            let count = morphisms.iter().filter(|m| m.1 == src && m.2 == tgt).count();
            if count >= 2 {
                continue;
            }
            morphisms.push((format!("m{e}"), src, tgt));
        }
        if morphisms.len() == base.n_morphisms() {
            return base;
        }
        'attempt: for _ in 0..300 {
            let mors: Vec<MorData> = morphisms
                .iter()
                .map(|(name, src, tgt)| MorData {
                    name: name.clone(),
                    src: *src,
                    tgt: *tgt,
                })
                .collect();
            let nm = mors.len();
            let mut table = vec![None; nm * nm];
            for g in 0..nm {
                for f in 0..nm {
                    if mors[f].tgt != mors[g].src {
                        continue;
                    }
                    let candidates: Vec<usize> = (0..nm)
                        .filter(|&c| mors[c].src == mors[f].src && mors[c].tgt == mors[g].tgt)
                        .collect();
                    if candidates.is_empty() {
                        continue 'attempt;
                    }
                    let pick = candidates[self.rng.gen_range(0..candidates.len())];
                    table[g * nm + f] = Some(pick);
                }
            }
            let identities = (0..n)
                .map(|o| {
                    base.morphisms()
                        .position(|d| d.src == o && d.tgt == o)
                        .expect("preorders are reflexive")
                })
                .collect();
            if let Ok(cat) = FinCat::from_parts(
                base.objects().map(String::from).collect(),
                mors,
                identities,
                table,
            ) {
                if validate_category(&cat).is_holds() {
                    return cat;
                }
            }
        }
        base
    }

    /// A random small category.
    pub fn category(&mut self) -> Arc<FinCat> {
        let n = self.rng.gen_range(0..=3usize);
        let style = self.rng.gen_range(0..10u32);
        let cat = match style {
            0..=1 => standard::discrete(n),
            2..=6 => self.preorder(n),
            _ => self.enriched(n),
        };
        Arc::new(cat)
    }

    /// A random category with at least one object.
    pub fn nonempty_category(&mut self) -> Arc<FinCat> {
        loop {
            let c = self.category();
            if c.n_objects() > 0 {
                return c;
            }
        }
    }

    /// A random thin category (a preorder); these have enough limits to
    /// make extension constructions frequently succeed.
    pub fn thin_category(&mut self) -> Arc<FinCat> {
        let n = self.rng.gen_range(0..=3usize);
        Arc::new(self.preorder(n))
    }

    pub fn thin_nonempty_category(&mut self) -> Arc<FinCat> {
        loop {
            let c = self.thin_category();
            if c.n_objects() > 0 {
                return c;
            }
        }
    }

    /// A uniformly random functor, or `None` when there are none.
    pub fn functor(&mut self, a: &Arc<FinCat>, x: &Arc<FinCat>) -> Option<Functor> {
        let all = enumerate_functors(a, x, &self.guard).ok()?;
        if all.is_empty() {
            return None;
        }
        let ix = self.rng.gen_range(0..all.len());
        Some(all[ix].clone())
    }

    /// A uniformly random natural transformation, or `None`.
    pub fn nat_trans(&mut self, f: &Functor, g: &Functor) -> Option<NatTrans> {
        let all = enumerate_nat_trans(f, g, &self.guard).ok()?;
        if all.is_empty() {
            return None;
        }
        let ix = self.rng.gen_range(0..all.len());
        Some(all[ix].clone())
    }

    /// A random module `a ⇸ b` as a quotient of a coproduct of
    /// representables, with every component cut down to at most 3
    /// elements. Element labels are globally distinct.
    pub fn module(&mut self, a: &Arc<FinCat>, b: &Arc<FinCat>) -> Module {
        let n_gen = self.rng.gen_range(0..=2usize);
        let gens: Vec<(usize, usize)> = (0..n_gen)
            .filter_map(|_| {
                if b.n_objects() == 0 || a.n_objects() == 0 {
                    None
                } else {
                    Some((
                        self.rng.gen_range(0..b.n_objects()),
                        self.rng.gen_range(0..a.n_objects()),
                    ))
                }
            })
            .collect();
        let free = FreeModule::new(a, b, &gens);
        // Random identifications within components.
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let n_idents = self.rng.gen_range(0..=2usize);
        for _ in 0..n_idents {
            if let Some((u, v)) = free.random_pair(&mut self.rng) {
                pairs.push((u, v));
            }
        }
        loop {
            let quotient = free.quotient(a, b, &pairs);
            match quotient.oversized_component(3) {
                None => return quotient.into_module(a, b),
                Some((u, v)) => pairs.push((u, v)),
            }
        }
    }

    /// A random triangle, mixing honest extensions, honest extensions
    /// with a broken `r`, and fully random data. Returns `None` when the
    /// sampled shape admits no triangle at all.
    pub fn triangle(&mut self) -> Option<Triangle> {
        let a = self.thin_category();
        let b = self.thin_nonempty_category();
        let x = self.thin_nonempty_category();
        let j = self.functor(&a, &b)?;
        let f = self.functor(&a, &x)?;
        let mode = self.rng.gen_range(0..3u32);
        if mode == 0 {
            if let Ok(t) = construct_pointwise_ran(&j, &f) {
                return Some(t);
            }
        }
        let r = self.functor(&b, &x)?;
        let rj = compose_functors(&r, &j).ok()?;
        let rho = self.nat_trans(&rj, &f)?;
        Triangle::new(j, f, r, rho).ok()
    }

    /// A random cospan `(b : U → B, j : A → B)` over a common target.
    pub fn cospan(&mut self) -> Option<(Functor, Functor)> {
        let b_cat = self.nonempty_category();
        let u_cat = self.category();
        let a_cat = self.category();
        Some((self.functor(&u_cat, &b_cat)?, self.functor(&a_cat, &b_cat)?))
    }

    /// A random span `(q : S → A, p : S → U)` under a common source.
    pub fn span(&mut self) -> Option<(Functor, Functor)> {
        let s_cat = self.category();
        let a_cat = self.nonempty_category();
        let u_cat = self.nonempty_category();
        Some((self.functor(&s_cat, &a_cat)?, self.functor(&s_cat, &u_cat)?))
    }
}

/// The coproduct of representables on `(b0, a0)` pairs: the component at
/// `(b, a)` is `⊔_g B(b, b0_g) × A(a0_g, a)`.
struct FreeModule {
    /// Elements as `(generator, B-morphism, A-morphism)`, globally
    /// indexed.
    elems: Vec<(usize, usize, usize)>,
    /// Component of each element.
    comp_of: Vec<(usize, usize)>,
    /// Lookup from `(g, bm, am)` to the global index.
    index: std::collections::HashMap<(usize, usize, usize), usize>,
}

impl FreeModule {
    fn new(a: &Arc<FinCat>, b: &Arc<FinCat>, gens: &[(usize, usize)]) -> FreeModule {
        let mut elems = Vec::new();
        let mut comp_of = Vec::new();
        let mut index = std::collections::HashMap::new();
        for (g, &(b0, a0)) in gens.iter().enumerate() {
            for bm in 0..b.n_morphisms() {
                if b.morphism(bm).tgt != b0 {
                    continue;
                }
                for am in 0..a.n_morphisms() {
                    if a.morphism(am).src != a0 {
                        continue;
                    }
                    index.insert((g, bm, am), elems.len());
                    comp_of.push((b.morphism(bm).src, a.morphism(am).tgt));
                    elems.push((g, bm, am));
                }
            }
        }
        FreeModule {
            elems,
            comp_of,
            index,
        }
    }

    fn random_pair(&self, rng: &mut ChaCha8Rng) -> Option<(usize, usize)> {
        if self.elems.is_empty() {
            return None;
        }
        let u = rng.gen_range(0..self.elems.len());
        let candidates: Vec<usize> = (0..self.elems.len())
            .filter(|&v| self.comp_of[v] == self.comp_of[u])
            .collect();
        let v = candidates[rng.gen_range(0..candidates.len())];
        Some((u, v))
    }

    /// Act on an element: `β · (g, bm, am) = (g, bm∘β, am)` and
    /// `(g, bm, am) · α = (g, bm, α∘am)`.
    fn act_left(&self, b: &FinCat, beta: usize, e: usize) -> usize {
        let (g, bm, am) = self.elems[e];
        let bm2 = b.compose(bm, beta).expect("valid table");
        self.index[&(g, bm2, am)]
    }

    fn act_right(&self, a: &FinCat, alpha: usize, e: usize) -> usize {
        let (g, bm, am) = self.elems[e];
        let am2 = a.compose(alpha, am).expect("valid table");
        self.index[&(g, bm, am2)]
    }

    /// Close the pairs into a congruence and form the quotient data.
    fn quotient(&self, a: &Arc<FinCat>, b: &Arc<FinCat>, pairs: &[(usize, usize)]) -> Quotient {
        let n = self.elems.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        let mut queue: Vec<(usize, usize)> = pairs.to_vec();
        while let Some((u, v)) = queue.pop() {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                continue;
            }
            parent[ru] = rv;
            // Propagate along every action applicable to the component.
            let (bu, au) = self.comp_of[u];
            for beta in 0..b.n_morphisms() {
                if b.morphism(beta).tgt == bu {
                    queue.push((self.act_left(b, beta, u), self.act_left(b, beta, v)));
                }
            }
            for alpha in 0..a.n_morphisms() {
                if a.morphism(alpha).src == au {
                    queue.push((self.act_right(a, alpha, u), self.act_right(a, alpha, v)));
                }
            }
        }
        let mut class_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            if class_of[r] == usize::MAX {
                class_of[r] = reps.len();
                reps.push(r);
            }
            class_of[i] = class_of[r];
        }
        Quotient {
            free_comp_of: self.comp_of.clone(),
            free_act: FreeActs {
                elems: self.elems.clone(),
                index: self.index.clone(),
            },
            class_of,
            reps,
        }
    }
}

struct FreeActs {
    elems: Vec<(usize, usize, usize)>,
    index: std::collections::HashMap<(usize, usize, usize), usize>,
}

struct Quotient {
    free_comp_of: Vec<(usize, usize)>,
    free_act: FreeActs,
    class_of: Vec<usize>,
    reps: Vec<usize>,
}

impl Quotient {
    /// A pair of representatives from the first component with more than
    /// `cap` classes, to merge next.
    fn oversized_component(&self, cap: usize) -> Option<(usize, usize)> {
        use std::collections::HashMap;
        let mut by_comp: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (c, &rep) in self.reps.iter().enumerate() {
            by_comp.entry(self.free_comp_of[rep]).or_default().push(c);
        }
        let mut comps: Vec<_> = by_comp.into_iter().collect();
        comps.sort();
        for (_, classes) in comps {
            if classes.len() > cap {
                return Some((self.reps[classes[0]], self.reps[classes[1]]));
            }
        }
        None
    }

    fn into_module(self, a: &Arc<FinCat>, b: &Arc<FinCat>) -> Module {
        let (na, nb) = (a.n_objects(), b.n_objects());
        // Classes per component, in representative order; labels are
        // globally unique.
        let mut classes_at: Vec<Vec<usize>> = vec![Vec::new(); na * nb];
        for (c, &rep) in self.reps.iter().enumerate() {
            let (bo, ao) = self.free_comp_of[rep];
            classes_at[bo * na + ao].push(c);
        }
        let mut label_of = vec![String::new(); self.reps.len()];
        let mut counter = 0usize;
        let mut components = Vec::with_capacity(na * nb);
        for slot in &classes_at {
            let mut labels = Vec::with_capacity(slot.len());
            for &c in slot {
                let l = format!("e{counter}");
                counter += 1;
                label_of[c] = l.clone();
                labels.push(l);
            }
            components.push(FinSet::new(labels).expect("fresh labels"));
        }
        let comp = |bo: usize, ao: usize| &components[bo * na + ao];
        let class_of_label: std::collections::HashMap<String, usize> = label_of
            .iter()
            .enumerate()
            .map(|(c, l)| (l.clone(), c))
            .collect();
        let free = &self.free_act;

        let mut act_left = Vec::with_capacity(b.n_morphisms() * na);
        for beta in 0..b.n_morphisms() {
            let d = b.morphism(beta);
            for ao in 0..na {
                let dom = comp(d.tgt, ao).clone();
                let cod = comp(d.src, ao).clone();
                let f = FinFn::from_fn(dom, cod, |lbl| {
                    let rep = self.reps[class_of_label[lbl]];
                    let (g, bm, am) = free.elems[rep];
                    let e2 = free.index[&(g, b.compose(bm, beta).expect("valid"), am)];
                    label_of[self.class_of[e2]].clone()
                })
                .expect("congruence descends");
                act_left.push(f);
            }
        }
        let mut act_right = Vec::with_capacity(a.n_morphisms() * nb);
        for alpha in 0..a.n_morphisms() {
            let d = a.morphism(alpha);
            for bo in 0..nb {
                let dom = comp(bo, d.src).clone();
                let cod = comp(bo, d.tgt).clone();
                let f = FinFn::from_fn(dom, cod, |lbl| {
                    let rep = self.reps[class_of_label[lbl]];
                    let (g, bm, am) = free.elems[rep];
                    let e2 = free.index[&(g, bm, a.compose(alpha, am).expect("valid"))];
                    label_of[self.class_of[e2]].clone()
                })
                .expect("congruence descends");
                act_right.push(f);
            }
        }
        Module::new(a.clone(), b.clone(), components, act_left, act_right)
            .expect("quotients of free modules are modules")
    }
}
