//! Composition of modules by coend: per component, the quotient of the
//! tagged coproduct `⊔_b M(b,a) × N(c,b)` by the relations
//! `(M(β) m', n) ~ (m', N(β) n)` for every middle morphism `β`.
//!
//! Composite elements are named `b.m.n` by their least representative
//! pair; the [`ModuleComposite`] keeps the injection and representative
//! tables so callers can chase elements through the quotient.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fincat::same_category;
use crate::finset::{quotient_by_pairs, FinFn, FinSet};
use crate::label::{pair_label, tagged_label};

use super::module::Module;

#[derive(Debug, Clone)]
pub struct ModuleComposite {
    pub module: Module,
    /// Per component `(c, a)`: coproduct element (in construction order)
    /// to class index.
    class_of: Vec<Vec<usize>>,
    /// Per component: coproduct element to its decomposition
    /// `(b, index in M(b,a), index in N(c,b))`.
    decomp: Vec<Vec<(usize, usize, usize)>>,
    /// Per component: class index to the coproduct element naming it.
    rep_elem: Vec<Vec<usize>>,
    /// Per component: decomposition to coproduct element.
    elem_index: Vec<HashMap<(usize, usize, usize), usize>>,
    na: usize,
}

impl ModuleComposite {
    fn comp(&self, c: usize, a: usize) -> usize {
        c * self.na + a
    }

    /// Class of the pair `(m_ix ∈ M(b,a), n_ix ∈ N(c,b))` in component
    /// `(c, a)`.
    pub fn class_of(&self, c: usize, a: usize, b: usize, m_ix: usize, n_ix: usize) -> usize {
        let i = self.comp(c, a);
        self.class_of[i][self.elem_index[i][&(b, m_ix, n_ix)]]
    }

    /// The decomposition of the least member of a class.
    pub fn rep(&self, c: usize, a: usize, class: usize) -> (usize, usize, usize) {
        let i = self.comp(c, a);
        self.decomp[i][self.rep_elem[i][class]]
    }
}

/// The composite `A ⇸ C` of `m : A ⇸ B` then `n : B ⇸ C`.
pub fn compose_modules(m: &Module, n: &Module) -> Result<ModuleComposite> {
    if !same_category(m.target(), n.source()) {
        return Err(Error::BoundaryMismatch(
            "module composition needs a matching middle category".into(),
        ));
    }
    let a_cat = m.source().clone();
    let b_cat = m.target().clone();
    let c_cat = n.target().clone();
    let (na, nb, nc) = (a_cat.n_objects(), b_cat.n_objects(), c_cat.n_objects());

    let mut components = Vec::with_capacity(nc * na);
    let mut class_of_all = Vec::with_capacity(nc * na);
    let mut decomp_all = Vec::with_capacity(nc * na);
    let mut rep_all = Vec::with_capacity(nc * na);
    let mut elem_index_all = Vec::with_capacity(nc * na);

    for c in 0..nc {
        for a in 0..na {
            let mut labels: Vec<String> = Vec::new();
            let mut decomp = Vec::new();
            for b in 0..nb {
                let ms = m.component(b, a);
                let ns = n.component(c, b);
                for mi in 0..ms.len() {
                    for ni in 0..ns.len() {
                        labels.push(tagged_label(
                            b_cat.object_label(b),
                            &pair_label(ms.label(mi), ns.label(ni)),
                        ));
                        decomp.push((b, mi, ni));
                    }
                }
            }
            let mut elem_index = HashMap::new();
            let mut label_index = HashMap::new();
            for (i, (d, l)) in decomp.iter().zip(labels.iter()).enumerate() {
                elem_index.insert(*d, i);
                label_index.insert(l.clone(), i);
            }
            let carrier = FinSet::new(labels.clone())?;
            let to_sorted: Vec<usize> = labels
                .iter()
                .map(|l| carrier.index_of(l).expect("label present"))
                .collect();

            let mut pairs = Vec::new();
            for beta in 0..b_cat.n_morphisms() {
                let d = b_cat.morphism(beta);
                let (b, b2) = (d.src, d.tgt);
                let act_m = m.act_left_fn(beta, a); // M(b2, a) -> M(b, a)
                let act_n = n.act_right_fn(beta, c); // N(c, b) -> N(c, b2)
                for mi2 in 0..m.component(b2, a).len() {
                    for ni in 0..n.component(c, b).len() {
                        let left = elem_index[&(b, act_m.apply_ix(mi2), ni)];
                        let right = elem_index[&(b2, mi2, act_n.apply_ix(ni))];
                        pairs.push((to_sorted[left], to_sorted[right]));
                    }
                }
            }
            let (quotient, proj) = quotient_by_pairs(&carrier, pairs)?;
            let class_of: Vec<usize> = (0..labels.len())
                .map(|i| proj.apply_ix(to_sorted[i]))
                .collect();
            let rep_elem: Vec<usize> = (0..quotient.len())
                .map(|q| label_index[quotient.label(q)])
                .collect();

            components.push(quotient);
            class_of_all.push(class_of);
            decomp_all.push(decomp);
            rep_all.push(rep_elem);
            elem_index_all.push(elem_index);
        }
    }

    let class_ref = |c: usize, a: usize, b: usize, mi: usize, ni: usize| {
        class_of_all[c * na + a][elem_index_all[c * na + a][&(b, mi, ni)]]
    };

    // Induced actions, computed on class representatives; they descend to
    // the quotient because the relations are closed under both actions.
    let mut act_left = Vec::with_capacity(c_cat.n_morphisms() * na);
    for gamma in 0..c_cat.n_morphisms() {
        let d = c_cat.morphism(gamma);
        for a in 0..na {
            let dom = components[d.tgt * na + a].clone();
            let cod = components[d.src * na + a].clone();
            act_left.push(FinFn::from_index_fn(dom, cod, |q| {
                let (b, mi, ni) = decomp_all[d.tgt * na + a][rep_all[d.tgt * na + a][q]];
                class_ref(d.src, a, b, mi, n.act_left_fn(gamma, b).apply_ix(ni))
            }));
        }
    }
    let mut act_right = Vec::with_capacity(a_cat.n_morphisms() * nc);
    for alpha in 0..a_cat.n_morphisms() {
        let d = a_cat.morphism(alpha);
        for c in 0..nc {
            let dom = components[c * na + d.src].clone();
            let cod = components[c * na + d.tgt].clone();
            act_right.push(FinFn::from_index_fn(dom, cod, |q| {
                let (b, mi, ni) = decomp_all[c * na + d.src][rep_all[c * na + d.src][q]];
                class_ref(c, d.tgt, b, m.act_right_fn(alpha, b).apply_ix(mi), ni)
            }));
        }
    }

    let module = Module::new(a_cat, c_cat, components, act_left, act_right)?;
    Ok(ModuleComposite {
        module,
        class_of: class_of_all,
        decomp: decomp_all,
        rep_elem: rep_all,
        elem_index: elem_index_all,
        na,
    })
}
