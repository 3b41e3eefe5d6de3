//! Shared helpers and independent oracles for the integration suites.
//! Oracles here must not call the construction they check.

use std::collections::HashMap;
use std::sync::Arc;

use catkit_core::fincat::{standard, FinCat, Functor};
use catkit_core::profmod::{Module, ModuleComposite};

pub fn arc(c: FinCat) -> Arc<FinCat> {
    Arc::new(c)
}

/// The functor `1 → c` picking the object labelled `at`.
pub fn point(c: &Arc<FinCat>, at: &str) -> Functor {
    let one = arc(standard::terminal());
    let obj = c.find_object(at).expect("object exists");
    Functor::new(one, c.clone(), vec![obj], vec![c.identity(obj)]).unwrap()
}

/// The unique functor `c → 1`.
pub fn collapse(c: &Arc<FinCat>) -> Functor {
    let one = arc(standard::terminal());
    Functor::new(
        c.clone(),
        one,
        vec![0; c.n_objects()],
        vec![0; c.n_morphisms()],
    )
    .unwrap()
}

/// Independent coend oracle: build all `(b, m, n)` pairs of a composite
/// component, then close the action relations by repeated label
/// propagation (no union-find), and return the partition sizes.
///
/// Returns, per component `(c, a)` in row-major order, the map from pair
/// to class id plus the number of classes.
pub fn coend_oracle(m: &Module, n: &Module) -> Vec<(HashMap<(usize, usize, usize), usize>, usize)> {
    let b_cat = m.target().clone();
    let (na, nb, nc) = (
        m.source().n_objects(),
        b_cat.n_objects(),
        n.target().n_objects(),
    );
    let mut out = Vec::new();
    for c in 0..nc {
        for a in 0..na {
            let mut nodes: Vec<(usize, usize, usize)> = Vec::new();
            for b in 0..nb {
                for mi in 0..m.component(b, a).len() {
                    for ni in 0..n.component(c, b).len() {
                        nodes.push((b, mi, ni));
                    }
                }
            }
            let index: HashMap<_, _> = nodes
                .iter()
                .enumerate()
                .map(|(i, &t)| (t, i))
                .collect();
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for beta in 0..b_cat.n_morphisms() {
                let d = b_cat.morphism(beta);
                for mi2 in 0..m.component(d.tgt, a).len() {
                    for ni in 0..n.component(c, d.src).len() {
                        let left = index[&(d.src, m.act_left_fn(beta, a).apply_ix(mi2), ni)];
                        let right = index[&(d.tgt, mi2, n.act_right_fn(beta, c).apply_ix(ni))];
                        edges.push((left, right));
                    }
                }
            }
            // Label propagation to a fixed point.
            let mut label: Vec<usize> = (0..nodes.len()).collect();
            loop {
                let mut changed = false;
                for &(u, v) in &edges {
                    let l = label[u].min(label[v]);
                    if label[u] != l {
                        label[u] = l;
                        changed = true;
                    }
                    if label[v] != l {
                        label[v] = l;
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
            let mut classes: Vec<usize> = label.clone();
            classes.sort_unstable();
            classes.dedup();
            let class_map: HashMap<_, _> = nodes
                .iter()
                .enumerate()
                .map(|(i, &t)| (t, classes.binary_search(&label[i]).unwrap()))
                .collect();
            out.push((class_map, classes.len()));
        }
    }
    out
}

/// Assert the composite agrees with the oracle: same class counts and the
/// same identifications of pairs.
pub fn assert_composite_matches_oracle(m: &Module, n: &Module, comp: &ModuleComposite) {
    let oracle = coend_oracle(m, n);
    let na = m.source().n_objects();
    let nc = n.target().n_objects();
    for c in 0..nc {
        for a in 0..na {
            let (class_map, count) = &oracle[c * na + a];
            assert_eq!(
                comp.module.component(c, a).len(),
                *count,
                "class count differs at ({c}, {a})"
            );
            // Identifications agree pairwise.
            let pairs: Vec<_> = class_map.keys().copied().collect();
            for &p1 in &pairs {
                for &p2 in &pairs {
                    let same_oracle = class_map[&p1] == class_map[&p2];
                    let same_impl = comp.class_of(c, a, p1.0, p1.1, p1.2)
                        == comp.class_of(c, a, p2.0, p2.1, p2.2);
                    assert_eq!(same_oracle, same_impl, "partition differs at ({c}, {a})");
                }
            }
        }
    }
}
