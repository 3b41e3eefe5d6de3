//! Finite sets and total functions, with the colimit and exponential
//! constructions that coends and ends are computed from: tagged coproducts,
//! cartesian products, coequalizers (by union-find) and full function
//! spaces.
//!
//! A [`FinSet`] stores its labels sorted lexicographically, so two equal
//! sets always serialize identically. Quotient classes are named by their
//! lexicographically least member.

use crate::error::{Error, Result};
use crate::label::{join_labels, pair_label, tagged_label};

/// A finite set of distinct textual labels, kept in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinSet {
    elements: Vec<String>,
}

impl FinSet {
    pub fn new(mut elements: Vec<String>) -> Result<FinSet> {
        elements.sort();
        for w in elements.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateLabel(w[0].clone()));
            }
        }
        Ok(FinSet { elements })
    }

    pub fn empty() -> FinSet {
        FinSet { elements: Vec::new() }
    }

    pub fn singleton(label: impl Into<String>) -> FinSet {
        FinSet { elements: vec![label.into()] }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.elements.iter().map(|s| s.as_str())
    }

    pub fn label(&self, ix: usize) -> &str {
        &self.elements[ix]
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index_of(label).is_some()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_str().cmp(label)).ok()
    }
}

/// A total function between finite sets, stored as image indices aligned
/// with the domain's sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFn {
    dom: FinSet,
    cod: FinSet,
    map: Vec<usize>,
}

impl FinFn {
    /// Build from `(element, image)` label pairs; the pairs must cover the
    /// domain exactly and land in the codomain.
    pub fn new(dom: FinSet, cod: FinSet, pairs: &[(String, String)]) -> Result<FinFn> {
        let mut map = vec![usize::MAX; dom.len()];
        for (x, y) in pairs {
            let i = dom
                .index_of(x)
                .ok_or_else(|| Error::InvalidStructure(format!("`{x}` not in domain")))?;
            let j = cod
                .index_of(y)
                .ok_or_else(|| Error::InvalidStructure(format!("`{y}` not in codomain")))?;
            if map[i] != usize::MAX {
                return Err(Error::InvalidStructure(format!("`{x}` mapped twice")));
            }
            map[i] = j;
        }
        if let Some(i) = map.iter().position(|&j| j == usize::MAX) {
            return Err(Error::InvalidStructure(format!(
                "no image for `{}`",
                dom.label(i)
            )));
        }
        Ok(FinFn { dom, cod, map })
    }

    /// Build by evaluating `f` on each domain label.
    pub fn from_fn(dom: FinSet, cod: FinSet, f: impl Fn(&str) -> String) -> Result<FinFn> {
        let mut map = Vec::with_capacity(dom.len());
        for x in dom.iter() {
            let y = f(x);
            let j = cod
                .index_of(&y)
                .ok_or_else(|| Error::InvalidStructure(format!("image `{y}` of `{x}` not in codomain")))?;
            map.push(j);
        }
        Ok(FinFn { dom, cod, map })
    }

    /// Build from an index function; the caller guarantees bounds.
    pub fn from_index_fn(dom: FinSet, cod: FinSet, f: impl Fn(usize) -> usize) -> FinFn {
        let map = (0..dom.len())
            .map(|i| {
                let j = f(i);
                assert!(j < cod.len(), "image index out of range");
                j
            })
            .collect();
        FinFn { dom, cod, map }
    }

    pub fn identity(s: &FinSet) -> FinFn {
        FinFn {
            dom: s.clone(),
            cod: s.clone(),
            map: (0..s.len()).collect(),
        }
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn apply_ix(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn apply(&self, label: &str) -> Option<&str> {
        self.dom.index_of(label).map(|i| self.cod.label(self.map[i]))
    }

    pub fn graph(&self) -> impl Iterator<Item = (&str, &str)> {
        self.map
            .iter()
            .enumerate()
            .map(|(i, &j)| (self.dom.label(i), self.cod.label(j)))
    }

    /// `g ∘ f` where `self` is applied first.
    pub fn then(&self, g: &FinFn) -> Result<FinFn> {
        if self.cod != g.dom {
            return Err(Error::MismatchedBoundaries(
                "composing functions whose codomain and domain differ".into(),
            ));
        }
        Ok(FinFn {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            map: self.map.iter().map(|&i| g.map[i]).collect(),
        })
    }

    pub fn is_bijection(&self) -> bool {
        if self.dom.len() != self.cod.len() {
            return false;
        }
        let mut seen = vec![false; self.cod.len()];
        for &j in &self.map {
            if seen[j] {
                return false;
            }
            seen[j] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        for &j in &self.map {
            seen[j] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn inverse(&self) -> Option<FinFn> {
        if !self.is_bijection() {
            return None;
        }
        let mut inv = vec![0usize; self.dom.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Some(FinFn {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            map: inv,
        })
    }

    /// Canonical label of this function as an element of a function space:
    /// the image labels in domain order, joined as a tuple.
    pub fn function_label(&self) -> String {
        join_labels(self.map.iter().map(|&j| self.cod.label(j)))
    }
}

/// Disjoint union; element labels are `tag.element`.
pub fn tagged_coproduct(parts: &[(&str, &FinSet)]) -> Result<FinSet> {
    for (i, (tag, _)) in parts.iter().enumerate() {
        if parts[..i].iter().any(|(t, _)| t == tag) {
            return Err(Error::DuplicateTag((*tag).into()));
        }
    }
    let mut labels = Vec::new();
    for (tag, set) in parts {
        for e in set.iter() {
            labels.push(tagged_label(tag, e));
        }
    }
    FinSet::new(labels)
}

/// Cartesian product; element labels are the pair labels of the factors.
pub fn cartesian_product(s: &FinSet, t: &FinSet) -> FinSet {
    let mut labels = Vec::with_capacity(s.len() * t.len());
    for a in s.iter() {
        for b in t.iter() {
            labels.push(pair_label(a, b));
        }
    }
    FinSet::new(labels).expect("pair encoding is injective")
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            self.parent[ri] = rj;
        }
    }
}

/// Coequalizer of a parallel pair: the quotient of the codomain by the
/// equivalence relation generated by `f(x) ~ g(x)`, together with the
/// projection. Classes are named by their least member.
pub fn coequalizer(f: &FinFn, g: &FinFn) -> Result<(FinSet, FinFn)> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::MismatchedBoundaries(
            "coequalizer needs a parallel pair".into(),
        ));
    }
    quotient_by_pairs(&f.cod, f.map.iter().copied().zip(g.map.iter().copied()))
}

/// Quotient of `set` by the equivalence relation generated by the given
/// index pairs. Returns the quotient set and the projection.
pub fn quotient_by_pairs(
    set: &FinSet,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Result<(FinSet, FinFn)> {
    let n = set.len();
    let mut uf = UnionFind::new(n);
    for (i, j) in pairs {
        uf.union(i, j);
    }
    // Least member of each class names the class; since elements are
    // sorted, the least index is the least label.
    let mut least = vec![usize::MAX; n];
    for i in 0..n {
        let r = uf.find(i);
        if least[r] == usize::MAX {
            least[r] = i;
        }
    }
    let mut class_labels = Vec::new();
    for i in 0..n {
        let r = uf.find(i);
        if least[r] == i {
            class_labels.push(set.label(i).to_string());
        }
    }
    let quotient = FinSet::new(class_labels)?;
    let mut proj = Vec::with_capacity(n);
    for i in 0..n {
        let r = uf.find(i);
        let class_ix = quotient
            .index_of(set.label(least[r]))
            .expect("class label present");
        proj.push(class_ix);
    }
    Ok((
        quotient.clone(),
        FinFn {
            dom: set.clone(),
            cod: quotient,
            map: proj,
        },
    ))
}

/// All total functions `s -> t` in lexicographic order of their image
/// tuples.
pub fn enumerate_functions(s: &FinSet, t: &FinSet) -> Vec<FinFn> {
    let n = s.len();
    if n == 0 {
        return vec![FinFn {
            dom: s.clone(),
            cod: t.clone(),
            map: Vec::new(),
        }];
    }
    if t.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    loop {
        out.push(FinFn {
            dom: s.clone(),
            cod: t.clone(),
            map: map.clone(),
        });
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            map[k] += 1;
            if map[k] < t.len() {
                break;
            }
            map[k] = 0;
        }
    }
}

/// The set of all total functions `s -> t`; one label per function as in
/// [`FinFn::function_label`].
pub fn function_space(s: &FinSet, t: &FinSet) -> FinSet {
    FinSet::new(
        enumerate_functions(s, t)
            .iter()
            .map(FinFn::function_label)
            .collect(),
    )
    .expect("function labels are distinct per image tuple")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[&str]) -> FinSet {
        FinSet::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn tagged_coproduct_drops_empty_summands() {
        let s = tagged_coproduct(&[("x", &set(&["a"])), ("y", &FinSet::empty())]).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec!["x.a"]);
    }

    #[test]
    fn tagged_coproduct_counts_and_tags() {
        let s = tagged_coproduct(&[("x", &set(&["a", "b"])), ("y", &set(&["a"]))]).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.contains("x.a") && s.contains("x.b") && s.contains("y.a"));
    }

    #[test]
    fn empty_coproduct_is_initial() {
        assert!(tagged_coproduct(&[]).unwrap().is_empty());
    }

    #[test]
    fn duplicate_tag_rejected() {
        let e = tagged_coproduct(&[("x", &set(&["a"])), ("x", &set(&["b"]))]).unwrap_err();
        assert_eq!(e, Error::DuplicateTag("x".into()));
    }

    #[test]
    fn products_scale_cardinality() {
        assert_eq!(cartesian_product(&set(&["a"]), &set(&["p", "q"])).len(), 2);
        assert!(cartesian_product(&FinSet::empty(), &set(&["p"])).is_empty());
        assert_eq!(cartesian_product(&set(&["a", "b"]), &set(&["p", "q"])).len(), 4);
    }

    #[test]
    fn coequalizer_of_identity_pair_is_identity() {
        let s = set(&["a", "b"]);
        let id = FinFn::identity(&s);
        let (q, proj) = coequalizer(&id, &id).unwrap();
        assert_eq!(q, s);
        assert!(proj.is_bijection());
    }

    #[test]
    fn coequalizer_collapses_forced_pair() {
        let x = set(&["x"]);
        let ab = set(&["a", "b"]);
        let f = FinFn::new(x.clone(), ab.clone(), &[("x".into(), "a".into())]).unwrap();
        let g = FinFn::new(x, ab, &[("x".into(), "b".into())]).unwrap();
        let (q, proj) = coequalizer(&f, &g).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q.label(0), "a"); // least member names the class
        assert!(proj.is_surjective());
    }

    #[test]
    fn coequalizer_closes_transitively() {
        let xy = set(&["x", "y"]);
        let abc = set(&["a", "b", "c"]);
        let f = FinFn::new(
            xy.clone(),
            abc.clone(),
            &[("x".into(), "a".into()), ("y".into(), "b".into())],
        )
        .unwrap();
        let g = FinFn::new(
            xy,
            abc,
            &[("x".into(), "b".into()), ("y".into(), "c".into())],
        )
        .unwrap();
        let (q, proj) = coequalizer(&f, &g).unwrap();
        assert_eq!(q.len(), 1);
        let pf = f.then(&proj).unwrap();
        let pg = g.then(&proj).unwrap();
        assert_eq!(pf, pg);
    }

    #[test]
    fn coequalizer_rejects_mismatched_pair() {
        let f = FinFn::identity(&set(&["a"]));
        let g = FinFn::identity(&set(&["b"]));
        assert!(matches!(
            coequalizer(&f, &g),
            Err(Error::MismatchedBoundaries(_))
        ));
    }

    #[test]
    fn function_space_cardinalities() {
        assert_eq!(function_space(&FinSet::empty(), &set(&["p", "q"])).len(), 1);
        assert_eq!(function_space(&set(&["a"]), &set(&["p", "q"])).len(), 2);
        assert_eq!(function_space(&set(&["a", "b"]), &set(&["p"])).len(), 1);
        assert!(function_space(&set(&["a"]), &FinSet::empty()).is_empty());
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(FinSet::new(vec!["a".into(), "a".into()]).is_err());
    }
}
