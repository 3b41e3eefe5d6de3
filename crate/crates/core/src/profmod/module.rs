//! Set-valued two-sided modules between finite categories.
//!
//! A module `M : A ⇸ B` assigns a finite set `M(b, a)` to each pair of a
//! target object `b` and source object `a`, contravariantly functorial in
//! `b` (`act_left`) and covariantly in `a` (`act_right`), with the two
//! actions commuting. Components are stored target-major.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{same_category, FinCat};
use crate::finset::{FinFn, FinSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Module {
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    /// `components[b * nA + a]` is `M(b, a)`.
    components: Vec<FinSet>,
    /// For a target morphism `β : b' → b`, `act_left[β * nA + a]` maps
    /// `M(b, a) → M(b', a)`.
    act_left: Vec<FinFn>,
    /// For a source morphism `α : a → a'`, `act_right[α * nB + b]` maps
    /// `M(b, a) → M(b, a')`.
    act_right: Vec<FinFn>,
}

impl Module {
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        components: Vec<FinSet>,
        act_left: Vec<FinFn>,
        act_right: Vec<FinFn>,
    ) -> Result<Module> {
        let m = Module {
            source,
            target,
            components,
            act_left,
            act_right,
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let (na, nb) = (self.source.n_objects(), self.target.n_objects());
        let (nam, nbm) = (self.source.n_morphisms(), self.target.n_morphisms());
        if self.components.len() != na * nb
            || self.act_left.len() != nbm * na
            || self.act_right.len() != nam * nb
        {
            return Err(Error::InvalidStructure("module tables have wrong length".into()));
        }
        for beta in 0..nbm {
            let d = self.target.morphism(beta);
            for a in 0..na {
                let f = &self.act_left[beta * na + a];
                if f.dom() != self.component(d.tgt, a) || f.cod() != self.component(d.src, a) {
                    return Err(Error::InvalidStructure(format!(
                        "left action along `{}` has wrong boundaries",
                        d.name
                    )));
                }
            }
        }
        for alpha in 0..nam {
            let d = self.source.morphism(alpha);
            for b in 0..nb {
                let f = &self.act_right[alpha * nb + b];
                if f.dom() != self.component(b, d.src) || f.cod() != self.component(b, d.tgt) {
                    return Err(Error::InvalidStructure(format!(
                        "right action along `{}` has wrong boundaries",
                        d.name
                    )));
                }
            }
        }
        // Identities act as identities.
        for b in 0..nb {
            let id = self.target.identity(b);
            for a in 0..na {
                if self.act_left[id * na + a] != FinFn::identity(self.component(b, a)) {
                    return Err(Error::InvalidStructure(
                        "left action breaks an identity".into(),
                    ));
                }
            }
        }
        for a in 0..na {
            let id = self.source.identity(a);
            for b in 0..nb {
                if self.act_right[id * nb + b] != FinFn::identity(self.component(b, a)) {
                    return Err(Error::InvalidStructure(
                        "right action breaks an identity".into(),
                    ));
                }
            }
        }
        // Functoriality. Left action is contravariant: for β2 : b'' → b'
        // and β1 : b' → b, acting along β1∘β2 is acting along β1 then β2.
        for b1 in 0..nbm {
            for b2 in 0..nbm {
                if let Some(c) = self.target.compose(b1, b2) {
                    for a in 0..na {
                        let step = self.act_left[b1 * na + a]
                            .then(&self.act_left[b2 * na + a])?;
                        if step != self.act_left[c * na + a] {
                            return Err(Error::InvalidStructure(format!(
                                "left action breaks the composite of `{}` after `{}`",
                                self.target.morphism(b1).name,
                                self.target.morphism(b2).name
                            )));
                        }
                    }
                }
            }
        }
        for a1 in 0..nam {
            for a2 in 0..nam {
                if let Some(c) = self.source.compose(a2, a1) {
                    for b in 0..nb {
                        let step = self.act_right[a1 * nb + b]
                            .then(&self.act_right[a2 * nb + b])?;
                        if step != self.act_right[c * nb + b] {
                            return Err(Error::InvalidStructure(format!(
                                "right action breaks the composite of `{}` after `{}`",
                                self.source.morphism(a2).name,
                                self.source.morphism(a1).name
                            )));
                        }
                    }
                }
            }
        }
        // The actions commute.
        for beta in 0..nbm {
            let db = self.target.morphism(beta);
            for alpha in 0..nam {
                let da = self.source.morphism(alpha);
                let p1 = self.act_left[beta * na + da.src]
                    .then(&self.act_right[alpha * nb + db.src])?;
                let p2 = self.act_right[alpha * nb + db.tgt]
                    .then(&self.act_left[beta * na + da.tgt])?;
                if p1 != p2 {
                    return Err(Error::InvalidStructure(format!(
                        "actions along `{}` and `{}` do not commute",
                        db.name, da.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Build from components plus the action of each non-identity
    /// morphism, given as label maps; identity actions are filled in.
    /// `left(β, a, e)` is the image of element `e` under the action of
    /// the target morphism `β`, and `right(α, b, e)` likewise.
    pub fn from_maps(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        components: Vec<FinSet>,
        left: impl Fn(usize, usize, &str) -> String,
        right: impl Fn(usize, usize, &str) -> String,
    ) -> Result<Module> {
        let na = source.n_objects();
        let nb = target.n_objects();
        if components.len() != na * nb {
            return Err(Error::InvalidStructure("one component per index pair".into()));
        }
        let comp = |b: usize, a: usize| &components[b * na + a];
        let mut act_left = Vec::with_capacity(target.n_morphisms() * na);
        for beta in 0..target.n_morphisms() {
            let d = target.morphism(beta);
            for a in 0..na {
                if target.is_identity(beta) {
                    act_left.push(FinFn::identity(comp(d.src, a)));
                } else {
                    act_left.push(FinFn::from_fn(
                        comp(d.tgt, a).clone(),
                        comp(d.src, a).clone(),
                        |e| left(beta, a, e),
                    )?);
                }
            }
        }
        let mut act_right = Vec::with_capacity(source.n_morphisms() * nb);
        for alpha in 0..source.n_morphisms() {
            let d = source.morphism(alpha);
            for b in 0..nb {
                if source.is_identity(alpha) {
                    act_right.push(FinFn::identity(comp(b, d.src)));
                } else {
                    act_right.push(FinFn::from_fn(
                        comp(b, d.src).clone(),
                        comp(b, d.tgt).clone(),
                        |e| right(alpha, b, e),
                    )?);
                }
            }
        }
        Module::new(source, target, components, act_left, act_right)
    }

    /// The identity module of a category: components are its hom-sets
    /// `C(x, y)` with composition as both actions.
    pub fn identity(c: &Arc<FinCat>) -> Module {
        let n = c.n_objects();
        let components: Vec<FinSet> = (0..n)
            .flat_map(|x| {
                (0..n).map(move |y| {
                    FinSet::new(
                        c.hom(x, y)
                            .into_iter()
                            .map(|m| c.morphism(m).name.clone())
                            .collect(),
                    )
                    .expect("morphism names are distinct")
                })
            })
            .collect();
        let component = |x: usize, y: usize| &components[x * n + y];
        let mut act_left = Vec::with_capacity(c.n_morphisms() * n);
        for beta in 0..c.n_morphisms() {
            let d = c.morphism(beta);
            for a in 0..n {
                act_left.push(
                    FinFn::from_fn(component(d.tgt, a).clone(), component(d.src, a).clone(), |f| {
                        let fi = c.find_morphism(f).unwrap();
                        c.morphism(c.compose(fi, beta).expect("valid table"))
                            .name
                            .clone()
                    })
                    .expect("precomposition stays in the hom-set"),
                );
            }
        }
        let mut act_right = Vec::with_capacity(c.n_morphisms() * n);
        for alpha in 0..c.n_morphisms() {
            let d = c.morphism(alpha);
            for b in 0..n {
                act_right.push(
                    FinFn::from_fn(component(b, d.src).clone(), component(b, d.tgt).clone(), |f| {
                        let fi = c.find_morphism(f).unwrap();
                        c.morphism(c.compose(alpha, fi).expect("valid table"))
                            .name
                            .clone()
                    })
                    .expect("postcomposition stays in the hom-set"),
                );
            }
        }
        Module {
            source: c.clone(),
            target: c.clone(),
            components,
            act_left,
            act_right,
        }
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCat> {
        &self.target
    }

    pub fn component(&self, b: usize, a: usize) -> &FinSet {
        &self.components[b * self.source.n_objects() + a]
    }

    pub fn act_left_fn(&self, beta: usize, a: usize) -> &FinFn {
        &self.act_left[beta * self.source.n_objects() + a]
    }

    pub fn act_right_fn(&self, alpha: usize, b: usize) -> &FinFn {
        &self.act_right[alpha * self.target.n_objects() + b]
    }

    /// Total element count across components.
    pub fn total_elements(&self) -> usize {
        self.components.iter().map(FinSet::len).sum()
    }

    pub fn same_boundaries(&self, other: &Module) -> bool {
        same_category(&self.source, &other.source) && same_category(&self.target, &other.target)
    }
}

/// A 2-morphism of modules: a family of functions natural in both
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMorphism {
    source: Module,
    target: Module,
    components: Vec<FinFn>,
}

impl ModMorphism {
    pub fn new(source: Module, target: Module, components: Vec<FinFn>) -> Result<ModMorphism> {
        if !source.same_boundaries(&target) {
            return Err(Error::BoundaryMismatch(
                "module morphism needs parallel modules".into(),
            ));
        }
        let na = source.source.n_objects();
        let nb = source.target.n_objects();
        if components.len() != na * nb {
            return Err(Error::InvalidStructure("one component per index pair".into()));
        }
        for b in 0..nb {
            for a in 0..na {
                let f = &components[b * na + a];
                if f.dom() != source.component(b, a) || f.cod() != target.component(b, a) {
                    return Err(Error::InvalidStructure(format!(
                        "component at ({}, {}) has wrong boundaries",
                        source.target.object_label(b),
                        source.source.object_label(a)
                    )));
                }
            }
        }
        let t = ModMorphism {
            source,
            target,
            components,
        };
        t.check_naturality()?;
        Ok(t)
    }

    fn check_naturality(&self) -> Result<()> {
        let na = self.source.source.n_objects();
        let nb = self.source.target.n_objects();
        for beta in 0..self.source.target.n_morphisms() {
            let d = self.source.target.morphism(beta);
            for a in 0..na {
                let lhs = self
                    .component(d.tgt, a)
                    .then(self.target.act_left_fn(beta, a))?;
                let rhs = self
                    .source
                    .act_left_fn(beta, a)
                    .then(self.component(d.src, a))?;
                if lhs != rhs {
                    return Err(Error::InvalidStructure(format!(
                        "not natural along `{}`",
                        d.name
                    )));
                }
            }
        }
        for alpha in 0..self.source.source.n_morphisms() {
            let d = self.source.source.morphism(alpha);
            for b in 0..nb {
                let lhs = self
                    .component(b, d.src)
                    .then(self.target.act_right_fn(alpha, b))?;
                let rhs = self
                    .source
                    .act_right_fn(alpha, b)
                    .then(self.component(b, d.tgt))?;
                if lhs != rhs {
                    return Err(Error::InvalidStructure(format!(
                        "not natural along `{}`",
                        d.name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(m: &Module) -> ModMorphism {
        let components = (0..m.target.n_objects())
            .flat_map(|b| (0..m.source.n_objects()).map(move |a| (b, a)))
            .map(|(b, a)| FinFn::identity(m.component(b, a)))
            .collect();
        ModMorphism {
            source: m.clone(),
            target: m.clone(),
            components,
        }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn component(&self, b: usize, a: usize) -> &FinFn {
        &self.components[b * self.source.source.n_objects() + a]
    }

    pub fn components(&self) -> &[FinFn] {
        &self.components
    }

    /// Vertical composite `later ∘ self`.
    pub fn then(&self, later: &ModMorphism) -> Result<ModMorphism> {
        if self.target != later.source {
            return Err(Error::BoundaryMismatch(
                "vertical composition needs matching middle module".into(),
            ));
        }
        let components = self
            .components
            .iter()
            .zip(later.components.iter())
            .map(|(f, g)| f.then(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModMorphism {
            source: self.source.clone(),
            target: later.target.clone(),
            components,
        })
    }

    pub fn is_iso(&self) -> bool {
        self.components.iter().all(FinFn::is_bijection)
    }

    pub fn inverse(&self) -> Option<ModMorphism> {
        let components = self
            .components
            .iter()
            .map(FinFn::inverse)
            .collect::<Option<Vec<_>>>()?;
        Some(ModMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }

    /// First component that is not a bijection, as a witness string.
    pub fn non_iso_witness(&self) -> Option<String> {
        let na = self.source.source.n_objects();
        for (i, f) in self.components.iter().enumerate() {
            if !f.is_bijection() {
                let (b, a) = (i / na, i % na);
                return Some(format!(
                    "component at ({}, {}) maps {} elements to {}",
                    self.source.target.object_label(b),
                    self.source.source.object_label(a),
                    f.dom().len(),
                    f.cod().len()
                ));
            }
        }
        None
    }
}

/// An adjunction `lower ⊣ upper` in the bicategory of modules, with unit
/// and counit; the triangle identities are checked by
/// [`crate::profmod::check_triangle_identities`].
#[derive(Debug, Clone)]
pub struct Adjunction {
    pub lower: Module,
    pub upper: Module,
    pub unit: ModMorphism,
    pub counit: ModMorphism,
}
