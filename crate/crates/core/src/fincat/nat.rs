//! Natural transformations, checked exhaustively on construction.

use crate::error::{Error, Result};

use super::functor::{same_category, Functor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    source: Functor,
    target: Functor,
    /// Component at each source-category object, as a morphism of the
    /// target category.
    components: Vec<usize>,
}

impl NatTrans {
    pub fn new(source: Functor, target: Functor, components: Vec<usize>) -> Result<NatTrans> {
        if !same_category(source.source(), target.source())
            || !same_category(source.target(), target.target())
        {
            return Err(Error::BoundaryMismatch(
                "natural transformation needs parallel functors".into(),
            ));
        }
        let a = source.source();
        let x = source.target();
        if components.len() != a.n_objects() {
            return Err(Error::InvalidStructure("one component per object required".into()));
        }
        for (o, &c) in components.iter().enumerate() {
            if c >= x.n_morphisms() {
                return Err(Error::InvalidStructure("component out of range".into()));
            }
            let m = x.morphism(c);
            if m.src != source.on_object(o) || m.tgt != target.on_object(o) {
                return Err(Error::InvalidStructure(format!(
                    "component at `{}` has wrong boundaries",
                    a.object_label(o)
                )));
            }
        }
        let t = NatTrans {
            source,
            target,
            components,
        };
        if let Some((m, _, _)) = t.naturality_failure() {
            return Err(Error::InvalidStructure(format!(
                "naturality fails at `{}`",
                t.source.source().morphism(m).name
            )));
        }
        Ok(t)
    }

    fn naturality_failure(&self) -> Option<(usize, usize, usize)> {
        let a = self.source.source();
        let x = self.source.target();
        for m in 0..a.n_morphisms() {
            let d = a.morphism(m);
            // target(m) ∘ comp(src) = comp(tgt) ∘ source(m)
            let lhs = x.compose(self.target.on_morphism(m), self.components[d.src]);
            let rhs = x.compose(self.components[d.tgt], self.source.on_morphism(m));
            if lhs != rhs || lhs.is_none() {
                return Some((m, lhs.unwrap_or(usize::MAX), rhs.unwrap_or(usize::MAX)));
            }
        }
        None
    }

    pub fn identity(f: &Functor) -> NatTrans {
        let comps = (0..f.source().n_objects())
            .map(|o| f.target().identity(f.on_object(o)))
            .collect();
        NatTrans {
            source: f.clone(),
            target: f.clone(),
            components: comps,
        }
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    pub fn component(&self, o: usize) -> usize {
        self.components[o]
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    /// Vertical composite `later ∘ self`.
    pub fn then(&self, later: &NatTrans) -> Result<NatTrans> {
        if self.target != later.source {
            return Err(Error::BoundaryMismatch(
                "vertical composition needs matching middle functor".into(),
            ));
        }
        let x = self.source.target();
        let comps = self
            .components
            .iter()
            .zip(later.components.iter())
            .map(|(&f, &g)| {
                x.compose(g, f)
                    .ok_or_else(|| Error::InvalidStructure("target table is not total".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NatTrans {
            source: self.source.clone(),
            target: later.target.clone(),
            components: comps,
        })
    }

    pub fn is_iso(&self) -> bool {
        let x = self.source.target();
        self.components.iter().all(|&c| x.is_iso_morphism(c))
    }
}

/// Whisker on the outside: for `t : F ⇒ G : A → B` and `h : B → C`,
/// the transformation `hF ⇒ hG` with components `h(t_a)`.
pub fn whisker_outer(h: &Functor, t: &NatTrans) -> Result<NatTrans> {
    if !same_category(t.source().target(), h.source()) {
        return Err(Error::BoundaryMismatch("whiskering functor does not follow".into()));
    }
    Ok(NatTrans {
        source: t.source().then(h)?,
        target: t.target().then(h)?,
        components: t.components.iter().map(|&c| h.on_morphism(c)).collect(),
    })
}

/// Whisker on the inside: for `t : F ⇒ G : A → B` and `k : Z → A`,
/// the transformation `Fk ⇒ Gk` with components `t_{k(z)}`.
pub fn whisker_inner(t: &NatTrans, k: &Functor) -> Result<NatTrans> {
    if !same_category(k.target(), t.source().source()) {
        return Err(Error::BoundaryMismatch("whiskering functor does not precede".into()));
    }
    Ok(NatTrans {
        source: k.then(t.source())?,
        target: k.then(t.target())?,
        components: (0..k.source().n_objects())
            .map(|z| t.components[k.on_object(z)])
            .collect(),
    })
}
