//! Functors between finite categories, as total tables.

use std::sync::Arc;

use crate::error::{Error, Result};

use super::cat::FinCat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    object_map: Vec<usize>,
    morphism_map: Vec<usize>,
}

/// Arc-aware structural equality: pointer equality short-circuits the
/// deep comparison.
pub fn same_category(a: &Arc<FinCat>, b: &Arc<FinCat>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Functor {
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Functor> {
        if object_map.len() != source.n_objects() || morphism_map.len() != source.n_morphisms() {
            return Err(Error::InvalidStructure("functor tables have wrong length".into()));
        }
        if object_map.iter().any(|&o| o >= target.n_objects())
            || morphism_map.iter().any(|&m| m >= target.n_morphisms())
        {
            return Err(Error::InvalidStructure("functor image out of range".into()));
        }
        let f = Functor {
            source,
            target,
            object_map,
            morphism_map,
        };
        f.check_functoriality()?;
        Ok(f)
    }

    fn check_functoriality(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        for m in 0..s.n_morphisms() {
            let d = s.morphism(m);
            let fm = t.morphism(self.morphism_map[m]);
            if fm.src != self.object_map[d.src] || fm.tgt != self.object_map[d.tgt] {
                return Err(Error::InvalidStructure(format!(
                    "functor breaks boundaries at `{}`",
                    d.name
                )));
            }
        }
        for o in 0..s.n_objects() {
            if self.morphism_map[s.identity(o)] != t.identity(self.object_map[o]) {
                return Err(Error::InvalidStructure(format!(
                    "functor breaks the identity of `{}`",
                    s.object_label(o)
                )));
            }
        }
        for g in 0..s.n_morphisms() {
            for f in 0..s.n_morphisms() {
                if let Some(gf) = s.compose(g, f) {
                    let lhs = t
                        .compose(self.morphism_map[g], self.morphism_map[f])
                        .ok_or_else(|| {
                            Error::InvalidStructure("target table is not total".into())
                        })?;
                    if lhs != self.morphism_map[gf] {
                        return Err(Error::InvalidStructure(format!(
                            "functor breaks the composite of `{}` after `{}`",
                            s.morphism(g).name,
                            s.morphism(f).name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Build from label-level tables.
    pub fn from_labels(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        objects: &[(String, String)],
        morphisms: &[(String, String)],
    ) -> Result<Functor> {
        let mut object_map = vec![usize::MAX; source.n_objects()];
        for (x, y) in objects {
            let i = source
                .find_object(x)
                .ok_or_else(|| Error::UnknownObject(x.clone()))?;
            object_map[i] = target
                .find_object(y)
                .ok_or_else(|| Error::UnknownObject(y.clone()))?;
        }
        let mut morphism_map = vec![usize::MAX; source.n_morphisms()];
        for (x, y) in morphisms {
            let i = source
                .find_morphism(x)
                .ok_or_else(|| Error::UnknownMorphism(x.clone()))?;
            morphism_map[i] = target
                .find_morphism(y)
                .ok_or_else(|| Error::UnknownMorphism(y.clone()))?;
        }
        if let Some(i) = object_map.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidStructure(format!(
                "object `{}` has no image",
                source.object_label(i)
            )));
        }
        if let Some(i) = morphism_map.iter().position(|&m| m == usize::MAX) {
            return Err(Error::InvalidStructure(format!(
                "morphism `{}` has no image",
                source.morphism(i).name
            )));
        }
        Functor::new(source, target, object_map, morphism_map)
    }

    pub fn identity(c: &Arc<FinCat>) -> Functor {
        Functor {
            source: c.clone(),
            target: c.clone(),
            object_map: (0..c.n_objects()).collect(),
            morphism_map: (0..c.n_morphisms()).collect(),
        }
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCat> {
        &self.target
    }

    pub fn on_object(&self, o: usize) -> usize {
        self.object_map[o]
    }

    pub fn on_morphism(&self, m: usize) -> usize {
        self.morphism_map[m]
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn morphism_map(&self) -> &[usize] {
        &self.morphism_map
    }

    /// `g ∘ self` (apply `self` first).
    pub fn then(&self, g: &Functor) -> Result<Functor> {
        if !same_category(&self.target, &g.source) {
            return Err(Error::BoundaryMismatch(
                "functor composition needs matching middle category".into(),
            ));
        }
        Ok(Functor {
            source: self.source.clone(),
            target: g.target.clone(),
            object_map: self.object_map.iter().map(|&o| g.object_map[o]).collect(),
            morphism_map: self
                .morphism_map
                .iter()
                .map(|&m| g.morphism_map[m])
                .collect(),
        })
    }

    /// Hom-wise bijectivity of the morphism mapping.
    pub fn is_fully_faithful(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        for a in 0..s.n_objects() {
            for b in 0..s.n_objects() {
                let dom = s.hom(a, b);
                let cod = t.hom(self.object_map[a], self.object_map[b]);
                if dom.len() != cod.len() {
                    return false;
                }
                let mut images: Vec<usize> =
                    dom.iter().map(|&m| self.morphism_map[m]).collect();
                images.sort_unstable();
                images.dedup();
                if images.len() != cod.len() {
                    return false;
                }
            }
        }
        true
    }
}

/// `g ∘ f`, applying `f` first.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor> {
    f.then(g)
}
