//! Finite categories presented by full composition tables.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::report::{Claim, Report};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorData {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category: object labels, morphism records and a total
/// composition table. Construction resolves labels and checks structural
/// well-formedness; the categorical axioms are checked separately by
/// [`validate_category`], which reports violations instead of failing, so
/// that ill-formed tables can be diagnosed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<MorData>,
    identities: Vec<usize>,
    /// `compose[g * n + f]` is `g ∘ f` (apply `f` first) when defined.
    compose: Vec<Option<usize>>,
}

impl FinCat {
    /// Build from label-level data: `morphisms` are `(name, src, tgt)`,
    /// `identities` are `(object, morphism)`, `composites` are
    /// `(g, f, g_after_f)`.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<(String, String, String)>,
        identities: Vec<(String, String)>,
        composites: Vec<(String, String, String)>,
    ) -> Result<FinCat> {
        let mut sorted = objects.clone();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateLabel(w[0].clone()));
            }
        }
        let find_obj = |l: &str| -> Result<usize> {
            objects
                .iter()
                .position(|o| o == l)
                .ok_or_else(|| Error::UnknownObject(l.into()))
        };
        let mut mors = Vec::with_capacity(morphisms.len());
        for (name, src, tgt) in &morphisms {
            if mors.iter().any(|m: &MorData| &m.name == name) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
            mors.push(MorData {
                name: name.clone(),
                src: find_obj(src)?,
                tgt: find_obj(tgt)?,
            });
        }
        let find_mor = |l: &str| -> Result<usize> {
            mors.iter()
                .position(|m| m.name == l)
                .ok_or_else(|| Error::UnknownMorphism(l.into()))
        };
        let mut idents = vec![usize::MAX; objects.len()];
        for (obj, mor) in &identities {
            let o = find_obj(obj)?;
            if idents[o] != usize::MAX {
                return Err(Error::InvalidStructure(format!(
                    "two identities declared for `{obj}`"
                )));
            }
            idents[o] = find_mor(mor)?;
        }
        if let Some(o) = idents.iter().position(|&i| i == usize::MAX) {
            return Err(Error::InvalidStructure(format!(
                "no identity declared for `{}`",
                objects[o]
            )));
        }
        let n = mors.len();
        let mut table = vec![None; n * n];
        for (g, f, gf) in &composites {
            let gi = find_mor(g)?;
            let fi = find_mor(f)?;
            let slot = &mut table[gi * n + fi];
            if slot.is_some() {
                return Err(Error::InvalidStructure(format!(
                    "composite of `{g}` after `{f}` declared twice"
                )));
            }
            *slot = Some(find_mor(gf)?);
        }
        Ok(FinCat {
            objects,
            morphisms: mors,
            identities: idents,
            compose: table,
        })
    }

    /// Index-level constructor for internal builders; checks bounds and
    /// duplicate names only.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<MorData>,
        identities: Vec<usize>,
        compose: Vec<Option<usize>>,
    ) -> Result<FinCat> {
        let mut sorted: Vec<&String> = objects.iter().collect();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateLabel(w[0].clone()));
            }
        }
        let mut names: Vec<&String> = morphisms.iter().map(|m| &m.name).collect();
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateLabel(w[0].clone()));
            }
        }
        if identities.len() != objects.len()
            || compose.len() != morphisms.len() * morphisms.len()
        {
            return Err(Error::InvalidStructure("table dimensions are wrong".into()));
        }
        for m in &morphisms {
            if m.src >= objects.len() || m.tgt >= objects.len() {
                return Err(Error::InvalidStructure("morphism boundary out of range".into()));
            }
        }
        for &i in &identities {
            if i >= morphisms.len() {
                return Err(Error::InvalidStructure("identity index out of range".into()));
            }
        }
        for &c in compose.iter().flatten() {
            if c >= morphisms.len() {
                return Err(Error::InvalidStructure("composite index out of range".into()));
            }
        }
        Ok(FinCat {
            objects,
            morphisms,
            identities,
            compose,
        })
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = &str> {
        self.objects.iter().map(|s| s.as_str())
    }

    pub fn object_label(&self, ix: usize) -> &str {
        &self.objects[ix]
    }

    pub fn morphism(&self, ix: usize) -> &MorData {
        &self.morphisms[ix]
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &MorData> {
        self.morphisms.iter()
    }

    pub fn identity(&self, obj: usize) -> usize {
        self.identities[obj]
    }

    pub fn is_identity(&self, mor: usize) -> bool {
        self.identities[self.morphisms[mor].src] == mor
    }

    /// `g ∘ f` (apply `f` first), when the table defines it.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g * self.morphisms.len() + f]
    }

    /// Morphisms from `src` to `tgt`, in index order.
    pub fn hom(&self, src: usize, tgt: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| self.morphisms[m].src == src && self.morphisms[m].tgt == tgt)
            .collect()
    }

    pub fn find_object(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    pub fn find_morphism(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn inverse_of(&self, m: usize) -> Option<usize> {
        let MorData { src, tgt, .. } = self.morphisms[m];
        self.hom(tgt, src).into_iter().find(|&w| {
            self.compose(w, m) == Some(self.identity(src))
                && self.compose(m, w) == Some(self.identity(tgt))
        })
    }

    pub fn is_iso_morphism(&self, m: usize) -> bool {
        self.inverse_of(m).is_some()
    }

    /// Objects connected by a pair of mutually inverse morphisms.
    pub fn are_isomorphic_objects(&self, x: usize, y: usize) -> bool {
        x == y || self.hom(x, y).into_iter().any(|m| self.is_iso_morphism(m))
    }

    pub fn into_arc(self) -> Arc<FinCat> {
        Arc::new(self)
    }
}

/// Check every category axiom on the table, reporting each violation with
/// a witness.
pub fn validate_category(c: &FinCat) -> Report {
    let mut claims = Vec::new();
    let n = c.n_morphisms();

    for o in 0..c.n_objects() {
        let i = c.identity(o);
        let m = c.morphism(i);
        if m.src != o || m.tgt != o {
            claims.push(Claim::fails(
                "identity-boundaries",
                format!(
                    "identity `{}` of `{}` is not an endomorphism of it",
                    m.name,
                    c.object_label(o)
                ),
            ));
        }
    }

    for g in 0..n {
        for f in 0..n {
            let composable = c.morphism(f).tgt == c.morphism(g).src;
            match c.compose(g, f) {
                None if composable => claims.push(Claim::fails(
                    "missing-composite",
                    format!(
                        "no composite for `{}` after `{}`",
                        c.morphism(g).name,
                        c.morphism(f).name
                    ),
                )),
                Some(_) if !composable => claims.push(Claim::fails(
                    "spurious-composite",
                    format!(
                        "`{}` after `{}` is not composable but has a table entry",
                        c.morphism(g).name,
                        c.morphism(f).name
                    ),
                )),
                Some(gf) if composable => {
                    let m = c.morphism(gf);
                    if m.src != c.morphism(f).src || m.tgt != c.morphism(g).tgt {
                        claims.push(Claim::fails(
                            "composite-boundaries",
                            format!(
                                "`{}` after `{}` = `{}` has wrong boundaries",
                                c.morphism(g).name,
                                c.morphism(f).name,
                                m.name
                            ),
                        ));
                    }
                }
                _ => {}
            }
        }
    }

    // Unit laws; only meaningful where the table is total, so guard lookups.
    for f in 0..n {
        let MorData { src, tgt, .. } = *c.morphism(f);
        let id_src = c.identity(src);
        let id_tgt = c.identity(tgt);
        if let Some(x) = c.compose(f, id_src) {
            if x != f {
                claims.push(Claim::fails(
                    "right-unit",
                    format!("`{}` after identity is `{}`", c.morphism(f).name, c.morphism(x).name),
                ));
            }
        }
        if let Some(x) = c.compose(id_tgt, f) {
            if x != f {
                claims.push(Claim::fails(
                    "left-unit",
                    format!("identity after `{}` is `{}`", c.morphism(f).name, c.morphism(x).name),
                ));
            }
        }
    }

    for h in 0..n {
        for g in 0..n {
            if c.morphism(g).tgt != c.morphism(h).src {
                continue;
            }
            for f in 0..n {
                if c.morphism(f).tgt != c.morphism(g).src {
                    continue;
                }
                let left = c.compose(g, f).and_then(|gf| c.compose(h, gf));
                let right = c.compose(h, g).and_then(|hg| c.compose(hg, f));
                if let (Some(l), Some(r)) = (left, right) {
                    if l != r {
                        claims.push(Claim::fails(
                            "associativity",
                            format!(
                                "(`{}` `{}`) `{}` = `{}` but `{}` (`{}` `{}`) = `{}`",
                                c.morphism(h).name,
                                c.morphism(g).name,
                                c.morphism(f).name,
                                c.morphism(r).name,
                                c.morphism(h).name,
                                c.morphism(g).name,
                                c.morphism(f).name,
                                c.morphism(l).name
                            ),
                        ));
                    }
                }
            }
        }
    }

    if claims.is_empty() {
        claims.push(Claim::holds("category-axioms"));
    }
    Report::from_claims(claims)
}
