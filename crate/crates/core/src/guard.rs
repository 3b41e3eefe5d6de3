//! Enumeration bounds.
//!
//! Every operation that enumerates (functors, natural transformations,
//! modules) or constructs a category whose size depends on its inputs takes
//! a [`SizeGuard`] and fails with `SizeGuardExceeded` instead of diverging.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    /// Largest category a guarded constructor (collage, cocomma) may build.
    pub max_objects: usize,
    pub max_morphisms: usize,
    /// Cap on any single enumeration: functors, transformations, modules.
    pub max_enumerated: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_objects: 10,
            max_morphisms: 60,
            max_enumerated: 100_000,
        }
    }
}

impl SizeGuard {
    /// Default guard with the enumeration bound replaced.
    pub fn with_enumeration_bound(bound: usize) -> Self {
        SizeGuard {
            max_enumerated: bound,
            ..SizeGuard::default()
        }
    }

    pub fn check_category(&self, objects: usize, morphisms: usize, what: &str) -> Result<()> {
        if objects > self.max_objects {
            return Err(Error::SizeGuardExceeded(format!(
                "{what}: {objects} objects exceeds bound {}",
                self.max_objects
            )));
        }
        if morphisms > self.max_morphisms {
            return Err(Error::SizeGuardExceeded(format!(
                "{what}: {morphisms} morphisms exceeds bound {}",
                self.max_morphisms
            )));
        }
        Ok(())
    }

    pub fn check_enumeration(&self, count: usize, what: &str) -> Result<()> {
        if count > self.max_enumerated {
            return Err(Error::SizeGuardExceeded(format!(
                "{what}: enumeration exceeds bound {}",
                self.max_enumerated
            )));
        }
        Ok(())
    }
}
