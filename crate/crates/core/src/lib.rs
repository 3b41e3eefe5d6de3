//! catkit-core: finite categories and Set-valued two-sided modules
//! (profunctors), with the constructions that make extension and lifting
//! arguments executable — composition by coend, right extensions and
//! liftings by end, collages, exact (BC) squares, pointwise Kan
//! extensions, and sketches with model checking.
//!
//! Everything is desk scale: categories are full composition tables,
//! module components are finite sets of labels, and every universal
//! property is checked by finite enumeration under a [`guard::SizeGuard`].

pub mod collage;
pub mod error;
pub mod fincat;
pub mod finset;
pub mod gen;
pub mod guard;
pub mod kan;
pub mod label;
pub mod profmod;
pub mod report;
pub mod sketch;

pub use error::{Error, Result};
pub use guard::SizeGuard;
pub use report::{Claim, Report, Verdict};
