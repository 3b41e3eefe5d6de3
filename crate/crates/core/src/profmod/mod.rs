//! Set-valued two-sided modules (profunctors) between finite categories:
//! composition by coend, right extensions and liftings by end,
//! representables, adjunctions, mates, and the 2-dimensional algebra that
//! connects them.

mod algebra;
mod compose;
mod curry;
mod enumerate;
mod hom;
mod mate;
mod module;
mod represent;

pub use algebra::{associator, from_composite, unitor_post, unitor_pre, whisker_post, whisker_pre};
pub use compose::{compose_modules, ModuleComposite};
pub use curry::{extension_currying, lifting_currying};
pub use enumerate::{
    enumerate_mod_morphisms, enumerate_modules, find_module_iso, find_representing_functor,
};
pub use hom::{
    check_right_extension_universal, check_right_lifting_universal, left_preadjoint,
    right_extension_module, right_lifting_module, RightExtension, RightLifting,
};
pub use mate::{mate_of_square, mate_of_square_explicit};
pub use module::{Adjunction, ModMorphism, Module};
pub use represent::{
    check_triangle_identities, lower_representable, nat_lower, representable_compose_lower,
    representable_compose_upper, representable_counit, representable_modules, representable_unit,
    upper_representable,
};
