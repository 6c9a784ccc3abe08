//! The tower data model and the presentation builders: equivariant,
//! ordinary and effective-torus presentations, single flag-bundle steps,
//! projectivized and full flag bundle relations, and elimination.
//!
//! Builders are pure functions over immutable inputs; stage numbering,
//! variable naming and relation ordering are fixed so output is
//! byte-reproducible.

pub mod builders;
pub mod elimination;
pub mod model;
pub mod presentation;
pub mod rewrite;

pub use builders::{
    chern_symbols, effective_presentation, effective_presentation_with,
    equivariant_presentation, equivariant_presentation_with, flag_bundle_step,
    flag_bundle_step_with, full_flag_relation, ordinary_from_steps, ordinary_presentation,
    ordinary_presentation_with, projective_bundle_relation,
};
pub use elimination::{derive_elimination, derive_elimination_with, Elimination};
pub use model::{substitution_map, Stage, SubstitutionMap, TowerSpec};
pub use presentation::{Generator, Presentation};
pub use rewrite::Rewriter;
