//! Lie-theoretic tables and computations: torsion primes, Weyl groups as
//! integer matrix groups on the character lattice, fundamental invariants,
//! and circle centralizers with their Weyl subgroups and invariant
//! generators. Enumerations are cached per group and safe to read
//! concurrently.

pub mod centralizer;
pub mod group;
pub mod invariants;
pub mod weyl;

pub use centralizer::{
    centralizer_weyl, coset_length_series, dominant_cocharacter, Block, BlockKind,
    CentralizerSpec, FactorStructure, ReflectionSubgroup,
};
pub use group::{admissible_coefficients, check_admissible, GroupSpec, LieFamily};
pub use invariants::{
    fundamental_invariants, invariant_generators, is_fixed_by, lattice_relation,
    weyl_substitution,
};
pub use weyl::{Mat, RootDatum, DEFAULT_RANK_BOUND};
