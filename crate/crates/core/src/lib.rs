//! Rough sets determined by quasiorders.
//!
//! Given a finite universe `U` and a relation `R`, every subset `X ⊆ U` has a
//! lower approximation `X▼ = { x : R(x) ⊆ X }` and an upper approximation
//! `X▲ = { x : R(x) ∩ X ≠ ∅ }`. The rough set of `X` is the pair
//! `A(X) = (X▼, X▲)` and `RS` is the set of all of them, ordered
//! coordinatewise. When `R` is a quasiorder, `RS` is a complete, completely
//! distributive lattice; this crate enumerates it, builds witness sets for
//! its meets and joins, computes its complementation operations and
//! irreducible elements, and decides whether it is a Stone lattice.
//!
//! Relations are stored as one successor bit-vector per element.

pub mod approx;
pub mod cli;
pub mod complement;
pub mod error;
pub mod irreducible;
pub mod lattice;
pub mod mask;
pub mod relation;
pub mod structure;
pub mod topology;
pub mod universe;

pub use approx::{frame_correspondence, ApproxContext, CorrespondenceReport, FrameProperty};
pub use complement::{
    de_morgan, dual_pseudocomplement, is_complemented_in_rs, is_exact, pseudocomplement,
    ComplementReport,
};
pub use error::{Error, Result};
pub use irreducible::{
    join_decomposition, join_irreducibles, meet_decomposition, meet_irreducibles,
    IrreducibleCatalog, Origin,
};
pub use lattice::{
    cofinal_split, is_realizable, join_family, leq, meet_family, witness_join, witness_meet,
    CofinalSplit, RoughSet, RsLattice,
};
pub use mask::SubsetMask;
pub use relation::{ComponentPartition, PropertyReport, QuasiorderViolation, Relation};
pub use structure::{
    analyze, combine_rough, down_directed_check, equivalence_shape, is_stone, restrict_rough,
    EquivalenceShape, StoneVerdict, StructureReport,
};
pub use topology::{topology_down, topology_up, AlexandrovTopology, TopologyKind};
pub use universe::Universe;
