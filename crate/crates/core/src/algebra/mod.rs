//! Finite groups as explicit multiplication tables.

mod family;
mod group;
mod perm;
mod text;

pub(crate) use family::companion_of_order;
pub use family::{build_family, direct_product, FamilySpec};
pub use group::{element_order, verify_group_axioms, AxiomFailure, FiniteGroup};
pub use perm::{parse_cycles, Perm};
