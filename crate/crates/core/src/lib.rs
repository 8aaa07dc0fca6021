//! Finite groups given by multiplication tables, their subgroup lattices,
//! intersection graphs of proper nontrivial subgroups, and exact embedding
//! (genus / crosscap) computations for those graphs.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod arith;
pub mod bits;
pub mod classify;
pub mod embed;
mod error;
pub mod graph;
pub mod lattice;

pub use algebra::{FamilySpec, FiniteGroup};
pub use error::Error;
pub use graph::{GraphExpr, SimpleGraph};
pub use lattice::{Subgroup, SubgroupLattice};

pub type Result<T> = core::result::Result<T, Error>;

/// Default limit on group order.
pub const DEFAULT_MAX_ORDER: usize = 512;
