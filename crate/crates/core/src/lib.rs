//! Intersection and co-maximal hypergraphs on the subgroup lattices of
//! `Z_n` and of dihedral groups, their invariants, and the closed-form
//! classifications they are checked against.

pub mod arith;
pub mod classify;
pub mod error;
pub mod finite_groups;
pub mod hypergraph;
pub mod metrics;
pub mod topology;
pub mod zn_hypergraph;

pub use error::{Error, Result};
