//! Hypergraph polytopes.

pub mod atoms;
pub mod axioms;
pub mod catalog;
pub mod construction;
pub mod error;
pub mod exhaustive;
pub mod face_lattice;
pub mod family;
pub mod format;
pub mod hypergraph;
pub mod notation;
pub mod poset;
pub mod realization;
pub mod saturation;
pub mod tubing;

pub use atoms::{AtomSet, AtomTable};
pub use error::{Error, Result};
pub use family::Family;
pub use hypergraph::{Hypergraph, HypergraphPartition};
