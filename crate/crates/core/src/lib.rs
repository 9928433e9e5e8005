//! Consistent (reversible cyclic) orderings of matroid circuits.
//!
//! The crate decides whether a matroid admits a consistent ordering of its circuits,
//! produces checkable certificates either way, and implements the structural tests
//! used to characterize orderable non-binary matroids and theta-orderable matroids.

pub mod catalog;
pub mod characterize;
pub mod error;
pub mod matroid;
pub mod ordering;
pub mod set;
pub mod solver;
pub mod structure;

pub use error::{Error, Result};
pub use matroid::{BinaryMatrix, ClassPartition, Matroid, SeriesClassPartition};
pub use set::ElemSet;
