//! A calculus of (two-colored) set partitions: diagram operations with exact
//! removed-loop counting, evaluation of the index function `delta`, symbolic
//! instantiation of the generator relations attached to a partition, bounded
//! closure search with derivation witnesses, and numeric verification of the
//! relations against concrete matrix families.

pub mod closure;
pub mod delta;
pub mod enumerate;
pub mod lincomb;
pub mod ops;
pub mod partition;
pub mod relations;
pub mod repver;

pub use partition::{Color, Partition, PartitionError, PointRef, Row};
