//! Permutation patterns, equivalence relations on S_n, and the class-level
//! avoidance problems built on top of them.

pub mod arith;
pub mod catalog;
pub mod census;
pub mod error;
pub mod pattern;
pub mod perm;
pub mod relations;
pub mod sequences;
pub mod symmetry;
pub mod tableau;

pub use error::{Error, Result};
pub use pattern::{AdjacencySet, BivincularPattern, Occurrence};
pub use census::{class_avoiders, class_matchers, avoid_all, is_stable, EnumerationResult, Mode};
pub use perm::{CircularPermutation, CycleType, Permutation};
pub use relations::{census, Budget, ClassCensus, ClassPartition, Relation};
pub use symmetry::{Op, Symmetric, Symmetry};
pub use tableau::{inverse_rsk, rsk, Shape, YoungTableau};
