//! Exact enumeration of modified ascent sequences avoiding patterns.
//!
//! The crate is organised in five layers:
//!
//! - [`seqcore`]: words, Cayley permutations, modified ascent sequences,
//!   primitive sequences, their statistics and flat-step surgery.
//! - [`patterns`]: classical containment on Cayley permutations, the special
//!   permutation patterns `omega`, `zeta` and `32-1`, and extensional
//!   comparison of avoidance classes.
//! - [`maps`]: standardization and the other bijections between modified
//!   ascent sequences, permutations, set partitions, compositions and Dyck
//!   paths.
//! - [`lattice`]: Dyck paths avoiding the consecutive factor `dudu`.
//! - [`counting`]: exact integer sequences, truncated power series and every
//!   closed-form count, together with the brute-force oracles they are
//!   checked against.

pub mod counting;
pub mod error;
pub mod lattice;
pub mod maps;
pub mod patterns;
pub mod seqcore;

pub use error::{Error, Result};
pub use lattice::{DyckPath, Step};
pub use maps::{Composition, Perm, SetPartition};
pub use patterns::{CayleyPattern, PatternSet, SpecialPattern};
pub use seqcore::{Class, FlatDecomposition, Mark, MarkedPositions, Statistics, Word};
