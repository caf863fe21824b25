//! Analysis of king and cylindrical-king permutations.
//!
//! A king permutation has no two adjacent entries with consecutive values; a
//! cylindrical king permutation additionally forbids consecutive values at
//! the two ends of the word.  This crate provides the permutation primitives
//! (parsing, standardization, value deletion, pattern containment, rotation
//! orbits), the Manhattan and cyclic-Manhattan breadth metrics, structural
//! classifiers (bonds, separators), k-prolific detection, poset queries
//! (downsets, covers, gap search), and exhaustive verifiers that confirm the
//! governing theorems at small sizes.

pub mod analysis;
pub mod error;
pub mod kings;
pub mod metrics;
pub mod perm;
pub mod poset;
pub mod prolific;

pub use analysis::AnalysisReport;
pub use error::{Error, Result};
pub use kings::{Bond, BondKind, KingClass, Orientation, Separator};
pub use metrics::MetricReport;
pub use perm::{OrbitClass, Permutation, ValueSet};
pub use poset::{DownsetGraph, GapWitness};
pub use prolific::{PermClass, ProlificReport};
