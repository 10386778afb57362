//! t-tone graph coloring: a verifier, exact search, lower-bound
//! certificates, and constructive colorers for paths, cycles, grids, fat
//! triangles and sparse graph classes.
//!
//! A t-tone k-coloring assigns each vertex a t-subset of `1..=k` so that two
//! vertices at distance `d` share fewer than `d` colors.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod density;
pub mod exact;
pub mod graph;
pub mod greedy;
pub mod random;
pub mod structure;
pub mod verify;

pub use bounds::{best_lower_bound, Certificate, CertificateKind};
pub use coloring::{Color, Coloring, ColoringError, Label};
pub use density::{mad, Density};
pub use exact::{exact_decide, tau, Decision, SearchBudget, TauResult};
pub use graph::{Graph, GraphError};
pub use structure::{ThreadConfig, ThreadKind};
pub use verify::{is_valid, verify, verify_partial, Violation};
