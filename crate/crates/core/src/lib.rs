//! Conflict-free coloring of graphs.
//!
//! A partial coloring assigns each vertex a color in `0..=k`, where 0 means
//! uncolored. It is conflict-free when every vertex sees a uniquely colored
//! vertex in its closed (or, in open mode, open) neighborhood.

pub mod domination;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod heuristic;
pub mod io;
pub mod outerplanar;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Outcome, SearchLimits};
pub use graph::{Graph, Mode, Vertex};
pub use verify::{verify_cf, PartialColoring, Verdict};
