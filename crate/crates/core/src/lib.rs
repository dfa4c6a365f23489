//! Finite simple graphs, exact integer/rational linear algebra and the
//! spectral toolkit (symmetric eigendecomposition, Laplacians, circulant
//! Fourier analysis, colour decompositions and their closures).
//!
//! Vertices are always `0..n`. Every value type here is immutable once
//! built, so all functions can be called concurrently on shared inputs.

pub mod error;
pub mod exact;
pub mod family;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod ops;
pub mod spectral;

pub use error::{Error, Result};
pub use family::{AdeTag, GraphFamily};
pub use graph::Graph;
pub use matrix::{AdjacencyMatrix, Matrix};
pub use ops::{basic_stats, complement, copies, disjoint_union, product, BasicStats, ProductKind};

/// Exhaustive oracles refuse graphs larger than this.
pub const EXHAUSTIVE_CAP: usize = 64;
/// Numeric routines refuse graphs larger than this.
pub const NUMERIC_CAP: usize = 4096;
