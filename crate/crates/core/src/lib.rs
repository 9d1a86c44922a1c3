//! Defective colorings of planar graphs without cycles of length 4 or 5.
//!
//! A `(d1, ..., dk)`-coloring assigns each vertex one of `k` colors so that
//! a vertex of color `c` has at most `d_c` neighbors of color `c`. This crate
//! holds the graph and plane-embedding model, an exact coloring solver with
//! a brute-force reference, the gadget constructions that witness
//! non-colorability, and an exact-arithmetic discharging auditor.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod coloring;
pub mod discharging;
pub mod embedding;
pub mod gadgets;
pub mod graph;

pub use coloring::{solve, Color, Coloring, ColoringError, ColoringSpec, ConstraintSet, SolveOutcome, SolveRun};
pub use embedding::{EmbeddingError, Face, FaceId, PlaneEmbedding};
pub use graph::{Girth, Graph, GraphError, VertexId};
