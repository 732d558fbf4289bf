//! Locating-dominating sets in twin-free graphs.
//!
//! * [`graph`] and [`graph6`]: immutable graphs on at most 64 vertices, the graph6
//!   codec, twins, split / co-bipartite recognition, joins and coronas.
//! * [`domination`]: verifiers, exact solvers for `γ`, `γ_L`, minimum locating sets
//!   and vertex covers, private-neighbor dominating sets, signature partitions.
//! * [`bounds`]: constructive upper bounds (two-thirds, vertex cover, split,
//!   co-bipartite).
//! * [`extremal`]: families with `γ_L = n/2` and the recognizer for the tree family.
//! * [`enumerate`] and [`sample`]: exhaustive and random graph sources.
//! * [`cli`]: the `locdom` command line (solve, scan, gen, construct).

pub mod bounds;
pub mod cli;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod sample;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
