//! Exact computation for Turán-type problems on Berge hypergraphs.
//!
//! The crate evaluates closed-form Turán formulas, generates the extremal
//! constructions behind them, detects Berge copies and Berge matchings,
//! computes Turán numbers by exhaustive search on small vertex counts, and
//! builds red-blue certificates from the Gallai–Edmonds decomposition of a
//! hyperedge/pair incidence graph.

pub mod berge;
pub mod certify;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod hypergraph;
pub mod iso;
pub mod patterns;
pub mod search;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use hypergraph::{Coloring, Edge, ExtendedCount, Graph, Hypergraph};
