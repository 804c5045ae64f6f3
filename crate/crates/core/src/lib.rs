//! Exact graph invariants centered on the set of odd cycle lengths, and a
//! harness that checks the known theorems about it on graph corpora.

pub mod error;
pub mod graph;
pub mod graph6;
pub mod named;
pub mod cycles;
pub mod invariants;
pub mod structure;
pub mod coloring;
pub mod canon;
pub mod generate;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_ORDER};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use named::{named_graph, random_graph, NamedGraphId};
