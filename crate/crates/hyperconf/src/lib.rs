//! Hypergraph duality and conformality toolkit.
//!
//! Decides conformality and dual conformality of hypergraphs, computes the
//! supporting objects (minimal transversals, subtransversal witnesses,
//! co-occurrence graphs), and solves the fixed-`k` upper clique transversal
//! problem on graphs. Exact dualization is available as a guarded
//! brute-force oracle for desk-scale verification; the decision procedures
//! themselves never materialize the dual.
//!
//! All structures are immutable after construction and safe to share across
//! threads.

mod bits;
mod error;

pub mod conformality;
pub mod dual_conformality;
pub mod dualize;
pub mod graph;
pub mod hypergraph;
pub mod set;
pub mod transversal;
pub mod twosat;
pub mod uct;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::{Hypergraph, HypergraphStats};
pub use set::{VertexId, VertexSet};
