//! Exact combinatorics of 3-uniform hypergraphs around the codegree
//! threshold: canonical hypergraph queries, the known lower-bound
//! constructions paired with their codegree formulas, Steiner triple system
//! generation, exact coex/ex search on small vertex counts, and
//! enumeration / Monte-Carlo experiments for the probabilistic claims.

pub mod bitset;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod experiments;
pub mod family;
pub mod hypergraph;
pub mod io;
pub mod search;
pub mod steiner;
pub mod subgraph;

pub use error::{Error, Result};
pub use family::ForbiddenFamily;
pub use hypergraph::{PairGraph, TriSystem};
pub use steiner::SteinerSystem;
