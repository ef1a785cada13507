//! Exhaustive search and constructions for geodetic graphs: graphs in which
//! every pair of vertices is joined by at most one shortest path.

#![allow(clippy::needless_range_loop)]

pub mod canon;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod search;
pub mod tree;
pub mod treegen;

pub use canon::{are_isomorphic, automorphism_group_order, canonical_form, CanonicalKey};
pub use error::{Error, Result};
pub use graph::{DistanceTable, Graph, GraphReport, MAX_VERTICES};
pub use search::{enumerate_geodetic, enumerate_regular, SearchOptions, SearchOutput, SearchStats};
pub use tree::RootedTree;
