//! Pattern-free vertex partitions of small graphs.
//!
//! A set `S` of vertices of `H` is *G-free* when the induced subgraph `H[S]` has no
//! subgraph isomorphic to `G`. This crate computes maximum G-free sets exactly, builds
//! partitions of `V(H)` into pattern-free classes with one class of maximum size, and
//! checks the whole machinery exhaustively over every small connected graph.

pub mod error;
pub mod extremal;
pub mod graph;
pub mod partition;
pub mod patterns;
pub mod verify;

pub use error::{Error, Result};
pub use extremal::{AuditReport, ExtremalSet, PartCCase};
pub use graph::{DegreeStats, Graph, NamedGraph, VertexSet};
pub use partition::{
    ExceptionCase, MethodTag, PartitionCertificate, PatternSpecList, Theorem1Outcome,
};
pub use patterns::{Pattern, Witness};
pub use verify::{Suite, VerifyConfig, VerifyReport};
