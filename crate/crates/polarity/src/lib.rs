//! Polar-type partitions on graphs with few induced P4s.
//!
//! A graph is `(s, k)`-polar when its vertices split into `A` and `B` with
//! `G[A]` complete `s`-partite and `G[B]` a disjoint union of at most `k`
//! cliques. This crate recognises P4-sparse and P4-extendible graphs, builds
//! their decomposition trees, computes twelve maximum induced subgraphs
//! (clique through polar) in one bottom-up pass, and works with the minimal
//! 2-polar obstructions of both classes. Every answer can be checked against
//! the brute-force routines in [`oracle`].
//!
//! ```
//! use polarity::{graph::Graph, dp::max_subgraph, property::PropertyKind};
//!
//! let c5 = Graph::cycle(5);
//! let r = max_subgraph(&c5, PropertyKind::MU).unwrap();
//! assert_eq!(r.size, 4);
//! ```

pub mod canon;
pub mod decomposition;
pub mod dp;
pub mod error;
pub mod gen;
pub mod graph;
pub mod obstructions;
pub mod oracle;
pub mod property;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use property::PropertyKind;
