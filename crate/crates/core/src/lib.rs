//! Spectral certificates for structural properties of `(a,b)`-biregular
//! bipartite graphs.
//!
//! The second adjacency eigenvalue of a biregular bipartite graph controls how
//! evenly its edges are spread between the two parts. Small enough values force
//! edge connectivity, vertex connectivity, spanning tree packings, packings of
//! spanning rigid subgraphs and global rigidity in the plane. This crate
//! computes the spectrum ([`spectral`]), evaluates those sufficient conditions
//! ([`certify`]), and checks every fired certificate against exact
//! combinatorial oracles ([`oracles`]). The [`audit`] module runs the whole
//! pipeline over seeded random corpora.

pub mod audit;
pub mod certify;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod report;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, BiregularProfile, Part, Vertex, VertexSet};
