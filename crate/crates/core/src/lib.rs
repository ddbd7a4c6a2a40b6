//! Exact computation for G-intersecting k-uniform hypergraphs.
//!
//! A family of k-subsets of `{0..n-1}` is *G-intersecting* for a graph `G`
//! when every two members either share a vertex or contain the two ends of
//! an edge of `G`. The crate builds the clique-centred extremal families,
//! evaluates the closed-form bounds and thresholds around them, computes cover
//! numbers of neighborhood hypergraphs, and finds `N(G,k)` (the largest
//! G-intersecting family) exactly on small graphs.

pub mod bounds;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod family;
pub mod graph;
pub mod solver;
pub mod vertex_set;

pub use combinatorics::{binomial, enumerate_ksubsets, KSubsets};
pub use error::{Error, Result};
pub use family::{
    augment_clique_family, build_clique_family, build_cycle_extremal, check_cross_condition,
    cover_number, g_intersects, is_g_intersecting, neighborhood_hypergraph, Hypergraph,
};
pub use graph::Graph;
pub use vertex_set::{VertexSet, MAX_VERTICES};
