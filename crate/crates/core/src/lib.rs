// SPDX-License-Identifier: Apache-2.0

//! Exact Steiner distances and Steiner `k`-diameters of small undirected
//! graphs, with decision procedures for `sdiam_4(G)` in `{3, 4, n - 1}`, the
//! extremal graph families, and an exhaustive small-graph corpus to check
//! them against.

pub mod characterization;
pub mod corpus;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod random;
pub mod scan;
pub mod steiner;

pub use characterization::{classify, ClassificationRecord};
pub use graph::{Graph, GraphError, VertexSet};
pub use steiner::{steiner_distance, steiner_distance_oracle, SteinerDistance, SteinerProfile};
