//! Coloured triangulations of convex polygons and their flip graphs.
//!
//! A triangulation of a convex `n`-gon uses `n - 3` pairwise non-crossing
//! diagonals; a flip swaps one diagonal for the other diagonal of its
//! quadrilateral. Giving every face a colour in `0..m` restricts the move:
//! a diagonal flips only when both of its faces carry the same colour `i`,
//! and the two new faces come out coloured `sigma(i)` for a fixed
//! permutation `sigma`. The graph with one node per coloured triangulation
//! and one edge per coloured flip splits into many connected components;
//! this crate enumerates the nodes, builds the graph, and measures the
//! components.
//!
//! ```
//! use flipgraph::colour::ColourScheme;
//! use flipgraph::graph::{BuildConfig, FlipGraph};
//!
//! let scheme = ColourScheme::cyclic(2).unwrap();
//! let graph = FlipGraph::build(6, &scheme, &BuildConfig::default()).unwrap();
//! assert_eq!(graph.node_count(), 224);
//! assert_eq!(graph.census().get(&1), Some(&28));
//! ```

pub mod colour;
pub mod error;
pub mod graph;
pub mod json;
pub mod polygon;
pub mod signed;
pub mod tables;

pub use error::{Error, Result};
