//! Graph values: digraphs, undirected graphs, matched bipartite graphs,
//! alternating cycles and canonical codes.

pub mod alternating;
pub mod bipartite;
pub mod bits;
pub mod canon;
pub mod digraph;
pub mod undirected;

pub use alternating::{validate_cycle_sequence, AlternatingCycle, AlternatingPath};
pub use bipartite::{maximum_matching, with_some_perfect_matching, BVertex, BipartiteGraphWithMatching, Side};
pub use canon::{Canonical, CanonicalCode, CodeKind, DEFAULT_CANON_CAP};
pub use digraph::{Digraph, MAX_ORDER};
pub use undirected::UndirectedGraph;
