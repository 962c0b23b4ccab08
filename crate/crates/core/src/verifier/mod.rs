//! Exhaustive campaigns and the constrained search for the order-7 exception.

mod campaign;
mod derive;
mod enumerate;

pub use campaign::{merge_reports, verify_external, verify_main_theorem, ExceptionClass, Variant, VerifyOptions, VerifyReport};
pub use derive::{derive_g4, derive_g4_with, G4Derivation, SkeletonPatterns};
pub use enumerate::{
    enumerate_digraphs, enumerate_graphs, for_each_digraph, for_each_graph, Shard, DIGRAPH_ENUM_CAP,
    UNDIRECTED_ENUM_CAP,
};
