//! Degree-sum Hamiltonicity for digraphs and for matching-alternating
//! cycles in balanced bipartite graphs.
//!
//! The crate provides graph values and canonical codes ([`graph`]), text
//! formats ([`codec`]), the digraph/bipartite correspondence
//! ([`correspondence`]), degree-condition checkers ([`conditions`]), exact and
//! constructive solvers with a structure analyzer ([`hamilton`]), the
//! exceptional families ([`families`]) and enumeration campaigns
//! ([`verifier`]).

pub mod codec;
pub mod conditions;
pub mod correspondence;
pub mod error;
pub mod families;
pub mod graph;
pub mod hamilton;
pub mod par;
pub mod verifier;

pub use error::{Error, Result};
