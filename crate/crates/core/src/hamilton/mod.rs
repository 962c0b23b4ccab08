//! Hamilton cycles: exact search, longest cycles, augmentation merges, a
//! constructive solver and the extremal-structure analyzer.

mod analyze;
mod constructive;
mod cycles;
mod exact;
mod merge;

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

pub use analyze::{
    analyze_structure, Analysis, ClaimCheck, ClaimKind, EdgeType, EdgeTypeTally, StructureDecomposition, StructureReport,
    ANALYZE_CAP,
};
pub use constructive::{constructive_solve, ConstructiveResult, TraceStep};
pub use cycles::{
    all_longest_cycles, longest_alternating_cycle, longest_cycle, longest_paths, LONGEST_CAP,
};
pub use exact::{
    find_alternating_hamilton_cycle, find_hamilton_cycle, find_hamilton_cycle_with, find_undirected_hamilton_cycle,
    is_hamiltonian, validate_directed_cycle, EXACT_CAP,
};
pub use merge::{
    merge_cycle_into_cycle, merge_path_into_cycle, CycleMergeOutcome, PairCertificate, PathCertificate,
    PathMergeOutcome,
};

/// Cooperative cancellation flag shared between a caller and a search.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}
