//! Fixtures for the criterion benches.

use splitcut_core::generate::balanced_instance;
use splitcut_core::Graph;

/// Edge probability used by every bench instance.
pub const EDGE_PROB: f64 = 0.5;

pub fn instance(t: usize) -> Graph {
    balanced_instance(t, EDGE_PROB, 0x5eed + t as u64)
}
