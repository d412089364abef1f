//! Shared helpers for the pipeline benchmarks.

use mim_core::generate::{gen_graph, GenConfig};
use mim_core::BipartiteGraph;

/// Deterministic benchmark instance of the given vertex count.
pub fn instance(seed: u64, n: usize) -> BipartiteGraph {
    gen_graph(&GenConfig::new(seed, n)).expect("benchmark instance generates")
}
