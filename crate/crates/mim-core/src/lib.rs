//! Maximum induced matching for bipartite Star123-free graphs.
//!
//! The pipeline builds the canonical decomposition tree of a bipartite graph
//! (K+S, parallel and series splits, prime shape classification) and folds a
//! maximum induced matching over it in time linear in the tree size. Graphs
//! outside the class are recognized and rejected in the same pass. The crate
//! also ships an exponential brute-force oracle and a seeded instance
//! generator so the fast path can be checked differentially.

pub mod decompose;
pub mod format;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod solver;

pub use decompose::{
    classify_prime, decompose, ks_split, reconstruct, render_tree, tree_to_dot, validate_tree,
    DecompNode, DecomposeError, NodeKind, PrimeShape, ShapeForm,
};
pub use graph::{BipartiteGraph, Color, GraphError, VertexSet};
pub use matching::InducedMatching;
pub use solver::{max_induced_matching, solve, solve_with_stats, MimError, SolveError};
