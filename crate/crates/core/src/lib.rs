//! Minimum red dominating sets in convex bipartite graphs.
//!
//! Given a bipartite graph `G = (X, Y, E)`, a red dominating set is a subset
//! of `X` that touches every vertex of `Y`. For convex bipartite graphs in
//! interval form this crate labels `X` in linear time, counts the
//! minimum-cardinality red dominating sets exactly, and lists all of them
//! with bounded work per output. Exhaustive reference solvers, instance
//! generators and the pendant-attachment gadget for perfect elimination
//! bipartite graphs round it out.
//!
//! ```
//! use mcrd_core::{label_and_count, mcrd_summary, collect_mcrd, ConvexBipartiteGraph};
//!
//! let g = ConvexBipartiteGraph::from_intervals([(1, 1), (1, 2), (2, 3)], 3).unwrap();
//! let tables = label_and_count(&g).unwrap();
//! let summary = mcrd_summary(&g, &tables);
//! assert_eq!(summary.k, Some(2));
//! let (sets, _) = collect_mcrd(&g, &tables).unwrap();
//! assert_eq!(sets.len(), 2);
//! ```

pub mod enumeration;
pub mod error;
pub mod generators;
pub mod graph;
pub mod labeling;
pub mod oracle;
pub mod order;
pub mod reduction;
pub mod text;

pub use enumeration::{
    collect_mcrd, enumerate_mcrd, predecessor_candidates, EnumerationError, EnumerationIndex,
    EnumerationStats, VertexSet,
};
pub use error::{GraphError, Vertex};
pub use generators::{
    gen_extremal, gen_random_connected_bipartite, gen_random_convex, ExtremalParams,
    GeneratorError, LengthDistribution, RandomParams,
};
pub use graph::{
    intervals_from_adjacency, validate_connected, ConvexBipartiteGraph, GeneralBipartiteGraph,
    Interval, YAdjacency,
};
pub use labeling::{
    label_and_count, label_and_count_queue, mcrd_summary, unrestricted_count_sum, Label,
    LabelCountTables, McrdSummary,
};
pub use num_bigint::BigUint;
pub use oracle::{
    brute_force_mcrd, brute_force_mcrd_capped, is_red_dominating, max_y_degree, OracleError,
    OracleResult,
};
pub use order::{lex_convex_sort, OrderingPermutation};
pub use reduction::{
    attach_pendants, is_bisimplicial, lift_to_original, residual_edge_count, verify_pes,
    EliminationScheme, PesVerdict, ReductionError, ReductionResult,
};

/// Sorts `g` into lex-convex order, then labels, counts and summarizes it.
///
/// Returns the sorted graph and the permutation back to the input order
/// alongside the tables.
pub fn analyze(
    g: &ConvexBipartiteGraph,
) -> (
    ConvexBipartiteGraph,
    OrderingPermutation,
    LabelCountTables,
    McrdSummary,
) {
    let (sorted, perm) = lex_convex_sort(g);
    let tables = label_and_count(&sorted).expect("sorted graph is lex-convex");
    let summary = mcrd_summary(&sorted, &tables);
    (sorted, perm, tables, summary)
}
