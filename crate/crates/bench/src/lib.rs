//! Instance builders shared by the benchmarks.

use mcrd_core::{gen_extremal, ConvexBipartiteGraph, ExtremalParams};

/// Number of blocks used by [`extremal_with_edges`]. Fixed so that counts
/// stay small integers while the edge count grows through the block size.
pub const SCALING_BLOCKS: usize = 8;

/// Extremal-family graph with roughly `edges` edges.
///
/// Each of the [`SCALING_BLOCKS`] blocks is `K_{b,b}` with
/// `b = round(sqrt(edges / blocks))`, plus one joining edge per block
/// boundary.
pub fn extremal_with_edges(edges: usize) -> ConvexBipartiteGraph {
    let per_block = (edges as f64 / SCALING_BLOCKS as f64).sqrt().round() as usize;
    let d = per_block.max(2) + 1;
    gen_extremal(ExtremalParams::new(d, SCALING_BLOCKS)).expect("valid extremal parameters")
}
