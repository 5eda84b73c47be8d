//! Deterministic instance generators.
//!
//! Random generators draw from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a `(params, seed)` pair always yields the same graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{ConvexBipartiteGraph, GeneralBipartiteGraph, Interval};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// Parameters of the chained complete-bipartite family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalParams {
    /// Target maximum Y-degree; each block is `K_{d-1,d-1}`.
    pub d: usize,
    /// Number of blocks.
    pub k: usize,
    /// Drop the joining edges and use blocks `K_{d,d}` instead. The blocks
    /// are then separate components, every Y-vertex has degree `d`, and the
    /// graph has `d^k` minimum red dominating sets.
    pub disconnected: bool,
}

impl ExtremalParams {
    pub fn new(d: usize, k: usize) -> Self {
        ExtremalParams {
            d,
            k,
            disconnected: false,
        }
    }

    fn validate(&self) -> Result<(), GeneratorError> {
        if self.d < 2 || self.k < 1 {
            return Err(GeneratorError::InvalidParams(format!(
                "need d >= 2 and k >= 1, got d={} k={}",
                self.d, self.k
            )));
        }
        if self.d == 2 && self.k > 1 && !self.disconnected {
            // Single-vertex blocks: the joined vertices swallow their
            // neighbours' intervals and k shrinks.
            return Err(GeneratorError::InvalidParams(
                "the chained family needs d >= 3 when k > 1".into(),
            ));
        }
        Ok(())
    }
}

/// Chain of `k` blocks `K_{d-1,d-1}` on consecutive Y-ranges.
///
/// For `i < k` the first X-vertex of block `i + 1` is also joined to the last
/// Y-vertex of block `i`, which raises that Y-vertex to degree `d`. Every
/// minimum red dominating set takes exactly one X-vertex per block, giving
/// `(d-1)^k` of them. The output is already in lex-convex order.
pub fn gen_extremal(p: ExtremalParams) -> Result<ConvexBipartiteGraph, GeneratorError> {
    p.validate()?;
    let b = if p.disconnected { p.d } else { p.d - 1 };
    let mut intervals = Vec::with_capacity(p.k * b);
    for block in 0..p.k {
        let first_y = block * b + 1;
        let last_y = first_y + b - 1;
        for j in 0..b {
            let left = if j == 0 && block > 0 && !p.disconnected {
                first_y - 1
            } else {
                first_y
            };
            intervals.push(Interval::new(left, last_y));
        }
    }
    ConvexBipartiteGraph::from_intervals(intervals, p.k * b)
        .map_err(|e| GeneratorError::InvalidParams(e.to_string()))
}

/// Distribution of interval lengths for [`gen_random_convex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthDistribution {
    /// Uniform on `1..=max`.
    Uniform { max: usize },
    /// Geometric with continuation probability `num/den`, capped at `n_y`.
    Geometric { num: u32, den: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomParams {
    pub n_x: usize,
    pub n_y: usize,
    pub seed: u64,
    /// Interval lengths for convex graphs.
    pub lengths: LengthDistribution,
    /// Probability of each non-skeleton edge for general graphs.
    pub edge_probability: f64,
}

impl RandomParams {
    pub fn new(n_x: usize, n_y: usize, seed: u64) -> Self {
        RandomParams {
            n_x,
            n_y,
            seed,
            lengths: LengthDistribution::Uniform { max: n_y.max(1) },
            edge_probability: 0.3,
        }
    }

    fn validate(&self) -> Result<(), GeneratorError> {
        if self.n_x == 0 || self.n_y == 0 {
            return Err(GeneratorError::InvalidParams(format!(
                "need n_x, n_y >= 1, got n_x={} n_y={}",
                self.n_x, self.n_y
            )));
        }
        match self.lengths {
            LengthDistribution::Uniform { max: 0 } => {
                return Err(GeneratorError::InvalidParams(
                    "max length must be >= 1".into(),
                ))
            }
            LengthDistribution::Geometric { num, den } if den == 0 || num >= den => {
                return Err(GeneratorError::InvalidParams(
                    "geometric ratio must lie in [0, 1)".into(),
                ))
            }
            _ => {}
        }
        if !(0.0..=1.0).contains(&self.edge_probability) {
            return Err(GeneratorError::InvalidParams(
                "edge probability must lie in [0, 1]".into(),
            ));
        }
        Ok(())
    }
}

/// Random convex bipartite graph, X in arbitrary (unsorted) order.
///
/// Each interval gets a uniform left endpoint and a length from
/// `p.lengths`, clipped to `n_y`. Any Y-vertex left uncovered is then patched
/// by stretching a randomly chosen interval to reach it.
pub fn gen_random_convex(p: RandomParams) -> Result<ConvexBipartiteGraph, GeneratorError> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let n_y = p.n_y;
    let mut intervals: Vec<Interval> = (0..p.n_x)
        .map(|_| {
            let left = rng.random_range(1..=n_y);
            let len = match p.lengths {
                LengthDistribution::Uniform { max } => rng.random_range(1..=max),
                LengthDistribution::Geometric { num, den } => {
                    let mut len = 1;
                    while len < n_y && rng.random_ratio(num, den) {
                        len += 1;
                    }
                    len
                }
            };
            Interval::new(left, (left + len - 1).min(n_y))
        })
        .collect();

    let mut covered = vec![false; n_y + 1];
    for iv in &intervals {
        covered[iv.left..=iv.right].fill(true);
    }
    for y in 1..=n_y {
        if covered[y] {
            continue;
        }
        let iv = &mut intervals[rng.random_range(0..p.n_x)];
        iv.left = iv.left.min(y);
        iv.right = iv.right.max(y);
        covered[iv.left..=iv.right].fill(true);
    }
    ConvexBipartiteGraph::from_intervals(intervals, n_y)
        .map_err(|e| GeneratorError::InvalidParams(e.to_string()))
}

/// Random connected bipartite graph without isolated vertices.
///
/// A random spanning tree is grown first: starting from the edge `x1 y1`,
/// the remaining vertices are added in shuffled order, each attached to a
/// uniformly chosen vertex already placed on the other side. Every other
/// X-Y pair then becomes an edge with probability `p.edge_probability`.
pub fn gen_random_connected_bipartite(
    p: RandomParams,
) -> Result<GeneralBipartiteGraph, GeneratorError> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut edge = vec![vec![false; p.n_y]; p.n_x];
    edge[0][0] = true;

    enum Side {
        X(usize),
        Y(usize),
    }
    let mut pending: Vec<Side> = (1..p.n_x)
        .map(Side::X)
        .chain((1..p.n_y).map(Side::Y))
        .collect();
    pending.shuffle(&mut rng);
    let mut placed_x = vec![0usize];
    let mut placed_y = vec![0usize];
    for v in pending {
        match v {
            Side::X(i) => {
                let j = placed_y[rng.random_range(0..placed_y.len())];
                edge[i][j] = true;
                placed_x.push(i);
            }
            Side::Y(j) => {
                let i = placed_x[rng.random_range(0..placed_x.len())];
                edge[i][j] = true;
                placed_y.push(j);
            }
        }
    }
    for row in edge.iter_mut() {
        for e in row.iter_mut() {
            if !*e && rng.random_bool(p.edge_probability) {
                *e = true;
            }
        }
    }
    let adj = edge
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter_map(|(j, e)| e.then_some(j + 1))
                .collect()
        })
        .collect();
    GeneralBipartiteGraph::new(p.n_y, adj).map_err(|e| GeneratorError::InvalidParams(e.to_string()))
}
