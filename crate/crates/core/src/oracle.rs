//! Exhaustive reference solver for arbitrary bipartite graphs.

use thiserror::Error;

use crate::enumeration::VertexSet;
use crate::graph::GeneralBipartiteGraph;

pub const DEFAULT_MAX_X: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("x{x} is out of range 1..={n_x}")]
    IndexOutOfRange { x: usize, n_x: usize },
    #[error("{n_x} X-vertices exceed the exhaustive search cap of {cap}")]
    TooLarge { n_x: usize, cap: usize },
    #[error("no subset of X dominates Y")]
    Infeasible,
}

/// Minimum cardinality together with every red dominating set of that size,
/// in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub k: usize,
    pub sets: Vec<VertexSet>,
}

/// True iff every Y-vertex has a neighbour in `d`.
pub fn is_red_dominating(g: &GeneralBipartiteGraph, d: &VertexSet) -> Result<bool, OracleError> {
    let mut covered = vec![false; g.n_y()];
    for &x in d.members() {
        if x == 0 || x > g.n_x() {
            return Err(OracleError::IndexOutOfRange { x, n_x: g.n_x() });
        }
        for &y in g.neighbours(x) {
            covered[y - 1] = true;
        }
    }
    Ok(covered.into_iter().all(|c| c))
}

pub fn max_y_degree(g: &GeneralBipartiteGraph) -> usize {
    g.max_y_degree()
}

/// Y-coverage bitmask.
#[derive(Clone, PartialEq, Eq)]
struct Mask(Vec<u64>);

impl Mask {
    fn empty(n: usize) -> Self {
        Mask(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut m = Self::empty(n);
        for i in 0..n {
            m.0[i / 64] |= 1 << (i % 64);
        }
        m
    }

    fn or_into(&self, other: &Mask, out: &mut Mask) {
        for ((o, a), b) in out.0.iter_mut().zip(&self.0).zip(&other.0) {
            *o = a | b;
        }
    }
}

/// Tries cardinalities 1, 2, ... and returns the first one with a dominating
/// subset, along with all dominating subsets of that size in lexicographic
/// order. Refuses graphs with more than `cap` X-vertices.
pub fn brute_force_mcrd_capped(
    g: &GeneralBipartiteGraph,
    cap: usize,
) -> Result<OracleResult, OracleError> {
    let n_x = g.n_x();
    if n_x > cap {
        return Err(OracleError::TooLarge { n_x, cap });
    }
    let n_y = g.n_y();
    let target = Mask::full(n_y);
    let masks: Vec<Mask> = (1..=n_x)
        .map(|x| {
            let mut m = Mask::empty(n_y);
            for &y in g.neighbours(x) {
                m.0[(y - 1) / 64] |= 1 << ((y - 1) % 64);
            }
            m
        })
        .collect();

    for c in 1..=n_x {
        let sets = dominating_subsets(&masks, c, &target);
        if !sets.is_empty() {
            return Ok(OracleResult { k: c, sets });
        }
    }
    Err(OracleError::Infeasible)
}

pub fn brute_force_mcrd(g: &GeneralBipartiteGraph) -> Result<OracleResult, OracleError> {
    brute_force_mcrd_capped(g, DEFAULT_MAX_X)
}

/// All `c`-subsets (lexicographic) whose masks OR to `target`.
fn dominating_subsets(masks: &[Mask], c: usize, target: &Mask) -> Vec<VertexSet> {
    let n = masks.len();
    let mut out = Vec::new();
    // idx[i] is the 0-based vertex at depth i; prefix[i + 1] the OR of the
    // first i + 1 chosen masks.
    let mut idx: Vec<usize> = (0..c).collect();
    let mut prefix = vec![Mask::empty(target.0.len() * 64); c + 1];
    for i in 0..c {
        let (lo, hi) = prefix.split_at_mut(i + 1);
        lo[i].or_into(&masks[idx[i]], &mut hi[0]);
    }
    loop {
        if prefix[c] == *target {
            out.push(VertexSet::new(idx.iter().map(|i| i + 1).collect()));
        }
        // Advance to the next combination.
        let Some(i) = (0..c).rev().find(|&i| idx[i] < n - c + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..c {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..c {
            let (lo, hi) = prefix.split_at_mut(j + 1);
            lo[j].or_into(&masks[idx[j]], &mut hi[0]);
        }
    }
}
