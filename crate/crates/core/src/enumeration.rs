//! Listing every minimum red dominating set of a labelled convex bipartite
//! graph.
//!
//! The search starts at each neighbour of `y_{n_y}` carrying label `k - 1`
//! and walks backwards through vertices whose label drops by one at every
//! step until it reaches label 0. Every branch of the search ends in an
//! output, so the work between two consecutive outputs is bounded by the
//! chain length `k` times the cost of finding the next candidate.

use thiserror::Error;

use crate::graph::{ConvexBipartiteGraph, YAdjacency};
use crate::labeling::{mcrd_summary, Label, LabelCountTables};

/// Set of X-vertices, ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Sorts and deduplicates `members`.
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Overwrites with the reverse of a strictly descending chain.
    fn fill_from_descending(&mut self, chain: &[usize]) {
        self.0.clear();
        self.0.extend(chain.iter().rev().copied());
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for x in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Sets passed to the consumer.
    pub outputs: u64,
    /// Search nodes visited, one per vertex placed on the chain.
    pub calls: u64,
    /// Candidate-list elements inspected.
    pub scan_steps: u64,
    /// Largest number of search nodes plus scan steps spent between two
    /// consecutive outputs (or before the first one).
    pub max_gap_work: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("no neighbour of the last Y-vertex has a finite label")]
    Infeasible,
    #[error("tables cover {tables} vertices but the graph has {graph}")]
    TableMismatch { tables: usize, graph: usize },
    #[error("x{0} has label {1}; predecessors exist only for finite labels above 0")]
    NoPredecessors(usize, Label),
}

/// Per-Y lists of the finitely labelled X-vertices, ordered by
/// `(label, index)`.
///
/// Labels are not monotone in X-index in general: for the intervals
/// `(1,1),(1,3),(2,2),(3,3),(3,4)` they are `0,0,1,2,1`. Ordering by label
/// first keeps the vertices of one label in a contiguous block, found by
/// binary search, with ascending indices inside the block.
pub struct EnumerationIndex<'a> {
    graph: &'a ConvexBipartiteGraph,
    tables: &'a LabelCountTables,
    lists: YAdjacency,
}

impl<'a> EnumerationIndex<'a> {
    pub fn new(
        graph: &'a ConvexBipartiteGraph,
        tables: &'a LabelCountTables,
    ) -> Result<Self, EnumerationError> {
        if tables.len() != graph.n_x() {
            return Err(EnumerationError::TableMismatch {
                tables: tables.len(),
                graph: graph.n_x(),
            });
        }
        let lists = YAdjacency::build_ordered(graph, &label_order(tables));
        Ok(EnumerationIndex {
            graph,
            tables,
            lists,
        })
    }

    /// Range within the list of `y_{left(x)-1}` that holds vertices labelled
    /// `label(x) - 1`. The caller filters it with [`Self::accepts`].
    fn candidate_block(&self, x: usize) -> &[usize] {
        let target = Label::finite(self.tables.label(x).value().expect("finite label") - 1);
        let list = self.lists.neighbours(self.graph.left(x) - 1);
        let lo = list.partition_point(|&u| self.tables.label(u) < target);
        let hi = lo + list[lo..].partition_point(|&u| self.tables.label(u) <= target);
        &list[lo..hi]
    }

    /// `u < x` and `right(u) < right(x)`; the list membership already gives
    /// `left(u) <= left(x) - 1 <= right(u)`.
    fn accepts(&self, u: usize, x: usize) -> bool {
        u < x && self.graph.right(u) < self.graph.right(x)
    }

    /// Vertices that can precede `x` in a minimum red dominating set,
    /// ascending: `u < x`, `left(u) <= left(x) - 1 <= right(u) < right(x)` and
    /// `label(u) = label(x) - 1`.
    pub fn predecessors(&self, x: usize) -> Result<Vec<usize>, EnumerationError> {
        let label = self.tables.label(x);
        match label.value() {
            Some(v) if v > 0 => {}
            _ => return Err(EnumerationError::NoPredecessors(x, label)),
        }
        let block = self.candidate_block(x);
        Ok(block
            .iter()
            .copied()
            .filter(|&u| self.accepts(u, x))
            .collect())
    }
}

/// Finitely labelled vertices sorted stably by label, in `O(n_x + k)`.
fn label_order(tables: &LabelCountTables) -> Vec<usize> {
    let max = tables.labels().iter().filter_map(|l| l.value()).max();
    let Some(max) = max else {
        return Vec::new();
    };
    let mut start = vec![0usize; max as usize + 2];
    for v in tables.labels().iter().filter_map(|l| l.value()) {
        start[v as usize + 1] += 1;
    }
    for i in 1..start.len() {
        start[i] += start[i - 1];
    }
    let mut order = vec![0usize; start[max as usize + 1]];
    for (i, l) in tables.labels().iter().enumerate() {
        if let Some(v) = l.value() {
            order[start[v as usize]] = i + 1;
            start[v as usize] += 1;
        }
    }
    order
}

/// See [`EnumerationIndex::predecessors`].
pub fn predecessor_candidates(
    g: &ConvexBipartiteGraph,
    tables: &LabelCountTables,
    x: usize,
) -> Result<Vec<usize>, EnumerationError> {
    EnumerationIndex::new(g, tables)?.predecessors(x)
}

/// One level of the backward search: the chain vertex and the cursor into
/// its candidate block.
struct Frame<'b> {
    vertex: usize,
    block: &'b [usize],
    pos: usize,
}

/// Passes every minimum red dominating set of `g` to `consumer`.
///
/// Roots are taken in ascending index order and candidates at each level in
/// ascending index order. The set handed to `consumer` is a reused buffer;
/// copy it to keep it. `tables` must come from labelling `g`.
pub fn enumerate_mcrd<F>(
    g: &ConvexBipartiteGraph,
    tables: &LabelCountTables,
    mut consumer: F,
) -> Result<EnumerationStats, EnumerationError>
where
    F: FnMut(&VertexSet),
{
    let index = EnumerationIndex::new(g, tables)?;
    let k = mcrd_summary(g, tables)
        .k
        .ok_or(EnumerationError::Infeasible)?;
    let root_label = Label::finite((k - 1) as u32);
    let n_y = g.n_y();

    let mut stats = EnumerationStats::default();
    let mut gap = 0u64;
    let mut emit =
        |chain: &[usize], out: &mut VertexSet, stats: &mut EnumerationStats, gap: &mut u64| {
            out.fill_from_descending(chain);
            consumer(out);
            stats.outputs += 1;
            stats.max_gap_work = stats.max_gap_work.max(*gap);
            *gap = 0;
        };

    let mut out = VertexSet(Vec::with_capacity(k));
    let mut chain: Vec<usize> = Vec::with_capacity(k);
    let mut stack: Vec<Frame<'_>> = Vec::with_capacity(k);

    let last = index.lists.neighbours(n_y);
    let lo = last.partition_point(|&x| tables.label(x) < root_label);
    let hi = lo + last[lo..].partition_point(|&x| tables.label(x) <= root_label);
    for &root in &last[lo..hi] {
        stats.calls += 1;
        gap += 1;
        chain.push(root);
        if root_label.value() == Some(0) {
            emit(&chain, &mut out, &mut stats, &mut gap);
            chain.pop();
            continue;
        }
        let block = index.candidate_block(root);
        stack.push(Frame {
            vertex: root,
            block,
            pos: 0,
        });

        while let Some(frame) = stack.last_mut() {
            let x = frame.vertex;
            let mut found = None;
            while frame.pos < frame.block.len() {
                let u = frame.block[frame.pos];
                frame.pos += 1;
                stats.scan_steps += 1;
                gap += 1;
                if index.accepts(u, x) {
                    found = Some(u);
                    break;
                }
            }
            match found {
                Some(u) => {
                    stats.calls += 1;
                    gap += 1;
                    chain.push(u);
                    if tables.label(u).value() == Some(0) {
                        emit(&chain, &mut out, &mut stats, &mut gap);
                        chain.pop();
                    } else {
                        let block = index.candidate_block(u);
                        stack.push(Frame {
                            vertex: u,
                            block,
                            pos: 0,
                        });
                    }
                }
                None => {
                    stack.pop();
                    chain.pop();
                }
            }
        }
    }
    Ok(stats)
}

/// Collects every minimum red dominating set in emission order.
pub fn collect_mcrd(
    g: &ConvexBipartiteGraph,
    tables: &LabelCountTables,
) -> Result<(Vec<VertexSet>, EnumerationStats), EnumerationError> {
    let mut sets = Vec::new();
    let stats = enumerate_mcrd(g, tables, |s| sets.push(s.clone()))?;
    Ok((sets, stats))
}
