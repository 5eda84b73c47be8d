//! Breadth-first labelling of X-vertices and exact counting of minimum red
//! dominating sets.
//!
//! A vertex `v` receives label `a` when it extends a chain of `a` earlier
//! vertices whose intervals tile `y1..=right(v)` without nesting. The count
//! of `v` is the number of such shortest chains ending in `v`. Both arrays are
//! filled in `O(n_x + n_y + |E|)`.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::GraphError;
use crate::graph::ConvexBipartiteGraph;

/// Label of an X-vertex: a chain length, or unreachable.
///
/// Ordered so that [`Label::UNREACHABLE`] compares greater than every finite
/// label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(u32);

impl Label {
    pub const UNREACHABLE: Label = Label(u32::MAX);

    pub fn finite(value: u32) -> Self {
        assert!(value != u32::MAX, "label value out of range");
        Label(value)
    }

    pub fn is_finite(self) -> bool {
        self != Self::UNREACHABLE
    }

    pub fn value(self) -> Option<u32> {
        self.is_finite().then_some(self.0)
    }

    fn succ(self) -> Label {
        Label::finite(self.0 + 1)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

/// Per-vertex labels and counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelCountTables {
    labels: Vec<Label>,
    counts: Vec<BigUint>,
    scan_steps: u64,
}

impl LabelCountTables {
    pub fn label(&self, x: usize) -> Label {
        self.labels[x - 1]
    }

    pub fn count(&self, x: usize) -> &BigUint {
        &self.counts[x - 1]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Candidate-list elements inspected while labelling. Bounded by `|E|`.
    pub fn scan_steps(&self) -> u64 {
        self.scan_steps
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Minimum cardinality `k` and the number of minimum red dominating sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McrdSummary {
    /// `None` when no red dominating set exists.
    pub k: Option<usize>,
    pub total: BigUint,
}

impl McrdSummary {
    pub fn is_feasible(&self) -> bool {
        self.k.is_some()
    }
}

/// Assigns labels and counts to every X-vertex of a lex-convex ordered graph.
///
/// `x_j` extends `x` when `left(x) < left(x_j) <= right(x)+1 <= right(x_j)`;
/// vertices of `N(y1)` get label 0 and count 1, every other reachable vertex
/// gets one more than the smallest label among the vertices it extends, and
/// its count is the sum of their counts at that smallest label.
///
/// Such an `x` always has `right(x) < right(x_j)`, so the tables are filled
/// column by column: when column `c` is reached, every vertex with
/// `right = c - 1` is final. Those vertices form a list ordered by left
/// endpoint, so one merge against `N(y_c)` (also ordered by left endpoint)
/// settles all their extensions. Each element of `N(y_c)` is inspected
/// once, giving `O(n_x + n_y + |E|)` time with at most `|E|` scan steps,
/// and `O(n_x + n_y)` extra space.
///
/// The output equals that of the queue-driven procedure in
/// [`label_and_count_queue`].
pub fn label_and_count(g: &ConvexBipartiteGraph) -> Result<LabelCountTables, GraphError> {
    if let Some(i) = g.first_lex_violation() {
        return Err(GraphError::NotLexConvex(i));
    }
    let n_x = g.n_x();
    let n_y = g.n_y();

    // Vertices grouped by right endpoint, ascending index within a group.
    let mut ending_start = vec![0usize; n_y + 2];
    for iv in g.intervals() {
        ending_start[iv.right + 1] += 1;
    }
    for r in 1..ending_start.len() {
        ending_start[r] += ending_start[r - 1];
    }
    let mut ending = vec![0usize; n_x];
    let mut fill = ending_start.clone();
    for (i, iv) in g.intervals().iter().enumerate() {
        ending[fill[iv.right]] = i + 1;
        fill[iv.right] += 1;
    }

    // `N(y_c)` is kept as a doubly linked list in index order. Slot 0 is the
    // sentinel. Vertices join in index order as their left endpoint is
    // reached, so appending at the tail preserves the order.
    let mut next = vec![0usize; n_x + 1];
    let mut prev = vec![0usize; n_x + 1];
    let mut joined = 0;
    let mut join_up_to = |c: usize, next: &mut [usize], prev: &mut [usize]| {
        while joined < n_x && g.left(joined + 1) <= c {
            joined += 1;
            let tail = prev[0];
            next[tail] = joined;
            prev[joined] = tail;
            next[joined] = 0;
            prev[0] = joined;
        }
    };

    let mut labels = vec![Label::UNREACHABLE; n_x];
    let mut counts = vec![BigUint::zero(); n_x];
    join_up_to(1, &mut next, &mut prev);
    let mut x = next[0];
    while x != 0 {
        labels[x - 1] = Label::finite(0);
        counts[x - 1] = BigUint::one();
        x = next[x];
    }

    let mut scan_steps = 0u64;
    let mut preds = Vec::new();
    // Smallest label over the merged prefix of `preds`, and the summed counts
    // of the prefix vertices carrying it.
    let mut best_count = BigUint::zero();
    for c in 2..=n_y {
        let finished = &ending[ending_start[c - 1]..ending_start[c]];
        for &u in finished {
            next[prev[u]] = next[u];
            prev[next[u]] = prev[u];
        }
        join_up_to(c, &mut next, &mut prev);
        preds.clear();
        preds.extend(
            finished
                .iter()
                .copied()
                .filter(|&u| labels[u - 1].is_finite()),
        );
        if preds.is_empty() {
            continue;
        }
        let mut p = 0;
        let mut best = Label::UNREACHABLE;
        best_count.set_zero();
        let mut xj = next[0];
        while xj != 0 {
            scan_steps += 1;
            let lj = g.left(xj);
            while p < preds.len() && g.left(preds[p]) < lj {
                let u = preds[p];
                let lu = labels[u - 1];
                if lu < best {
                    best = lu;
                    best_count.clone_from(&counts[u - 1]);
                } else if lu == best {
                    best_count += &counts[u - 1];
                }
                p += 1;
            }
            if p > 0 {
                let label = best.succ();
                let slot = &mut labels[xj - 1];
                if label < *slot {
                    *slot = label;
                    counts[xj - 1].clone_from(&best_count);
                } else if label == *slot {
                    counts[xj - 1] += &best_count;
                }
            }
            xj = next[xj];
        }
    }

    Ok(LabelCountTables {
        labels,
        counts,
        scan_steps,
    })
}

/// Queue-driven labelling, step for step as originally formulated.
///
/// Each dequeued `x` inspects all of `N(y_{right(x)+1})`, so the scan count
/// is `sum over x of deg(y_{right(x)+1})`, which can exceed `|E|` when many
/// vertices share a right endpoint. Kept as a reference for
/// [`label_and_count`].
pub fn label_and_count_queue(g: &ConvexBipartiteGraph) -> Result<LabelCountTables, GraphError> {
    if let Some(i) = g.first_lex_violation() {
        return Err(GraphError::NotLexConvex(i));
    }
    let n_x = g.n_x();
    let n_y = g.n_y();
    let y_adj = g.y_adjacency();

    let mut labels = vec![Label::UNREACHABLE; n_x];
    let mut counts = vec![BigUint::zero(); n_x];
    let mut queued = vec![false; n_x];
    let mut queue = VecDeque::with_capacity(n_x);
    let mut scan_steps = 0u64;

    for &x in y_adj.neighbours(1) {
        labels[x - 1] = Label::finite(0);
        counts[x - 1] = BigUint::one();
        queued[x - 1] = true;
        queue.push_back(x);
    }

    while let Some(x) = queue.pop_front() {
        queued[x - 1] = false;
        let iv = g.interval(x);
        if iv.right == n_y {
            continue;
        }
        let next = labels[x - 1].succ();
        for &xj in y_adj.neighbours(iv.right + 1) {
            scan_steps += 1;
            if xj <= x || g.left(xj) <= iv.left || labels[xj - 1] < next {
                continue;
            }
            if labels[xj - 1] > next && !queued[xj - 1] {
                queued[xj - 1] = true;
                queue.push_back(xj);
            }
            labels[xj - 1] = next;
            let (lo, hi) = counts.split_at_mut(xj - 1);
            hi[0] += &lo[x - 1];
        }
    }

    Ok(LabelCountTables {
        labels,
        counts,
        scan_steps,
    })
}

/// Minimum red dominating set cardinality and count.
///
/// `k - 1` is the smallest label among neighbours of `y_{n_y}`. The total sums
/// counts only over those neighbours carrying that smallest label: a neighbour
/// with a larger finite label counts chains that dominate Y with more than `k`
/// vertices.
pub fn mcrd_summary(g: &ConvexBipartiteGraph, tables: &LabelCountTables) -> McrdSummary {
    let last = last_column(g);
    let best = last.iter().map(|&x| tables.label(x)).min();
    match best.and_then(Label::value) {
        None => McrdSummary {
            k: None,
            total: BigUint::zero(),
        },
        Some(v) => {
            let total = last
                .iter()
                .filter(|&&x| tables.label(x).value() == Some(v))
                .map(|&x| tables.count(x))
                .sum();
            McrdSummary {
                k: Some(v as usize + 1),
                total,
            }
        }
    }
}

/// Sum of counts over every neighbour of `y_{n_y}`, regardless of label.
///
/// Exceeds the number of minimum sets whenever some neighbour of `y_{n_y}`
/// has a finite label above `k - 1`. Kept for comparison only.
pub fn unrestricted_count_sum(g: &ConvexBipartiteGraph, tables: &LabelCountTables) -> BigUint {
    last_column(g).iter().map(|&x| tables.count(x)).sum()
}

fn last_column(g: &ConvexBipartiteGraph) -> Vec<usize> {
    let n_y = g.n_y();
    // Neighbours of y_{n_y} are exactly the intervals reaching n_y.
    (1..=g.n_x()).filter(|&x| g.right(x) == n_y).collect()
}
