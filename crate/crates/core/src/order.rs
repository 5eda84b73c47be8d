//! Lex-convex reordering of X-vertices.

use crate::graph::{ConvexBipartiteGraph, Interval};

/// Bijection between original X-indices and positions after reordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingPermutation {
    // new_of_old[old - 1] = new
    new_of_old: Vec<usize>,
    // old_of_new[new - 1] = old
    old_of_new: Vec<usize>,
}

impl OrderingPermutation {
    pub fn identity(n: usize) -> Self {
        let ids: Vec<usize> = (1..=n).collect();
        OrderingPermutation {
            new_of_old: ids.clone(),
            old_of_new: ids,
        }
    }

    /// Builds from `old_of_new`, the original index found at each new position.
    /// Returns `None` unless the input is a permutation of `1..=n`.
    pub fn from_old_of_new(old_of_new: Vec<usize>) -> Option<Self> {
        let n = old_of_new.len();
        let mut new_of_old = vec![0usize; n];
        for (pos, &old) in old_of_new.iter().enumerate() {
            if old == 0 || old > n || new_of_old[old - 1] != 0 {
                return None;
            }
            new_of_old[old - 1] = pos + 1;
        }
        Some(OrderingPermutation {
            new_of_old,
            old_of_new,
        })
    }

    pub fn len(&self) -> usize {
        self.old_of_new.len()
    }

    pub fn is_empty(&self) -> bool {
        self.old_of_new.is_empty()
    }

    /// Position of original vertex `old` after reordering.
    pub fn new_of(&self, old: usize) -> usize {
        self.new_of_old[old - 1]
    }

    /// Original index of the vertex now at position `new`.
    pub fn old_of(&self, new: usize) -> usize {
        self.old_of_new[new - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.old_of_new.iter().enumerate().all(|(i, &o)| o == i + 1)
    }
}

/// Stable counting sort of positions `order` by `key`, keys in `1..=max_key`.
fn counting_pass(order: &[usize], max_key: usize, key: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut start = vec![0usize; max_key + 2];
    for &i in order {
        start[key(i) + 1] += 1;
    }
    for k in 1..start.len() {
        start[k] += start[k - 1];
    }
    let mut out = vec![0usize; order.len()];
    for &i in order {
        let slot = &mut start[key(i)];
        out[*slot] = i;
        *slot += 1;
    }
    out
}

/// Reorders X so that intervals ascend by `(left, right)`.
///
/// LSD radix sort with two stable counting passes (right endpoint, then left
/// endpoint), `O(n_x + n_y)`. Vertices with identical intervals keep their
/// original relative order.
pub fn lex_convex_sort(g: &ConvexBipartiteGraph) -> (ConvexBipartiteGraph, OrderingPermutation) {
    let iv = g.intervals();
    let identity: Vec<usize> = (0..iv.len()).collect();
    let by_right = counting_pass(&identity, g.n_y(), |i| iv[i].right);
    let by_left = counting_pass(&by_right, g.n_y(), |i| iv[i].left);

    let sorted: Vec<Interval> = by_left.iter().map(|&i| iv[i]).collect();
    let perm = OrderingPermutation::from_old_of_new(by_left.iter().map(|&i| i + 1).collect())
        .expect("counting sort output is a permutation");
    let graph = ConvexBipartiteGraph::from_intervals(sorted, g.n_y())
        .expect("reordering preserves validity");
    (graph, perm)
}
