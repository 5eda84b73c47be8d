//! Bipartite graph representations.
//!
//! All vertex indices are 1-based: `x1..=xn_x` and `y1..=yn_y`. Vectors are
//! stored 0-based internally and every accessor translates.

use crate::error::{GraphError, Vertex};

/// Closed range `left..=right` of Y-indices forming the neighbourhood of an
/// X-vertex in a convex bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub left: usize,
    pub right: usize,
}

impl Interval {
    pub fn new(left: usize, right: usize) -> Self {
        Interval { left, right }
    }

    pub fn len(&self) -> usize {
        self.right + 1 - self.left
    }

    pub fn is_empty(&self) -> bool {
        self.left > self.right
    }

    pub fn contains(&self, y: usize) -> bool {
        self.left <= y && y <= self.right
    }

    /// `other` lies inside `self`.
    pub fn covers(&self, other: &Interval) -> bool {
        self.left <= other.left && other.right <= self.right
    }
}

impl From<(usize, usize)> for Interval {
    fn from((left, right): (usize, usize)) -> Self {
        Interval { left, right }
    }
}

/// Bipartite graph stored as one ascending neighbour list per X-vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralBipartiteGraph {
    n_y: usize,
    adj: Vec<Vec<usize>>,
}

impl GeneralBipartiteGraph {
    /// Checks that every neighbour lies in `1..=n_y` and that each list is
    /// strictly ascending. Isolated vertices are allowed here; operations that
    /// cannot handle them reject them.
    pub fn new(n_y: usize, adj: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        for (i, list) in adj.iter().enumerate() {
            let x = i + 1;
            for &y in list {
                if y == 0 || y > n_y {
                    return Err(GraphError::NeighbourOutOfRange { x, y, n_y });
                }
            }
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(GraphError::UnsortedNeighbours(x));
            }
        }
        Ok(GeneralBipartiteGraph { n_y, adj })
    }

    /// Builds from an edge list of `(x, y)` pairs; duplicates are merged.
    pub fn from_edges(
        n_x: usize,
        n_y: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n_x];
        for (x, y) in edges {
            if x == 0 || x > n_x {
                return Err(GraphError::XOutOfRange { x, n_x });
            }
            adj[x - 1].push(y);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Self::new(n_y, adj)
    }

    pub fn n_x(&self) -> usize {
        self.adj.len()
    }

    pub fn n_y(&self) -> usize {
        self.n_y
    }

    /// Ascending Y-neighbours of `x`.
    pub fn neighbours(&self, x: usize) -> &[usize] {
        &self.adj[x - 1]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x >= 1 && x <= self.n_x() && self.adj[x - 1].binary_search(&y).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().map(move |&y| (i + 1, y)))
    }

    /// Ascending X-neighbours of every Y-vertex, indexed `[y - 1]`.
    pub fn y_neighbours(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n_y];
        for (x, y) in self.edges() {
            out[y - 1].push(x);
        }
        out
    }

    /// First isolated vertex, X-side checked before Y-side.
    pub fn find_isolated(&self) -> Option<Vertex> {
        if let Some(i) = self.adj.iter().position(Vec::is_empty) {
            return Some(Vertex::X(i + 1));
        }
        let mut seen = vec![false; self.n_y];
        for (_, y) in self.edges() {
            seen[y - 1] = true;
        }
        seen.iter().position(|s| !s).map(|j| Vertex::Y(j + 1))
    }

    /// Maximum degree over Y-vertices.
    pub fn max_y_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n_y];
        for (_, y) in self.edges() {
            deg[y - 1] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }
}

/// True iff the graph on `X ∪ Y` is connected. An empty vertex set counts as
/// connected; any isolated vertex makes a graph with more than one vertex
/// disconnected.
pub fn validate_connected(g: &GeneralBipartiteGraph) -> bool {
    let n_x = g.n_x();
    let total = n_x + g.n_y();
    if total <= 1 {
        return true;
    }
    // Vertex ids: X-vertices 0..n_x, Y-vertices n_x..n_x+n_y.
    let y_adj = g.y_neighbours();
    let mut seen = vec![false; total];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        let push = |u: usize, seen: &mut Vec<bool>, stack: &mut Vec<usize>, reached: &mut usize| {
            if !seen[u] {
                seen[u] = true;
                *reached += 1;
                stack.push(u);
            }
        };
        if v < n_x {
            for &y in g.neighbours(v + 1) {
                push(n_x + y - 1, &mut seen, &mut stack, &mut reached);
            }
        } else {
            for &x in &y_adj[v - n_x] {
                push(x - 1, &mut seen, &mut stack, &mut reached);
            }
        }
    }
    reached == total
}

/// Reads the interval table off a bipartite graph whose Y-vertices are
/// already in a convex order.
///
/// One sweep over `y1..yn_y` records the first Y seen for every neighbour
/// as its left endpoint and the last one as its right endpoint; a vertex whose
/// degree differs from the length of that range has a gap.
pub fn intervals_from_adjacency(
    g: &GeneralBipartiteGraph,
) -> Result<ConvexBipartiteGraph, GraphError> {
    if g.n_x() == 0 {
        return Err(GraphError::NoVertices);
    }
    if g.n_y() == 0 {
        return Err(GraphError::NoYVertices);
    }
    if let Some(i) = g.adjacency().iter().position(Vec::is_empty) {
        return Err(GraphError::IsolatedVertex(Vertex::X(i + 1)));
    }
    let y_adj = g.y_neighbours();
    let mut left = vec![0usize; g.n_x()];
    let mut right = vec![0usize; g.n_x()];
    for (j, xs) in y_adj.iter().enumerate() {
        for &x in xs {
            if left[x - 1] == 0 {
                left[x - 1] = j + 1;
            }
            right[x - 1] = j + 1;
        }
    }
    let mut intervals = Vec::with_capacity(g.n_x());
    for (i, (&l, &r)) in left.iter().zip(&right).enumerate() {
        if r + 1 - l != g.neighbours(i + 1).len() {
            return Err(GraphError::NotConvex(i + 1));
        }
        intervals.push(Interval::new(l, r));
    }
    if let Some(j) = y_adj.iter().position(Vec::is_empty) {
        return Err(GraphError::IsolatedVertex(Vertex::Y(j + 1)));
    }
    ConvexBipartiteGraph::from_intervals(intervals, g.n_y())
}

/// Convex bipartite graph in neighbourhood-table form: one interval per
/// X-vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexBipartiteGraph {
    n_y: usize,
    intervals: Vec<Interval>,
}

impl ConvexBipartiteGraph {
    /// Validates the interval table. Every interval must satisfy
    /// `1 <= left <= right <= n_y` and every Y-vertex must be covered.
    pub fn from_intervals<I>(intervals: I, n_y: usize) -> Result<Self, GraphError>
    where
        I: IntoIterator,
        I::Item: Into<Interval>,
    {
        let intervals: Vec<Interval> = intervals.into_iter().map(Into::into).collect();
        if intervals.is_empty() {
            return Err(GraphError::NoVertices);
        }
        if n_y == 0 {
            return Err(GraphError::NoYVertices);
        }
        // Difference array over Y for the coverage check.
        let mut delta = vec![0i64; n_y + 2];
        for (i, iv) in intervals.iter().enumerate() {
            if iv.left == 0 || iv.left > iv.right || iv.right > n_y {
                return Err(GraphError::EmptyInterval {
                    x: i + 1,
                    left: iv.left,
                    right: iv.right,
                    n_y,
                });
            }
            delta[iv.left] += 1;
            delta[iv.right + 1] -= 1;
        }
        let mut depth = 0;
        for (y, d) in delta.iter().enumerate().take(n_y + 1).skip(1) {
            depth += d;
            if depth == 0 {
                return Err(GraphError::UncoveredY(y));
            }
        }
        Ok(ConvexBipartiteGraph { n_y, intervals })
    }

    pub fn n_x(&self) -> usize {
        self.intervals.len()
    }

    pub fn n_y(&self) -> usize {
        self.n_y
    }

    pub fn interval(&self, x: usize) -> Interval {
        self.intervals[x - 1]
    }

    pub fn left(&self, x: usize) -> usize {
        self.intervals[x - 1].left
    }

    pub fn right(&self, x: usize) -> usize {
        self.intervals[x - 1].right
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn edge_count(&self) -> usize {
        self.intervals.iter().map(Interval::len).sum()
    }

    /// Position `i` (1-based) of the first adjacent pair `(x_i, x_{i+1})`
    /// violating lex-convex order, if any.
    pub fn first_lex_violation(&self) -> Option<usize> {
        self.intervals
            .windows(2)
            .position(|w| (w[0].left, w[0].right) > (w[1].left, w[1].right))
            .map(|i| i + 1)
    }

    pub fn is_lex_convex(&self) -> bool {
        self.first_lex_violation().is_none()
    }

    /// Expands every interval into an explicit neighbour list.
    pub fn to_general(&self) -> GeneralBipartiteGraph {
        let adj = self
            .intervals
            .iter()
            .map(|iv| (iv.left..=iv.right).collect())
            .collect();
        GeneralBipartiteGraph { n_y: self.n_y, adj }
    }

    /// Per-Y adjacency lists, each in ascending X order.
    pub fn y_adjacency(&self) -> YAdjacency {
        YAdjacency::build(self, |_| true)
    }
}

/// Compressed per-Y adjacency lists (CSR layout) derived from an interval
/// table. Lists are ascending in X-index.
#[derive(Debug, Clone)]
pub struct YAdjacency {
    offsets: Vec<usize>,
    members: Vec<usize>,
}

impl YAdjacency {
    /// Builds lists holding only the X-vertices accepted by `keep`, in
    /// `O(n_x + n_y + |E|)`.
    pub fn build(g: &ConvexBipartiteGraph, mut keep: impl FnMut(usize) -> bool) -> Self {
        let order: Vec<usize> = (1..=g.n_x()).filter(|&x| keep(x)).collect();
        Self::build_ordered(g, &order)
    }

    /// Builds lists holding the vertices of `order`, each list following the
    /// sequence of `order`. Vertices must not repeat.
    pub fn build_ordered(g: &ConvexBipartiteGraph, order: &[usize]) -> Self {
        let n_y = g.n_y();
        let mut diff = vec![0isize; n_y + 2];
        for &x in order {
            let iv = g.interval(x);
            diff[iv.left] += 1;
            diff[iv.right + 1] -= 1;
        }
        let mut start = vec![0usize; n_y + 2];
        let mut run = 0isize;
        for y in 1..=n_y {
            run += diff[y];
            start[y + 1] = start[y] + run as usize;
        }
        let mut cursor = start.clone();
        let mut members = vec![0usize; start[n_y + 1]];
        for &x in order {
            let iv = g.interval(x);
            for y in iv.left..=iv.right {
                members[cursor[y]] = x;
                cursor[y] += 1;
            }
        }
        YAdjacency {
            offsets: start,
            members,
        }
    }

    /// X-neighbours of `y` kept at build time, in build order.
    pub fn neighbours(&self, y: usize) -> &[usize] {
        &self.members[self.offsets[y]..self.offsets[y + 1]]
    }

    pub fn total_len(&self) -> usize {
        self.members.len()
    }
}
