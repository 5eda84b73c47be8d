//! Pendant-attachment gadget and perfect edge elimination schemes.
//!
//! Attaching one pendant X-vertex `t_i` to every `y_i` turns any connected
//! bipartite graph into a perfect elimination bipartite graph with the same
//! minimum red domination number. The helpers here build that graph, verify
//! elimination schemes edge by edge, and map dominating sets of the padded
//! graph back to the original.

use thiserror::Error;

use crate::enumeration::VertexSet;
use crate::graph::{validate_connected, GeneralBipartiteGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("input graph is not connected")]
    NotConnected,
    #[error("x{0} y{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("bad scheme at step {step}: {reason}")]
    BadScheme { step: usize, reason: String },
}

/// Ordered list of `(x, y)` edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EliminationScheme {
    pub edges: Vec<(usize, usize)>,
}

impl EliminationScheme {
    pub fn new(edges: Vec<(usize, usize)>) -> Self {
        EliminationScheme { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    /// Original graph plus one pendant X-vertex per Y-vertex.
    pub g_p: GeneralBipartiteGraph,
    /// `(t_1, y_1), ..., (t_{n_y}, y_{n_y})`.
    pub scheme: EliminationScheme,
    /// `pendant_map[i - 1]` is the X-index of `t_i` in `g_p`.
    pub pendant_map: Vec<usize>,
}

impl ReductionResult {
    pub fn original_n_x(&self) -> usize {
        self.g_p.n_x() - self.pendant_map.len()
    }

    pub fn is_pendant(&self, x: usize) -> bool {
        x > self.original_n_x()
    }
}

/// Appends pendants `t_i = x_{n_x + i}` with the single edge `t_i y_i`.
pub fn attach_pendants(g: &GeneralBipartiteGraph) -> Result<ReductionResult, ReductionError> {
    if !validate_connected(g) {
        return Err(ReductionError::NotConnected);
    }
    let n_x = g.n_x();
    let n_y = g.n_y();
    let mut adj = g.adjacency().to_vec();
    adj.extend((1..=n_y).map(|y| vec![y]));
    let g_p = GeneralBipartiteGraph::new(n_y, adj).expect("pendant edges stay in range");
    let pendant_map: Vec<usize> = (1..=n_y).map(|y| n_x + y).collect();
    let scheme = EliminationScheme::new(pendant_map.iter().copied().zip(1..=n_y).collect());
    Ok(ReductionResult {
        g_p,
        scheme,
        pendant_map,
    })
}

/// Whether `N(x) ∪ N(y)` induces a complete bipartite graph.
pub fn is_bisimplicial(
    g: &GeneralBipartiteGraph,
    x: usize,
    y: usize,
) -> Result<bool, ReductionError> {
    if !g.has_edge(x, y) {
        return Err(ReductionError::NotAnEdge(x, y));
    }
    let y_adj = g.y_neighbours();
    Ok(bisimplicial_in(g, &y_adj, x, y, |_| true, |_| true))
}

fn bisimplicial_in(
    g: &GeneralBipartiteGraph,
    y_adj: &[Vec<usize>],
    x: usize,
    y: usize,
    x_alive: impl Fn(usize) -> bool,
    y_alive: impl Fn(usize) -> bool,
) -> bool {
    let ys: Vec<usize> = g
        .neighbours(x)
        .iter()
        .copied()
        .filter(|&v| y_alive(v))
        .collect();
    y_adj[y - 1]
        .iter()
        .copied()
        .filter(|&u| x_alive(u))
        .all(|u| ys.iter().all(|&v| g.has_edge(u, v)))
}

/// Outcome of checking a well-formed scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PesVerdict {
    Valid,
    /// Edge number `step` (1-based) is not bisimplicial in the residual graph.
    NotBisimplicial {
        step: usize,
        x: usize,
        y: usize,
    },
    /// Every edge was bisimplicial but `remaining` edges survive the
    /// deletions.
    ResidualEdges {
        remaining: usize,
    },
}

impl PesVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, PesVerdict::Valid)
    }
}

impl std::fmt::Display for PesVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PesVerdict::Valid => f.write_str("valid"),
            PesVerdict::NotBisimplicial { step, x, y } => {
                write!(f, "invalid: step {step} edge {x} {y} is not bisimplicial")
            }
            PesVerdict::ResidualEdges { remaining } => {
                write!(f, "invalid: {remaining} edges remain after the last step")
            }
        }
    }
}

/// Checks `s` as a perfect edge elimination scheme of `g`.
///
/// Edge `j + 1` must be bisimplicial once the endpoints of edges `1..=j`
/// are deleted, and no edge may survive after the last step. Deletions are
/// tracked by marking, so the check costs `O(|s| * |E| log Δ)` at worst.
/// A scheme naming a non-edge or reusing a vertex is an error, not a verdict.
pub fn verify_pes(
    g: &GeneralBipartiteGraph,
    s: &EliminationScheme,
) -> Result<PesVerdict, ReductionError> {
    let mut x_used = vec![false; g.n_x()];
    let mut y_used = vec![false; g.n_y()];
    for (i, &(x, y)) in s.edges.iter().enumerate() {
        let step = i + 1;
        if !g.has_edge(x, y) {
            return Err(ReductionError::BadScheme {
                step,
                reason: format!("x{x} y{y} is not an edge"),
            });
        }
        if x_used[x - 1] || y_used[y - 1] {
            return Err(ReductionError::BadScheme {
                step,
                reason: format!("edge x{x} y{y} shares a vertex with an earlier edge"),
            });
        }
        x_used[x - 1] = true;
        y_used[y - 1] = true;
    }

    let y_adj = g.y_neighbours();
    let mut x_dead = vec![false; g.n_x()];
    let mut y_dead = vec![false; g.n_y()];
    for (i, &(x, y)) in s.edges.iter().enumerate() {
        let ok = bisimplicial_in(g, &y_adj, x, y, |u| !x_dead[u - 1], |v| !y_dead[v - 1]);
        if !ok {
            return Ok(PesVerdict::NotBisimplicial { step: i + 1, x, y });
        }
        x_dead[x - 1] = true;
        y_dead[y - 1] = true;
    }
    let remaining = g
        .edges()
        .filter(|&(x, y)| !x_dead[x - 1] && !y_dead[y - 1])
        .count();
    Ok(if remaining == 0 {
        PesVerdict::Valid
    } else {
        PesVerdict::ResidualEdges { remaining }
    })
}

/// Number of edges left after deleting the endpoints of the first `steps`
/// scheme edges.
pub fn residual_edge_count(
    g: &GeneralBipartiteGraph,
    s: &EliminationScheme,
    steps: usize,
) -> usize {
    let mut x_dead = vec![false; g.n_x()];
    let mut y_dead = vec![false; g.n_y()];
    for &(x, y) in s.edges.iter().take(steps) {
        x_dead[x - 1] = true;
        y_dead[y - 1] = true;
    }
    g.edges()
        .filter(|&(x, y)| !x_dead[x - 1] && !y_dead[y - 1])
        .count()
}

/// Maps a red dominating set of `r.g_p` to one of the original graph `g`.
///
/// Each pendant `t_i` only dominates `y_i`. If some original neighbour of
/// `y_i` is already in the set, `t_i` is dropped and the set shrinks;
/// otherwise it is replaced by the smallest original neighbour of `y_i`,
/// which exists because `g` is connected. The result is never larger than
/// `d_p`.
pub fn lift_to_original(
    g: &GeneralBipartiteGraph,
    r: &ReductionResult,
    d_p: &VertexSet,
) -> VertexSet {
    let n_x = r.original_n_x();
    let y_adj = g.y_neighbours();
    let mut in_set = vec![false; n_x + 1];
    for &x in d_p.members().iter().filter(|&&x| x <= n_x) {
        in_set[x] = true;
    }
    for &t in d_p.members().iter().filter(|&&x| x > n_x) {
        let xs = &y_adj[t - n_x - 1];
        if xs.iter().any(|&u| in_set[u]) {
            continue;
        }
        if let Some(&u) = xs.first() {
            in_set[u] = true;
        }
    }
    VertexSet::new((1..=n_x).filter(|&x| in_set[x]).collect())
}
