use thiserror::Error;

/// Structural problems found while building or converting a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no X-vertices")]
    NoVertices,
    #[error("n_y must be at least 1")]
    NoYVertices,
    #[error("interval ({left}, {right}) of x{x} is empty or out of range 1..={n_y}")]
    EmptyInterval {
        x: usize,
        left: usize,
        right: usize,
        n_y: usize,
    },
    #[error("y{0} is not covered by any interval")]
    UncoveredY(usize),
    #[error("neighbour y{y} of x{x} is out of range 1..={n_y}")]
    NeighbourOutOfRange { x: usize, y: usize, n_y: usize },
    #[error("x{x} is out of range 1..={n_x}")]
    XOutOfRange { x: usize, n_x: usize },
    #[error("neighbour list of x{0} is not strictly ascending")]
    UnsortedNeighbours(usize),
    #[error("neighbourhood of x{0} is not a contiguous range of Y")]
    NotConvex(usize),
    #[error("{0} has no neighbours")]
    IsolatedVertex(Vertex),
    #[error("X-vertices are not in lex-convex order after position {0}")]
    NotLexConvex(usize),
}

/// A vertex named in diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vertex {
    X(usize),
    Y(usize),
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Vertex::X(i) => write!(f, "x{i}"),
            Vertex::Y(i) => write!(f, "y{i}"),
        }
    }
}
