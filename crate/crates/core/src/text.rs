//! Plain-text graph and scheme formats.
//!
//! ```text
//! # interval form
//! convex <n_x> <n_y>
//! <left> <right>            one line per X-vertex
//!
//! # edge-list form
//! bipartite <n_x> <n_y>
//! <y> <y> ...               ascending Y-neighbours, one line per X-vertex
//!
//! # elimination scheme
//! <x> <y>                   one edge per line, in order
//! ```
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::GraphError;
use crate::graph::{ConvexBipartiteGraph, GeneralBipartiteGraph, Interval};
use crate::reduction::EliminationScheme;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} vertex lines, found {found}")]
    VertexCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph read from text, in whichever form the header announced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    Convex(ConvexBipartiteGraph),
    Bipartite(GeneralBipartiteGraph),
}

impl GraphFile {
    pub fn to_general(&self) -> GeneralBipartiteGraph {
        match self {
            GraphFile::Convex(g) => g.to_general(),
            GraphFile::Bipartite(g) => g.clone(),
        }
    }

    /// Interval form; edge lists must already list Y in a convex order.
    pub fn to_convex(&self) -> Result<ConvexBipartiteGraph, GraphError> {
        match self {
            GraphFile::Convex(g) => Ok(g.clone()),
            GraphFile::Bipartite(g) => crate::graph::intervals_from_adjacency(g),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number(tok: &str, line: usize) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| FormatError::Syntax {
        line,
        msg: format!("expected a non-negative integer, found {tok:?}"),
    })
}

pub fn parse_graph(text: &str) -> Result<GraphFile, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(FormatError::Empty)?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let [kind, n_x, n_y] = toks[..] else {
        return Err(FormatError::Syntax {
            line: hline,
            msg: "header must be \"convex <n_x> <n_y>\" or \"bipartite <n_x> <n_y>\"".into(),
        });
    };
    let n_x = number(n_x, hline)?;
    let n_y = number(n_y, hline)?;
    let body: Vec<(usize, &str)> = lines.collect();
    if body.len() != n_x {
        return Err(FormatError::VertexCount {
            expected: n_x,
            found: body.len(),
        });
    }
    match kind {
        "convex" => {
            let mut intervals = Vec::with_capacity(n_x);
            for (line, l) in body {
                let toks: Vec<&str> = l.split_whitespace().collect();
                let [a, b] = toks[..] else {
                    return Err(FormatError::Syntax {
                        line,
                        msg: "expected \"<left> <right>\"".into(),
                    });
                };
                intervals.push(Interval::new(number(a, line)?, number(b, line)?));
            }
            Ok(GraphFile::Convex(ConvexBipartiteGraph::from_intervals(
                intervals, n_y,
            )?))
        }
        "bipartite" => {
            let mut adj = Vec::with_capacity(n_x);
            for (line, l) in body {
                if l == "-" {
                    return Err(FormatError::Syntax {
                        line,
                        msg: format!("x{} has no neighbours", adj.len() + 1),
                    });
                }
                let ys = l
                    .split_whitespace()
                    .map(|t| number(t, line))
                    .collect::<Result<Vec<_>, _>>()?;
                adj.push(ys);
            }
            Ok(GraphFile::Bipartite(GeneralBipartiteGraph::new(n_y, adj)?))
        }
        other => Err(FormatError::Syntax {
            line: hline,
            msg: format!("unknown graph kind {other:?}"),
        }),
    }
}

pub fn write_convex(g: &ConvexBipartiteGraph) -> String {
    let mut out = format!("convex {} {}\n", g.n_x(), g.n_y());
    for iv in g.intervals() {
        let _ = writeln!(out, "{} {}", iv.left, iv.right);
    }
    out
}

pub fn write_bipartite(g: &GeneralBipartiteGraph) -> String {
    let mut out = format!("bipartite {} {}\n", g.n_x(), g.n_y());
    for list in g.adjacency() {
        if list.is_empty() {
            out.push_str("-\n");
            continue;
        }
        let line: Vec<String> = list.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_scheme(text: &str) -> Result<EliminationScheme, FormatError> {
    let mut edges = Vec::new();
    for (line, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [x, y] = toks[..] else {
            return Err(FormatError::Syntax {
                line,
                msg: "expected \"<x> <y>\"".into(),
            });
        };
        edges.push((number(x, line)?, number(y, line)?));
    }
    Ok(EliminationScheme::new(edges))
}

pub fn write_scheme(s: &EliminationScheme) -> String {
    s.edges.iter().map(|(x, y)| format!("{x} {y}\n")).collect()
}
