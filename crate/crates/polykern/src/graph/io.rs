//! Edge-list text format.
//!
//! The first non-comment line is `n m`, followed by `m` lines `u v` with
//! 0-based endpoints. Lines starting with `#` are comments.

use super::{build_graph, Graph, GraphError};
use thiserror::Error;

/// Errors raised while reading an edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// The input has no header line.
    #[error("missing `n m` header")]
    MissingHeader,
    /// A line could not be parsed.
    #[error("line {line}: {message}")]
    Syntax {
        /// 1-based line number.
        line: usize,
        /// What went wrong.
        message: String,
    },
    /// The header's edge count disagrees with the edge lines.
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount {
        /// Count from the header.
        declared: usize,
        /// Edge lines present.
        found: usize,
    },
    /// An edge is invalid for the graph.
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses an edge list.
///
/// ```
/// use polykern::graph::io::{parse_edge_list, write_edge_list};
/// let g = parse_edge_list("# a path\n3 2\n0 1\n2 1\n").unwrap();
/// assert_eq!(write_edge_list(&g), "3 2\n0 1\n1 2\n");
/// ```
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<&str> = line.split_whitespace().collect();
        let syntax = |message: &str| ParseError::Syntax { line: i + 1, message: message.into() };
        if nums.len() != 2 {
            return Err(syntax("expected two integers"));
        }
        let a: usize = nums[0].parse().map_err(|_| syntax("not a non-negative integer"))?;
        let b: usize = nums[1].parse().map_err(|_| syntax("not a non-negative integer"))?;
        if header.is_none() {
            header = Some((a, b));
        } else {
            edges.push((a, b));
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(build_graph(n, &edges)?.graph)
}

/// Writes an edge list with `u < v` edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::petersen();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_edge_list("# only\n"), Err(ParseError::MissingHeader));
        assert!(matches!(parse_edge_list("2 1\n0 x\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert_eq!(
            parse_edge_list("2 2\n0 1\n"),
            Err(ParseError::EdgeCount { declared: 2, found: 1 })
        );
        assert!(matches!(parse_edge_list("2 1\n0 5\n"), Err(ParseError::Graph(_))));
    }
}
