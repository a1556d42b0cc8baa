//! Plain-text edge lists.
//!
//! ```text
//! n m
//! i j
//! ...
//! ```
//!
//! Endpoints are 0-based with `i < j`, one edge per LF-terminated line. The
//! writer emits edges in lexicographic order, so write → read → write is
//! byte-identical.

use std::fmt::Write as _;

use super::{Graph, GraphError};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(12 * (g.edge_count() + 1));
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), GraphError> {
    let err = |reason: String| GraphError::Parse { line: lineno, reason };
    let mut fields = line.split(' ');
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = fields.next().ok_or_else(|| err(format!("missing {what}")))?;
        tok.parse().map_err(|_| err(format!("{what} {tok:?} is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(err("expected exactly two fields".into()));
    }
    Ok((a, b))
}

/// Parses an edge list, rejecting self-loops, repeated edges, endpoints out of
/// range, pairs not in `i < j` order, and edge counts that disagree with the
/// header.
pub fn read_edge_list(text: &str) -> Result<Graph, GraphError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n').enumerate().map(|(k, l)| (k + 1, l));
    let (_, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        reason: "empty input".into(),
    })?;
    let (n, m) = parse_pair(header, 1)?;
    let mut g = Graph::empty(n)?;
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let (i, j) = parse_pair(line, lineno)?;
        if i >= n || j >= n {
            return Err(GraphError::VertexOutOfRange(i, j, n));
        }
        if i == j {
            return Err(GraphError::SelfLoop(i));
        }
        if i > j {
            return Err(GraphError::Parse {
                line: lineno,
                reason: format!("endpoints must satisfy i < j, got {i} {j}"),
            });
        }
        if g.has_edge(i, j) {
            return Err(GraphError::DuplicateEdge(i, j));
        }
        g.set(i, j, true);
        seen += 1;
    }
    if seen != m {
        return Err(GraphError::Parse {
            line: 1,
            reason: format!("header announces {m} edges but {seen} were listed"),
        });
    }
    Ok(g)
}
