//! Plain-text edge lists.
//!
//! One edge per line as `u v` with 0-based vertex ids. `#` starts a comment
//! (whole line or trailing). An optional first line `n <count>` pins the
//! order, which allows isolated trailing vertices; without it the order is
//! one more than the largest id seen.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected `u v`, got {got:?}")]
    BadLine { line: usize, got: String },
    #[error("line {line}: bad vertex id {token:?}")]
    BadId { line: usize, token: String },
    #[error("line {line}: {source}")]
    BadEdge { line: usize, source: GraphError },
    #[error("empty edge list and no `n` header")]
    Empty,
}

pub fn parse_edgelist(text: &str) -> Result<Graph, EdgeListError> {
    let mut header_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut seen_payload = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !seen_payload && fields.len() == 2 && fields[0] == "n" {
            header_n = Some(parse_id(fields[1], line_no)?);
            seen_payload = true;
            continue;
        }
        seen_payload = true;
        if fields.len() != 2 {
            return Err(EdgeListError::BadLine {
                line: line_no,
                got: line.to_string(),
            });
        }
        let u = parse_id(fields[0], line_no)?;
        let v = parse_id(fields[1], line_no)?;
        edges.push((u, v, line_no));
    }

    let n = match header_n {
        Some(n) => n,
        None => {
            let max = edges
                .iter()
                .map(|&(u, v, _)| u.max(v))
                .max()
                .ok_or(EdgeListError::Empty)?;
            max + 1
        }
    };

    let mut g = Graph::new(n);
    for (u, v, line) in edges {
        g.add_edge(u, v)
            .map_err(|source| EdgeListError::BadEdge { line, source })?;
    }
    Ok(g)
}

fn parse_id(token: &str, line: usize) -> Result<usize, EdgeListError> {
    token.parse().map_err(|_| EdgeListError::BadId {
        line,
        token: token.to_string(),
    })
}

/// Render a graph in the format `parse_edgelist` reads, `n` header
/// included. Extra comment lines, if any, go at the end.
pub fn format_edgelist(g: &Graph, comments: &[String]) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    for c in comments {
        out.push_str(&format!("# {}\n", c));
    }
    out
}
