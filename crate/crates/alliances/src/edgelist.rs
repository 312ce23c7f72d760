//! Human-editable edge-list format: one `u v` pair per line, an optional
//! `n <count>` first line declaring the order, `#` comments.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected `u v`, got {found:?}")]
    BadShape { line: usize, found: String },
    #[error("line {line}: non-integer token {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} not below declared order {order}")]
    OutOfDeclaredRange { line: usize, vertex: usize, order: usize },
    #[error("line {line}: order header after the first line")]
    LateHeader { line: usize },
}

/// Parses an edge list into a graph over ids `0..n`, where `n` is the
/// declared order or `max id + 1`.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut saw_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if saw_content {
                return Err(EdgeListError::LateHeader { line: line_no });
            }
            if tokens.len() != 2 {
                return Err(EdgeListError::BadShape { line: line_no, found: line.to_string() });
            }
            declared = Some(parse_id(tokens[1], line_no)?);
            saw_content = true;
            continue;
        }
        saw_content = true;
        if tokens.len() != 2 {
            return Err(EdgeListError::BadShape { line: line_no, found: line.to_string() });
        }
        let u = parse_id(tokens[0], line_no)?;
        let v = parse_id(tokens[1], line_no)?;
        if u == v {
            return Err(EdgeListError::SelfLoop { line: line_no, vertex: u });
        }
        edges.push((u, v, line_no));
    }

    let max_id = edges.iter().map(|&(u, v, _)| u.max(v)).max();
    let n = match declared {
        Some(n) => {
            if let Some(&(u, v, line)) = edges.iter().find(|&&(u, v, _)| u >= n || v >= n) {
                let vertex = if u >= n { u } else { v };
                return Err(EdgeListError::OutOfDeclaredRange { line, vertex, order: n });
            }
            n
        }
        None => max_id.map_or(0, |id| id + 1),
    };

    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    match Graph::from_edges(n, &pairs) {
        Ok(built) => Ok(built),
        Err(GraphError::DuplicateEdge(u, v)) => {
            // Recover the offending line for the report.
            let mut seen = std::collections::BTreeSet::new();
            for &(a, b, line) in &edges {
                if !seen.insert((a.min(b), a.max(b))) {
                    return Err(EdgeListError::DuplicateEdge { line, u: u.min(v), v: u.max(v) });
                }
            }
            unreachable!("duplicate reported by builder must exist in the list");
        }
        Err(e) => unreachable!("edge list pre-validated: {e}"),
    }
}

fn parse_id(token: &str, line: usize) -> Result<usize, EdgeListError> {
    token.parse().map_err(|_| EdgeListError::BadToken { line, token: token.to_string() })
}

/// Serializes a graph in the same format, order header first.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!((g.order(), g.size()), (3, 2));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn header_declares_isolated_vertices() {
        let g = parse_edge_list("n 3\n0 1").unwrap();
        assert_eq!((g.order(), g.size()), (3, 1));
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn duplicate_edge_names_line() {
        assert_eq!(
            parse_edge_list("0 1\n0 1"),
            Err(EdgeListError::DuplicateEdge { line: 2, u: 0, v: 1 })
        );
        // Reversed orientation is the same edge.
        assert_eq!(
            parse_edge_list("0 1\n1 0"),
            Err(EdgeListError::DuplicateEdge { line: 2, u: 0, v: 1 })
        );
    }

    #[test]
    fn rejects_self_loop_and_bad_tokens() {
        assert_eq!(
            parse_edge_list("2 2"),
            Err(EdgeListError::SelfLoop { line: 1, vertex: 2 })
        );
        assert_eq!(
            parse_edge_list("0 x"),
            Err(EdgeListError::BadToken { line: 1, token: "x".into() })
        );
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let g = parse_edge_list("# a triangle\nn 3\n0 1 # first\n\n1 2\n0 2").unwrap();
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn roundtrip() {
        let g = parse_edge_list("n 5\n0 1\n3 4").unwrap();
        let text = encode_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}
