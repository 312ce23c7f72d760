//! graph6 encoding and decoding.
//!
//! The format packs the upper triangle of the adjacency matrix in
//! column-major order, (0,1), (0,2), (1,2), (0,3), …, six bits per
//! printable byte with offset 63. Orders up to 62 use a one-byte prefix,
//! orders up to 258047 the `~`-prefixed three-byte form.

use thiserror::Error;

use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";
const MAX_LONG_ORDER: usize = 258_047;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {offset}: character 0x{byte:02x} outside graph6 range 63..=126")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("byte {offset}: malformed order prefix")]
    BadOrder { offset: usize },
    #[error("byte {offset}: order {order} wants {expected} payload bytes, record has {found}")]
    PayloadLength {
        offset: usize,
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: nonzero padding bits")]
    DirtyPadding { offset: usize },
    #[error("order {0} exceeds the supported graph6 range (max {MAX_LONG_ORDER})")]
    OrderTooLarge(usize),
}

/// Parses one graph6 record; a leading `>>graph6<<` header is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let mut record = text.trim();
    if let Some(rest) = record.strip_prefix(HEADER) {
        record = rest;
    }
    let bytes = record.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar { offset, byte: b });
        }
    }

    let (n, payload_start) = decode_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let found = bytes.len() - payload_start;
    if found != expected {
        return Err(Graph6Error::PayloadLength {
            offset: payload_start,
            order: n,
            expected,
            found,
        });
    }

    let mut edges = Vec::new();
    let mut bit_idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[payload_start + bit_idx / 6] - OFFSET;
            if byte >> (5 - bit_idx % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit_idx += 1;
        }
    }
    // nauty zero-pads; anything else signals a misaligned record.
    while bit_idx < expected * 6 {
        let byte = bytes[payload_start + bit_idx / 6] - OFFSET;
        if byte >> (5 - bit_idx % 6) & 1 == 1 {
            return Err(Graph6Error::DirtyPadding {
                offset: payload_start + bit_idx / 6,
            });
        }
        bit_idx += 1;
    }

    Ok(Graph::from_edges(n, &edges).expect("graph6 bit stream cannot produce loops or duplicates"))
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - OFFSET) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        // 8-byte form for n >= 258048; nothing at that scale is meaningful here.
        return Err(Graph6Error::OrderTooLarge(MAX_LONG_ORDER + 1));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::BadOrder { offset: 0 });
    }
    let mut n = 0usize;
    for &b in &bytes[1..4] {
        n = n << 6 | (b - OFFSET) as usize;
    }
    if n < 63 {
        // Long form used for a small order: not produced by any conforming writer.
        return Err(Graph6Error::BadOrder { offset: 0 });
    }
    Ok((n, 4))
}

/// Encodes a graph as a single graph6 record (no header, no newline).
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out = Vec::new();
    match n {
        0..=62 => out.push(n as u8 + OFFSET),
        63..=MAX_LONG_ORDER => {
            out.push(126);
            out.push((n >> 12 & 0x3f) as u8 + OFFSET);
            out.push((n >> 6 & 0x3f) as u8 + OFFSET);
            out.push((n & 0x3f) as u8 + OFFSET);
        }
        _ => return Err(Graph6Error::OrderTooLarge(n)),
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses a multi-record .g6 corpus: one record per line, blank lines skipped.
pub fn parse_graph6_file(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_graph6(line).map_err(|e| (idx + 1, e))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{self, GraphFamily};

    #[test]
    fn decodes_k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!((g.order(), g.size()), (4, 6));
    }

    #[test]
    fn decodes_two_isolated_vertices() {
        let g = parse_graph6("A?").unwrap();
        assert_eq!((g.order(), g.size()), (2, 0));
    }

    #[test]
    fn decodes_c4_bit_order() {
        // 'l' = 101101 over pairs (0,1)(0,2)(1,2)(0,3)(1,3)(2,3).
        let g = parse_graph6("Cl").unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn decodes_five_vertex_record() {
        // Encoding produced by an unrelated implementation for the graph
        // with edges 02, 04, 13, 34.
        let g = parse_graph6("DQc").unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn header_is_tolerated() {
        let g = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn rejects_bad_character() {
        assert_eq!(
            parse_graph6("C\u{20}!"),
            Err(Graph6Error::InvalidChar { offset: 1, byte: 0x20 })
        );
    }

    #[test]
    fn rejects_length_mismatch() {
        assert!(matches!(
            parse_graph6("C~~"),
            Err(Graph6Error::PayloadLength { expected: 1, found: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("E"),
            Err(Graph6Error::PayloadLength { expected: 3, found: 0, .. })
        ));
    }

    #[test]
    fn roundtrips_families() {
        for fam in [
            GraphFamily::Cycle { len: 5 },
            GraphFamily::Complete { order: 7 },
            GraphFamily::CompleteBipartite { a: 2, b: 3 },
            GraphFamily::Star { leaves: 9 },
            GraphFamily::Petersen,
            GraphFamily::Path { order: 62 },
        ] {
            let g = family::generate(&fam).unwrap();
            let enc = encode_graph6(&g).unwrap();
            let back = parse_graph6(&enc).unwrap();
            assert_eq!(back, g, "roundtrip failed for {enc}");
        }
    }

    #[test]
    fn roundtrips_long_form_orders() {
        for n in [63, 64, 126, 315] {
            let g = family::generate(&GraphFamily::Cycle { len: n }).unwrap();
            let enc = encode_graph6(&g).unwrap();
            assert!(enc.starts_with('~'));
            assert_eq!(parse_graph6(&enc).unwrap(), g);
        }
    }
}
