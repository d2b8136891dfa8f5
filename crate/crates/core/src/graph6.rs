//! graph6 text encoding (short form only, `n <= 62`; this crate caps at 32).
//!
//! The payload is the upper triangle of the adjacency matrix in column
//! order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed big-endian into
//! 6-bit groups, each offset by 63.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("malformed length header byte {0:#04x}")]
    BadHeader(u8),
    #[error("graph6 record declares {0} vertices, more than the supported {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("non-printable payload byte {byte:#04x} at offset {pos}")]
    BadByte { byte: u8, pos: usize },
    #[error("payload too short: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage after {expected} payload bytes")]
    Trailing { expected: usize },
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let bytes = bytes
        .strip_suffix(b"\n")
        .map(|b| b.strip_suffix(b"\r").unwrap_or(b))
        .unwrap_or(bytes);
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(OFFSET..=126).contains(&head) {
        return Err(Graph6Error::BadHeader(head));
    }
    if head == 126 {
        // Long-form header: only reachable for n >= 63.
        return Err(Graph6Error::TooLarge(63));
    }
    let n = (head - OFFSET) as usize;
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let expected = payload_len(n);
    for (i, &b) in body.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::BadByte {
                byte: b,
                pos: i + 1,
            });
        }
    }
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::Trailing { expected });
    }

    let mut rows = [0u32; MAX_VERTICES];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = body[bit / 6] - OFFSET;
            if group >> (5 - bit % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(n, &rows))
}

pub fn write_graph6(g: &Graph) -> String {
    String::from_utf8(graph6_bytes(g)).expect("graph6 is ASCII")
}

pub(crate) fn graph6_bytes(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(OFFSET + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbor_mask(j);
        for i in 0..j {
            acc = acc << 1 | (row >> i & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    out
}

/// Parses a newline-separated stream of graph6 records, skipping blank
/// lines and an optional `>>graph6<<` header.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let line = line.trim();
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            (!line.is_empty()).then(|| parse_graph6(line).map_err(|e| (i + 1, e)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straightforward decoder written against the format description, kept
    /// separate from the production bit loop.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let mut bits = Vec::new();
        for &c in &b[1..] {
            let v = c - 63;
            for k in (0..6).rev() {
                bits.push(v >> k & 1 == 1);
            }
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[idx] {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn known_records() {
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(reference_decode("Bw"), (3, vec![(0, 1), (0, 2), (1, 2)]));
        assert_eq!(parse_graph6("B?").unwrap(), Graph::empty(3));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(write_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        // Petersen graph, as listed in the nauty documentation.
        let pet = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(pet.edge_count(), 15);
        assert!(pet.rows().iter().all(|r| r.count_ones() == 3));
        assert_eq!(write_graph6(&pet), "IheA@GUAo");
    }

    #[test]
    fn reference_decoder_agrees() {
        for s in ["Ch", "D?{", "E?Bw", "FCZbg", "G?r@`_"] {
            let g = parse_graph6(s).unwrap();
            let (n, mut edges) = reference_decode(s);
            edges.sort_unstable();
            assert_eq!(g.n(), n);
            assert_eq!(g.edges(), edges, "{s}");
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("\x01"), Err(Graph6Error::BadHeader(1)));
        assert!(matches!(parse_graph6("~??"), Err(Graph6Error::TooLarge(_))));
        assert_eq!(parse_graph6("`"), Err(Graph6Error::TooLarge(33)));
        assert!(matches!(
            parse_graph6("B\x07"),
            Err(Graph6Error::BadByte { pos: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("C"),
            Err(Graph6Error::Truncated { .. })
        ));
        assert!(matches!(
            parse_graph6("Bww"),
            Err(Graph6Error::Trailing { .. })
        ));
    }

    #[test]
    fn stream_parsing() {
        let gs = parse_graph6_stream(">>graph6<<Bw\n\nB?\n").unwrap();
        assert_eq!(gs, vec![Graph::complete(3), Graph::empty(3)]);
        assert_eq!(parse_graph6_stream("Bw\nBww\n").unwrap_err().0, 2);
    }

    #[test]
    fn full_32_vertex_round_trip() {
        let g = Graph::complete(32);
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        let c = Graph::cycle(32);
        assert_eq!(parse_graph6(&write_graph6(&c)).unwrap(), c);
    }
}
