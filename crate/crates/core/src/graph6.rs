//! graph6 encoding for orders below 63.
//!
//! A line is one order byte `63 + n` followed by the upper-triangle
//! adjacency bits in column-major order, `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six to a byte (most significant first), each byte offset by 63,
//! zero padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order with a single-byte order prefix.
pub const MAX_GRAPH6_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::TooLarge {
            what: "graph6 encoding",
            order: n,
            limit: MAX_GRAPH6_ORDER,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Malformed("empty line".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Malformed(format!("order byte {first} out of range")));
    }
    if first == 126 {
        return Err(Error::Malformed(format!(
            "orders above {MAX_GRAPH6_ORDER} are not supported"
        )));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let want = nbits.div_ceil(6);
    if body.len() != want {
        return Err(Error::Malformed(format!(
            "expected {want} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut bits = Vec::with_capacity(want * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Malformed(format!("data byte {b} out of range")));
        }
        let x = b - 63;
        bits.extend((0..6).rev().map(|k| x >> k & 1 == 1));
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(Error::Malformed("set bits in padding".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    #[test]
    fn known_encodings() {
        let k4 = Family::Complete(4).generate().unwrap();
        assert_eq!(emit_graph6(&k4).unwrap(), "C~");
        assert_eq!(emit_graph6(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        // petgraph's fixture: A-C, A-E, B-D, D-E on 5 vertices
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
        let d6 = Family::Dn(6).generate().unwrap();
        assert_eq!(emit_graph6(&d6).unwrap(), "E}KG");
    }

    #[test]
    fn c5_round_trip() {
        let c5 = Family::Cycle(5).generate().unwrap();
        let s = emit_graph6(&c5).unwrap();
        assert_eq!(s, "Dhc");
        assert_eq!(parse_graph6(&s).unwrap(), c5);
        assert_eq!(parse_graph6(">>graph6<<Dhc\n").unwrap(), c5);
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_graph6(""), Err(Error::Malformed(_))));
        assert!(matches!(parse_graph6("C"), Err(Error::Malformed(_))));
        assert!(matches!(parse_graph6("C~~"), Err(Error::Malformed(_))));
        assert!(matches!(parse_graph6("C\x20"), Err(Error::Malformed(_))));
        // order 2 has one data bit; 'B' = 63+3 sets padding bits
        assert!(matches!(parse_graph6("AB"), Err(Error::Malformed(_))));
        assert!(matches!(parse_graph6("~??~"), Err(Error::Malformed(_))));
        assert!(emit_graph6(&Graph::empty(63).unwrap()).is_err());
    }

    #[test]
    fn largest_supported_order() {
        let g = Family::Cycle(62).generate().unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&g).unwrap()).unwrap(), g);
    }
}
