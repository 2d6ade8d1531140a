//! graph6 encoding of undirected graphs.
//!
//! The vertex count is a single byte `n + 63` for `n <= 62`, or `~` followed by
//! three 6-bit groups for larger `n`. The body is the upper triangle of the
//! adjacency matrix read column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
//! padded with zeros to a multiple of six bits, six bits per printable byte.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                format!("byte {pos}"),
                format!("invalid graph6 character {:?}", b as char),
            ));
        }
    }

    let (n, body_start) = match bytes.first() {
        None => return Err(Error::parse("byte 0", "empty graph6 string")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(Error::parse("byte 1", "8-byte vertex counts are not supported"));
            }
            if bytes.len() < 4 {
                return Err(Error::parse(
                    format!("byte {}", bytes.len()),
                    "truncated vertex count",
                ));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "graph6 declares {n} vertices; the cap is {MAX_VERTICES}"
        )));
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != expected {
        return Err(Error::parse(
            format!("byte {}", body_start + body.len().min(expected)),
            format!(
                "expected {expected} data bytes for {n} vertices, found {}",
                body.len()
            ),
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - pairs % 6)) - 1) != 0 {
            return Err(Error::parse(
                format!("byte {}", body_start + expected - 1),
                "nonzero padding bits",
            ));
        }
    }
    Ok(g)
}

/// Reads one graph6 string per line; blank lines are skipped. Errors carry
/// the 1-based line number.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(Error::parse(format!("line {}", i + 1), e.to_string()))),
            Ok(line) if line.trim().is_empty() => None,
            Ok(line) => Some(parse_graph6(line.trim()).map_err(|e| match e {
                Error::Parse { location, message } => {
                    Error::parse(format!("line {}, {location}", i + 1), message)
                }
                other => other,
            })),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::labelled_graphs;

    // Expected strings produced by an independent graph6 encoder.
    #[test]
    fn known_encodings() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(write_graph6(&k3), "Bw");
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(write_graph6(&c5), "Dhc");
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(write_graph6(&p4), "Ch");
    }

    #[test]
    fn petersen_round_trip() {
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(write_graph6(&g), "IheA@GUAo");
    }

    #[test]
    fn long_form_vertex_count() {
        let mut g = Graph::empty(64).unwrap();
        for u in 0..64 {
            for v in u + 1..64 {
                g.add_edge(u, v).unwrap();
            }
        }
        let s = write_graph6(&g);
        assert!(s.starts_with("~?@?~~~~"));
        assert_eq!(s.len(), 340);
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let e63 = Graph::empty(63).unwrap();
        let s = write_graph6(&e63);
        assert!(s.starts_with("~??~"));
        assert_eq!(s.len(), 330);
    }

    #[test]
    fn all_small_graphs_round_trip() {
        for n in 0..=5 {
            for g in labelled_graphs(n).unwrap() {
                assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { .. })));
        // K5 needs two data bytes.
        assert!(matches!(parse_graph6("D~"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("D~{{"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("B w"), Err(Error::Parse { .. })));
        // 'x' sets a padding bit for n = 3.
        assert!(matches!(parse_graph6("Bx"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("~?A?"), Err(Error::TooLarge(_))));
    }

    #[test]
    fn header_and_stream() {
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap().edge_count(), 3);
        let input = "Bw\n\nD~{\nDx\n";
        let parsed: Vec<_> = read_graph6_stream(input.as_bytes()).collect();
        assert_eq!(parsed.len(), 3);
        assert!(parsed[0].is_ok() && parsed[1].is_ok());
        match &parsed[2] {
            Err(Error::Parse { location, .. }) => assert!(location.starts_with("line 4")),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
