//! graph6 interchange format.
//!
//! The order is written as the single byte `n + 63` for n ≤ 62, or as `~`
//! followed by three bytes carrying 18 bits for 63 ≤ n ≤ 64. The upper
//! triangle follows in column order `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte (most significant first), each byte offset by 63.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, format!("byte 0x{b:02x} outside the graph6 range 63..=126")));
        }
    }
    let Some(&first) = bytes.first() else {
        return Err(parse_err(0, "empty input"));
    };
    let (n, mut pos) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(parse_err(bytes.len(), "truncated order field"));
        }
        if bytes[1] == 126 {
            return Err(parse_err(1, "orders beyond 258047 are not supported"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(parse_err(0, format!("order {n} exceeds {MAX_ORDER}")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if bytes.len() - pos < needed {
        return Err(parse_err(
            bytes.len(),
            format!("truncated bit stream: expected {needed} payload bytes, found {}", bytes.len() - pos),
        ));
    }
    if bytes.len() - pos > needed {
        return Err(parse_err(pos + needed, "trailing bytes after the bit stream"));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            bit += 1;
        }
    }
    pos += needed;
    if pairs % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        if last & ((1u8 << (6 - pairs % 6)) - 1) != 0 {
            return Err(parse_err(pos - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Parse a graph6 file: one graph per line; blank lines are ignored and a
/// leading `>>graph6<<` header is stripped. Errors carry the line number.
pub fn parse_graph6_lines(text: &str) -> impl Iterator<Item = (usize, Result<Graph>)> + '_ {
    text.lines().enumerate().filter_map(|(idx, line)| {
        let line = line.strip_prefix(HEADER).unwrap_or(line).trim();
        if line.is_empty() {
            None
        } else {
            Some((idx + 1, decode_graph6(line)))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_five() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(encode_graph6(&k5), "D~{");
        assert_eq!(decode_graph6("D~{").unwrap(), k5);
    }

    #[test]
    fn four_cycle_single_payload_byte() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        // bits 101101 -> 45 + 63 = 108 = 'l'
        assert_eq!(encode_graph6(&c4), "Cl");
    }

    #[test]
    fn single_vertex() {
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(decode_graph6("@").unwrap(), Graph::empty(1).unwrap());
    }

    #[test]
    fn long_order_form() {
        for n in [62, 63, 64] {
            let g = Graph::cycle(n).unwrap();
            let s = encode_graph6(&g);
            assert_eq!(s.as_bytes()[0] == b'~', n >= 63);
            assert_eq!(decode_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode_graph6("D~"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(decode_graph6("D~{?"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(decode_graph6("D ~"), Err(Error::Parse { offset: 1, .. })));
        // order 65 in the long form
        assert!(matches!(decode_graph6("~?@@"), Err(Error::Parse { .. })));
        // n = 3 has three bits; the low three bits of the payload must be zero
        assert!(matches!(decode_graph6("B@"), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn file_parsing() {
        let text = ">>graph6<<D~{\n\nCl\n@\n";
        let parsed: Vec<_> = parse_graph6_lines(text).collect();
        assert_eq!(parsed.len(), 3);
        assert_eq!(parsed[0].0, 1);
        assert_eq!(parsed[1].0, 3);
        assert_eq!(parsed[2].1.as_ref().unwrap().order(), 1);
    }
}
