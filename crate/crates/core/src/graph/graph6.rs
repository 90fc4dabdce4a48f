//! graph6 ASCII encoding of simple undirected graphs (headerless, one
//! graph per line). Upper-triangle adjacency bits are packed column by
//! column into 6-bit groups offset by 63.

use super::{Graph, GraphError};

const OFFSET: u8 = 63;
const EXTENDED: u8 = 126;

fn parse_err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. A single trailing newline is tolerated;
/// anything else after the bit groups is an error.
pub fn graph_from_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(text);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=EXTENDED).contains(&b) {
            return Err(parse_err(i, format!("byte {b} outside graph6 range 63..=126")));
        }
    }

    let (n, body_start) = decode_order(bytes)?;
    let bits_needed = n * n.saturating_sub(1) / 2;
    let groups_needed = bits_needed.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < groups_needed {
        return Err(parse_err(
            bytes.len(),
            format!(
                "truncated: need {groups_needed} bit groups for n={n}, got {}",
                body.len()
            ),
        ));
    }
    if body.len() > groups_needed {
        return Err(parse_err(body_start + groups_needed, "trailing garbage"));
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for v in 1..n {
        for u in 0..v {
            if read_bit(body, bit_index) {
                edges.push((u, v));
            }
            bit_index += 1;
        }
    }
    // Standard padding is zero bits; anything else means a corrupt tail.
    for pad in bits_needed..groups_needed * 6 {
        if read_bit(body, pad) {
            return Err(parse_err(body_start + pad / 6, "nonzero padding bits"));
        }
    }
    Graph::new(n, &edges)
}

/// Encodes a graph as a single headerless graph6 line (no newline).
pub fn graph_to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = encode_order(n);
    let bits_needed = n * n.saturating_sub(1) / 2;
    let mut group = 0u8;
    let mut filled = 0u8;
    let mut emitted = 0usize;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
                emitted += 6;
            }
        }
    }
    if emitted < bits_needed {
        group <<= 6 - filled;
        out.push(group + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    if bytes[0] != EXTENDED {
        return Ok(((bytes[0] - OFFSET) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == EXTENDED {
        let n = decode_wide(bytes, 2, 6)?;
        return Ok((n, 8));
    }
    let n = decode_wide(bytes, 1, 3)?;
    if n < 63 {
        return Err(parse_err(0, format!("non-canonical length field for n={n}")));
    }
    Ok((n, 4))
}

fn decode_wide(bytes: &[u8], start: usize, count: usize) -> Result<usize, GraphError> {
    if bytes.len() < start + count {
        return Err(parse_err(bytes.len(), "malformed length field: input too short"));
    }
    let mut n = 0usize;
    for &b in &bytes[start..start + count] {
        n = (n << 6) | (b - OFFSET) as usize;
    }
    Ok(n)
}

fn encode_order(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + OFFSET]
    } else if n <= 258_047 {
        let mut out = vec![EXTENDED];
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
        out
    } else {
        assert!(n <= 68_719_476_735, "graph6 order limit exceeded");
        let mut out = vec![EXTENDED, EXTENDED];
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
        out
    }
}

fn read_bit(body: &[u8], index: usize) -> bool {
    let group = (body[index / 6] - OFFSET) as u32;
    (group >> (5 - index % 6)) & 1 == 1
}
