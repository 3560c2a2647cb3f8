use crate::error::FormatError;

use super::Graph;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: u64 = 68_719_476_735;

/// Parses a single graph6 line (an optional `>>graph6<<` prefix and a
/// trailing line terminator are accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (bytes, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    let err = |offset: usize, reason: &'static str| FormatError::Graph6 {
        offset: base + offset,
        reason,
    };

    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=BIAS + 63).contains(&b) {
            return Err(err(i, "byte outside the printable range 63..=126"));
        }
    }

    let (n, mut pos) = match bytes {
        [] => return Err(err(0, "missing size header")),
        [b'~', b'~', rest @ ..] => {
            if rest.len() < 6 {
                return Err(err(bytes.len(), "truncated 36-bit size header"));
            }
            let n = rest[..6]
                .iter()
                .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - BIAS));
            if n <= MEDIUM_MAX as u64 {
                return Err(err(2, "36-bit size header used for a small graph"));
            }
            (n, 8)
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(bytes.len(), "truncated 18-bit size header"));
            }
            let n = rest[..3]
                .iter()
                .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - BIAS));
            if n <= SHORT_MAX as u64 {
                return Err(err(1, "18-bit size header used for a small graph"));
            }
            (n, 4)
        }
        [b, ..] => (u64::from(b - BIAS), 1),
    };

    // Check the body length before allocating anything proportional to n.
    let bits = u128::from(n) * u128::from(n.saturating_sub(1)) / 2;
    let expected = bits.div_ceil(6);
    let body = (bytes.len() - pos) as u128;
    if body < expected {
        return Err(err(bytes.len(), "truncated adjacency data"));
    }
    if body > expected {
        return Err(err(
            pos + expected as usize,
            "trailing bytes after adjacency data",
        ));
    }
    let n = usize::try_from(n).map_err(|_| err(0, "vertex count does not fit in memory"))?;

    let mut edges = Vec::new();
    let mut chunk = 0u8;
    let mut left = 0u32;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                chunk = bytes[pos] - BIAS;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if (chunk >> left) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    if left > 0 && chunk & ((1 << left) - 1) != 0 {
        return Err(err(pos - 1, "nonzero padding bits"));
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 bits encode a simple graph"))
}

/// Encodes `g` as a graph6 line without header or trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n as u64 <= LONG_MAX, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    let push_size = |out: &mut Vec<u8>, width: u32| {
        for shift in (0..width).rev() {
            out.push(((n >> (6 * shift)) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_MAX {
        out.push(b'~');
        push_size(&mut out, 3);
    } else {
        out.extend_from_slice(b"~~");
        push_size(&mut out, 6);
    }

    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(col.binary_search(&i).is_ok());
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
