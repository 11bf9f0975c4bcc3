//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte.

use super::{Graph, GraphError};

const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LONG: usize = (1 << 36) - 1;

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

fn encode_size(n: usize, out: &mut String) {
    let push6 = |out: &mut String, v: usize| out.push((BIAS + (v & 0x3f) as u8) as char);
    if n <= MAX_SHORT {
        push6(out, n);
    } else if n <= MAX_MEDIUM {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift);
        }
    } else {
        assert!(n <= MAX_LONG, "graph too large for graph6");
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}

fn sextet(b: u8) -> Result<usize, GraphError> {
    if (BIAS..=126).contains(&b) {
        Ok((b - BIAS) as usize)
    } else {
        Err(err(format!("byte {b} outside 63..=126")))
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    match bytes {
        [] => Err(err("empty token")),
        [b'~', b'~', rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated long size header"));
            }
            let mut n = 0;
            for &b in &rest[..6] {
                n = (n << 6) | sextet(b)?;
            }
            if n <= MAX_MEDIUM {
                return Err(err("non-canonical size header"));
            }
            Ok((n, 8))
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated size header"));
            }
            let mut n = 0;
            for &b in &rest[..3] {
                n = (n << 6) | sextet(b)?;
            }
            if n <= MAX_SHORT {
                return Err(err("non-canonical size header"));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((sextet(*b)?, 1)),
    }
}

/// Decodes one graph6 token. An optional `>>graph6<<` prefix and
/// surrounding whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header) = decode_size(bytes)?;
    let body = &bytes[header..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!("expected {expected} data bytes for n={n}, found {}", body.len())));
    }
    let sextets = body.iter().map(|&b| sextet(b)).collect::<Result<Vec<_>, _>>()?;
    let mut bits = sextets.iter().flat_map(|&v| (0..6).rev().map(move |s| (v >> s) & 1 == 1));
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if bits.next().expect("length checked") {
                g.add_edge(i, j);
            }
        }
    }
    if bits.any(|b| b) {
        return Err(err("nonzero padding bits"));
    }
    Ok(g)
}
