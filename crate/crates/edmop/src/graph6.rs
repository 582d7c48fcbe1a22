//! graph6 encoding of single graphs.
//!
//! The order is one byte `n + 63` for `n <= 62`, or `~` and three 6-bit
//! groups for `n <= 258047`. The upper triangle follows column by column,
//! `(0,1), (0,2), (1,2), (0,3), …`, packed six bits per byte, high bit
//! first, each byte offset by 63.

use edmop_core::Graph;
use thiserror::Error;

const MAX_ORDER: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("order {0} exceeds the graph6 limit of 258047")]
    TooLarge(usize),
    #[error("order 0 is not supported")]
    ZeroOrder,
    #[error("byte {0:#04x} is outside the graph6 range")]
    BadByte(u8),
    #[error("expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("empty input")]
    Empty,
}

pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let (mut acc, mut bits) = (0u8, 0);
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                (acc, bits) = (0, 0);
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("bytes 63..=126 are ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::BadByte(b));
    }
    let vals: Vec<usize> = bytes.iter().map(|&b| (b - 63) as usize).collect();
    let (n, data) = match vals.as_slice() {
        [] => return Err(Graph6Error::Empty),
        [63, rest @ ..] => {
            if rest.len() < 3 || rest[0] == 63 {
                // the 8-byte form for orders above 258047 is not supported
                return Err(Graph6Error::TooLarge(MAX_ORDER + 1));
            }
            (rest[0] << 12 | rest[1] << 6 | rest[2], &rest[3..])
        }
        [n, rest @ ..] => (*n, rest),
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let expected = (n * (n - 1) / 2).div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::Length { expected, found: data.len() });
    }
    let mut g = Graph::new(n).expect("n > 0");
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if data[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v).expect("in range");
            }
            k += 1;
        }
    }
    Ok(g)
}
