//! McKay's graph6 format.
//!
//! The header is `n + 63` for `n <= 62`, or `126` followed by three bytes of
//! 6-bit big-endian `n` for larger graphs. The body is the upper triangle in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, most
//! significant first, each byte offset by 63 and zero padded.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Graph6Error;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::Result;

const BIAS: u8 = 63;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 string (no trailing newline).
pub fn parse_graph6(code: &str) -> Result<Graph> {
    let bytes = code.as_bytes();
    if let Some(position) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte { position, byte: bytes[position] }.into());
    }
    let (n, body) = match bytes {
        [] => return Err(Graph6Error::MalformedHeader.into()),
        [126, 126, ..] => {
            // 36-bit vertex count; anything here is far beyond 64.
            return Err(Graph6Error::TooManyVertices(MAX_VERTICES + 1).into());
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Graph6Error::MalformedHeader.into());
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
            if n <= 62 {
                return Err(Graph6Error::MalformedHeader.into());
            }
            (n, &rest[3..])
        }
        [h, rest @ ..] => ((h - BIAS) as usize, rest),
    };
    if n == 0 {
        return Err(Graph6Error::MalformedHeader.into());
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n).into());
    }
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() }.into());
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData { expected, found: body.len() }.into());
    }

    let mut adj = alloc::vec![VertexSet::EMPTY; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] = adj[i].with(j);
                adj[j] = adj[j].with(i);
            }
            k += 1;
        }
    }
    let used = k % 6;
    if used != 0 && (body[k / 6] - BIAS) & ((1u8 << (6 - used)) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding.into());
    }
    Graph::from_adjacency(adj)
}

/// Encodes `g` without relabeling.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
