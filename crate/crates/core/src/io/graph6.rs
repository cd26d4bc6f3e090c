//! McKay's graph6 format.
//!
//! The vertex count is one byte `n + 63` for `n <= 62`, `126` plus three
//! 6-bit bytes for `n <= 258047`, or `126 126` plus six 6-bit bytes beyond
//! that. The upper triangle follows column by column, `(0,1), (0,2), (1,2),
//! (0,3), ...`, six bits per byte, most significant bit first, each byte
//! offset by 63 and the last one zero-padded.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 0x3f) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 0x3f) as u8 + BIAS));
    }
}

pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let (mut chunk, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
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
    out
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u8> {
    let b = *bytes
        .get(offset)
        .ok_or_else(|| Error::parse_at_byte(offset, "truncated graph6 stream"))?;
    if !(BIAS..=126).contains(&b) {
        return Err(Error::parse_at_byte(
            offset,
            format!("byte {b} outside [63, 126]"),
        ));
    }
    Ok(b - BIAS)
}

/// Parses one graph6 record. A single trailing newline is accepted.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let bytes = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    let bytes = bytes.strip_suffix(b"\r").unwrap_or(bytes);
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(Error::parse_at_byte(0, "empty graph6 stream"));
    }

    let (n, mut pos) = match sixbits(bytes, 0)? {
        63 => {
            if bytes.get(1) == Some(&126) {
                let mut n = 0usize;
                for i in 0..6 {
                    n = (n << 6) | sixbits(bytes, 2 + i)? as usize;
                }
                (n, 8)
            } else {
                let mut n = 0usize;
                for i in 0..3 {
                    n = (n << 6) | sixbits(bytes, 1 + i)? as usize;
                }
                (n, 4)
            }
        }
        small => (small as usize, 1),
    };

    let total_bits = n * n.saturating_sub(1) / 2;
    let needed = total_bits.div_ceil(6);
    if bytes.len() < pos + needed {
        return Err(Error::parse_at_byte(
            bytes.len(),
            format!("truncated graph6 stream: {needed} data bytes expected"),
        ));
    }
    if bytes.len() > pos + needed {
        return Err(Error::parse_at_byte(
            pos + needed,
            "unexpected trailing bytes",
        ));
    }

    let mut edges = BTreeSet::new();
    let (mut i, mut j) = (0usize, 1usize);
    let mut bit_index = 0;
    while bit_index < total_bits {
        let chunk = sixbits(bytes, pos)?;
        for shift in (0..6).rev() {
            if bit_index == total_bits {
                if chunk & ((1 << (shift + 1)) - 1) != 0 {
                    return Err(Error::parse_at_byte(pos, "nonzero padding bits"));
                }
                break;
            }
            if chunk >> shift & 1 == 1 {
                edges.insert((i, j));
            }
            bit_index += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Ok(Graph::from_edge_set(n, edges))
}
