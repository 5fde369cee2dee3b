//! graph6 encoding (short form, fewer than 63 vertices).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed
//! big-endian into 6-bit groups, zero padded, each group offset by 63.

use thiserror::Error;

use crate::graph::{bit, Graph};

/// Largest vertex count of the short graph6 form.
pub const GRAPH6_MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("vertex counts of 63 or more (long graph6 form) are not supported")]
    LongForm,
    #[error("expected {expected} data bytes for {n} vertices, found {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error("padding bits in the final byte are not zero")]
    Padding,
    #[error("graph has {0} vertices; graph6 short form holds at most 62")]
    TooLarge(usize),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode(input: &[u8]) -> Result<Graph, Graph6Error> {
    let (&first, data) = input.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in input.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    if first == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (first - 63) as usize;
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::Length { n, expected, found: data.len() });
    }
    let total = n * n.saturating_sub(1) / 2;
    let pad = expected * 6 - total;
    if pad > 0 && (data[expected - 1] - 63) & ((1u8 << pad) - 1) != 0 {
        return Err(Graph6Error::Padding);
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

impl Graph {
    /// graph6 string of this graph (fails above 62 vertices).
    pub fn to_graph6(&self) -> Result<String, Graph6Error> {
        encode(self)
    }

    /// Parses a graph6 string, ignoring surrounding whitespace.
    pub fn from_graph6(s: &str) -> Result<Graph, Graph6Error> {
        decode(s.trim().as_bytes())
    }
}
