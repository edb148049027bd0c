// SPDX-License-Identifier: Apache-2.0

//! The graph6 line format: an order header followed by the upper triangle of
//! the adjacency matrix, column by column, packed six bits per printable byte
//! (value + 63), most significant bit first.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

/// Largest order this decoder will materialize.
pub const MAX_DECODE_ORDER: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    NonPrintable(u8),
    TruncatedHeader,
    OrderTooLarge(usize),
    Truncated { expected: usize, found: usize },
    TrailingBytes,
    NonzeroPadding,
}

impl fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6ErrorKind::Empty => write!(f, "empty line"),
            Graph6ErrorKind::NonPrintable(b) => write!(f, "byte 0x{b:02x} outside 63..=126"),
            Graph6ErrorKind::TruncatedHeader => write!(f, "truncated order header"),
            Graph6ErrorKind::OrderTooLarge(n) => {
                write!(f, "order {n} exceeds decoder limit {MAX_DECODE_ORDER}")
            }
            Graph6ErrorKind::Truncated { expected, found } => {
                write!(f, "expected {expected} adjacency bytes, found {found}")
            }
            Graph6ErrorKind::TrailingBytes => write!(f, "trailing bytes after adjacency data"),
            Graph6ErrorKind::NonzeroPadding => write!(f, "padding bits in last byte are not zero"),
        }
    }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let err = |offset, kind| Graph6Error { offset, kind };
    if bytes.is_empty() {
        return Err(err(0, Graph6ErrorKind::Empty));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, Graph6ErrorKind::NonPrintable(bytes[pos])));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, header) = if bytes[0] != 126 {
        (six(bytes[0]), 1)
    } else if bytes.get(1) != Some(&126) {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), Graph6ErrorKind::TruncatedHeader));
        }
        (bytes[1..4].iter().fold(0, |acc, &b| (acc << 6) | six(b)), 4)
    } else {
        if bytes.len() < 8 {
            return Err(err(bytes.len(), Graph6ErrorKind::TruncatedHeader));
        }
        (bytes[2..8].iter().fold(0, |acc, &b| (acc << 6) | six(b)), 8)
    };
    if n > MAX_DECODE_ORDER {
        return Err(err(0, Graph6ErrorKind::OrderTooLarge(n)));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() < expected {
        return Err(err(
            bytes.len(),
            Graph6ErrorKind::Truncated {
                expected,
                found: body.len(),
            },
        ));
    }
    if body.len() > expected {
        return Err(err(header + expected, Graph6ErrorKind::TrailingBytes));
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if six(body[expected - 1]) & ((1 << pad) - 1) != 0 {
            return Err(err(header + expected - 1, Graph6ErrorKind::NonzeroPadding));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if six(body[k / 6]) >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("decoded edges are in range"))
}
