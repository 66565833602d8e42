//! graph6 encoding: a size header followed by the upper-triangle adjacency
//! bits in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per
//! printable byte at offset 63, zero-padded.

use thiserror::Error;

use super::{bit, Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const OPTIONAL_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed size header")]
    BadHeader,
    #[error("byte {byte:#04x} at position {position} is outside the graph6 range")]
    BadByte { byte: u8, position: usize },
    #[error("expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after the adjacency data")]
    TrailingGarbage(usize),
    #[error("padding bits are not zero")]
    NonZeroPadding,
    #[error("graph on {0} vertices exceeds the mask capacity of {MAX_VERTICES}")]
    TooLarge(usize),
}

/// Parses one graph6 line. A trailing newline and the optional
/// `>>graph6<<` prefix are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(OPTIONAL_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut values = Vec::with_capacity(bytes.len());
    for (position, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { byte, position });
        }
        values.push(byte - OFFSET);
    }

    let (n, header_len) = decode_size(&values)?;
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &values[header_len..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage(data.len() - expected));
    }

    let mut g = Graph::empty(n).map_err(|_| Graph6Error::TooLarge(n))?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if data[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.adj[i] |= bit(j);
                g.adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if bit_count % 6 != 0 {
        let pad = 6 - bit_count % 6;
        if data[expected - 1] & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(g)
}

fn decode_size(values: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let read = |range: std::ops::Range<usize>| -> Result<usize, Graph6Error> {
        let chunk = values.get(range).ok_or(Graph6Error::BadHeader)?;
        Ok(chunk.iter().fold(0usize, |acc, &v| (acc << 6) | v as usize))
    };
    if values[0] != 63 {
        return Ok((values[0] as usize, 1));
    }
    if values.get(1) != Some(&63) {
        let n = read(1..4)?;
        if n < 63 {
            return Err(Graph6Error::BadHeader);
        }
        return Ok((n, 4));
    }
    let n = read(2..8)?;
    if n < 258_048 {
        return Err(Graph6Error::BadHeader);
    }
    Ok((n, 8))
}

/// Canonical graph6 encoding, without a trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8);
    } else {
        out.push(63);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (6 - filled));
    }
    out.into_iter().map(|v| (v + OFFSET) as char).collect()
}
