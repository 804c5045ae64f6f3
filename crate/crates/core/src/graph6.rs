//! graph6 encoding (short form only).
//!
//! A line is `N(n)` followed by the upper triangle of the adjacency matrix in
//! column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed big-endian
//! into 6-bit groups, each group offset by 63. `N(n)` is the single byte
//! `n + 63` for `n <= 62`.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

pub const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("byte 0x{byte:02x} at offset {offset} is outside the graph6 range")]
    InvalidByte { byte: u8, offset: usize },
    #[error("expected {expected} data bytes for n={n}, found {found}")]
    WrongLength { n: usize, expected: usize, found: usize },
    #[error("non-zero padding bits in the final data byte")]
    NonCanonicalPadding,
    #[error("graph order {0} is not supported (maximum 32)")]
    UnsupportedOrder(usize),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A leading `>>graph6<<` and a trailing line ending
/// are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut s = text;
    while let [rest @ .., b'\n' | b'\r'] = s {
        s = rest;
    }
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
    }
    let (&first, data) = s
        .split_first()
        .ok_or_else(|| Graph6Error::MalformedHeader("empty input".into()))?;
    let n = match first {
        b'~' => {
            // Long-form order field; only used for n >= 63.
            let order = long_order(data)?;
            return Err(Graph6Error::UnsupportedOrder(order));
        }
        b':' | b'&' | b';' => {
            return Err(Graph6Error::MalformedHeader(format!(
                "leading `{}` marks sparse6/digraph6, not graph6",
                first as char
            )))
        }
        63..=125 => (first - 63) as usize,
        _ => {
            return Err(Graph6Error::MalformedHeader(format!(
                "order byte 0x{first:02x} out of range"
            )))
        }
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength { n, expected, found: data.len() });
    }
    let mut groups = Vec::with_capacity(expected);
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { byte: b, offset: i + 1 });
        }
        groups.push(b - 63);
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if let Some(&last) = groups.last() {
        let pad = expected * 6 - nbits;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonCanonicalPadding);
        }
    }
    let mut rows = [0u32; MAX_ORDER];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if groups[k / 6] >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(&rows[..n]).expect("decoded rows are symmetric and loop-free"))
}

fn long_order(data: &[u8]) -> Result<usize, Graph6Error> {
    let digits: &[u8] = match data {
        [b'~', rest @ ..] if rest.len() >= 6 => &rest[..6],
        [rest @ ..] if rest.len() >= 3 && rest[0] != b'~' => &rest[..3],
        _ => return Err(Graph6Error::MalformedHeader("truncated long-form order".into())),
    };
    let mut n = 0usize;
    for (i, &b) in digits.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { byte: b, offset: i + 1 });
        }
        n = n << 6 | (b - 63) as usize;
    }
    Ok(n)
}

/// Encodes `g` as a graph6 line without header or newline.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
