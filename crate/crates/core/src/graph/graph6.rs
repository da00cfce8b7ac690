//! The graph6 interchange format.
//!
//! A line is a size header followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six
//! bits per byte, most significant first, each byte offset by 63. Orders up
//! to 62 use a single header byte `n + 63`; larger orders use `~` followed by
//! three 6-bit bytes.

use std::io::{self, BufRead};

use thiserror::Error;

use super::{Graph, GraphError, MAX_ORDER};
use crate::bits::bit;

const OPTIONAL_HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted. Offsets in errors count from the start
/// of `text`.
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(OPTIONAL_HEADER) {
        Some(rest) => (OPTIONAL_HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };

    let mut sixes = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(skip + i, format!("byte 0x{b:02x} is outside the graph6 range 63..=126")));
        }
        sixes.push(b - 63);
    }
    if sixes.is_empty() {
        return Err(parse_err(skip, "missing size header"));
    }

    let (n, header_len) = if sixes[0] < 63 {
        (sixes[0] as usize, 1)
    } else {
        if sixes.len() < 4 {
            return Err(parse_err(skip + sixes.len(), "truncated long size header"));
        }
        if sixes[1] == 63 {
            return Err(parse_err(skip + 1, format!("order exceeds {MAX_ORDER}")));
        }
        let n = (sixes[1] as usize) << 12 | (sixes[2] as usize) << 6 | sixes[3] as usize;
        (n, 4)
    };
    if n == 0 {
        return Err(parse_err(skip, "graphs of order 0 are not accepted"));
    }
    if n > MAX_ORDER {
        return Err(parse_err(skip, format!("order {n} exceeds {MAX_ORDER}")));
    }

    let nbits = n * (n - 1) / 2;
    let expected = header_len + nbits.div_ceil(6);
    if sixes.len() != expected {
        let offset = skip + sixes.len().min(expected);
        return Err(parse_err(
            offset,
            format!("expected {expected} bytes for order {n}, found {}", sixes.len()),
        ));
    }

    let data = &sixes[header_len..];
    let mut g = Graph::edgeless(n)?;
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
    let pad = data.len() * 6 - nbits;
    if pad > 0 {
        let last = *data.last().expect("padding implies a data byte");
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(parse_err(skip + sixes.len() - 1, "padding bits are not zero"));
        }
    }
    Ok(g)
}

/// Encodes a graph as canonical graph6 (no optional header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, (n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {source}")]
    Parse { line: usize, source: GraphError },
}

/// Reads one graph per line. Blank lines are skipped; line numbers in
/// errors are 1-based.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>, ReadError> {
    let mut graphs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        graphs.push(from_graph6(line.trim_end()).map_err(|source| ReadError::Parse { line: i + 1, source })?);
    }
    Ok(graphs)
}

pub use ReadError as Graph6ReadError;
