//! graph6 encoding for graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Only the single-byte size header is produced or accepted. Padding bits in
//! the final group are ignored on input and zero on output.

use super::small::{SmallGraph, MAX_VERTICES};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

pub fn parse_graph6(line: &[u8]) -> Result<SmallGraph> {
    let line = line.strip_suffix(b"\n").unwrap_or(line);
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    let (&head, body) = line
        .split_first()
        .ok_or_else(|| Error::Graph6("empty line".into()))?;
    if let Some(pos) = line.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "byte {} at offset {pos} outside 63..=126",
            line[pos]
        )));
    }
    let n = (head - BIAS) as usize;
    if head == 126 {
        return Err(Error::Graph6("multi-byte size header not supported".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = SmallGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - BIAS;
            if group >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &SmallGraph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((BIAS + n as u8) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((BIAS + group) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((BIAS + (group << (6 - filled))) as char);
    }
    out
}

/// Parses one graph per line, skipping blank lines and a leading `>>graph6<<` header.
///
/// Errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> std::result::Result<Vec<SmallGraph>, (usize, Error)> {
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line).trim_end();
        if line.is_empty() {
            continue;
        }
        graphs.push(parse_graph6(line.as_bytes()).map_err(|e| (i + 1, e))?);
    }
    Ok(graphs)
}
