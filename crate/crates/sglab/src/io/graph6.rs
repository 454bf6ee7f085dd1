//! graph6 for orders up to 62 (single-byte size prefix).

use std::path::Path;

use sglab_core::{Sign, SignedGraph};

use super::FormatError;

const MAX_ORDER: usize = 62;

/// Parses one graph6 string (no trailing newline); edges come out positive.
pub fn parse_graph6(s: &str) -> Result<SignedGraph, FormatError> {
    parse_line(s, 1)
}

fn parse_line(s: &str, line: usize) -> Result<SignedGraph, FormatError> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::at(line, "empty graph6 string"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(FormatError::at(line, "graph6 bytes must lie in 63..=126"));
    }
    let n = (bytes[0] - 63) as usize;
    if n > MAX_ORDER {
        return Err(FormatError::at(line, "only orders up to 62 are supported"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() != need + 1 {
        return Err(FormatError::at(
            line,
            format!(
                "order {n} needs {need} data bytes, found {}",
                bytes.len() - 1
            ),
        ));
    }
    let mut g = SignedGraph::new(n).unwrap();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j, Sign::Positive).unwrap();
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes the underlying graph; signs are dropped.
pub fn write_graph6(g: &SignedGraph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 writer supports orders up to 62");
    let mut out = vec![(n as u8) + 63];
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
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Reads a file with one graph per line; blank lines and a leading
/// `>>graph6<<` header are skipped.
pub fn read_graph6(path: impl AsRef<Path>) -> Result<Vec<SignedGraph>, FormatError> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut line = raw.trim_end();
        if let Some(rest) = line.strip_prefix(">>graph6<<") {
            line = rest;
        }
        if line.is_empty() {
            continue;
        }
        out.push(parse_line(line, i + 1)?);
    }
    Ok(out)
}
