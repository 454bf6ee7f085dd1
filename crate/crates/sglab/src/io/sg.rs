//! The line-oriented `.sg` format:
//!
//! ```text
//! # comment
//! n 5
//! e 0 1 -
//! e 0 2 +
//! ```
//!
//! Edges must satisfy `0 <= u < v < n` and appear at most once.

use std::fmt::Write as _;
use std::path::Path;

use sglab_core::{Sign, SignedGraph};

use super::FormatError;

pub fn parse_sg(text: &str) -> Result<SignedGraph, FormatError> {
    let mut graph: Option<SignedGraph> = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match (&mut graph, fields.as_slice()) {
            (None, ["n", count]) => {
                let n: usize = count
                    .parse()
                    .map_err(|_| FormatError::at(line, format!("bad vertex count {count:?}")))?;
                graph =
                    Some(SignedGraph::new(n).map_err(|e| FormatError::at(line, e.to_string()))?);
            }
            (None, _) => return Err(FormatError::at(line, "expected `n <N>` header")),
            (Some(_), ["n", ..]) => return Err(FormatError::at(line, "repeated `n` header")),
            (Some(g), ["e", u, v, s]) => {
                let parse = |x: &str| {
                    x.parse::<usize>()
                        .map_err(|_| FormatError::at(line, format!("bad vertex {x:?}")))
                };
                let (u, v) = (parse(u)?, parse(v)?);
                let sign = match *s {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => return Err(FormatError::at(line, format!("bad sign {other:?}"))),
                };
                if u >= v {
                    return Err(FormatError::at(
                        line,
                        format!("edge {u} {v} must have u < v"),
                    ));
                }
                g.add_edge(u, v, sign)
                    .map_err(|e| FormatError::at(line, e.to_string()))?;
            }
            (Some(_), _) => {
                return Err(FormatError::at(
                    line,
                    format!("unrecognized line {content:?}"),
                ))
            }
        }
    }
    graph.ok_or_else(|| FormatError::at(last_line.max(1), "missing `n <N>` header"))
}

pub fn write_sg(g: &SignedGraph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (e, s) in g.edges() {
        let c = if s == Sign::Positive { '+' } else { '-' };
        writeln!(out, "e {} {} {}", e.u, e.v, c).unwrap();
    }
    out
}

pub fn read_sg_file(path: impl AsRef<Path>) -> Result<SignedGraph, FormatError> {
    parse_sg(&std::fs::read_to_string(path)?)
}
