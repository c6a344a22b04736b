//! The `bbg 1` text format.
//!
//! ```text
//! bbg 1
//! parts <x_count> <y_count>
//! edges <edge_count>
//! e <xi> <yj>        (edge_count lines, 0-based)
//! ```
//!
//! Lines starting with `#` and blank lines are ignored anywhere.

use std::fmt::Write as _;

use super::{BipartiteGraph, Vertex};
use crate::error::{Error, Result};

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_fields<const N: usize>(line_no: usize, line: &str, keyword: &str) -> Result<[usize; N]> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some(keyword) {
        return Err(parse_err(line_no, format!("expected `{keyword}` line, got `{line}`")));
    }
    let mut out = [0usize; N];
    for slot in out.iter_mut() {
        let tok = tokens
            .next()
            .ok_or_else(|| parse_err(line_no, format!("`{keyword}` needs {N} fields")))?;
        *slot = tok
            .parse()
            .map_err(|_| parse_err(line_no, format!("not a nonnegative integer: `{tok}`")))?;
    }
    if tokens.next().is_some() {
        return Err(parse_err(line_no, format!("trailing tokens after `{keyword}`")));
    }
    Ok(out)
}

pub fn parse_bbg(text: &str) -> Result<BipartiteGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (no, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["bbg", "1"] {
        return Err(parse_err(no, format!("bad header `{header}`")));
    }
    let (no, line) = lines.next().ok_or_else(|| parse_err(no + 1, "missing `parts` line"))?;
    let [x_count, y_count] = parse_fields::<2>(no, line, "parts")?;
    let (no, line) = lines.next().ok_or_else(|| parse_err(no + 1, "missing `edges` line"))?;
    let [edge_count] = parse_fields::<1>(no, line, "edges")?;

    let mut edges = Vec::with_capacity(edge_count);
    let mut last = no;
    for (no, line) in lines {
        last = no;
        if edges.len() == edge_count {
            return Err(parse_err(no, format!("more than the declared {edge_count} edges")));
        }
        let [x, y] = parse_fields::<2>(no, line, "e")?;
        if x >= x_count {
            return Err(Error::IndexOutOfRange {
                vertex: Vertex::x(x),
                size: x_count,
            });
        }
        if y >= y_count {
            return Err(Error::IndexOutOfRange {
                vertex: Vertex::y(y),
                size: y_count,
            });
        }
        edges.push((x, y));
    }
    if edges.len() != edge_count {
        return Err(parse_err(
            last,
            format!("declared {edge_count} edges but found {}", edges.len()),
        ));
    }
    BipartiteGraph::new(x_count, y_count, edges).map_err(|e| match e {
        Error::InvalidParam(reason) => parse_err(2, reason),
        other => other,
    })
}

pub fn write_bbg(g: &BipartiteGraph) -> String {
    let mut out = String::with_capacity(16 * (g.edge_count() + 3));
    out.push_str("bbg 1\n");
    let _ = writeln!(out, "parts {} {}", g.x_count(), g.y_count());
    let _ = writeln!(out, "edges {}", g.edge_count());
    for &(x, y) in g.edges() {
        let _ = writeln!(out, "e {x} {y}");
    }
    out
}
