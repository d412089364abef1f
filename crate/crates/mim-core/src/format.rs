//! Text formats for graphs and matchings.
//!
//! Graph format:
//!
//! ```text
//! <n> <m>
//! B W B ...           (n color tokens, one per vertex)
//! <u> <v>             (m edge lines, endpoints in any order)
//! ```
//!
//! Lines starting with `#` and blank lines are ignored anywhere. A graph
//! with n = 0 has no color line. Matchings read `size <s>` followed by `s`
//! lines `<black> <white>`.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::graph::{BipartiteGraph, Color};
use crate::matching::InducedMatching;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct FormatError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        msg: msg.into(),
    })
}

/// Logical lines: 1-based physical line numbers, comments and blanks removed.
fn logical_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, FormatError> {
    tok.parse()
        .map_err(|_| FormatError {
            line,
            msg: format!("expected {what}, got {tok:?}"),
        })
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph, FormatError> {
    let mut lines = logical_lines(text);
    let (header_line, header) = match lines.next() {
        Some(x) => x,
        None => return err(1, "missing header line `<n> <m>`"),
    };
    let mut toks = header.split_whitespace();
    let n = parse_usize(toks.next().unwrap_or(""), header_line, "vertex count")?;
    let m = parse_usize(toks.next().unwrap_or(""), header_line, "edge count")?;
    if toks.next().is_some() {
        return err(header_line, "header has more than two fields");
    }

    let mut colors = Vec::with_capacity(n);
    if n > 0 {
        let (color_line, color_text) = match lines.next() {
            Some(x) => x,
            None => return err(header_line, "missing color line"),
        };
        for tok in color_text.split_whitespace() {
            match tok {
                "B" => colors.push(Color::Black),
                "W" => colors.push(Color::White),
                other => return err(color_line, format!("bad color token {other:?}")),
            }
        }
        if colors.len() != n {
            return err(
                color_line,
                format!("expected {} color tokens, got {}", n, colors.len()),
            );
        }
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for _ in 0..m {
        let (line, text) = match lines.next() {
            Some(x) => x,
            None => return err(0, format!("expected {m} edge lines, found {}", edges.len())),
        };
        let mut toks = text.split_whitespace();
        let u = parse_usize(toks.next().unwrap_or(""), line, "edge endpoint")?;
        let v = parse_usize(toks.next().unwrap_or(""), line, "edge endpoint")?;
        if toks.next().is_some() {
            return err(line, "edge line has more than two fields");
        }
        if u >= n || v >= n {
            return err(line, format!("edge ({u}, {v}) out of range (n = {n})"));
        }
        if colors[u] == colors[v] {
            return err(line, format!("edge ({u}, {v}) joins two {}-colored vertices", colors[u].letter()));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return err(line, format!("duplicate edge ({u}, {v})"));
        }
        edges.push((u, v));
    }
    if let Some((line, _)) = lines.next() {
        return err(line, "trailing content after the last edge");
    }
    BipartiteGraph::new(n, colors, &edges).map_err(|e| FormatError {
        line: 0,
        msg: e.to_string(),
    })
}

pub fn write_graph(g: &BipartiteGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    if g.vertex_count() > 0 {
        let tokens: Vec<String> = g.colors().iter().map(|c| c.letter().to_string()).collect();
        let _ = writeln!(out, "{}", tokens.join(" "));
    }
    for &(b, w) in g.edges() {
        let _ = writeln!(out, "{b} {w}");
    }
    out
}

pub fn parse_matching(text: &str) -> Result<InducedMatching, FormatError> {
    let mut lines = logical_lines(text);
    let (header_line, header) = match lines.next() {
        Some(x) => x,
        None => return err(1, "missing `size <s>` line"),
    };
    let mut toks = header.split_whitespace();
    if toks.next() != Some("size") {
        return err(header_line, "matching must start with `size <s>`");
    }
    let s = parse_usize(toks.next().unwrap_or(""), header_line, "matching size")?;
    let mut pairs = Vec::with_capacity(s);
    for _ in 0..s {
        let (line, text) = match lines.next() {
            Some(x) => x,
            None => return err(0, format!("expected {s} pair lines, found {}", pairs.len())),
        };
        let mut toks = text.split_whitespace();
        let b = parse_usize(toks.next().unwrap_or(""), line, "vertex id")?;
        let w = parse_usize(toks.next().unwrap_or(""), line, "vertex id")?;
        if toks.next().is_some() {
            return err(line, "pair line has more than two fields");
        }
        pairs.push((b, w));
    }
    if let Some((line, _)) = lines.next() {
        return err(line, "trailing content after the last pair");
    }
    Ok(InducedMatching::new(pairs))
}

pub fn write_matching(m: &InducedMatching) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "size {}", m.len());
    for &(b, w) in m.pairs() {
        let _ = writeln!(out, "{b} {w}");
    }
    out
}
