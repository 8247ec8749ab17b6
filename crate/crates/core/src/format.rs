//! Hypergraph file formats.
//!
//! Text: the first non-comment line holds `n`; every following non-empty
//! line is one edge as whitespace-separated 0-based vertex indices. Lines
//! starting with `#` are comments.
//!
//! JSON: `{"n": 4, "edges": [[0,1,2],[0,1,3]]}`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub fn parse_text(input: &str) -> Result<Hypergraph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected a non-negative integer, found `{tok}`"),
            })
        };
        match n {
            None => {
                let mut toks = line.split_whitespace();
                n = Some(parse(toks.next().unwrap_or_default())?);
                if toks.next().is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "first line must hold only the vertex count".into(),
                    });
                }
            }
            Some(_) => {
                let edge = line
                    .split_whitespace()
                    .map(parse)
                    .collect::<Result<Vec<_>>>()?;
                edges.push((line_no, edge));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    // validate edge by edge so errors carry the offending line
    let mut h = Hypergraph::edgeless(n);
    for (line, edge) in edges {
        h = h.add_edge(&edge).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(h)
}

pub fn to_text(h: &Hypergraph) -> String {
    let mut out = format!("{}\n", h.n());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn parse_json(input: &str) -> Result<Hypergraph> {
    serde_json::from_str(input).map_err(|e| Error::Json(e.to_string()))
}

pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string(h).expect("hypergraph serialization is infallible")
}

/// Picks the parser from the content: JSON if it starts with `{`.
pub fn parse_auto(input: &str) -> Result<Hypergraph> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}
