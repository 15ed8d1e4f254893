//! MGRAPH, the plain-text interchange format.
//!
//! ```text
//! # comment
//! mg 4
//! e 0 1 1
//! e 1 2 2
//! ```
//!
//! The header gives the vertex count; each `e u v mult` line adds `mult`
//! parallel edges between `u` and `v`. Blank lines are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

/// Canonical text: one line per adjacent pair, pairs in ascending order.
pub fn to_mgraph(g: &Multigraph) -> String {
    let mut pairs: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in g.edges() {
        let (a, b) = e.key();
        *pairs.entry((a.0, b.0)).or_default() += 1;
    }
    let mut out = format!("mg {}\n", g.vertex_count());
    for ((a, b), m) in pairs {
        writeln!(out, "e {a} {b} {m}").unwrap();
    }
    out
}

/// Parses exactly one graph.
pub fn parse_mgraph(text: &str) -> Result<Multigraph> {
    let mut graphs = parse_mgraph_stream(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(Error::Parse {
            line: 1,
            message: "missing `mg <n>` header".into(),
        }),
        _ => Err(Error::Parse {
            line: 1,
            message: format!("expected one graph, found {}", graphs.len()),
        }),
    }
}

/// Parses a concatenation of graphs, each starting at its own `mg` line.
pub fn parse_mgraph_stream(text: &str) -> Result<Vec<Multigraph>> {
    let mut graphs = Vec::new();
    let mut current: Option<Multigraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        let mut fields = trimmed.split_whitespace();
        match fields.next() {
            Some("mg") => {
                let n = number(fields.next(), "vertex count").map_err(err)?;
                if let Some(extra) = fields.next() {
                    return Err(err(format!("unexpected token `{extra}`")));
                }
                graphs.extend(current.replace(Multigraph::new(n)));
            }
            Some("e") => {
                let g = current
                    .as_mut()
                    .ok_or_else(|| err("edge line before `mg` header".into()))?;
                let u = number(fields.next(), "endpoint").map_err(err)?;
                let v = number(fields.next(), "endpoint").map_err(err)?;
                let mult = number(fields.next(), "multiplicity").map_err(err)?;
                if let Some(extra) = fields.next() {
                    return Err(err(format!("unexpected token `{extra}`")));
                }
                if mult == 0 {
                    return Err(err("multiplicity must be at least 1".into()));
                }
                for _ in 0..mult {
                    g.push_edge(VertexId(u), VertexId(v))
                        .map_err(|e| err(e.to_string()))?;
                }
            }
            Some(other) => return Err(err(format!("unknown record `{other}`"))),
            None => unreachable!("blank lines skipped"),
        }
    }
    graphs.extend(current);
    Ok(graphs)
}

fn number(token: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    let token = token.ok_or_else(|| format!("missing {what}"))?;
    token
        .parse()
        .map_err(|_| format!("{what} `{token}` is not a non-negative integer"))
}
