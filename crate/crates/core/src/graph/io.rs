//! Graph files.
//!
//! Text form: one `v N` line, then `e U W` lines with 0-based endpoints; `#`
//! starts a comment. JSON form: `{"vertices": N, "edges": [[u, w], ...]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn parse_graph_text(src: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (lineno, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || Error::Parse(format!("line {}: cannot read {raw:?}", lineno + 1));
        let mut it = line.split_whitespace();
        let num = |s: Option<&str>| s.and_then(|s| s.parse::<usize>().ok()).ok_or_else(bad);
        match it.next() {
            Some("v") if n.is_none() => n = Some(num(it.next())?),
            Some("e") => edges.push((num(it.next())?, num(it.next())?)),
            _ => return Err(bad()),
        }
        if it.next().is_some() {
            return Err(bad());
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing `v N` line".into()))?;
    Graph::new(n, edges)
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut s = format!("v {}\n", g.vertex_count());
    for (a, b) in g.edges() {
        s.push_str(&format!("e {a} {b}\n"));
    }
    s
}

pub fn graph_to_json(g: &Graph) -> GraphJson {
    GraphJson { vertices: g.vertex_count(), edges: g.edges().to_vec() }
}

pub fn graph_from_json(j: GraphJson) -> Result<Graph> {
    Graph::new(j.vertices, j.edges)
}

/// Parse either form, deciding by the first non-blank character.
pub fn parse_graph(src: &str) -> Result<Graph> {
    if src.trim_start().starts_with('{') {
        graph_from_json(serde_json::from_str(src)?)
    } else {
        parse_graph_text(src)
    }
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}
