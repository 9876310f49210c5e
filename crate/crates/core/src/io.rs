//! Graph file formats.
//!
//! JSON: `{"vertices": ["a", "b"], "edges": [["a", "b"]]}`.
//!
//! Edge list: one `u v` pair per line, `#` starts a comment, and a line with a
//! single token declares an isolated vertex. Vertices are numbered in order of
//! first appearance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Graph::new(raw.vertices, raw.edges)
}

pub fn graph_to_json_value(g: &Graph) -> serde_json::Value {
    let raw = GraphJson {
        vertices: g.names().to_vec(),
        edges: g.edges().map(|(u, v)| (g.name(u).to_owned(), g.name(v).to_owned())).collect(),
    };
    serde_json::to_value(raw).expect("graph serializes")
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&graph_to_json_value(g)).expect("graph serializes")
}

pub fn graph_from_edge_list(text: &str) -> Result<Graph> {
    let mut names: Vec<String> = Vec::new();
    let mut seen = std::collections::HashMap::new();
    let mut edges = Vec::new();
    let mut intern = |name: &str, names: &mut Vec<String>| -> usize {
        *seen.entry(name.to_owned()).or_insert_with(|| {
            names.push(name.to_owned());
            names.len() - 1
        })
    };
    for (lineno, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [v] => {
                intern(v, &mut names);
            }
            [u, v] => {
                let u = intern(u, &mut names);
                let v = intern(v, &mut names);
                edges.push((u, v));
            }
            _ => return Err(Error::Parse(format!("line {}: expected `u v`", lineno + 1))),
        }
    }
    Graph::from_index_edges(names, &edges)
}

pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            out.push_str(g.name(v));
            out.push('\n');
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.name(u), g.name(v)));
    }
    out
}

/// Chooses the parser from the content: JSON when it starts with `{`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        graph_from_json(text)
    } else {
        graph_from_edge_list(text)
    }
}
