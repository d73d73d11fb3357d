//! Plain-text graph files.
//!
//! ```text
//! # optional comments
//! p <node_count> <edge_count>
//! n <id> <weight>     (one per node; id a non-negative integer,
//!                      weight a positive decimal)
//! e <u> <v>           (one per edge; u != v, each unordered pair once)
//! ```
//!
//! The `p` header must be the first non-comment line and appear exactly
//! once. [`serialize_graph`] writes nodes and then edges in ascending id
//! order, so `parse_graph(serialize_graph(g)) == g` for every graph whose
//! weights have a terminating decimal expansion (all files produced by this
//! toolkit do).

use mwis_core::{GraphError, NodeId, Weight, WeightedGraph};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: expected `p <node_count> <edge_count>` header, got {text:?}")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: malformed line {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: bad weight in {text:?} (positive decimal required)")]
    BadWeight { line: usize, text: String },
    #[error(
        "header declared {expected_nodes} nodes and {expected_edges} edges, \
         file has {found_nodes} and {found_edges}"
    )]
    CountMismatch {
        expected_nodes: usize,
        expected_edges: usize,
        found_nodes: usize,
        found_edges: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_id(token: &str) -> Option<NodeId> {
    // Reject signs and leading plus; plain digits only.
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse::<u32>().ok().map(NodeId)
}

pub fn parse_graph(text: &str) -> Result<WeightedGraph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut nodes: Vec<(NodeId, Weight)> = Vec::new();
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let tag = tokens.next().expect("non-empty line has a first token");
        let rest: Vec<&str> = tokens.collect();
        let malformed = || FormatError::MalformedLine {
            line,
            text: trimmed.to_string(),
        };
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(FormatError::MalformedHeader {
                        line,
                        text: trimmed.to_string(),
                    });
                }
                let counts = match rest.as_slice() {
                    [n, m] => n.parse::<usize>().ok().zip(m.parse::<usize>().ok()),
                    _ => None,
                };
                header = Some(counts.ok_or_else(|| FormatError::MalformedHeader {
                    line,
                    text: trimmed.to_string(),
                })?);
            }
            "n" if header.is_some() => {
                let &[id, weight] = rest.as_slice() else {
                    return Err(malformed());
                };
                let id = parse_id(id).ok_or_else(malformed)?;
                let weight = Weight::parse_decimal(weight).map_err(|_| FormatError::BadWeight {
                    line,
                    text: trimmed.to_string(),
                })?;
                nodes.push((id, weight));
            }
            "e" if header.is_some() => {
                let &[u, v] = rest.as_slice() else {
                    return Err(malformed());
                };
                let u = parse_id(u).ok_or_else(malformed)?;
                let v = parse_id(v).ok_or_else(malformed)?;
                edges.push((u, v));
            }
            _ => {
                // Either an unknown tag or node/edge data before the header.
                return Err(if header.is_none() {
                    FormatError::MalformedHeader {
                        line,
                        text: trimmed.to_string(),
                    }
                } else {
                    malformed()
                });
            }
        }
    }
    let (expected_nodes, expected_edges) = header.ok_or(FormatError::MalformedHeader {
        line: text.lines().count() + 1,
        text: String::from("<missing>"),
    })?;
    if expected_nodes != nodes.len() || expected_edges != edges.len() {
        return Err(FormatError::CountMismatch {
            expected_nodes,
            expected_edges,
            found_nodes: nodes.len(),
            found_edges: edges.len(),
        });
    }
    Ok(WeightedGraph::build(nodes, edges)?)
}

pub fn serialize_graph(g: &WeightedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.node_count(), g.edge_count()).unwrap();
    for id in g.nodes() {
        writeln!(out, "n {} {}", id, g.weight(id).expect("own node")).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}
