//! Graphviz export of Hasse diagrams, and a parser for the same subset of
//! the DOT language (used to validate exports by round trip).

use super::TamariPoset;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DotGraph {
    pub name: String,
    /// Vertex labels in declaration order.
    pub labels: Vec<String>,
    /// Edges as indices into `labels`.
    pub edges: Vec<(usize, usize)>,
}

pub(super) fn to_dot(t: &TamariPoset) -> String {
    let mut s = format!("digraph tamari_m{}_n{} {{\n", t.m(), t.n());
    s.push_str("  rankdir=BT;\n");
    for (i, p) in t.vertices().iter().enumerate() {
        s.push_str(&format!("  v{i} [label=\"{}\"];\n", p.word()));
    }
    for (i, j) in t.hasse_edges() {
        s.push_str(&format!("  v{i} -> v{j};\n"));
    }
    s.push_str("}\n");
    s
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidPath(format!("malformed DOT: {}", msg.into()))
}

fn node_index(id: &str) -> Result<usize> {
    id.strip_prefix('v')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| bad(format!("unknown node id {id:?}")))
}

pub fn parse_dot(text: &str) -> Result<DotGraph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| bad("empty input"))?;
    let name = header
        .strip_prefix("digraph ")
        .and_then(|h| h.strip_suffix('{'))
        .map(|h| h.trim().to_string())
        .ok_or_else(|| bad("missing digraph header"))?;
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut closed = false;
    for line in lines {
        if closed {
            return Err(bad("content after closing brace"));
        }
        if line == "}" {
            closed = true;
            continue;
        }
        let stmt = line.strip_suffix(';').ok_or_else(|| bad("missing semicolon"))?;
        if let Some((a, b)) = stmt.split_once("->") {
            let (a, b) = (node_index(a.trim())?, node_index(b.trim())?);
            if a >= labels.len() || b >= labels.len() {
                return Err(bad("edge refers to an undeclared node"));
            }
            edges.push((a, b));
        } else if let Some((id, attrs)) = stmt.split_once('[') {
            let idx = node_index(id.trim())?;
            if idx != labels.len() {
                return Err(bad("nodes out of order"));
            }
            let label = attrs
                .trim()
                .strip_prefix("label=\"")
                .and_then(|a| a.strip_suffix("\"]"))
                .ok_or_else(|| bad("missing label"))?;
            labels.push(label.to_string());
        } else if stmt.contains('=') {
            continue;
        } else {
            return Err(bad(format!("unrecognised statement {stmt:?}")));
        }
    }
    if !closed {
        return Err(bad("missing closing brace"));
    }
    Ok(DotGraph {
        name,
        labels,
        edges,
    })
}

impl DotGraph {
    /// `true` when this graph is exactly the Hasse diagram of `t`.
    pub fn matches(&self, t: &TamariPoset) -> bool {
        let words: Vec<String> = t.vertices().iter().map(|p| p.word()).collect();
        let edges: Vec<(usize, usize)> = t.hasse_edges().collect();
        self.labels == words && self.edges == edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for (m, n) in [(1, 0), (1, 3), (2, 3)] {
            let t = TamariPoset::build(m, n).unwrap();
            let g = parse_dot(&t.to_dot()).unwrap();
            assert!(g.matches(&t));
            assert_eq!(g.labels.len(), t.len());
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_dot("").is_err());
        assert!(parse_dot("graph x {\n}\n").is_err());
        assert!(parse_dot("digraph x {\n  v0 -> v1;\n}\n").is_err());
        assert!(parse_dot("digraph x {\n  v0 [label=\"NE\"];\n").is_err());
    }
}
