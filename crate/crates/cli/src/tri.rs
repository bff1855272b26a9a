//! `GEM-TRI 1` files: the pseudo-triangulation dual to a graph.
//!
//! Vertex `i` of the graph is tetrahedron `i`; its face opposite the vertex
//! labeled `c` is glued to face `c` of tetrahedron `matching[c](i)`, matching
//! the remaining three vertex labels.
//!
//! ```text
//! GEM-TRI 1
//! n 2
//! 0: 1 1 1 1
//! 1: 0 0 0 0
//! ```

use std::fmt::Write as _;

use gem_core::{Adjacency, ColoredGraph, GemError, NUM_COLORS};

pub const HEADER: &str = "GEM-TRI 1";

pub fn export_tri(g: &ColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, "n {}", g.order()).unwrap();
    for (i, a) in g.adjacency().iter().enumerate() {
        writeln!(out, "{i}: {} {} {} {}", a[0], a[1], a[2], a[3]).unwrap();
    }
    out
}

fn bad(line: usize, message: impl Into<String>) -> GemError {
    GemError::Parse {
        row: line,
        position: 0,
        message: message.into(),
    }
}

/// Parses a `GEM-TRI 1` file back into its graph. Errors carry the 1-based line number.
pub fn import_tri(text: &str) -> Result<ColoredGraph, GemError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    match lines.next() {
        Some((_, HEADER)) => {}
        _ => return Err(bad(1, format!("expected `{HEADER}`"))),
    }
    let n = match lines.next() {
        Some((k, l)) => l
            .strip_prefix("n ")
            .and_then(|s| s.trim().parse::<usize>().ok())
            .ok_or_else(|| bad(k, "expected `n <count>`"))?,
        None => return Err(bad(2, "missing tetrahedron count")),
    };
    let mut adj: Vec<Adjacency> = Vec::with_capacity(n);
    for (k, l) in lines {
        if l.is_empty() {
            continue;
        }
        let (index, rest) = l.split_once(':').ok_or_else(|| bad(k, "expected `i: g0 g1 g2 g3`"))?;
        if index.trim().parse::<usize>().ok() != Some(adj.len()) {
            return Err(bad(k, format!("expected tetrahedron {}", adj.len())));
        }
        let fields: Vec<usize> = rest
            .split_whitespace()
            .map(|s| s.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad(k, "gluing indices must be non-negative integers"))?;
        if fields.len() != NUM_COLORS {
            return Err(bad(k, format!("expected {NUM_COLORS} gluings")));
        }
        adj.push([fields[0], fields[1], fields[2], fields[3]]);
    }
    if adj.len() != n {
        return Err(bad(0, format!("declared {n} tetrahedra, found {}", adj.len())));
    }
    ColoredGraph::from_adjacency(adj)
}
