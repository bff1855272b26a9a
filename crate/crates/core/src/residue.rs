use crate::color::ColorSet;
use crate::error::{GemError, Result};
use crate::graph::{component_labels, Adjacency, ColoredGraph};

/// One connected component of the subgraph spanned by a set of colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    colors: ColorSet,
    vertices: Vec<usize>,
}

impl Residue {
    pub fn colors(&self) -> ColorSet {
        self.colors
    }

    /// Sorted vertex list.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// All `colors`-residues of `g`, ordered by smallest vertex.
pub fn residues(g: &ColoredGraph, colors: ColorSet) -> Result<Vec<Residue>> {
    if colors.is_empty() {
        return Err(GemError::invalid_argument("empty color set"));
    }
    Ok(residues_of(g.adjacency(), colors))
}

pub(crate) fn residues_of(adj: &[Adjacency], colors: ColorSet) -> Vec<Residue> {
    let (label, count) = component_labels(adj, colors);
    let mut out: Vec<Residue> = (0..count)
        .map(|_| Residue {
            colors,
            vertices: Vec::new(),
        })
        .collect();
    for (v, &l) in label.iter().enumerate() {
        out[l].vertices.push(v);
    }
    out
}

/// The `colors`-residue through `v`.
pub(crate) fn residue_through(adj: &[Adjacency], colors: ColorSet, v: usize) -> Residue {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![v];
    seen[v] = true;
    let mut vertices = vec![v];
    while let Some(u) = stack.pop() {
        for c in colors.iter() {
            let w = adj[u][c.index()];
            if !seen[w] {
                seen[w] = true;
                vertices.push(w);
                stack.push(w);
            }
        }
    }
    vertices.sort_unstable();
    Residue { colors, vertices }
}

/// Number of `{a,b}`-colored cycles meeting `vertices` (which must be a union of such cycles).
pub(crate) fn bicolored_cycles(adj: &[Adjacency], vertices: &[usize], a: usize, b: usize) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut cycles = 0;
    for &s in vertices {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut u = s;
        loop {
            seen[u] = true;
            u = adj[u][a];
            seen[u] = true;
            u = adj[u][b];
            if u == s {
                break;
            }
        }
    }
    cycles
}
