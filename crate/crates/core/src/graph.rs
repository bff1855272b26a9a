use crate::color::{Color, ColorSet, NUM_COLORS};
use crate::error::{GemError, Result};

/// Per-vertex neighbor table: `adj[v][c]` is the vertex joined to `v` by its `c`-edge.
pub type Adjacency = [usize; NUM_COLORS];

/// A connected 4-regular multigraph with a proper 4-edge-coloring.
///
/// Each color class is a fixed-point-free involution on `0..order`. Parallel
/// edges are implicit: two colors may pair the same two vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredGraph {
    adj: Vec<Adjacency>,
}

impl ColoredGraph {
    /// Builds a graph from its neighbor table, checking every invariant.
    pub fn from_adjacency(adj: Vec<Adjacency>) -> Result<Self> {
        validate_matchings(&adj)?;
        if component_count(&adj) != 1 {
            return Err(GemError::invalid_graph("graph is not connected"));
        }
        Ok(ColoredGraph { adj })
    }

    /// Builds a graph from one involution per color.
    pub fn from_matchings(matchings: [Vec<usize>; NUM_COLORS]) -> Result<Self> {
        let n = matchings[0].len();
        if matchings.iter().any(|m| m.len() != n) {
            return Err(GemError::invalid_graph("matchings have different lengths"));
        }
        let adj = (0..n)
            .map(|v| [matchings[0][v], matchings[1][v], matchings[2][v], matchings[3][v]])
            .collect();
        Self::from_adjacency(adj)
    }

    /// Two vertices joined by four parallel edges: the smallest gem, representing S³.
    pub fn order_two() -> Self {
        ColoredGraph {
            adj: vec![[1; NUM_COLORS], [0; NUM_COLORS]],
        }
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<Adjacency>) -> Self {
        debug_assert!(validate_matchings(&adj).is_ok());
        debug_assert_eq!(component_count(&adj), 1);
        ColoredGraph { adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbor(&self, v: usize, c: Color) -> usize {
        self.adj[v][c.index()]
    }

    #[inline]
    pub fn adjacency(&self) -> &[Adjacency] {
        &self.adj
    }

    pub fn into_adjacency(self) -> Vec<Adjacency> {
        self.adj
    }

    /// The involution of color `c` as a vertex-indexed table.
    pub fn matching(&self, c: Color) -> Vec<usize> {
        self.adj.iter().map(|a| a[c.index()]).collect()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// The `c`-edges as `(u, v)` with `u < v`, ordered by `u`.
    pub fn edges(&self, c: Color) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .filter_map(move |(u, a)| (u < a[c.index()]).then_some((u, a[c.index()])))
    }

    /// Colors of all edges joining `u` and `v`.
    pub fn joining_colors(&self, u: usize, v: usize) -> ColorSet {
        Color::ALL
            .into_iter()
            .filter(|&c| self.adj[u][c.index()] == v)
            .collect()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        if perm.len() != n {
            return Err(GemError::invalid_argument("relabeling has wrong length"));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(GemError::invalid_argument("relabeling is not a permutation"));
            }
        }
        let mut adj = vec![[0; NUM_COLORS]; n];
        for (v, a) in self.adj.iter().enumerate() {
            for c in 0..NUM_COLORS {
                adj[perm[v]][c] = perm[a[c]];
            }
        }
        Ok(ColoredGraph { adj })
    }

    /// Renames colors: the `c`-edges of `self` become `sigma[c]`-edges.
    pub fn permute_colors(&self, sigma: [Color; NUM_COLORS]) -> Result<Self> {
        if ColorSet::from_colors(sigma) != ColorSet::FULL {
            return Err(GemError::invalid_argument("color map is not a permutation"));
        }
        let adj = self
            .adj
            .iter()
            .map(|a| {
                let mut b = [0; NUM_COLORS];
                for c in 0..NUM_COLORS {
                    b[sigma[c].index()] = a[c];
                }
                b
            })
            .collect();
        Ok(ColoredGraph { adj })
    }
}

/// Checks that every color is a fixed-point-free involution of a common even order.
pub(crate) fn validate_matchings(adj: &[Adjacency]) -> Result<()> {
    let n = adj.len();
    if n == 0 || n % 2 != 0 {
        return Err(GemError::invalid_graph(format!(
            "order must be even and positive, got {n}"
        )));
    }
    for (v, a) in adj.iter().enumerate() {
        for (c, &w) in a.iter().enumerate() {
            if w >= n {
                return Err(GemError::invalid_graph(format!(
                    "vertex {v}: color {c} neighbor {w} out of range"
                )));
            }
            if w == v {
                return Err(GemError::invalid_graph(format!("loop at vertex {v}, color {c}")));
            }
            if adj[w][c] != v {
                return Err(GemError::invalid_graph(format!(
                    "color {c} is not an involution at vertex {v}"
                )));
            }
        }
    }
    Ok(())
}

/// Labels connected components of the subgraph spanned by `colors`.
/// Returns per-vertex component ids (in order of smallest vertex) and the count.
pub(crate) fn component_labels(adj: &[Adjacency], colors: ColorSet) -> (Vec<usize>, usize) {
    const NONE: usize = usize::MAX;
    let n = adj.len();
    let mut label = vec![NONE; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != NONE {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for c in colors.iter() {
                let w = adj[u][c.index()];
                if label[w] == NONE {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

pub(crate) fn component_count(adj: &[Adjacency]) -> usize {
    component_labels(adj, ColorSet::FULL).1
}

/// Splits a (possibly disconnected) neighbor table into connected graphs,
/// ordered by smallest original vertex; vertex order is preserved inside each part.
pub(crate) fn split_components(adj: &[Adjacency]) -> Vec<ColoredGraph> {
    let (label, count) = component_labels(adj, ColorSet::FULL);
    let mut local = vec![0; adj.len()];
    let mut sizes = vec![0; count];
    for (v, &l) in label.iter().enumerate() {
        local[v] = sizes[l];
        sizes[l] += 1;
    }
    let mut parts: Vec<Vec<Adjacency>> = sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
    for (v, a) in adj.iter().enumerate() {
        parts[label[v]].push(a.map(|w| local[w]));
    }
    parts
        .into_iter()
        .map(ColoredGraph::from_adjacency_unchecked)
        .collect()
}
