use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::color::{Color, NUM_COLORS};
use crate::graph::ColoredGraph;
use crate::snf::invariant_factors;

/// A finitely generated abelian group `Z^rank + Z/d_1 + ... + Z/d_k` with `d_1 | ... | d_k`, `d_i >= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Checks `d_i >= 2` and the divisibility chain.
    pub fn is_normalized(&self) -> bool {
        self.torsion.iter().all(|&d| d >= 2)
            && self.torsion.windows(2).all(|w| w[1] % w[0] == 0)
    }

    /// Direct sum, renormalized to invariant-factor form.
    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let diag: Vec<Vec<BigInt>> = {
            let all: Vec<u64> = self.torsion.iter().chain(&other.torsion).copied().collect();
            (0..all.len())
                .map(|i| (0..all.len()).map(|j| BigInt::from(if i == j { all[i] } else { 0 })).collect())
                .collect()
        };
        AbelianGroup {
            rank: self.rank + other.rank,
            torsion: torsion_of(invariant_factors(diag)),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn torsion_of(factors: Vec<BigInt>) -> Vec<u64> {
    factors
        .into_iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().expect("torsion coefficient exceeds 64 bits"))
        .collect()
}

/// Index of the `c`-edge at `v` among all edges: color-major, then by smaller endpoint rank.
struct EdgeIndex {
    id: Vec<[usize; NUM_COLORS]>,
    count: usize,
}

impl EdgeIndex {
    fn new(g: &ColoredGraph) -> Self {
        let mut id = vec![[0; NUM_COLORS]; g.order()];
        let mut count = 0;
        for c in Color::ALL {
            for (u, v) in g.edges(c) {
                id[u][c.index()] = count;
                id[v][c.index()] = count;
                count += 1;
            }
        }
        EdgeIndex { id, count }
    }
}

/// The cellular boundary map from 2-cells (one per bicolored cycle) to edges.
///
/// Edges are oriented from the lower to the higher vertex index. Rows are
/// faces, ordered by color pair and then by smallest vertex.
pub fn face_boundary_matrix(g: &ColoredGraph) -> Vec<Vec<i64>> {
    let edges = EdgeIndex::new(g);
    let adj = g.adjacency();
    let mut rows = Vec::new();
    for a in 0..NUM_COLORS {
        for b in a + 1..NUM_COLORS {
            let mut seen = vec![false; g.order()];
            for s in g.vertices() {
                if seen[s] {
                    continue;
                }
                let mut row = vec![0i64; edges.count];
                let mut u = s;
                let mut color = a;
                loop {
                    seen[u] = true;
                    let w = adj[u][color];
                    row[edges.id[u][color]] += if u < w { 1 } else { -1 };
                    u = w;
                    color = if color == a { b } else { a };
                    if u == s && color == a {
                        break;
                    }
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// First integral homology of the manifold represented by `g`.
///
/// Computed on the 2-complex built from the graph by capping every bicolored
/// cycle with a disk; the 3-cells and collars added afterwards leave H₁ unchanged.
pub fn first_homology(g: &ColoredGraph) -> AbelianGroup {
    let boundary = face_boundary_matrix(g);
    let edge_count = g.order() * NUM_COLORS / 2;
    let cycle_rank = edge_count - g.order() + 1;
    let matrix = boundary
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let factors = invariant_factors(matrix);
    AbelianGroup {
        rank: cycle_rank - factors.len(),
        torsion: torsion_of(factors),
    }
}
