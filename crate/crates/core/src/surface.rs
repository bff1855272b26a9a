use std::fmt;

use crate::color::ColorSet;
use crate::error::{GemError, Result};
use crate::graph::{Adjacency, ColoredGraph};
use crate::residue::{bicolored_cycles, Residue};

/// A closed connected surface, given by orientability and genus
/// (non-orientable genus for non-orientable surfaces).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceType {
    pub orientable: bool,
    pub genus: u32,
}

impl SurfaceType {
    pub const SPHERE: SurfaceType = SurfaceType {
        orientable: true,
        genus: 0,
    };
    pub const TORUS: SurfaceType = SurfaceType {
        orientable: true,
        genus: 1,
    };

    /// Classifies a surface from its Euler characteristic.
    pub fn from_euler(chi: i64, orientable: bool) -> Result<SurfaceType> {
        let deficit = 2 - chi;
        let genus = match orientable {
            true if deficit >= 0 && deficit % 2 == 0 => deficit / 2,
            false if deficit >= 1 => deficit,
            _ => {
                return Err(GemError::invalid_argument(format!(
                    "no closed {} surface has Euler characteristic {chi}",
                    if orientable { "orientable" } else { "non-orientable" }
                )))
            }
        };
        Ok(SurfaceType {
            orientable,
            genus: genus as u32,
        })
    }

    pub fn euler_characteristic(self) -> i64 {
        if self.orientable {
            2 - 2 * i64::from(self.genus)
        } else {
            2 - i64::from(self.genus)
        }
    }

    pub fn is_sphere(self) -> bool {
        self == SurfaceType::SPHERE
    }

    pub fn is_torus(self) -> bool {
        self == SurfaceType::TORUS
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.orientable, self.genus) {
            (true, 0) => write!(f, "sphere"),
            (true, 1) => write!(f, "torus"),
            (true, g) => write!(f, "orientable genus {g}"),
            (false, 1) => write!(f, "projective plane"),
            (false, 2) => write!(f, "Klein bottle"),
            (false, g) => write!(f, "non-orientable genus {g}"),
        }
    }
}

/// The surface obtained by capping every bicolored cycle of a 3-residue with a disk.
pub fn surface_type(g: &ColoredGraph, r: &Residue) -> Result<SurfaceType> {
    if r.colors().len() != 3 {
        return Err(GemError::invalid_argument(format!(
            "surface type needs a 3-residue, got colors {}",
            r.colors()
        )));
    }
    Ok(surface_of(g.adjacency(), r.vertices(), r.colors()))
}

/// Euler characteristic `v - e + f` of a capped 3-residue.
pub(crate) fn residue_euler(adj: &[Adjacency], vertices: &[usize], colors: ColorSet) -> i64 {
    let cs: Vec<usize> = colors.iter().map(|c| c.index()).collect();
    let v = vertices.len() as i64;
    let e = 3 * v / 2;
    let f = bicolored_cycles(adj, vertices, cs[0], cs[1])
        + bicolored_cycles(adj, vertices, cs[0], cs[2])
        + bicolored_cycles(adj, vertices, cs[1], cs[2]);
    v - e + f as i64
}

/// Whether the subgraph spanned by `colors` on `vertices` (a union of residues) is bipartite.
pub(crate) fn is_bipartite_on(adj: &[Adjacency], vertices: &[usize], colors: ColorSet) -> bool {
    let mut side = vec![u8::MAX; adj.len()];
    let mut stack = Vec::new();
    for &s in vertices {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for c in colors.iter() {
                let w = adj[u][c.index()];
                if side[w] == u8::MAX {
                    side[w] = side[u] ^ 1;
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

pub(crate) fn surface_of(adj: &[Adjacency], vertices: &[usize], colors: ColorSet) -> SurfaceType {
    let chi = residue_euler(adj, vertices, colors);
    let orientable = is_bipartite_on(adj, vertices, colors);
    SurfaceType::from_euler(chi, orientable).expect("capped residue is a closed surface")
}
