use std::fmt;

use crate::color::{Color, ColorSet, NUM_COLORS};
use crate::graph::{Adjacency, ColoredGraph};
use crate::residue::{residues_of, Residue};
use crate::surface::{is_bipartite_on, surface_of, SurfaceType};

/// The boundary surfaces of the manifold: one entry per singular 3-residue, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BoundaryProfile {
    components: Vec<SurfaceType>,
}

impl BoundaryProfile {
    pub fn new(mut components: Vec<SurfaceType>) -> Self {
        components.retain(|s| !s.is_sphere());
        components.sort_unstable();
        BoundaryProfile { components }
    }

    pub fn components(&self) -> &[SurfaceType] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Empty boundary: the manifold is closed.
    pub fn is_closed(&self) -> bool {
        self.components.is_empty()
    }

    /// Non-empty and every component is a torus.
    pub fn is_toric(&self) -> bool {
        !self.is_closed() && self.components.iter().all(|s| s.is_torus())
    }

    pub fn is_connected_toric(&self) -> bool {
        self.is_toric() && self.components.len() == 1
    }

    pub fn torus_count(&self) -> usize {
        self.components.iter().filter(|s| s.is_torus()).count()
    }
}

impl fmt::Display for BoundaryProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_closed() {
            return write!(f, "empty");
        }
        for (i, s) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A 3-residue together with its capped surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSurface {
    /// The color missing from the residue.
    pub missing: Color,
    pub residue: Residue,
    pub surface: SurfaceType,
}

impl ResidueSurface {
    pub fn is_ordinary(&self) -> bool {
        self.surface.is_sphere()
    }
}

/// Every 3-residue of `g` with its surface, grouped by missing color.
pub fn residue_surfaces(g: &ColoredGraph) -> Vec<ResidueSurface> {
    residue_surfaces_of(g.adjacency())
}

pub(crate) fn residue_surfaces_of(adj: &[Adjacency]) -> Vec<ResidueSurface> {
    let mut out = Vec::new();
    for missing in Color::ALL {
        let colors = missing.hat();
        for residue in residues_of(adj, colors) {
            let surface = surface_of(adj, residue.vertices(), colors);
            out.push(ResidueSurface {
                missing,
                residue,
                surface,
            });
        }
    }
    out
}

pub fn boundary_profile(g: &ColoredGraph) -> BoundaryProfile {
    profile_of(g.adjacency())
}

pub(crate) fn profile_of(adj: &[Adjacency]) -> BoundaryProfile {
    BoundaryProfile::new(residue_surfaces_of(adj).into_iter().map(|r| r.surface).collect())
}

/// Whether the underlying multigraph admits a 2-coloring of its vertices.
pub fn is_bipartite(g: &ColoredGraph) -> bool {
    let all: Vec<usize> = g.vertices().collect();
    is_bipartite_on(g.adjacency(), &all, ColorSet::FULL)
}

/// `g[c]` is the number of residues avoiding color `c`.
pub fn g_vector(g: &ColoredGraph) -> [usize; NUM_COLORS] {
    Color::ALL.map(|c| residues_of(g.adjacency(), c.hat()).len())
}

/// For each color `c`, either a single `ĉ`-residue exists or all of them are singular.
pub fn is_contracted(g: &ColoredGraph) -> bool {
    contracted_of(g.adjacency())
}

pub(crate) fn contracted_of(adj: &[Adjacency]) -> bool {
    let surfaces = residue_surfaces_of(adj);
    Color::ALL.into_iter().all(|c| {
        let mut of_c = surfaces.iter().filter(|r| r.missing == c);
        let count = of_c.clone().count();
        count == 1 || of_c.all(|r| !r.is_ordinary())
    })
}

/// Colors `c` having at least one singular `ĉ`-residue.
pub fn singular_colors(g: &ColoredGraph) -> ColorSet {
    residue_surfaces(g)
        .into_iter()
        .filter(|r| !r.is_ordinary())
        .map(|r| r.missing)
        .collect()
}
