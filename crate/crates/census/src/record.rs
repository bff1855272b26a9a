use serde::{Deserialize, Serialize};

use gem_core::{
    boundary_profile, canonical_code, first_homology, g_vector, is_bipartite, is_contracted, is_rigid,
    AbelianGroup, ColoredGraph, GemCode, SurfaceType,
};

use crate::CensusError;

/// One boundary component of a catalog record.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundarySurface {
    pub orientable: bool,
    pub genus: u32,
}

impl From<SurfaceType> for BoundarySurface {
    fn from(s: SurfaceType) -> Self {
        BoundarySurface {
            orientable: s.orientable,
            genus: s.genus,
        }
    }
}

/// First homology as stored in a catalog.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Homology {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl From<AbelianGroup> for Homology {
    fn from(h: AbelianGroup) -> Self {
        Homology {
            rank: h.rank,
            torsion: h.torsion,
        }
    }
}

impl From<&Homology> for AbelianGroup {
    fn from(h: &Homology) -> Self {
        AbelianGroup {
            rank: h.rank,
            torsion: h.torsion.clone(),
        }
    }
}

/// A census entry. Every field is determined by `code`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub code: String,
    pub order: usize,
    pub bipartite: bool,
    pub contracted: bool,
    /// Always `false` for non-bipartite graphs.
    pub rigid: bool,
    pub g: [usize; 4],
    pub boundary: Vec<BoundarySurface>,
    pub h1: Homology,
}

impl CatalogRecord {
    /// Computes the record of `g` under its canonical code; `g` is
    /// reported in the coloring of the code.
    pub fn from_graph(g: &ColoredGraph) -> CatalogRecord {
        CatalogRecord::from_code(&canonical_code(g))
    }

    fn compute(code: &GemCode, g: &ColoredGraph) -> CatalogRecord {
        let bipartite = is_bipartite(g);
        CatalogRecord {
            code: code.as_str().to_string(),
            order: g.order(),
            bipartite,
            contracted: is_contracted(g),
            rigid: bipartite && g.order() > 2 && is_rigid(g).expect("bipartite"),
            g: g_vector(g),
            boundary: boundary_profile(g).components().iter().map(|&s| s.into()).collect(),
            h1: first_homology(g).into(),
        }
    }

    /// Record of the graph described by `code`, keeping `code` as given.
    pub fn from_code(code: &GemCode) -> CatalogRecord {
        CatalogRecord::compute(code, &code.decode())
    }

    pub fn graph(&self) -> Result<ColoredGraph, CensusError> {
        Ok(GemCode::parse(&self.code)?.decode())
    }

    /// Recomputes every field from the code; lists the fields that differ.
    pub fn check(&self) -> Result<(), CensusError> {
        let code = GemCode::parse(&self.code)?;
        let fresh = CatalogRecord::from_code(&code);
        let mut bad = Vec::new();
        if fresh.order != self.order {
            bad.push("order");
        }
        if fresh.bipartite != self.bipartite {
            bad.push("bipartite");
        }
        if fresh.contracted != self.contracted {
            bad.push("contracted");
        }
        if fresh.rigid != self.rigid {
            bad.push("rigid");
        }
        if fresh.g != self.g {
            bad.push("g");
        }
        if fresh.boundary != self.boundary {
            bad.push("boundary");
        }
        if fresh.h1 != self.h1 {
            bad.push("h1");
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(CensusError::RecordMismatch {
                code: self.code.clone(),
                fields: bad.join(", "),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_record() {
        let r = CatalogRecord::from_code(&GemCode::parse("CABCBABCA").unwrap());
        assert_eq!(r.order, 6);
        assert!(r.bipartite && r.contracted && !r.rigid);
        assert_eq!(r.boundary, vec![BoundarySurface { orientable: true, genus: 1 }]);
        assert_eq!(r.h1, Homology { rank: 1, torsion: vec![] });
        assert!(r.check().is_ok());
        let mut bad = r.clone();
        bad.rigid = true;
        bad.g = [9, 9, 9, 9];
        match bad.check() {
            Err(CensusError::RecordMismatch { fields, .. }) => assert_eq!(fields, "rigid, g"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn order_two_record() {
        let r = CatalogRecord::from_graph(&ColoredGraph::order_two());
        assert!(r.boundary.is_empty());
        assert!(!r.rigid);
        assert_eq!(r.h1.rank, 0);
    }
}
