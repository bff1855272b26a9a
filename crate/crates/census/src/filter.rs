use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::CensusError;

/// Bipartiteness requirement of a census.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Any,
    Bipartite,
    NonBipartite,
}

/// Allowed boundary surfaces.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundaryClass {
    Any,
    /// Every boundary component is a torus.
    Toric,
    /// Exactly one boundary component, a torus.
    ToricConnected,
}

impl BoundaryClass {
    pub fn name(self) -> &'static str {
        match self {
            BoundaryClass::Any => "any",
            BoundaryClass::Toric => "toric",
            BoundaryClass::ToricConnected => "toric-connected",
        }
    }
}

impl fmt::Display for BoundaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundaryClass {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "any" => Ok(BoundaryClass::Any),
            "toric" => Ok(BoundaryClass::Toric),
            "toric-connected" => Ok(BoundaryClass::ToricConnected),
            _ => Err(CensusError::InvalidFilter(format!("unknown boundary class `{s}`"))),
        }
    }
}

/// Which graphs a census keeps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CensusFilter {
    pub parity: Parity,
    /// At least one singular residue. Only `true` is supported.
    pub require_boundary: bool,
    pub boundary: BoundaryClass,
    /// Keep only rigid graphs; needs `parity == Bipartite`.
    pub rigid_only: bool,
    /// Only `true` is supported.
    pub contracted_only: bool,
    pub no_2_dipoles: bool,
}

impl Default for CensusFilter {
    fn default() -> Self {
        CensusFilter {
            parity: Parity::Bipartite,
            require_boundary: true,
            boundary: BoundaryClass::Any,
            rigid_only: false,
            contracted_only: true,
            no_2_dipoles: true,
        }
    }
}

impl CensusFilter {
    pub fn bipartite() -> Self {
        CensusFilter::default()
    }

    pub fn non_bipartite() -> Self {
        CensusFilter {
            parity: Parity::NonBipartite,
            ..CensusFilter::default()
        }
    }

    pub fn with_boundary(mut self, boundary: BoundaryClass) -> Self {
        self.boundary = boundary;
        self
    }

    pub fn rigid(mut self) -> Self {
        self.rigid_only = true;
        self
    }

    pub fn validate(&self) -> Result<(), CensusError> {
        if self.rigid_only && self.parity != Parity::Bipartite {
            return Err(CensusError::InvalidFilter(
                "rigidity is only defined for bipartite graphs".into(),
            ));
        }
        if !self.require_boundary {
            return Err(CensusError::InvalidFilter(
                "only censuses of graphs with boundary are supported".into(),
            ));
        }
        if !self.contracted_only {
            return Err(CensusError::InvalidFilter(
                "only censuses of contracted graphs are supported".into(),
            ));
        }
        Ok(())
    }

    /// Whether every graph kept by `self` is kept by `other`.
    pub fn is_stricter_than(&self, other: &CensusFilter) -> bool {
        let parity = other.parity == Parity::Any || other.parity == self.parity;
        let boundary = match other.boundary {
            BoundaryClass::Any => true,
            BoundaryClass::Toric => self.boundary != BoundaryClass::Any,
            BoundaryClass::ToricConnected => self.boundary == BoundaryClass::ToricConnected,
        };
        parity
            && boundary
            && (self.rigid_only || !other.rigid_only)
            && (self.no_2_dipoles || !other.no_2_dipoles)
            && self.require_boundary == other.require_boundary
            && self.contracted_only == other.contracted_only
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(CensusFilter::bipartite().rigid().validate().is_ok());
        assert!(CensusFilter::non_bipartite().rigid().validate().is_err());
        let closed = CensusFilter {
            require_boundary: false,
            ..CensusFilter::default()
        };
        assert!(closed.validate().is_err());
    }

    #[test]
    fn boundary_class_names_round_trip() {
        for b in [BoundaryClass::Any, BoundaryClass::Toric, BoundaryClass::ToricConnected] {
            assert_eq!(b.name().parse::<BoundaryClass>().unwrap(), b);
        }
        assert!("spherical".parse::<BoundaryClass>().is_err());
    }

    #[test]
    fn strictness() {
        let t = CensusFilter::bipartite().with_boundary(BoundaryClass::Toric);
        assert!(t.clone().rigid().is_stricter_than(&t));
        assert!(t.is_stricter_than(&CensusFilter::bipartite()));
        assert!(!CensusFilter::bipartite().is_stricter_than(&t));
    }
}
