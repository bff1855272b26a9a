//! Four-colored graphs and the compact 3-manifolds they represent.
//!
//! A [`ColoredGraph`] has four perfect matchings, one per color. Capping every
//! bicolored cycle with a disk yields a 2-complex in which each 3-residue is a
//! closed surface; spheres are filled with balls and the remaining surfaces
//! become boundary components of the manifold.

pub mod code;
pub mod color;
pub mod dipole;
pub mod error;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod residue;
pub mod rho;
pub mod snf;
pub mod surface;

pub use code::{canonical_code, canonical_form, decode, encode, CanonicalForm, GemCode};
pub use color::{Color, ColorSet, NUM_COLORS};
pub use dipole::{add_dipole, add_two_dipole, cancel_dipole, find_dipoles, is_proper, Dipole};
pub use error::{GemError, Result};
pub use graph::{Adjacency, ColoredGraph};
pub use homology::{first_homology, AbelianGroup};
pub use invariants::{
    boundary_profile, g_vector, is_bipartite, is_contracted, residue_surfaces, singular_colors,
    BoundaryProfile, ResidueSurface,
};
pub use residue::{residues, Residue};
pub use rho::{
    classify_rho3_switch, find_rho_pairs, good_pairs, is_good_rho2, is_rigid, rho3_index, switch,
    switch_edges, Rho3Case, Rho3Classification, RhoPair,
};
pub use surface::{surface_type, SurfaceType};
