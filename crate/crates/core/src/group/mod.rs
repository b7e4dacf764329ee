//! Finite symmetry groups: unimodular groups acting on the character
//! lattice, and finite Möbius groups acting on the projective line.

mod lattice;
mod moebius;
mod orbit;

pub use lattice::{fixed_sublattice, is_symmetric, LatticeAutGroup};
pub use moebius::{
    classify, closure, common_fixed_point, fixed_points, has_global_fixed_point, GroupKind, MoebiusElement,
    MoebiusGroup, DEFAULT_GROUP_CAP,
};
pub use orbit::{exceptional_orbits, generic_point, orbit_of, Orbit};
