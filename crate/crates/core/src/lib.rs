//! Exact computations with 2-bridge link slopes, Heckoid and dihedral
//! orbifolds, rigid cusp lattices and spherical triangle groups.

pub mod cosetenum;
pub mod cusplattice;
pub mod dihedral;
pub mod group;
pub mod orbigraph;
pub mod quat;
pub mod slopes;
pub mod verify;
pub mod word;
