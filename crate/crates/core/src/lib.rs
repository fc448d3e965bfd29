//! Combinatorics of root systems, Weyl groups and parabolic subalgebras,
//! with orbit analysis on homogeneous spaces, curve-class arithmetic and a
//! desingularization tower for Schubert varieties.

pub mod curves;
pub mod desing;
pub mod error;
pub mod orbits;
pub mod parabolic;
pub mod rootsys;
pub mod weyl;

pub use error::{LieError, Result};
pub use rootsys::{build_root_system, LieType, NodeSet, Root, RootDatum, Weight};
pub use weyl::{bruhat_leq, double_coset_orbits, CosetOrbit, WeylElement};
