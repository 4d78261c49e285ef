//! Exact arithmetic substrate: residues, rational phases, and finite
//! abelian groups with subgroup, dual and homomorphism algebra.

pub mod group;
pub mod intmat;
pub mod phase;

pub use group::{Coset, Element, FinAbGroup, GroupHom};
pub use phase::{gcd, lcm, Phase, Residue};
