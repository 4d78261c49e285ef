//! Finite-field Macdonald–Vogan combinatorics for `GL_N` and `SL_N`.
//!
//! Partition-valued functions on cuspidal orbits label irreducibles of
//! `GL_N(F_q)`; tame parameters carry the unramified phases. Twisting by
//! characters of `F_q^*` relates the two sides, and the `SL_N` fibers are
//! read off stabilizers in the character group.

pub mod cli;
pub mod cuspidal;
pub mod error;
pub mod exact_groups;
pub mod oracle;
pub mod partition;
pub mod random;
pub mod sl;
pub mod tame;
pub mod verify;
pub mod zelevinsky;

pub use error::{Error, Result};
