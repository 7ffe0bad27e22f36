//! Overgroup intervals in finite permutation groups, permutation modules over
//! prime fields, and the number theory behind families of Boolean rank-2
//! overgroup lattices.

pub mod catalog;
pub mod certificate;
pub mod congruence;
pub mod interval;
pub mod permgroup;
pub mod repmod;

pub use permgroup::{Permutation, StabilizerChain};

/// Matrices over GF(p) with `u32` entries.
pub type Matrix = repmod::FpMatrix<u32>;
/// Modules over GF(p) with `u32` entries.
pub type Module = repmod::FpModule<u32>;
