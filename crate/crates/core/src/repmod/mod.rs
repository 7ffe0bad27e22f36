//! Permutation modules over prime fields.

mod fano;
mod matrix;
mod module;

pub use fano::{diagonal_action, fano_actions, fano_lines, fano_report, FanoReport};
pub use matrix::{Echelon, FpMatrix, Residue};
pub use module::{
    deleted_module, form_is_invariant, invariant_gram, is_irreducible, perm_matrix,
    permutation_module, proper_invariant_subspace, spin, spin_random_seeds, sum_zero_module,
    FpModule, SpinHeuristic, DEFAULT_LINE_BOUND,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepModError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("empty generator list")]
    NoGenerators,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {0} is too small")]
    DegreeTooSmall(usize),
    #[error("expected a {}x{} matrix, got {len} entries", expected.0, expected.1)]
    Shape {
        expected: (usize, usize),
        len: usize,
    },
    #[error("entry {entry} is not reduced mod {p}")]
    EntryOutOfRange { entry: u64, p: u64 },
    #[error("action matrix is singular")]
    Singular,
    #[error("form is not symmetric and invariant")]
    FormNotInvariant,
    #[error("zero seed vector")]
    ZeroSeed,
    #[error("{lines} lines exceed the bound {bound}")]
    BoundExceeded { lines: u128, bound: u64 },
}
