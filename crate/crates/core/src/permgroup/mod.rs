//! Permutation groups: elements, stabilizer chains, orbits and exhaustive
//! searches over small groups.

mod chain;
mod genfile;
pub mod groups;
mod perm;
mod search;

pub use chain::{Elements, StabilizerChain};
pub use genfile::{GeneratorFile, GroupSpec};
pub use perm::{parse_cycles, Permutation};
pub(crate) use search::pair_is_transitive;
pub use search::{conjugacy_classes, find_conjugator, is_transitive, orbit, orbits};

use thiserror::Error;

/// Default cap on the number of elements an exhaustive search may visit.
pub const DEFAULT_ELEMENT_BOUND: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {point} is repeated")]
    RepeatedPoint { point: usize },
    #[error("image {point} occurs twice; not a bijection")]
    NotABijection { point: usize },
    #[error("malformed cycle notation {text:?}: {reason}")]
    Malformed { text: String, reason: String },
    #[error("empty generator list")]
    NoGenerators,
    #[error("group of order {order} exceeds the exhaustive bound {bound}")]
    BoundExceeded { order: String, bound: u64 },
    #[error("bad generator file header at line {line}: {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<PermError>,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{name}: expected order {expected}, got {actual}")]
    OrderMismatch {
        name: String,
        expected: String,
        actual: String,
    },
}
