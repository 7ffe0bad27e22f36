//! Overgroup intervals `[H, G]`: full enumeration, shape classification and
//! the Boolean rank-2 counterexample check.

mod lattice;
mod oracle;
mod transitive;
mod verify;

pub use lattice::{
    classify_shape, interval_lattice, is_maximal_in, maximal_overgroups, IntervalLattice, Shape,
    SubgroupNode,
};
pub(crate) use lattice::{containment, covering_edges, shape_from_edges};
pub use oracle::{
    all_subgroups, closure, subgroup_element_sets, ElementSubgroup, DEFAULT_ORACLE_BOUND,
};
pub use transitive::{find_transitive_subgroups, TransitiveSearch};
pub use verify::{verify_counterexample, CounterexampleReport};

use thiserror::Error;

use crate::permgroup::PermError;

#[derive(Debug, Error)]
pub enum IntervalError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("subgroup generators are not contained in the group")]
    NotContained,
    #[error("empty generator list")]
    NoGenerators,
    #[error("group order exceeds the oracle bound {bound}")]
    OracleBound { bound: u64 },
}
