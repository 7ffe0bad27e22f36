//! Registry of example families and non-examples.

mod registry;
mod render;

pub use registry::{
    cross_check, family, first_primes, list_families, non_examples, plus_minus,
    unbounded_rank_conditions, Catalog, CrossCheck, ExampleFamily, FamilySpec, NonExample,
    VerificationLevel, CATALOG_SCHEMA_VERSION,
};
pub use render::{catalog_markdown, catalog_text, family_text, non_example_text};

use thiserror::Error;

use crate::congruence::CongruenceError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown family {0:?}")]
    UnknownId(String),
    #[error("family {0:?} has no recorded derivation")]
    NoDerivation(String),
    #[error("family {0:?} is a fixed instance")]
    FixedInstance(String),
    #[error("family {0:?} is parametric, not a residue set")]
    Parametric(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error("catalog schema: {0}")]
    Schema(String),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
}
