//! Number theory: primality, Jacobi symbols, repunits, residue families.

mod family;
mod jacobi;
mod primality;
mod repunit;

pub use family::{
    crt_intersect, crt_pair, enumerate_primes, first_primes, CongruenceFamily, Provenance,
};
pub use jacobi::{jacobi, quadratic_nonresidues, quadratic_residues};
pub use primality::{
    is_prime, is_prime_u64, is_strong_lucas_probable_prime, is_strong_probable_prime, primality,
    primes_up_to, sieve, Primality,
};
pub use repunit::{
    dcycle_real_in_alternating, is_prime_power, lemma_condition, lemma_mismatches,
    lemma_residue_filter, regular_unipotent_rational, repunit, repunit_identity_holds,
    search_q_for_fixed_n, search_repunit_primes, special_example_condition, RepunitHit,
    RepunitParams, ResidueFilter,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CongruenceError {
    #[error("modulus {0} must be odd and positive")]
    EvenModulus(String),
    #[error("{0} must be odd")]
    NotOdd(u64),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("repunit needs q >= 2 and n >= 2, got q = {q}, n = {n}")]
    RepunitRange { q: u64, n: u32 },
    #[error("family {label}: {reason}")]
    BadFamily { label: String, reason: String },
    #[error("no congruence conditions given")]
    NoConditions,
}
