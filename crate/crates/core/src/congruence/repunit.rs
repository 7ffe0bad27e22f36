use num_bigint::BigUint;
use num_traits::{Num, One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{primality, CongruenceError, Primality};

/// `(q^n - 1)/(q - 1) = 1 + q + .. + q^(n-1)`, computed exactly by Horner's
/// rule in any integer type.
pub fn repunit<T: Num + Clone>(q: &T, n: u32) -> T {
    let mut d = T::zero();
    for _ in 0..n {
        d = d * q.clone() + T::one();
    }
    d
}

/// Parameters of a repunit prime candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepunitParams {
    pub q: u64,
    pub n: u32,
    pub d: BigUint,
}

impl RepunitParams {
    pub fn new(q: u64, n: u32) -> Result<Self, CongruenceError> {
        if q < 2 || n < 2 {
            return Err(CongruenceError::RepunitRange { q, n });
        }
        Ok(RepunitParams {
            q,
            n,
            d: repunit(&BigUint::from(q), n),
        })
    }
}

/// The three cases of the mod-8 lemma: `q = 2, n > 2`, or `q = 1 (8)` with
/// `n = 7 (8)`, or `q = 5 (8)` with `n = 3 (8)`. For every prime power `q`
/// this holds exactly when the repunit is `7 mod 8`.
pub fn lemma_condition(q: u64, n: u64) -> bool {
    (q == 2 && n > 2) || (q % 8 == 1 && n % 8 == 7) || (q % 8 == 5 && n % 8 == 3)
}

/// The residue class of odd `q` that the lemma allows for a given `n`, if any.
pub fn lemma_residue_filter(n: u64) -> Option<ResidueFilter> {
    match n % 8 {
        7 => Some(ResidueFilter::new(8, vec![1])),
        3 => Some(ResidueFilter::new(8, vec![5])),
        _ => None,
    }
}

/// A filter `x mod modulus` in `residues`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueFilter {
    pub modulus: u64,
    pub residues: Vec<u64>,
}

impl ResidueFilter {
    pub fn new(modulus: u64, mut residues: Vec<u64>) -> Self {
        residues.iter_mut().for_each(|r| *r %= modulus);
        residues.sort_unstable();
        residues.dedup();
        ResidueFilter { modulus, residues }
    }

    pub fn accepts(&self, x: u64) -> bool {
        self.residues.binary_search(&(x % self.modulus)).is_ok()
    }
}

/// `d`-cycles in `A_d` (odd `d`) are conjugate to their inverses exactly
/// when `d = 1 mod 4`.
pub fn dcycle_real_in_alternating(d: u64) -> Result<bool, CongruenceError> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(CongruenceError::NotOdd(d));
    }
    Ok(d % 4 == 1)
}

/// Regular unipotent classes in odd dimension `m` are rational exactly
/// when `m = +-1 mod 8`.
pub fn regular_unipotent_rational(m: u64) -> Result<bool, CongruenceError> {
    if m.is_multiple_of(2) {
        return Err(CongruenceError::NotOdd(m));
    }
    Ok(matches!(m % 8, 1 | 7))
}

/// For a prime `d`, the configuration gives an example exactly when
/// `d = 7 mod 8`.
pub fn special_example_condition(d: &BigUint) -> Result<bool, CongruenceError> {
    if !primality(d).is_prime() {
        return Err(CongruenceError::NotPrime(d.to_string()));
    }
    Ok((d % 8u8).to_u8() == Some(7))
}

/// One repunit prime found by [`search_repunit_primes`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepunitHit {
    pub n: u32,
    /// Number of decimal digits of the repunit.
    pub digits: usize,
    pub primality: Primality,
}

/// Exponents `n <= n_max` with `repunit(q, n)` prime.
///
/// Only prime `n` are tried, since `n = ab` makes `repunit(q, a)` a proper
/// factor. With `require_special`, `n` must also satisfy
/// [`lemma_condition`], i.e. the repunit is `7 mod 8`.
pub fn search_repunit_primes(q: u64, n_max: u32, require_special: bool) -> Vec<RepunitHit> {
    let base = BigUint::from(q);
    let mut hits = Vec::new();
    for n in 2..=n_max {
        if !super::is_prime_u64(n as u64) {
            continue;
        }
        if require_special && !lemma_condition(q, n as u64) {
            continue;
        }
        let d = repunit(&base, n);
        let verdict = primality(&d);
        if verdict.is_prime() {
            hits.push(RepunitHit {
                n,
                digits: d.to_str_radix(10).len(),
                primality: verdict,
            });
        }
    }
    hits
}

/// Primes `q <= q_max` passing `filter` with `repunit(q, n)` prime.
pub fn search_q_for_fixed_n(n: u32, q_max: u64, filter: Option<&ResidueFilter>) -> Vec<u64> {
    super::primes_up_to(q_max)
        .into_iter()
        .filter(|&q| filter.is_none_or(|f| f.accepts(q)))
        .filter(|&q| primality(&repunit(&BigUint::from(q), n)).is_prime())
        .collect()
}

/// Count of `(q, n)` pairs where [`lemma_condition`] disagrees with the
/// repunit's residue mod 8, over prime powers `q <= q_max` and
/// `2 <= n <= n_max` (`n > 2` when `q = 2`).
pub fn lemma_mismatches(q_max: u64, n_max: u64) -> (usize, Vec<(u64, u64)>) {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for q in (2..=q_max).filter(|&q| is_prime_power(q)) {
        let base = BigUint::from(q);
        for n in 2..=n_max {
            if q == 2 && n == 2 {
                continue;
            }
            checked += 1;
            let d = repunit(&base, n as u32);
            let is_seven = (d % 8u8).to_u8() == Some(7);
            if is_seven != lemma_condition(q, n) {
                mismatches.push((q, n));
            }
        }
    }
    (checked, mismatches)
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q)
        .find(|p| q.is_multiple_of(*p))
        .expect("q >= 2 has a divisor");
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

/// `repunit(q, n) * (q - 1) == q^n - 1`.
pub fn repunit_identity_holds(q: u64, n: u32) -> bool {
    let big_q = BigUint::from(q);
    let d: BigUint = repunit(&big_q, n);
    let q_n = num_traits::pow(big_q.clone(), n as usize);
    d * (big_q - BigUint::one()) == q_n - BigUint::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repunit_examples() {
        assert_eq!(repunit(&5u64, 3), 31);
        assert_eq!(repunit(&3u64, 3), 13);
        for n in 2..40 {
            assert_eq!(repunit(&2u64, n), (1u64 << n) - 1);
        }
        for q in 2..100u64 {
            assert_eq!(repunit(&q, 2), q + 1);
        }
    }

    #[test]
    fn generic_over_integer_types() {
        assert_eq!(repunit(&17u128, 7), 25_646_167);
        assert_eq!(
            repunit(&BigUint::from(17u8), 7),
            BigUint::from(25_646_167u32)
        );
        assert_eq!(repunit(&17i64, 7), 25_646_167);
    }

    #[test]
    fn repunit_divides_exactly() {
        for q in 2..30 {
            for n in 2..30 {
                assert!(repunit_identity_holds(q, n), "q={q} n={n}");
            }
        }
        assert!(RepunitParams::new(1, 3).is_err());
        assert!(RepunitParams::new(3, 1).is_err());
        assert_eq!(RepunitParams::new(5, 3).unwrap().d, BigUint::from(31u8));
    }

    #[test]
    fn lemma_examples() {
        assert!(lemma_condition(2, 7));
        assert_eq!(repunit(&2u64, 7) % 8, 7);
        assert!(lemma_condition(17, 7));
        assert!(!lemma_condition(3, 3));
        assert_eq!(repunit(&3u64, 3) % 8, 5);
        assert!(!lemma_condition(2, 2));
    }

    #[test]
    fn lemma_sweep_has_no_mismatches() {
        let (checked, mismatches) = lemma_mismatches(100, 50);
        assert!(mismatches.is_empty(), "{mismatches:?}");
        assert!(checked > 1000);
    }

    #[test]
    fn predicates() {
        assert_eq!(dcycle_real_in_alternating(5), Ok(true));
        assert_eq!(dcycle_real_in_alternating(7), Ok(false));
        assert_eq!(dcycle_real_in_alternating(13), Ok(true));
        assert!(dcycle_real_in_alternating(8).is_err());

        assert_eq!(regular_unipotent_rational(7), Ok(true));
        assert_eq!(regular_unipotent_rational(5), Ok(false));
        assert_eq!(regular_unipotent_rational(9), Ok(true));
        assert!(regular_unipotent_rational(4).is_err());

        let big = |v: u32| BigUint::from(v);
        assert_eq!(special_example_condition(&big(7)), Ok(true));
        assert_eq!(special_example_condition(&big(13)), Ok(false));
        assert_eq!(special_example_condition(&big(31)), Ok(true));
        assert!(special_example_condition(&big(15)).is_err());
    }

    #[test]
    fn special_condition_combines_the_two_reality_conditions() {
        // inverse-conjugate in the orthogonal group iff d = 1 mod 4 or d - 2 = +-1 mod 8;
        // the example needs this to fail, which leaves d = 7 mod 8
        for d in super::super::primes_up_to(500)
            .into_iter()
            .filter(|&d| d > 2)
        {
            let real = dcycle_real_in_alternating(d).unwrap()
                || regular_unipotent_rational(d - 2).unwrap();
            assert_eq!(real, matches!(d % 8, 1 | 3 | 5), "{d}");
            assert_eq!(
                !real,
                special_example_condition(&BigUint::from(d)).unwrap(),
                "{d}"
            );
        }
    }

    #[test]
    fn composite_exponents_give_composite_repunits() {
        for q in 2..=20u64 {
            for n in [4u32, 6, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21, 22, 24, 25] {
                let d = repunit(&BigUint::from(q), n);
                assert!(!primality(&d).is_prime(), "q={q} n={n}");
            }
        }
    }

    #[test]
    fn mersenne_exponents() {
        let ns: Vec<u32> = search_repunit_primes(2, 13, false)
            .iter()
            .map(|h| h.n)
            .collect();
        assert_eq!(ns, vec![2, 3, 5, 7, 13]);
        let special: Vec<u32> = search_repunit_primes(2, 13, true)
            .iter()
            .map(|h| h.n)
            .collect();
        assert_eq!(special, vec![3, 5, 7, 13]);
    }

    #[test]
    fn base_five_special_exponents() {
        let ns: Vec<u32> = search_repunit_primes(5, 20, true)
            .iter()
            .map(|h| h.n)
            .collect();
        assert_eq!(ns, vec![3, 11]);
        let hit = &search_repunit_primes(5, 3, true)[0];
        assert_eq!((hit.digits, hit.primality), (2, Primality::Prime));
    }

    #[test]
    fn fixed_n_three() {
        let filter = ResidueFilter::new(8, vec![5]);
        assert_eq!(
            search_q_for_fixed_n(3, 800, Some(&filter)),
            vec![5, 101, 173, 293, 677, 701, 773]
        );
    }

    #[test]
    fn residue_filter_for_n() {
        assert_eq!(
            lemma_residue_filter(7),
            Some(ResidueFilter::new(8, vec![1]))
        );
        assert_eq!(
            lemma_residue_filter(11),
            Some(ResidueFilter::new(8, vec![5]))
        );
        assert_eq!(lemma_residue_filter(5), None);
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (1..=32).filter(|&q| is_prime_power(q)).collect();
        assert_eq!(
            pp,
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        );
    }
}
