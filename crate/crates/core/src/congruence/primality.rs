//! Primality testing.
//!
//! Below 2^64 the Miller-Rabin test with the first twelve primes as bases is
//! exact. Above that, a number is reported as a probable prime when it is a
//! strong probable prime to 64 pseudorandom bases and passes the strong
//! Lucas test with Selfridge parameters. Composite verdicts are always exact.

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::jacobi;

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const RANDOM_BASES: usize = 64;
const BASE_SEED: u64 = 0x5eed_0fb0_01ea;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Primality {
    Composite,
    Prime,
    ProbablePrime,
}

impl Primality {
    pub fn is_prime(self) -> bool {
        self != Primality::Composite
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for machine words.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Strong probable-prime test to base `a` (odd `n > 3`).
pub fn is_strong_probable_prime(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigUint::from(2u8), n);
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

fn is_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

/// Strong Lucas probable-prime test with Selfridge's parameters: `D` is the
/// first of 5, -7, 9, -11, ... with `(D / n) = -1`, `P = 1`, `Q = (1 - D)/4`.
pub fn is_strong_lucas_probable_prime(n: &BigUint) -> bool {
    if *n == BigUint::from(2u8) {
        return true;
    }
    if n.is_even() || n.is_one() || n.is_zero() || is_square(n) {
        return false;
    }
    let n_int = BigInt::from_biguint(Sign::Plus, n.clone());
    let mut d_abs: i64 = 5;
    let d = loop {
        let d = if (d_abs / 2) % 2 == 0 { d_abs } else { -d_abs };
        match jacobi(&BigInt::from(d), &n_int).expect("odd modulus") {
            -1 => break d,
            0 if BigInt::from(d.abs()) != n_int => return false,
            _ => d_abs += 2,
        }
    };
    let q = (1 - d) / 4;

    let modn = |x: BigInt| -> BigInt { x.mod_floor(&n_int) };
    let big_d = modn(BigInt::from(d));
    let big_q = modn(BigInt::from(q));
    let inv2 = (&n_int + 1u8) / 2u8;

    // n + 1 = k * 2^s, k odd
    let n_plus_1 = n + 1u8;
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let k = &n_plus_1 >> s;

    // U_k, V_k, Q^k by left-to-right binary ladder with P = 1
    let mut u = BigInt::one();
    let mut v = BigInt::one();
    let mut qk = big_q.clone();
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        // double
        u = modn(&u * &v);
        v = modn(&v * &v - 2 * &qk);
        qk = modn(&qk * &qk);
        if k.bit(i) {
            // increment: U' = (U + V)/2, V' = (D U + V)/2
            let new_u = modn((&u + &v) * &inv2);
            let new_v = modn((&big_d * &u + &v) * &inv2);
            u = new_u;
            v = new_v;
            qk = modn(&qk * &big_q);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = modn(&v * &v - 2 * &qk);
        if v.is_zero() {
            return true;
        }
        qk = modn(&qk * &qk);
    }
    false
}

/// Primality of an arbitrary-size integer.
pub fn primality(n: &BigUint) -> Primality {
    if let Some(small) = n.to_u64() {
        return if is_prime_u64(small) {
            Primality::Prime
        } else {
            Primality::Composite
        };
    }
    for p in SMALL_PRIMES {
        if (n % p).is_zero() {
            return Primality::Composite;
        }
    }
    if !is_strong_probable_prime(n, &BigUint::from(2u8)) {
        return Primality::Composite;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(BASE_SEED);
    let two = BigUint::from(2u8);
    let upper = n - 1u8;
    for _ in 0..RANDOM_BASES {
        let a = rng.gen_biguint_range(&two, &upper);
        if !is_strong_probable_prime(n, &a) {
            return Primality::Composite;
        }
    }
    if !is_strong_lucas_probable_prime(n) {
        return Primality::Composite;
    }
    Primality::ProbablePrime
}

pub fn is_prime(n: &BigUint) -> bool {
    primality(n).is_prime()
}

/// Sieve of Eratosthenes: `flags[k]` is true iff `k` is prime.
pub fn sieve(limit: usize) -> Vec<bool> {
    let mut flags = vec![true; limit + 1];
    for f in flags.iter_mut().take(2) {
        *f = false;
    }
    let mut p = 2;
    while p * p <= limit {
        if flags[p] {
            for m in (p * p..=limit).step_by(p) {
                flags[m] = false;
            }
        }
        p += 1;
    }
    flags
}

/// Primes up to `limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    sieve(limit as usize)
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(k, _)| k as u64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;

    #[test]
    fn small_values() {
        assert!(!is_prime(&BigUint::from(95040u32)));
        assert!(is_prime(&BigUint::from(127u32)));
        assert!(is_prime(&BigUint::from(13u32)));
        assert!(!is_prime(&BigUint::from(1u32)));
        assert!(!is_prime(&BigUint::zero()));
        assert!(is_prime(&BigUint::from(2u32)));
    }

    #[test]
    fn agrees_with_sieve_below_a_million() {
        let flags = sieve(1_000_000);
        for (n, &flag) in flags.iter().enumerate() {
            assert_eq!(is_prime_u64(n as u64), flag, "{n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_to_small_bases_are_caught() {
        // strong pseudoprimes to bases 2..=37 prefixes
        for n in [
            2047u64,
            1_373_653,
            25_326_001,
            3_215_031_751,
            2_152_302_898_747,
            3_474_749_660_383,
            341_550_071_728_321,
            3_825_123_056_546_413_051,
        ] {
            assert!(!is_prime_u64(n), "{n}");
        }
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest prime below 2^64
    }

    #[test]
    fn lucas_agrees_with_sieve_on_odd_numbers() {
        // strong Lucas pseudoprimes below 20000 with Selfridge parameters
        let pseudoprimes = [5459u64, 5777, 10877, 16109, 18971];
        let flags = sieve(20_000);
        for n in (3..20_000u64).step_by(2) {
            let lucas = is_strong_lucas_probable_prime(&BigUint::from(n));
            let expected = flags[n as usize] || pseudoprimes.contains(&n);
            assert_eq!(lucas, expected, "{n}");
        }
    }

    #[test]
    fn large_mersenne_numbers() {
        let two = BigUint::from(2u8);
        for (e, prime) in [
            (61u32, true),
            (67, false),
            (89, true),
            (107, true),
            (127, true),
            (128, false),
            (131, false),
            (521, true),
        ] {
            let m: BigUint = two.clone().pow(e) - 1u8;
            let verdict = primality(&m);
            assert_eq!(verdict.is_prime(), prime, "2^{e}-1");
            if prime && e > 64 {
                assert_eq!(verdict, Primality::ProbablePrime);
            }
        }
    }

    #[test]
    fn products_of_large_primes_are_composite() {
        let p = BigUint::from(18_446_744_073_709_551_557u64);
        let q = BigUint::from(18_446_744_073_709_551_533u64);
        assert_eq!(primality(&(&p * &q)), Primality::Composite);
        assert_eq!(primality(&(&p * &p)), Primality::Composite);
    }

    #[test]
    fn primes_up_to_thirty() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(primes_up_to(1).is_empty());
    }
}
