use num_integer::Integer;
use num_traits::{FromPrimitive, ToPrimitive};

use super::CongruenceError;

/// Jacobi symbol `(a / n)` for odd positive `n`, by binary reciprocity.
///
/// Works for any integer type; negative `a` is reduced modulo `n` first.
pub fn jacobi<T>(a: &T, n: &T) -> Result<i8, CongruenceError>
where
    T: Integer + Clone + FromPrimitive + ToPrimitive,
{
    let two = T::from_u8(2).expect("2 fits");
    if *n <= T::zero() || n.is_even() {
        return Err(CongruenceError::EvenModulus(
            n.to_i128().map_or_else(|| "?".into(), |v| v.to_string()),
        ));
    }
    let low_bits = |x: &T, m: u8| -> u8 {
        x.mod_floor(&T::from_u8(m).expect("fits"))
            .to_u8()
            .expect("small residue")
    };
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut sign: i8 = 1;
    while !a.is_zero() {
        while a.is_even() {
            a = a / two.clone();
            let r = low_bits(&n, 8);
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if low_bits(&a, 4) == 3 && low_bits(&n, 4) == 3 {
            sign = -sign;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { sign } else { 0 })
}

/// Nonzero squares modulo `m`, sorted.
pub fn quadratic_residues(m: u64) -> Vec<u64> {
    let mut squares: Vec<u64> = (1..m).map(|x| (x * x) % m).filter(|&r| r != 0).collect();
    squares.sort_unstable();
    squares.dedup();
    squares
}

/// Units modulo the prime `p` that are not squares, sorted.
pub fn quadratic_nonresidues(p: u64) -> Vec<u64> {
    let squares = quadratic_residues(p);
    (1..p)
        .filter(|r| squares.binary_search(r).is_err())
        .collect()
}
