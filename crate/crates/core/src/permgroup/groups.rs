//! Generators for the small named groups used throughout the crate.

use super::Permutation;

fn cycle(degree: usize, points: &[u32]) -> Permutation {
    Permutation::from_cycles(degree, &[points]).expect("valid cycle")
}

/// `(0 1 .. n-1)` and `(0 1)`.
pub fn symmetric(n: usize) -> Vec<Permutation> {
    assert!(n >= 2);
    let long: Vec<u32> = (0..n as u32).collect();
    vec![cycle(n, &long), cycle(n, &[0, 1])]
}

/// Generators of `A_n`: an `n`- or `(n-1)`-cycle, whichever is even, and `(0 1 2)`.
pub fn alternating(n: usize) -> Vec<Permutation> {
    assert!(n >= 3);
    let top = if n % 2 == 1 { n } else { n - 1 };
    let long: Vec<u32> = (0..top as u32).collect();
    let long = if n % 2 == 1 {
        cycle(n, &long)
    } else {
        // (1 .. n-1) is an (n-1)-cycle, even for n even
        let shifted: Vec<u32> = (1..n as u32).collect();
        cycle(n, &shifted)
    };
    if n == 3 {
        return vec![long];
    }
    vec![long, cycle(n, &[0, 1, 2])]
}

pub fn cyclic(n: usize) -> Vec<Permutation> {
    let long: Vec<u32> = (0..n as u32).collect();
    vec![cycle(n, &long)]
}

/// Dihedral group of order `2n` acting on the `n` vertices of a polygon.
pub fn dihedral(n: usize) -> Vec<Permutation> {
    assert!(n >= 3);
    let rotation = cycle(n, &(0..n as u32).collect::<Vec<_>>());
    let reflection =
        Permutation::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())
            .expect("reflection");
    vec![rotation, reflection]
}

/// Standard generators of `M12` on 12 points, 1-based cycle notation.
pub const M12_GENERATORS: [&str; 3] = [
    "(1,2,3,4,5,6,7,8,9,10,11)",
    "(3,7,11,8)(4,10,5,6)",
    "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)",
];

pub fn mathieu12() -> Vec<Permutation> {
    M12_GENERATORS
        .iter()
        .map(|s| super::parse_cycles(s, 12, true).expect("valid M12 generator"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::StabilizerChain;

    fn order(gens: &[Permutation]) -> u64 {
        StabilizerChain::new(gens).unwrap().order_u64().unwrap()
    }

    #[test]
    fn orders_of_named_groups() {
        assert_eq!(order(&symmetric(3)), 6);
        assert_eq!(order(&symmetric(4)), 24);
        assert_eq!(order(&alternating(3)), 3);
        assert_eq!(order(&alternating(4)), 12);
        assert_eq!(order(&alternating(5)), 60);
        assert_eq!(order(&alternating(6)), 360);
        assert_eq!(order(&alternating(7)), 2520);
        assert_eq!(order(&alternating(8)), 20160);
        assert_eq!(order(&cyclic(7)), 7);
        assert_eq!(order(&dihedral(4)), 8);
        assert_eq!(order(&dihedral(5)), 10);
    }

    #[test]
    fn alternating_generators_are_even() {
        for n in 3..10 {
            assert!(alternating(n).iter().all(Permutation::is_even), "n = {n}");
        }
    }

    #[test]
    fn m12_has_order_95040() {
        assert_eq!(order(&mathieu12()), 95040);
    }
}
