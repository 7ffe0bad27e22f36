use overgroups::congruence::{
    lemma_residue_filter, search_q_for_fixed_n, search_repunit_primes, Primality,
};

fn fixed_n(n: u32, q_max: u64) -> Vec<u64> {
    let filter = lemma_residue_filter(n as u64).expect("n = 3 or 7 mod 8");
    search_q_for_fixed_n(n, q_max, Some(&filter))
}

#[test]
fn n3() {
    assert_eq!(fixed_n(3, 800), [5, 101, 173, 293, 677, 701, 773]);
}

#[test]
fn n7() {
    assert_eq!(
        fixed_n(7, 4500),
        [17, 73, 89, 353, 1297, 1409, 1489, 1609, 1753, 2609, 2753, 3673, 4049, 4409]
    );
}

/// The published list for n = 11 starts at 53; q = 5 is also a hit and is
/// the q = 5, n = 11 repunit prime found by the other search.
#[test]
fn n11() {
    assert_eq!(
        fixed_n(11, 7300),
        [5, 53, 229, 389, 709, 1213, 2029, 5581, 5669, 5813, 5861, 7229]
    );
    assert!(search_repunit_primes(5, 11, true).iter().any(|h| h.n == 11));
}

#[test]
fn n19() {
    assert_eq!(fixed_n(19, 1750), [181, 277, 389, 509, 797, 1693, 1709]);
}

#[test]
fn n23() {
    assert_eq!(fixed_n(23, 1900), [113, 257, 857, 1801]);
}

#[test]
fn n31() {
    assert_eq!(fixed_n(31, 300), [241]);
}

#[test]
fn q17_special() {
    let hits = search_repunit_primes(17, 100, true);
    let ns: Vec<u32> = hits.iter().map(|h| h.n).collect();
    assert_eq!(ns, [7, 47, 71]);
    assert_eq!(hits[2].digits, 87);
    assert_eq!(hits[0].primality, Primality::Prime);
    assert_eq!(hits[2].primality, Primality::ProbablePrime);
}

#[test]
fn q5_special() {
    let ns: Vec<u32> = search_repunit_primes(5, 20, true)
        .iter()
        .map(|h| h.n)
        .collect();
    assert_eq!(ns, [3, 11]);
}
