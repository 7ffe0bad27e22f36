//! d-cycles are real in A_d exactly when d = 1 mod 4, checked by search.

use overgroups::congruence::dcycle_real_in_alternating;
use overgroups::permgroup::groups;
use overgroups::{Permutation, StabilizerChain};

/// Elements of S_d inverting the d-cycle `c` form the coset `r <c>`, with
/// `r` the reflection `i -> -i`. Look for one in A_d.
fn inverted_in_alternating(d: usize) -> bool {
    let a = StabilizerChain::new(&groups::alternating(d)).unwrap();
    let c = groups::cyclic(d).remove(0);
    let r = Permutation::from_images((0..d as u32).map(|i| (d as u32 - i) % d as u32).collect())
        .unwrap();
    (0..d as i64).any(|k| {
        let g = r.mul(&c.pow(k));
        assert_eq!(c.conjugate_by(&g), c.inverse());
        a.contains(&g)
    })
}

#[test]
fn search_matches_rule() {
    for d in [5usize, 7, 11, 13] {
        let found = inverted_in_alternating(d);
        assert_eq!(found, d % 4 == 1, "d = {d}");
        assert_eq!(dcycle_real_in_alternating(d as u64), Ok(found));
    }
}

#[test]
fn even_degree_rejected() {
    assert!(dcycle_real_in_alternating(8).is_err());
}
