use super::{
    interval_lattice, is_maximal_in, maximal_overgroups, IntervalError, IntervalLattice, Shape,
};
use crate::permgroup::{find_conjugator, Permutation, StabilizerChain};

/// Outcome of checking whether `[H, G]` is a Boolean rank-2 interval whose
/// two maximal members are conjugate in `G`.
#[derive(Clone, Debug)]
pub struct CounterexampleReport {
    pub lattice: IntervalLattice,
    pub tops_conjugate: bool,
    /// `g` with `g^-1 M1 g = M2`, where `M1`, `M2` are the two tops in node order.
    pub conjugator: Option<Permutation>,
    pub h_maximal_in_tops: bool,
}

impl CounterexampleReport {
    pub fn verdict(&self) -> bool {
        self.lattice.shape == Shape::BooleanRank2 && self.tops_conjugate && self.h_maximal_in_tops
    }
}

pub fn verify_counterexample(
    group: &StabilizerChain,
    h: &[Permutation],
    element_bound: u64,
) -> Result<CounterexampleReport, IntervalError> {
    let lattice = interval_lattice(group, h, element_bound)?;
    let tops = maximal_overgroups(&lattice);

    let mut h_maximal_in_tops = !tops.is_empty();
    for top in &tops {
        if !is_maximal_in(h, &top.chain, element_bound)? {
            h_maximal_in_tops = false;
        }
    }

    let conjugator = match tops.as_slice() {
        [m1, m2] if m1.order == m2.order => {
            find_conjugator(group, &m1.generators, &m2.chain, element_bound)?
        }
        _ => None,
    };
    Ok(CounterexampleReport {
        tops_conjugate: conjugator.is_some(),
        conjugator,
        h_maximal_in_tops,
        lattice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::groups;

    const BOUND: u64 = 1_000_000;

    #[test]
    fn cyclic_four_in_s4_is_not_a_counterexample() {
        let s4 = StabilizerChain::new(&groups::symmetric(4)).unwrap();
        let c4 = [Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()];
        let report = verify_counterexample(&s4, &c4, BOUND).unwrap();
        assert_eq!(report.lattice.shape, Shape::Chain);
        assert!(report.h_maximal_in_tops);
        assert!(!report.tops_conjugate);
        assert!(!report.verdict());
    }

    #[test]
    fn whole_group_has_no_tops() {
        let s3 = StabilizerChain::new(&groups::symmetric(3)).unwrap();
        let report = verify_counterexample(&s3, &groups::symmetric(3), BOUND).unwrap();
        assert!(!report.h_maximal_in_tops);
        assert!(report.conjugator.is_none());
        assert!(!report.verdict());
    }

    #[test]
    fn non_conjugate_diamond_is_rejected() {
        // 1 < C2, C3 < C6: a diamond whose tops have different orders
        let c6 =
            StabilizerChain::new(&[Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap()])
                .unwrap();
        let report = verify_counterexample(&c6, &[Permutation::identity(5)], BOUND).unwrap();
        assert_eq!(report.lattice.shape, Shape::BooleanRank2);
        assert!(report.h_maximal_in_tops);
        assert!(!report.tops_conjugate);
        assert!(!report.verdict());
    }
}
