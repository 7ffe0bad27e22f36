//! Brute-force subgroup enumeration on explicit element sets.
//!
//! Nothing here touches stabilizer chains: group elements come from
//! closing the generators under multiplication, and subgroups are compared
//! as sets. It exists to cross-check [`interval_lattice`](super::interval_lattice).

use std::collections::{BTreeSet, HashSet};

use super::{IntervalError, SubgroupNode};
use crate::permgroup::Permutation;

/// Default cap on the group order for [`all_subgroups`].
pub const DEFAULT_ORACLE_BOUND: u64 = 1_000;

/// A subgroup as an explicit set of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSubgroup {
    pub generators: Vec<Permutation>,
    pub elements: BTreeSet<Permutation>,
}

/// Closure of `gens` under multiplication, aborting past `bound` elements.
pub fn closure(
    degree: usize,
    gens: &[Permutation],
    bound: u64,
) -> Result<BTreeSet<Permutation>, IntervalError> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut list = vec![id];
    let mut head = 0;
    while head < list.len() {
        let x = list[head].clone();
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                if list.len() as u64 >= bound {
                    return Err(IntervalError::OracleBound { bound });
                }
                list.push(y);
            }
        }
        head += 1;
    }
    Ok(list.into_iter().collect())
}

/// Every subgroup of `<gens>`, found breadth-first from the trivial group by
/// adjoining one element at a time. Sorted by (order, elements).
pub fn subgroup_element_sets(
    gens: &[Permutation],
    bound: u64,
) -> Result<Vec<ElementSubgroup>, IntervalError> {
    let degree = gens.first().ok_or(IntervalError::NoGenerators)?.degree();
    let group = closure(degree, gens, bound)?;
    let trivial = ElementSubgroup {
        generators: vec![Permutation::identity(degree)],
        elements: BTreeSet::from([Permutation::identity(degree)]),
    };
    let mut known: HashSet<Vec<Permutation>> =
        HashSet::from([trivial.elements.iter().cloned().collect()]);
    let mut all = vec![trivial];
    let mut head = 0;
    while head < all.len() {
        let current = all[head].clone();
        for g in &group {
            if current.elements.contains(g) {
                continue;
            }
            let mut generators = current.generators.clone();
            generators.push(g.clone());
            let elements = closure(degree, &generators, bound)?;
            let key: Vec<Permutation> = elements.iter().cloned().collect();
            if known.insert(key) {
                all.push(ElementSubgroup {
                    generators,
                    elements,
                });
            }
        }
        head += 1;
    }
    all.sort_by(|a, b| {
        a.elements
            .len()
            .cmp(&b.elements.len())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(all)
}

/// [`subgroup_element_sets`] wrapped as chain-backed nodes.
pub fn all_subgroups(gens: &[Permutation], bound: u64) -> Result<Vec<SubgroupNode>, IntervalError> {
    subgroup_element_sets(gens, bound)?
        .into_iter()
        .map(|s| SubgroupNode::new(s.generators))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::groups;

    fn orders(gens: &[Permutation]) -> Vec<usize> {
        subgroup_element_sets(gens, DEFAULT_ORACLE_BOUND)
            .unwrap()
            .iter()
            .map(|s| s.elements.len())
            .collect()
    }

    #[test]
    fn subgroups_of_s3() {
        assert_eq!(orders(&groups::symmetric(3)), vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn s4_has_thirty_subgroups() {
        assert_eq!(orders(&groups::symmetric(4)).len(), 30);
    }

    #[test]
    fn known_subgroup_counts() {
        assert_eq!(orders(&groups::alternating(4)).len(), 10);
        assert_eq!(orders(&groups::dihedral(4)).len(), 10);
        assert_eq!(orders(&groups::alternating(5)).len(), 59);
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        assert_eq!(orders(&[Permutation::identity(3)]), vec![1]);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            subgroup_element_sets(&groups::symmetric(7), DEFAULT_ORACLE_BOUND),
            Err(IntervalError::OracleBound { .. })
        ));
    }

    #[test]
    fn nodes_agree_with_element_sets() {
        let nodes = all_subgroups(&groups::symmetric(3), DEFAULT_ORACLE_BOUND).unwrap();
        let orders: Vec<u64> = nodes.iter().map(|n| n.chain.order_u64().unwrap()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
    }
}
