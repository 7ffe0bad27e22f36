use num_bigint::BigUint;

use super::{IntervalError, SubgroupNode};
use crate::permgroup::{
    conjugacy_classes, find_conjugator, is_transitive, pair_is_transitive, Permutation,
    StabilizerChain,
};

/// How far [`find_transitive_subgroups`] looks.
#[derive(Clone, Copy, Debug)]
pub struct TransitiveSearch {
    /// 1, 2 or 3: cyclic, two-generated, or three-generated subgroups.
    pub max_generators: usize,
    pub element_bound: u64,
}

impl Default for TransitiveSearch {
    fn default() -> Self {
        TransitiveSearch {
            max_generators: 2,
            element_bound: crate::permgroup::DEFAULT_ELEMENT_BOUND,
        }
    }
}

/// Representatives, up to conjugacy in `group`, of the transitive subgroups
/// of order `target_order` generated by at most `max_generators` elements.
///
/// The first generator runs over conjugacy class representatives and the
/// others over all elements. Candidates are pruned by element orders (every
/// element order and the order of the product must divide the target) and by
/// transitivity before any stabilizer chain is built.
pub fn find_transitive_subgroups(
    group: &StabilizerChain,
    target_order: u64,
    search: TransitiveSearch,
) -> Result<Vec<SubgroupNode>, IntervalError> {
    let elements: Vec<Permutation> = group.elements(search.element_bound)?.collect();
    let degree = group.degree();
    let group_order = elements.len() as u64;
    if target_order == 0 || !group_order.is_multiple_of(target_order) {
        return Ok(Vec::new());
    }
    if target_order == 1 {
        let trivial = SubgroupNode::new(vec![Permutation::identity(degree)])?;
        return Ok(if degree <= 1 {
            vec![trivial]
        } else {
            Vec::new()
        });
    }
    let target = BigUint::from(target_order);
    let divides = |n: u64| target_order.is_multiple_of(n);
    let element_orders: Vec<u64> = elements.iter().map(Permutation::order).collect();

    let reps: Vec<usize> = conjugacy_classes(group, search.element_bound)?
        .into_iter()
        .map(|class| class[0] as usize)
        .filter(|&r| element_orders[r] > 1 && divides(element_orders[r]))
        .collect();

    let mut found: Vec<SubgroupNode> = Vec::new();
    fn record(node: SubgroupNode, found: &mut Vec<SubgroupNode>) {
        if !found.iter().any(|f| f.same_subgroup(&node)) {
            found.push(node);
        }
    }

    let mut intermediates: Vec<SubgroupNode> = Vec::new();
    for &xi in &reps {
        let x = &elements[xi];
        let cyclic = SubgroupNode::new(vec![x.clone()])?;
        if cyclic.order == target && is_transitive(&cyclic.generators, degree) {
            record(cyclic.clone(), &mut found);
        }
        if search.max_generators < 2 {
            continue;
        }
        for (yi, y) in elements.iter().enumerate() {
            if element_orders[yi] == 1 || !divides(element_orders[yi]) {
                continue;
            }
            let needs_transitive_pair = search.max_generators == 2;
            if needs_transitive_pair && !pair_is_transitive(x, y) {
                continue;
            }
            if !divides(x.mul(y).order()) {
                continue;
            }
            let pair = [x.clone(), y.clone()];
            if needs_transitive_pair && found.iter().any(|f| f.chain.contains_all(&pair)) {
                continue;
            }
            if cyclic.chain.contains(y) {
                continue;
            }
            let Some(chain) = cyclic
                .chain
                .extended_capped(std::slice::from_ref(y), target_order)?
            else {
                continue;
            };
            let node = SubgroupNode::from_chain(pair.to_vec(), chain);
            if node.order == target {
                if is_transitive(&node.generators, degree) {
                    record(node, &mut found);
                }
            } else if search.max_generators >= 3
                && node.order < target
                && target_order.is_multiple_of(node.chain.order_u64().unwrap_or(0))
                && !intermediates.iter().any(|k| k.same_subgroup(&node))
            {
                intermediates.push(node);
            }
        }
    }

    for k in &intermediates {
        for (zi, z) in elements.iter().enumerate() {
            if !divides(element_orders[zi]) || k.chain.contains(z) {
                continue;
            }
            let mut gens = k.generators.clone();
            gens.push(z.clone());
            if found.iter().any(|f| f.chain.contains_all(&gens)) || !is_transitive(&gens, degree) {
                continue;
            }
            let Some(chain) = k
                .chain
                .extended_capped(std::slice::from_ref(z), target_order)?
            else {
                continue;
            };
            let node = SubgroupNode::from_chain(gens, chain);
            if node.order == target {
                record(node, &mut found);
            }
        }
    }

    // one representative per conjugacy class, in discovery order
    let mut reps_out: Vec<SubgroupNode> = Vec::new();
    for node in found {
        let mut conjugate = false;
        for r in &reps_out {
            if find_conjugator(group, &node.generators, &r.chain, search.element_bound)?.is_some() {
                conjugate = true;
                break;
            }
        }
        if !conjugate {
            debug_assert!(node.order == target && is_transitive(&node.generators, degree));
            reps_out.push(node);
        }
    }
    Ok(reps_out)
}
