use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::IntervalError;
use crate::permgroup::{Permutation, StabilizerChain};

/// A subgroup in an overgroup interval, given by generators and a chain.
#[derive(Clone, Debug)]
pub struct SubgroupNode {
    pub generators: Vec<Permutation>,
    pub chain: StabilizerChain,
    pub order: BigUint,
}

impl SubgroupNode {
    pub fn new(generators: Vec<Permutation>) -> Result<Self, IntervalError> {
        let chain = StabilizerChain::new(&generators)?;
        Ok(Self::from_chain(generators, chain))
    }

    pub(crate) fn from_chain(generators: Vec<Permutation>, chain: StabilizerChain) -> Self {
        let order = chain.order();
        SubgroupNode {
            generators,
            chain,
            order,
        }
    }

    /// `self <= other` as subgroups.
    pub fn is_subgroup_of(&self, other: &SubgroupNode) -> bool {
        other.order.is_multiple_of(&self.order) && other.chain.contains_all(&self.generators)
    }

    /// Equal orders plus mutual containment of generators.
    pub fn same_subgroup(&self, other: &SubgroupNode) -> bool {
        self.order == other.order
            && other.chain.contains_all(&self.generators)
            && self.chain.contains_all(&other.generators)
    }

    /// Generator image lists, sorted; used as a canonical tie-break.
    pub fn sorted_generator_images(&self) -> Vec<Vec<u32>> {
        let mut images: Vec<Vec<u32>> = self
            .generators
            .iter()
            .map(|g| g.images().to_vec())
            .collect();
        images.sort();
        images
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shape {
    Chain,
    BooleanRank2,
    Other(usize),
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Chain => write!(f, "Chain"),
            Shape::BooleanRank2 => write!(f, "BooleanRank2"),
            Shape::Other(n) => write!(f, "Other({n})"),
        }
    }
}

impl std::str::FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Chain" => Ok(Shape::Chain),
            "BooleanRank2" => Ok(Shape::BooleanRank2),
            _ => s
                .strip_prefix("Other(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|n| n.parse().ok())
                .map(Shape::Other)
                .ok_or_else(|| format!("unknown shape {s:?}")),
        }
    }
}

/// All subgroups between `H` (node 0) and `G` (last node), with the covering
/// relation as Hasse edges `(i, j)`: node `i` is maximal in node `j`.
#[derive(Clone, Debug)]
pub struct IntervalLattice {
    pub nodes: Vec<SubgroupNode>,
    pub edges: BTreeSet<(usize, usize)>,
    pub shape: Shape,
}

impl IntervalLattice {
    /// Builds the lattice from an unordered node list containing `H` and `G`.
    pub(crate) fn from_nodes(mut nodes: Vec<SubgroupNode>) -> Self {
        nodes.sort_by_cached_key(|n| (n.order.clone(), n.sorted_generator_images()));
        let below = containment(&nodes);
        let edges = covering_edges(&below);
        let mut lattice = IntervalLattice {
            nodes,
            edges,
            shape: Shape::Chain,
        };
        lattice.shape = classify_shape(&lattice);
        lattice
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn orders(&self) -> Vec<BigUint> {
        self.nodes.iter().map(|n| n.order.clone()).collect()
    }

    pub fn top(&self) -> &SubgroupNode {
        self.nodes.last().expect("nonempty lattice")
    }
}

/// `below[i][j]` iff node `i` is a subgroup of node `j`.
pub(crate) fn containment(nodes: &[SubgroupNode]) -> Vec<Vec<bool>> {
    nodes
        .iter()
        .map(|a| nodes.iter().map(|b| a.is_subgroup_of(b)).collect())
        .collect()
}

pub(crate) fn covering_edges(below: &[Vec<bool>]) -> BTreeSet<(usize, usize)> {
    let n = below.len();
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !below[i][j] {
                continue;
            }
            let covered = (0..n).all(|k| k == i || k == j || !(below[i][k] && below[k][j]));
            if covered {
                edges.insert((i, j));
            }
        }
    }
    edges
}

/// Shape of a lattice from its node count and Hasse edges.
pub fn classify_shape(lattice: &IntervalLattice) -> Shape {
    shape_from_edges(lattice.nodes.len(), &lattice.edges)
}

pub(crate) fn shape_from_edges(n: usize, edges: &BTreeSet<(usize, usize)>) -> Shape {
    if n == 4 {
        // bottom covered by exactly the two middle nodes, both covered by the top
        let diamond: BTreeSet<(usize, usize)> = [(0, 1), (0, 2), (1, 3), (2, 3)].into();
        if *edges == diamond {
            return Shape::BooleanRank2;
        }
    }
    // a chain has exactly one covering edge out of every node but the top
    let mut out_degree = vec![0usize; n];
    for &(i, _) in edges {
        out_degree[i] += 1;
    }
    let is_chain =
        edges.len() + 1 == n.max(1) && out_degree.iter().take(n.saturating_sub(1)).all(|&d| d == 1);
    if n <= 1 || is_chain {
        Shape::Chain
    } else {
        Shape::Other(n)
    }
}

/// Nodes covered by the top of the lattice.
pub fn maximal_overgroups(lattice: &IntervalLattice) -> Vec<&SubgroupNode> {
    let top = lattice.nodes.len().saturating_sub(1);
    lattice
        .edges
        .iter()
        .filter(|&&(_, j)| j == top)
        .map(|&(i, _)| &lattice.nodes[i])
        .collect()
}

/// Every subgroup `K` with `<h> <= K <= group`.
///
/// Breadth-first closure: each discovered `S` other than `G` is extended by
/// every element outside it. Since `<S, g> = <S, s g t>` for `s, t` in `S`,
/// only the first element of each double coset `S g S` is tried.
pub fn interval_lattice(
    group: &StabilizerChain,
    h: &[Permutation],
    element_bound: u64,
) -> Result<IntervalLattice, IntervalError> {
    if !group.contains_all(h) {
        return Err(IntervalError::NotContained);
    }
    let group_order = group.elements(element_bound)?.len();
    let bottom = SubgroupNode::new(h.to_vec())?;
    let top = SubgroupNode::from_chain(group.generators().to_vec(), group.clone());
    let mut nodes = vec![bottom];
    if !nodes[0].same_subgroup(&top) {
        nodes.push(top);
    }

    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    let top_order = group.order();
    while let Some(si) = queue.pop_front() {
        if nodes[si].order == top_order {
            continue;
        }
        let current = nodes[si].clone();
        let members: Vec<Permutation> = current.chain.elements(element_bound)?.collect();
        let mut covered = vec![false; group_order];
        for s in &members {
            covered[rank_in(group, s)] = true;
        }
        for (r, g) in group.elements(element_bound)?.enumerate() {
            if covered[r] {
                continue;
            }
            for s in &members {
                let sg = s.mul(&g);
                for t in &members {
                    covered[rank_in(group, &sg.mul(t))] = true;
                }
            }
            let chain = current.chain.extended(std::slice::from_ref(&g))?;
            let mut generators = current.generators.clone();
            generators.push(g);
            let candidate = SubgroupNode::from_chain(generators, chain);
            if !nodes.iter().any(|n| n.same_subgroup(&candidate)) {
                nodes.push(candidate);
                queue.push_back(nodes.len() - 1);
            }
        }
    }
    Ok(IntervalLattice::from_nodes(nodes))
}

fn rank_in(group: &StabilizerChain, g: &Permutation) -> usize {
    group.rank(g).expect("element of the group") as usize
}

/// True iff `<h>` is a maximal subgroup of `m`.
pub fn is_maximal_in(
    h: &[Permutation],
    m: &StabilizerChain,
    element_bound: u64,
) -> Result<bool, IntervalError> {
    Ok(interval_lattice(m, h, element_bound)?.len() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::groups;

    const BOUND: u64 = 1_000_000;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    fn orders(l: &IntervalLattice) -> Vec<u64> {
        l.nodes
            .iter()
            .map(|n| n.chain.order_u64().unwrap())
            .collect()
    }

    #[test]
    fn whole_group_gives_one_node() {
        let s4 = StabilizerChain::new(&groups::symmetric(4)).unwrap();
        let l = interval_lattice(&s4, &groups::symmetric(4), BOUND).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.shape, Shape::Chain);
        assert!(maximal_overgroups(&l).is_empty());
    }

    #[test]
    fn cyclic_four_in_s4_is_a_chain() {
        let s4 = StabilizerChain::new(&groups::symmetric(4)).unwrap();
        let l = interval_lattice(&s4, &[cyc(4, &[&[0, 1, 2, 3]])], BOUND).unwrap();
        assert_eq!(orders(&l), vec![4, 8, 24]);
        assert_eq!(l.edges, BTreeSet::from([(0, 1), (1, 2)]));
        assert_eq!(l.shape, Shape::Chain);
        let tops = maximal_overgroups(&l);
        assert_eq!(tops.len(), 1);
        assert_eq!(tops[0].chain.order_u64(), Some(8));
    }

    #[test]
    fn maximal_subgroup_gives_two_node_chain() {
        let s4 = StabilizerChain::new(&groups::symmetric(4)).unwrap();
        let l = interval_lattice(&s4, &groups::alternating(4), BOUND).unwrap();
        assert_eq!(orders(&l), vec![12, 24]);
        assert_eq!(l.shape, Shape::Chain);
        let tops = maximal_overgroups(&l);
        assert_eq!(tops.len(), 1);
        assert_eq!(tops[0].order, BigUint::from(12u32));
    }

    #[test]
    fn klein_four_in_d8_is_a_chain_but_c2_is_not() {
        let d8 = StabilizerChain::new(&groups::dihedral(4)).unwrap();
        // the centre <(0 2)(1 3)> lies in three subgroups of order 4
        let l = interval_lattice(&d8, &[cyc(4, &[&[0, 2], &[1, 3]])], BOUND).unwrap();
        assert_eq!(orders(&l), vec![2, 4, 4, 4, 8]);
        assert_eq!(l.shape, Shape::Other(5));
    }

    #[test]
    fn diamond_is_boolean_rank_two() {
        let v4 = vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])];
        let g = StabilizerChain::new(&v4).unwrap();
        let l = interval_lattice(&g, &[cyc(4, &[&[0, 1], &[2, 3]])], BOUND).unwrap();
        assert_eq!(orders(&l), vec![2, 4]);
        let l = interval_lattice(&g, &[Permutation::identity(4)], BOUND).unwrap();
        assert_eq!(orders(&l), vec![1, 2, 2, 2, 4]);

        // trivial subgroup of C6 = C2 x C3: diamond 1 < C2, C3 < C6
        let c6 = StabilizerChain::new(&[cyc(5, &[&[0, 1], &[2, 3, 4]])]).unwrap();
        let l = interval_lattice(&c6, &[Permutation::identity(5)], BOUND).unwrap();
        assert_eq!(orders(&l), vec![1, 2, 3, 6]);
        assert_eq!(l.shape, Shape::BooleanRank2);
        assert_eq!(maximal_overgroups(&l).len(), 2);
    }

    #[test]
    fn containment_violation_is_an_error() {
        let a4 = StabilizerChain::new(&groups::alternating(4)).unwrap();
        assert!(matches!(
            interval_lattice(&a4, &[cyc(4, &[&[0, 1]])], BOUND),
            Err(IntervalError::NotContained)
        ));
    }

    #[test]
    fn maximality_examples() {
        let a4 = StabilizerChain::new(&groups::alternating(4)).unwrap();
        assert!(is_maximal_in(&[cyc(4, &[&[0, 1, 2]])], &a4, BOUND).unwrap());
        let s3 = StabilizerChain::new(&groups::symmetric(3)).unwrap();
        assert!(!is_maximal_in(&[Permutation::identity(3)], &s3, BOUND).unwrap());
        assert!(!is_maximal_in(&groups::symmetric(3), &s3, BOUND).unwrap());
    }

    #[test]
    fn shape_parsing_round_trips() {
        for s in [Shape::Chain, Shape::BooleanRank2, Shape::Other(7)] {
            assert_eq!(s.to_string().parse::<Shape>().unwrap(), s);
        }
        assert!("Diamond".parse::<Shape>().is_err());
    }
}
