//! Orbits and exhaustive searches over the elements of a stabilizer chain.

use std::collections::BTreeSet;

use super::{PermError, Permutation, StabilizerChain};

/// The orbit of `point` under `gens`, as a sorted set.
pub fn orbit(gens: &[Permutation], point: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([point]);
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

/// Partition of `{0, .., degree - 1}` into orbits, each orbit sorted and the
/// list ordered by smallest point.
pub fn orbits(gens: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree {
        if assigned[p] {
            continue;
        }
        let orb: Vec<usize> = orbit(gens, p).into_iter().collect();
        for &x in &orb {
            assigned[x] = true;
        }
        out.push(orb);
    }
    out
}

/// True when `gens` act transitively on all `degree` points.
pub fn is_transitive(gens: &[Permutation], degree: usize) -> bool {
    degree == 0 || orbit(gens, 0).len() == degree
}

/// Cheap transitivity test for a pair of generators via union-find.
pub(crate) fn pair_is_transitive(a: &Permutation, b: &Permutation) -> bool {
    let n = a.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for g in [a, b] {
        for x in 0..n {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
            if rx != ry {
                parent[rx] = ry;
                components -= 1;
            }
        }
    }
    components <= 1
}

/// Exhaustively searches `group` for `g` with `g^-1 a g` in `target` for
/// every `a` in `gens`. Returns the first such element in rank order.
///
/// When `<gens>` and `target` have the same order a hit means the two
/// subgroups are conjugate.
pub fn find_conjugator(
    group: &StabilizerChain,
    gens: &[Permutation],
    target: &StabilizerChain,
    bound: u64,
) -> Result<Option<Permutation>, PermError> {
    let elements = group.elements(bound)?;
    Ok(elements
        .into_iter()
        .find(|g| gens.iter().all(|a| target.contains(&a.conjugate_by(g)))))
}

/// Conjugacy classes of `group`, as lists of ranks. Each class is listed
/// from its smallest rank, and classes are ordered by that representative.
pub fn conjugacy_classes(group: &StabilizerChain, bound: u64) -> Result<Vec<Vec<u64>>, PermError> {
    let n = group.elements(bound)?.len();
    let gens = group.generators();
    let mut class_of = vec![false; n];
    let mut classes = Vec::new();
    for start in 0..n as u64 {
        if class_of[start as usize] {
            continue;
        }
        class_of[start as usize] = true;
        let mut class = vec![start];
        let mut head = 0;
        while head < class.len() {
            let x = group.unrank(class[head]);
            for g in gens {
                let r = group
                    .rank(&x.conjugate_by(g))
                    .expect("closed under conjugation");
                if !class_of[r as usize] {
                    class_of[r as usize] = true;
                    class.push(r);
                }
            }
            head += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    Ok(classes)
}
