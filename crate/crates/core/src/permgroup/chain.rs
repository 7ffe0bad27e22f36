use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::{PermError, Permutation};

const NOT_IN_ORBIT: u32 = u32::MAX;

/// One level of a stabilizer chain: the basic orbit of `base_point` under
/// the strong generators that fix every earlier base point.
#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// point -> index into `orbit`, or `NOT_IN_ORBIT`
    position: Vec<u32>,
    /// `reps[i]` maps `base_point` to `orbit[i]`
    reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut level = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            position: Vec::new(),
            reps: Vec::new(),
            inv_reps: Vec::new(),
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        let id = Permutation::identity(degree);
        self.orbit = vec![self.base_point as u32];
        self.position = vec![NOT_IN_ORBIT; degree];
        self.position[self.base_point] = 0;
        self.reps = vec![id.clone()];
        let mut head = 0;
        while head < self.orbit.len() {
            let y = self.orbit[head] as usize;
            for s in &self.gens {
                let z = s.apply(y);
                if self.position[z] == NOT_IN_ORBIT {
                    self.position[z] = self.orbit.len() as u32;
                    self.orbit.push(z as u32);
                    let rep = self.reps[head].mul(s);
                    self.reps.push(rep);
                }
            }
            head += 1;
        }
        self.inv_reps = self.reps.iter().map(Permutation::inverse).collect();
    }

    #[inline]
    fn index_of(&self, point: usize) -> Option<usize> {
        match self.position[point] {
            NOT_IN_ORBIT => None,
            i => Some(i as usize),
        }
    }
}

/// A base and strong generating set with explicit transversals.
///
/// Built by the deterministic Schreier-Sims algorithm. New base points are
/// always the smallest point moved by the element that forces them, so the
/// chain depends only on the generator list and its order.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Runs Schreier-Sims on `gens`.
    pub fn new(gens: &[Permutation]) -> Result<Self, PermError> {
        let degree = match gens.first() {
            Some(g) => g.degree(),
            None => return Err(PermError::NoGenerators),
        };
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                left: degree,
                right: bad.degree(),
            });
        }
        let mut chain = StabilizerChain {
            degree,
            generators: gens.to_vec(),
            levels: Vec::new(),
        };
        chain.absorb(gens, None);
        Ok(chain)
    }

    /// The chain of the trivial group.
    pub fn trivial(degree: usize) -> Self {
        StabilizerChain {
            degree,
            generators: vec![Permutation::identity(degree)],
            levels: Vec::new(),
        }
    }

    /// Chain of `<self, extra>`, reusing the existing levels.
    pub fn extended(&self, extra: &[Permutation]) -> Result<Self, PermError> {
        if let Some(bad) = extra.iter().find(|g| g.degree() != self.degree) {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: bad.degree(),
            });
        }
        let mut chain = self.clone();
        chain.generators.extend(extra.iter().cloned());
        chain.absorb(extra, None);
        Ok(chain)
    }

    /// Like [`extended`](Self::extended), but gives up with `None` as soon as
    /// the group is known to have more than `cap` elements.
    ///
    /// At every stage the product of the current basic orbit lengths is a
    /// lower bound for the final order, so the early exit is exact.
    pub fn extended_capped(
        &self,
        extra: &[Permutation],
        cap: u64,
    ) -> Result<Option<Self>, PermError> {
        if let Some(bad) = extra.iter().find(|g| g.degree() != self.degree) {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: bad.degree(),
            });
        }
        let mut chain = self.clone();
        chain.generators.extend(extra.iter().cloned());
        Ok(chain.absorb(extra, Some(cap)).then_some(chain))
    }

    fn order_exceeds(&self, cap: u64) -> bool {
        let mut acc: u128 = 1;
        for l in &self.levels {
            acc = acc.saturating_mul(l.orbit.len() as u128);
            if acc > cap as u128 {
                return true;
            }
        }
        false
    }

    /// Returns false if the order cap was exceeded.
    fn absorb(&mut self, new_gens: &[Permutation], cap: Option<u64>) -> bool {
        let fresh: Vec<&Permutation> = new_gens.iter().filter(|g| !g.is_identity()).collect();
        if fresh.is_empty() {
            return true;
        }
        for g in &fresh {
            if self
                .levels
                .iter()
                .all(|l| g.apply(l.base_point) == l.base_point)
            {
                let b = g.first_moved().expect("non-identity");
                self.levels.push(Level::new(b, self.degree));
            }
        }
        for g in fresh {
            // every generator is a strong generator on level 0
            self.levels[0].gens.push(g.clone());
        }
        self.levels[0].rebuild(self.degree);
        self.complete(0, cap)
    }

    /// Schreier-Sims main loop, assuming all levels deeper than `start` are
    /// already complete. Returns false if the order cap was exceeded.
    fn complete(&mut self, start: usize, cap: Option<u64>) -> bool {
        let degree = self.degree;
        if cap.is_some_and(|c| self.order_exceeds(c)) {
            return false;
        }
        let mut i = start as isize;
        while i >= 0 {
            let li = i as usize;
            let mut jumped = None;
            'scan: for oi in 0..self.levels[li].orbit.len() {
                let beta = self.levels[li].orbit[oi] as usize;
                for si in 0..self.levels[li].gens.len() {
                    let level = &self.levels[li];
                    let s = &level.gens[si];
                    let image = s.apply(beta);
                    let target = level.index_of(image).expect("orbit is closed");
                    let schreier = level.reps[oi].mul(s).mul(&level.inv_reps[target]);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, depth) = self.strip(schreier, li + 1);
                    if depth == self.levels.len() {
                        if residue.is_identity() {
                            continue;
                        }
                        let b = residue.first_moved().expect("non-identity");
                        self.levels.push(Level::new(b, degree));
                    }
                    for l in (li + 1)..=depth {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild(degree);
                    }
                    jumped = Some(depth);
                    break 'scan;
                }
            }
            match jumped {
                Some(depth) => {
                    if cap.is_some_and(|c| self.order_exceeds(c)) {
                        return false;
                    }
                    i = depth as isize
                }
                None => i -= 1,
            }
        }
        true
    }

    /// Sifts `g` from level `start`; returns the residue and the level where
    /// sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let image = g.apply(level.base_point);
            match level.index_of(image) {
                Some(idx) => g = g.mul(&level.inv_reps[idx]),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Generators the chain was built from, in input order.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Lengths of the fundamental orbits, level by level.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Union of the strong generators over all levels, without duplicates.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Exact group order: the product of the fundamental orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// The order when it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    /// Residue of `g` after sifting through every level.
    pub fn sift(&self, g: &Permutation) -> Permutation {
        self.strip(g.clone(), 0).0
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, depth) = self.strip(g.clone(), 0);
        depth == self.levels.len() && residue.is_identity()
    }

    pub fn contains_all(&self, gens: &[Permutation]) -> bool {
        gens.iter().all(|g| self.contains(g))
    }

    /// Position of `g` in the [`elements`](Self::elements) enumeration, or
    /// `None` if `g` is not in the group.
    pub fn rank(&self, g: &Permutation) -> Option<u64> {
        if g.degree() != self.degree {
            return None;
        }
        let mut g = g.clone();
        let mut rank: u64 = 0;
        for level in &self.levels {
            let idx = level.index_of(g.apply(level.base_point))?;
            rank = rank * level.orbit.len() as u64 + idx as u64;
            g = g.mul(&level.inv_reps[idx]);
        }
        g.is_identity().then_some(rank)
    }

    /// The element of the given rank; panics if `rank >= order`.
    pub fn unrank(&self, mut rank: u64) -> Permutation {
        let mut digits = vec![0usize; self.levels.len()];
        for (l, level) in self.levels.iter().enumerate().rev() {
            let n = level.orbit.len() as u64;
            digits[l] = (rank % n) as usize;
            rank /= n;
        }
        assert_eq!(rank, 0, "rank out of range");
        let mut g = Permutation::identity(self.degree);
        for (l, level) in self.levels.iter().enumerate() {
            g = level.reps[digits[l]].mul(&g);
        }
        g
    }

    /// Every element exactly once, in rank order. Fails when the group has
    /// more than `bound` elements.
    pub fn elements(&self, bound: u64) -> Result<Elements<'_>, PermError> {
        let order = self.order();
        match order.to_u64() {
            Some(n) if n <= bound => Ok(Elements::new(self, n)),
            _ => Err(PermError::BoundExceeded {
                order: order.to_string(),
                bound,
            }),
        }
    }

    /// Generators for the stabilizer of `point`.
    pub fn point_stabilizer(&self, point: usize) -> Result<Vec<Permutation>, PermError> {
        if point >= self.degree {
            return Err(PermError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        // Schreier generators for the orbit of `point` under the input generators.
        let gens = &self.generators;
        let mut orbit = vec![point];
        let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
        reps[point] = Some(Permutation::identity(self.degree));
        let mut head = 0;
        while head < orbit.len() {
            let y = orbit[head];
            let ry = reps[y].clone().expect("visited");
            for s in gens {
                let z = s.apply(y);
                if reps[z].is_none() {
                    reps[z] = Some(ry.mul(s));
                    orbit.push(z);
                }
            }
            head += 1;
        }
        let mut stab = Vec::new();
        let mut seen = StabilizerChain::trivial(self.degree);
        for &y in &orbit {
            let ry = reps[y].as_ref().expect("visited");
            for s in gens {
                let z = s.apply(y);
                let h = ry.mul(s).mul(&reps[z].as_ref().expect("visited").inverse());
                if !seen.contains(&h) {
                    seen = seen.extended(std::slice::from_ref(&h))?;
                    stab.push(h);
                }
            }
        }
        if stab.is_empty() {
            stab.push(Permutation::identity(self.degree));
        }
        Ok(stab)
    }

    /// Checks the structural invariants: every strong generator sifts to the
    /// identity and every input generator is a member.
    pub fn verify(&self) -> bool {
        self.levels
            .iter()
            .flat_map(|l| l.gens.iter())
            .chain(self.generators.iter())
            .all(|g| self.contains(g))
    }
}

/// Iterator over the elements of a group in rank order.
pub struct Elements<'a> {
    chain: &'a StabilizerChain,
    digits: Vec<usize>,
    /// `partial[l]` is the product of the level `l-1 .. 0` representatives
    partial: Vec<Permutation>,
    remaining: u64,
}

impl<'a> Elements<'a> {
    fn new(chain: &'a StabilizerChain, total: u64) -> Self {
        let k = chain.levels.len();
        let mut partial = vec![Permutation::identity(chain.degree)];
        for l in 0..k {
            let next = chain.levels[l].reps[0].mul(&partial[l]);
            partial.push(next);
        }
        Elements {
            chain,
            digits: vec![0; k],
            partial,
            remaining: total,
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let k = self.digits.len();
        let out = self.partial[k].clone();
        if self.remaining > 0 {
            // increment the mixed-radix counter, deepest level fastest
            let mut l = k;
            while l > 0 {
                l -= 1;
                self.digits[l] += 1;
                if self.digits[l] < self.chain.levels[l].orbit.len() {
                    break;
                }
                self.digits[l] = 0;
            }
            for m in l..k {
                let rep = &self.chain.levels[m].reps[self.digits[m]];
                self.partial[m + 1] = rep.mul(&self.partial[m]);
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements<'_> {}
