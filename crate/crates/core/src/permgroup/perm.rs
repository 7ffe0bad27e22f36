use std::fmt;

use serde::{Deserialize, Serialize};

use super::PermError;

/// A bijection on `{0, .., degree - 1}`.
///
/// Permutations act on the right: `a.compose(&b)` maps `x` to `b(a(x))`, and
/// `x^g` is written `g.apply(x)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(PermError::PointOutOfRange {
                    point: x,
                    degree: n,
                });
            }
            if seen[x] {
                return Err(PermError::NotABijection { point: x });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `degree` points from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let xi = x as usize;
                if xi >= degree {
                    return Err(PermError::PointOutOfRange { point: xi, degree });
                }
                if used[xi] {
                    return Err(PermError::RepeatedPoint { point: xi });
                }
                used[xi] = true;
                images[xi] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `x -> other(self(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked [`compose`](Self::compose); panics on a degree mismatch.
    #[inline]
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // self^g maps g(x) to g(self(x))
        let mut images = vec![0u32; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[g.images[x] as usize] = g.images[y as usize];
        }
        Permutation { images }
    }

    pub fn pow(&self, mut exp: i64) -> Permutation {
        let mut base = if exp < 0 {
            exp = -exp;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        transpositions.is_multiple_of(2)
    }

    /// Smallest point not fixed, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Cycle notation, e.g. `(1,2)(3,4)` when `one_based`.
    pub fn to_cycle_string(&self, one_based: bool) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let offset = u32::from(one_based);
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&(x + offset).to_string());
            }
            s.push(')');
        }
        s
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string(false))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string(false))
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = PermError;

    fn try_from(images: Vec<u32>) -> Result<Self, Self::Error> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.images
    }
}

/// Parses whitespace-tolerant disjoint cycle notation such as `(1,2)(3,4)`.
pub fn parse_cycles(text: &str, degree: usize, one_based: bool) -> Result<Permutation, PermError> {
    let malformed = |reason: &str| PermError::Malformed {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut chars = text.chars().filter(|c| !c.is_whitespace()).peekable();
    if chars.peek().is_none() {
        return Err(malformed("empty input"));
    }
    while let Some(c) = chars.next() {
        if c != '(' {
            return Err(malformed("expected '('"));
        }
        let mut body = String::new();
        loop {
            match chars.next() {
                Some(')') => break,
                Some(c) if c.is_ascii_digit() || c == ',' => body.push(c),
                Some(_) => return Err(malformed("unexpected character")),
                None => return Err(malformed("unterminated cycle")),
            }
        }
        if body.is_empty() {
            continue;
        }
        let mut cycle = Vec::new();
        for tok in body.split(',') {
            let v: u64 = tok.parse().map_err(|_| malformed("bad point"))?;
            let p = if one_based {
                v.checked_sub(1)
                    .ok_or(PermError::PointOutOfRange { point: 0, degree })?
            } else {
                v
            };
            if p >= degree as u64 {
                return Err(PermError::PointOutOfRange {
                    point: v as usize,
                    degree,
                });
            }
            cycle.push(p as u32);
        }
        cycles.push(cycle);
    }
    let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(degree, &refs)
}
