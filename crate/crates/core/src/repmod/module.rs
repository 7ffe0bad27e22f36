use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{check_prime, Echelon, Field};
use super::{FpMatrix, RepModError, Residue};
use crate::permgroup::Permutation;

/// Default cap on the number of lines [`is_irreducible`] will spin.
pub const DEFAULT_LINE_BOUND: u64 = 100_000;

/// A representation over GF(p): one matrix per group generator, and an
/// invariant symmetric form when one is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModule<T: Residue = u32> {
    pub p: T,
    pub dim: usize,
    pub action: Vec<FpMatrix<T>>,
    pub gram: Option<FpMatrix<T>>,
}

impl<T: Residue> FpModule<T> {
    /// Checks that `action` is nonempty, square of size `dim` and invertible.
    pub fn new(p: T, dim: usize, action: Vec<FpMatrix<T>>) -> Result<Self, RepModError> {
        check_prime(p.to_u64().expect("unsigned"))?;
        if action.is_empty() {
            return Err(RepModError::NoGenerators);
        }
        for a in &action {
            if a.rows() != dim || a.cols() != dim || a.p() != p {
                return Err(RepModError::Shape {
                    expected: (dim, dim),
                    len: a.rows() * a.cols(),
                });
            }
            if !a.is_invertible() {
                return Err(RepModError::Singular);
            }
        }
        Ok(FpModule {
            p,
            dim,
            action,
            gram: None,
        })
    }

    /// Attaches `gram` if it is symmetric and invariant.
    pub fn with_gram(mut self, gram: FpMatrix<T>) -> Result<Self, RepModError> {
        if gram.rows() != self.dim
            || !gram.is_symmetric()
            || !form_is_invariant(&self.action, &gram)
        {
            return Err(RepModError::FormNotInvariant);
        }
        self.gram = Some(gram);
        Ok(self)
    }

    pub fn field(&self) -> u64 {
        self.p.to_u64().expect("unsigned")
    }

    /// Number of 1-dimensional subspaces.
    pub fn line_count(&self) -> u128 {
        let p = self.field() as u128;
        (0..self.dim).fold(0u128, |acc, _| acc.saturating_mul(p).saturating_add(1))
    }

    /// Direct sum of two modules for the same generators.
    pub fn direct_sum(&self, other: &FpModule<T>) -> Result<FpModule<T>, RepModError> {
        if self.p != other.p || self.action.len() != other.action.len() {
            return Err(RepModError::NoGenerators);
        }
        let dim = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| block_diagonal(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        FpModule::new(self.p, dim, action)
    }
}

fn block_diagonal<T: Residue>(
    a: &FpMatrix<T>,
    b: &FpMatrix<T>,
) -> Result<FpMatrix<T>, RepModError> {
    let n = a.rows() + b.rows();
    let mut rows = vec![vec![0u64; n]; n];
    for (i, row) in a.to_rows().into_iter().enumerate() {
        rows[i][..a.cols()].copy_from_slice(&row);
    }
    for (i, row) in b.to_rows().into_iter().enumerate() {
        rows[a.rows() + i][a.cols()..].copy_from_slice(&row);
    }
    FpMatrix::from_rows(a.p(), &rows)
}

/// `A G A^T = G` for every action matrix (row-vector convention).
pub fn form_is_invariant<T: Residue>(action: &[FpMatrix<T>], gram: &FpMatrix<T>) -> bool {
    action
        .iter()
        .all(|a| a.mul(gram).mul(&a.transpose()) == *gram)
}

/// Permutation matrix with a 1 in position `(i, g(i))`.
pub fn perm_matrix<T: Residue>(g: &Permutation, p: T) -> Result<FpMatrix<T>, RepModError> {
    let d = g.degree();
    let rows: Vec<Vec<u64>> = (0..d)
        .map(|i| {
            let mut r = vec![0u64; d];
            r[g.apply(i)] = 1;
            r
        })
        .collect();
    FpMatrix::from_rows(p, &rows)
}

/// The full permutation module GF(p)^d.
pub fn permutation_module<T: Residue>(
    gens: &[Permutation],
    p: T,
) -> Result<FpModule<T>, RepModError> {
    let d = common_degree(gens)?;
    let action = gens
        .iter()
        .map(|g| perm_matrix(g, p))
        .collect::<Result<Vec<_>, _>>()?;
    let module = FpModule::new(p, d, action)?;
    module.with_gram(FpMatrix::identity(p, d))
}

fn common_degree(gens: &[Permutation]) -> Result<usize, RepModError> {
    let d = gens.first().ok_or(RepModError::NoGenerators)?.degree();
    if let Some(g) = gens.iter().find(|g| g.degree() != d) {
        return Err(RepModError::DegreeMismatch {
            left: d,
            right: g.degree(),
        });
    }
    Ok(d)
}

/// Coordinates of a sum-zero vector in the basis `e_i - e_{i+1}`: the
/// partial sums `v_0 + .. + v_k`, `k < d - 1`.
fn sum_zero_coords(f: Field, v: &[u64]) -> Vec<u64> {
    let mut acc = 0;
    v[..v.len() - 1]
        .iter()
        .map(|&x| {
            acc = f.add(acc, x);
            acc
        })
        .collect()
}

/// Gram matrix of the dot product on `e_i - e_{i+1}`, `i < n`: 2 on the
/// diagonal, -1 beside it.
fn sum_zero_gram<T: Residue>(p: T, n: usize) -> FpMatrix<T> {
    let f = Field(p.to_u64().expect("unsigned"));
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => f.of(2),
                    1 => f.of(-1),
                    _ => 0,
                })
                .collect()
        })
        .collect();
    FpMatrix::from_rows(p, &rows).expect("square")
}

/// The permutation action on the sum-zero submodule, in the basis
/// `e_i - e_{i+1}`. Its dot-product form is degenerate when `p` divides `d`,
/// so the gram matrix is attached only when it has full rank.
pub fn sum_zero_module<T: Residue>(gens: &[Permutation], p: T) -> Result<FpModule<T>, RepModError> {
    check_prime(p.to_u64().expect("unsigned"))?;
    let d = common_degree(gens)?;
    if d < 2 {
        return Err(RepModError::DegreeTooSmall(d));
    }
    let f = Field(p.to_u64().expect("unsigned"));
    let action = gens
        .iter()
        .map(|g| {
            let rows: Vec<Vec<u64>> = (0..d - 1)
                .map(|i| {
                    let mut v = vec![0u64; d];
                    v[g.apply(i)] = 1;
                    v[g.apply(i + 1)] = f.of(-1);
                    sum_zero_coords(f, &v)
                })
                .collect();
            FpMatrix::from_rows(p, &rows)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let module = FpModule::new(p, d - 1, action)?;
    let gram = sum_zero_gram(p, d - 1);
    if gram.is_invertible() {
        module.with_gram(gram)
    } else {
        Ok(module)
    }
}

/// The deleted permutation module: the sum-zero submodule, and when `p`
/// divides `d` its quotient by the all-ones vector.
///
/// The quotient keeps the first `d - 2` basis vectors and eliminates the
/// last coordinate against the all-ones vector, whose coordinates are
/// `1, 2, .., d - 1`.
pub fn deleted_module<T: Residue>(gens: &[Permutation], p: T) -> Result<FpModule<T>, RepModError> {
    let s = sum_zero_module(gens, p)?;
    let f = Field(s.field());
    let d = s.dim + 1;
    if !(d as u64).is_multiple_of(f.0) {
        return Ok(s);
    }
    if d < 3 {
        return Err(RepModError::DegreeTooSmall(d));
    }
    let ones: Vec<u64> = (1..d as u64).map(|k| k % f.0).collect();
    let last = d - 2;
    let pivot_inv = f.inv(ones[last]);
    let reduce = |c: Vec<u64>| -> Vec<u64> {
        let lambda = f.mul(c[last], pivot_inv);
        (0..last)
            .map(|k| f.sub(c[k], f.mul(lambda, ones[k])))
            .collect()
    };
    let action = s
        .action
        .iter()
        .map(|a| {
            let rows: Vec<Vec<u64>> = (0..last).map(|i| reduce(a.row_u64(i))).collect();
            FpMatrix::from_rows(p, &rows)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let module = FpModule::new(p, d - 2, action)?;
    let gram = sum_zero_gram(p, d - 2);
    if gram.is_invertible() {
        module.with_gram(gram)
    } else {
        Ok(module)
    }
}

/// The form attached to the module, if it is nondegenerate and invariant.
pub fn invariant_gram<T: Residue>(module: &FpModule<T>) -> Option<&FpMatrix<T>> {
    module
        .gram
        .as_ref()
        .filter(|g| g.is_invertible() && g.is_symmetric() && form_is_invariant(&module.action, g))
}

/// Smallest invariant subspace containing `seed`.
pub fn spin<T: Residue>(seed: &[u64], action: &[FpMatrix<T>]) -> Result<Echelon, RepModError> {
    let first = action.first().ok_or(RepModError::NoGenerators)?;
    let dim = first.rows();
    if seed.len() != dim {
        return Err(RepModError::Shape {
            expected: (1, dim),
            len: seed.len(),
        });
    }
    let f = first.field();
    let seed: Vec<u64> = seed.iter().map(|&x| x % f.0).collect();
    let mut space = Echelon::empty(f, dim);
    let mut queue = vec![space.insert(seed).ok_or(RepModError::ZeroSeed)?];
    while let Some(v) = queue.pop() {
        for a in action {
            if let Some(w) = space.insert(a.apply_row(&v)) {
                queue.push(w);
                if space.rank() == dim {
                    return Ok(space);
                }
            }
        }
    }
    Ok(space)
}

/// Decides irreducibility by spinning one vector from every line.
///
/// Returns an error when there are more than `bound` lines.
pub fn is_irreducible<T: Residue>(module: &FpModule<T>, bound: u64) -> Result<bool, RepModError> {
    let lines = module.line_count();
    if lines > bound as u128 {
        return Err(RepModError::BoundExceeded { lines, bound });
    }
    Ok(proper_invariant_subspace(module)?.is_none())
}

/// A proper nonzero invariant subspace, found by exhaustive line spinning.
pub fn proper_invariant_subspace<T: Residue>(
    module: &FpModule<T>,
) -> Result<Option<Echelon>, RepModError> {
    let p = module.field();
    let dim = module.dim;
    // vectors whose first nonzero coordinate is 1
    for lead in 0..dim {
        let free = dim - lead - 1;
        let count = p
            .checked_pow(free as u32)
            .ok_or(RepModError::BoundExceeded {
                lines: module.line_count(),
                bound: u64::MAX,
            })?;
        for mut k in 0..count {
            let mut v = vec![0u64; dim];
            v[lead] = 1;
            for x in v[lead + 1..].iter_mut().rev() {
                *x = k % p;
                k /= p;
            }
            let space = spin(&v, &module.action)?;
            if space.rank() < dim {
                return Ok(Some(space));
            }
        }
    }
    Ok(None)
}

/// Outcome of [`spin_random_seeds`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpinHeuristic {
    /// A seed spun to a proper subspace, which is a certificate of
    /// reducibility.
    Reducible(Echelon),
    /// Every seed spun to the whole space.
    NoSubspaceFound,
}

/// Spins `seeds` pseudorandom nonzero vectors from a fixed RNG seed.
pub fn spin_random_seeds<T: Residue>(
    module: &FpModule<T>,
    seeds: usize,
    rng_seed: u64,
) -> Result<SpinHeuristic, RepModError> {
    let p = module.field();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut tried = 0;
    while tried < seeds {
        let v: Vec<u64> = (0..module.dim).map(|_| rng.gen_range(0..p)).collect();
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        tried += 1;
        let space = spin(&v, &module.action)?;
        if space.rank() < module.dim {
            return Ok(SpinHeuristic::Reducible(space));
        }
    }
    Ok(SpinHeuristic::NoSubspaceFound)
}
