use std::fmt;

use num_traits::{PrimInt, Unsigned};
use serde::{Deserialize, Serialize};

use super::RepModError;
use crate::congruence::is_prime_u64;

/// Unsigned machine integers usable as residues mod a small prime.
pub trait Residue: PrimInt + Unsigned + fmt::Debug + fmt::Display + Send + Sync {}

impl<T: PrimInt + Unsigned + fmt::Debug + fmt::Display + Send + Sync> Residue for T {}

pub(crate) fn check_prime(p: u64) -> Result<(), RepModError> {
    if is_prime_u64(p) && p <= u32::MAX as u64 {
        Ok(())
    } else {
        Err(RepModError::NotPrime(p))
    }
}

/// Arithmetic in GF(p) on `u64` representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Field(pub u64);

impl Field {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.0));
        let (mut acc, mut base, mut e) = (1u64, a % self.0, self.0 - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Reduces a signed integer.
    pub fn of(self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }
}

/// A dense matrix over GF(p), row-major.
///
/// Vectors are rows and act on the right, so the matrix of a product `gh`
/// is `M(g) * M(h)`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpMatrix<T: Residue = u32> {
    p: T,
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Residue> FpMatrix<T> {
    pub fn new(p: T, rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, RepModError> {
        let p64 = p.to_u64().expect("unsigned");
        check_prime(p64)?;
        if entries.len() != rows * cols {
            return Err(RepModError::Shape {
                expected: (rows, cols),
                len: entries.len(),
            });
        }
        if let Some(e) = entries.iter().find(|&&e| e >= p) {
            return Err(RepModError::EntryOutOfRange {
                entry: e.to_u64().expect("unsigned"),
                p: p64,
            });
        }
        Ok(FpMatrix {
            p,
            rows,
            cols,
            entries,
        })
    }

    /// Builds from rows of `u64`, reducing mod `p`.
    pub fn from_rows(p: T, rows: &[Vec<u64>]) -> Result<Self, RepModError> {
        let p64 = p.to_u64().expect("unsigned");
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(RepModError::Shape {
                expected: (rows.len(), cols),
                len: rows.iter().map(Vec::len).sum(),
            });
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| T::from(x % p64).expect("residue fits"))
            .collect();
        Self::new(p, rows.len(), cols, entries)
    }

    pub fn zeros(p: T, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(p: T, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.entries[i * n + i] = T::one();
        }
        m
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn field(&self) -> Field {
        Field(self.p.to_u64().expect("unsigned"))
    }

    pub(crate) fn row_u64(&self, i: usize) -> Vec<u64> {
        self.row(i)
            .iter()
            .map(|x| x.to_u64().expect("unsigned"))
            .collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row_u64(i)).collect()
    }

    /// Matrix product; panics if the shapes do not match.
    pub fn mul(&self, other: &FpMatrix<T>) -> FpMatrix<T> {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        assert!(self.p == other.p, "field mismatch");
        let f = self.field();
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k).to_u64().expect("unsigned");
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j).to_u64().expect("unsigned");
                    let idx = i * other.cols + j;
                    let cur = out.entries[idx].to_u64().expect("unsigned");
                    out.entries[idx] = T::from(f.add(cur, f.mul(a, b))).expect("fits");
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows, "shape mismatch");
        let f = self.field();
        let mut out = vec![0u64; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(i, j).to_u64().expect("unsigned")));
            }
        }
        out
    }

    pub fn transpose(&self) -> FpMatrix<T> {
        let mut out = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.field(), self.cols, self.to_rows()).rank()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p, self.rows)
    }
}

impl<T: Residue> fmt::Debug for FpMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix(p={}) {:?}", self.p, self.to_rows())
    }
}

impl<T: Residue> fmt::Display for FpMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = (self.p - T::one()).to_string().len();
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// A subspace of GF(p)^n held as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    field: Field,
    dim: usize,
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub(crate) fn empty(field: Field, dim: usize) -> Self {
        Echelon {
            field,
            dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn from_rows(field: Field, dim: usize, rows: Vec<Vec<u64>>) -> Self {
        let mut e = Self::empty(field, dim);
        for r in rows {
            e.insert(r);
        }
        e
    }

    /// Reduces `v` against the basis.
    pub(crate) fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let f = self.field;
        for (b, &piv) in self.basis.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns the new normalized basis vector if `v`
    /// was not already in it.
    pub(crate) fn insert(&mut self, v: Vec<u64>) -> Option<Vec<u64>> {
        let f = self.field;
        let mut v = self.reduce(v);
        let piv = v.iter().position(|&x| x != 0)?;
        let s = f.inv(v[piv]);
        v.iter_mut().for_each(|x| *x = f.mul(*x, s));
        for b in &mut self.basis {
            let c = b[piv];
            if c != 0 {
                for (x, &y) in b.iter_mut().zip(&v) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.basis.push(v.clone());
        self.pivots.push(piv);
        Some(v)
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Basis rows sorted by pivot column.
    pub fn basis(&self) -> Vec<Vec<u64>> {
        let mut idx: Vec<usize> = (0..self.basis.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter().map(|i| self.basis[i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_inverse() {
        let f = Field(7);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.of(-1), 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FpMatrix::<u32>::new(6, 1, 1, vec![0]).is_err());
        assert!(FpMatrix::<u32>::new(7, 1, 1, vec![7]).is_err());
        assert!(FpMatrix::<u32>::new(7, 2, 1, vec![1]).is_err());
    }

    #[test]
    fn product_and_rank() {
        let a = FpMatrix::<u32>::from_rows(5, &[vec![1, 2], vec![3, 4]]).unwrap();
        let b = FpMatrix::<u32>::from_rows(5, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(a.mul(&b).to_rows(), vec![vec![2, 1], vec![4, 3]]);
        assert!(a.is_invertible());
        let singular = FpMatrix::<u32>::from_rows(5, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(singular.rank(), 1);
        assert_eq!(a.apply_row(&[1, 1]), vec![4, 1]);
    }

    #[test]
    fn works_with_small_types() {
        let a = FpMatrix::<u8>::from_rows(251, &[vec![250, 250], vec![1, 0]]).unwrap();
        let sq = a.mul(&a);
        assert_eq!(sq.to_rows(), vec![vec![0, 1], vec![250, 250]]);
    }

    #[test]
    fn echelon_spans() {
        let f = Field(3);
        let mut e = Echelon::empty(f, 3);
        assert!(e.insert(vec![1, 1, 0]).is_some());
        assert!(e.insert(vec![2, 2, 0]).is_none());
        assert!(e.insert(vec![0, 1, 1]).is_some());
        assert!(e.contains(&[1, 2, 1]));
        assert!(!e.contains(&[0, 0, 1]));
        assert_eq!(e.rank(), 2);
    }
}
