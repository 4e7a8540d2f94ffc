use std::fmt::Debug;
use std::hash::Hash;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Matrix entry with componentwise addition.
pub trait Entry: Clone + Eq + Hash + Debug + Add<Output = Self> {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self;
}

impl Entry for i64 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Dense symmetric square matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Entry> SymMatrix<T> {
    pub fn empty() -> Self {
        SymMatrix { n: 0, data: Vec::new() }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        let data: Vec<T> = rows.into_iter().flatten().collect();
        let m = SymMatrix { n, data };
        for i in 0..n {
            for j in i + 1..n {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::Asymmetric(i, j));
                }
            }
        }
        Ok(m)
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = SymMatrix { n, data: vec![T::zero(); n * n] };
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    fn set_sym(&mut self, i: usize, j: usize, v: T) {
        let n = self.n;
        self.data[i * n + j] = v.clone();
        self.data[j * n + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    pub fn map<U: Entry>(&self, f: impl Fn(&T) -> U) -> SymMatrix<U> {
        SymMatrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn is_diagonal(&self) -> bool {
        self.first_off_diagonal().is_none()
    }

    /// Smallest `(i, j)`, `i < j`, in row-major order with a nonzero entry.
    pub fn first_off_diagonal(&self) -> Option<(usize, usize)> {
        (0..self.n).flat_map(|i| (i + 1..self.n).map(move |j| (i, j))).find(|&(i, j)| !self.get(i, j).is_zero())
    }

    /// All `(i, j)`, `i < j`, with a nonzero entry.
    pub fn off_diagonal_support(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.get(i, j).is_zero())
            .collect()
    }

    pub fn diagonal_entries(&self) -> Vec<T> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        for x in [i, j] {
            if x >= self.n {
                return Err(Error::IndexOutOfRange { index: x, size: self.n });
            }
        }
        if i == j {
            return Err(Error::SameIndex(i));
        }
        Ok(())
    }

    /// Delete row and column `k`.
    pub fn delete(&self, k: usize) -> Result<Self> {
        if k >= self.n {
            return Err(Error::IndexOutOfRange { index: k, size: self.n });
        }
        let n = self.n - 1;
        let mut data = Vec::with_capacity(n * n);
        for i in (0..self.n).filter(|&i| i != k) {
            for j in (0..self.n).filter(|&j| j != k) {
                data.push(self.get(i, j).clone());
            }
        }
        Ok(SymMatrix { n, data })
    }

    /// Transformation I: fold `g_ij` into both diagonal entries and clear it.
    pub fn transform_i(&self, i: usize, j: usize) -> Result<Self> {
        self.check_pair(i, j)?;
        let g = self.get(i, j).clone();
        let mut m = self.clone();
        m.set_sym(i, i, self.get(i, i).clone() + g.clone());
        m.set_sym(j, j, self.get(j, j).clone() + g);
        m.set_sym(i, j, T::zero());
        Ok(m)
    }

    /// Transformation II: merge region `j` into region `i`.
    pub fn transform_ii(&self, i: usize, j: usize) -> Result<Self> {
        self.check_pair(i, j)?;
        let g = self.get(i, j).clone();
        let mut m = self.clone();
        m.set_sym(i, i, self.get(i, i).clone() + self.get(j, j).clone() + g.clone() + g);
        for k in (0..self.n).filter(|&k| k != i && k != j) {
            m.set_sym(i, k, self.get(i, k).clone() + self.get(j, k).clone());
        }
        m.delete(j)
    }

    /// Transformation III: drop the row and column of diagonal entry `i`.
    /// The matrix must be diagonal.
    pub fn transform_iii(&self, i: usize) -> Result<Self> {
        if !self.is_diagonal() {
            return Err(Error::NotDiagonal);
        }
        self.delete(i)
    }

    /// Simultaneous row/column permutation: entry `(i, j)` of the result is
    /// entry `(perm[i], perm[j])` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut data = Vec::with_capacity(self.n * self.n);
        for &pi in perm {
            for &pj in perm {
                data.push(self.get(pi, pj).clone());
            }
        }
        SymMatrix { n: self.n, data }
    }

    pub fn negated(&self) -> Self {
        self.map(|e| e.neg())
    }

    /// Row sums, each computed with componentwise addition.
    pub fn row_sums(&self) -> Vec<T> {
        (0..self.n).map(|i| (0..self.n).fold(T::zero(), |acc, j| acc + self.get(i, j).clone())).collect()
    }

    /// The unreduced matrix obtained by re-inserting a region at index `k`
    /// whose row restores zero row sums.
    pub fn unreduce(&self, k: usize) -> Result<Self> {
        if k > self.n {
            return Err(Error::IndexOutOfRange { index: k, size: self.n + 1 });
        }
        let sums = self.row_sums();
        let n = self.n + 1;
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(n);
        let ext: Vec<T> = sums.iter().map(|s| s.neg()).collect();
        let corner = sums.iter().fold(T::zero(), |acc, s| acc + s.clone());
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let v = match (i == k, j == k) {
                    (true, true) => corner.clone(),
                    (true, false) => ext[if j > k { j - 1 } else { j }].clone(),
                    (false, true) => ext[if i > k { i - 1 } else { i }].clone(),
                    (false, false) => self.get(if i > k { i - 1 } else { i }, if j > k { j - 1 } else { j }).clone(),
                };
                row.push(v);
            }
            rows.push(row);
        }
        SymMatrix::from_rows(rows)
    }
}

impl SymMatrix<i64> {
    /// `|det|` by fraction-free elimination; the empty matrix gives 1.
    pub fn abs_determinant(&self) -> BigInt {
        let n = self.n;
        let mut a: Vec<Vec<BigInt>> =
            self.rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        let mut prev = BigInt::from(1);
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            BigInt::from(1)
        } else {
            a[n - 1][n - 1].abs()
        }
    }
}

/// Matrix whose rows sum to zero, one row per region.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Unreduced<T> {
    matrix: SymMatrix<T>,
}

impl<T: Entry> Unreduced<T> {
    pub fn new(matrix: SymMatrix<T>) -> Result<Self> {
        if let Some(i) = matrix.row_sums().iter().position(|s| !s.is_zero()) {
            return Err(Error::RowSum(i));
        }
        Ok(Unreduced { matrix })
    }

    /// Build from off-diagonal contributions; repeated pairs add up and the
    /// diagonal is filled in from the row sums.
    pub fn from_edges(n: usize, edges: &[(usize, usize, T)]) -> Result<Self> {
        let mut rows = vec![vec![T::zero(); n]; n];
        for (i, j, e) in edges {
            let (i, j) = (*i, *j);
            for x in [i, j] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, size: n });
                }
            }
            if i == j {
                return Err(Error::SameIndex(i));
            }
            rows[i][j] = rows[i][j].clone() + e.clone();
            rows[j][i] = rows[j][i].clone() + e.clone();
        }
        for (i, row) in rows.iter_mut().enumerate() {
            let s = row.iter().fold(T::zero(), |acc, x| acc + x.clone());
            row[i] = s.neg();
        }
        Self::new(SymMatrix::from_rows(rows)?)
    }

    pub fn matrix(&self) -> &SymMatrix<T> {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    /// Delete region `k`.
    pub fn reduce(&self, k: usize) -> Result<Reduced<T>> {
        Ok(Reduced { matrix: self.matrix.delete(k)?, deleted_index: Some(k) })
    }

    pub fn negated(&self) -> Self {
        Unreduced { matrix: self.matrix.negated() }
    }
}

/// A matrix with one region deleted (or supplied directly).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Reduced<T> {
    pub matrix: SymMatrix<T>,
    pub deleted_index: Option<usize>,
}

impl<T: Entry> Reduced<T> {
    pub fn new(matrix: SymMatrix<T>) -> Self {
        Reduced { matrix, deleted_index: None }
    }
}
