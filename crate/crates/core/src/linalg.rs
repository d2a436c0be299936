//! Dense exact linear algebra over a [`Field`].

use crate::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: F) {
        let slot = &mut self.data[i * self.cols + j];
        *slot = slot.clone() + x;
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !self.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = F::one() / self.get(row, col).clone();
            for j in col..self.cols {
                let x = self.get(row, j).clone() * inv.clone();
                self.set(row, j, x);
            }
            for i in 0..self.rows {
                if i == row {
                    continue;
                }
                let factor = self.get(i, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let pivot_entry = self.get(row, j);
                    if pivot_entry.is_zero() {
                        continue;
                    }
                    let x = self.get(i, j).clone() - factor.clone() * pivot_entry.clone();
                    self.set(i, j, x);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.clone().rref().len()
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let pivots = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Basis of the right kernel `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Nullspace<F> {
        let mut r = self.clone();
        let pivots = r.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f).clone();
                }
                v
            })
            .collect();
        Nullspace { basis, free }
    }
}

/// Kernel basis in the normal form produced by row reduction: basis vector
/// `i` has a one in coordinate `free[i]` and zeros in every other free
/// coordinate, so coordinates of a kernel element are read off directly.
#[derive(Clone, Debug)]
pub struct Nullspace<F> {
    pub basis: Vec<Vec<F>>,
    pub free: Vec<usize>,
}

impl<F: Field> Nullspace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a vector known to lie in the kernel.
    pub fn coords(&self, v: &[F]) -> Vec<F> {
        self.free.iter().map(|&f| v[f].clone()).collect()
    }
}

/// Incrementally grown row-echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    dim: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.clone() - c.clone() * r.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns `false` if it was already there.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = F::one() / r[pivot].clone();
        for x in r.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&r) {
                *x = x.clone() - c.clone() * y.clone();
            }
        }
        self.rows.push((pivot, r));
        true
    }
}

pub fn unit_vector<F: Field>(dim: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); dim];
    v[i] = F::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        <Rational as Field>::from_i64(n)
    }

    fn mat(rows: usize, cols: usize, xs: &[i64]) -> Matrix<Rational> {
        let mut m = Matrix::zeros(rows, cols);
        for (k, x) in xs.iter().enumerate() {
            m.set(k / cols, k % cols, q(*x));
        }
        m
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(mat(2, 2, &[1, 2, 2, 4]).rank(), 1);
        assert_eq!(mat(2, 3, &[1, 0, 1, 0, 1, 1]).rank(), 2);
        assert_eq!(Matrix::<Rational>::zeros(0, 3).rank(), 0);
    }

    #[test]
    fn nullspace_coordinates_round_trip() {
        let m = mat(2, 4, &[1, 1, 0, 2, 0, 0, 1, -1]);
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 2);
        for v in &ns.basis {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
        let combo: Vec<Rational> = ns.basis[0]
            .iter()
            .zip(&ns.basis[1])
            .map(|(a, b)| a.clone() * q(3) + b.clone() * q(-2))
            .collect();
        assert_eq!(ns.coords(&combo), vec![q(3), q(-2)]);
    }

    #[test]
    fn echelon_basis_tracks_span() {
        let mut b = EchelonBasis::new(3);
        assert!(b.insert(&[q(1), q(1), q(0)]));
        assert!(b.insert(&[q(0), q(1), q(1)]));
        assert!(!b.insert(&[q(1), q(2), q(1)]));
        assert!(b.contains(&[q(2), q(0), q(-2)]));
        assert!(!b.contains(&[q(0), q(0), q(1)]));
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn inverse_and_transpose() {
        let m = mat(2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(mat(2, 2, &[1, 2, 2, 4]).inverse().is_none());
        assert_eq!(mat(2, 3, &[1, 2, 3, 4, 5, 6]).transpose(), mat(3, 2, &[1, 4, 2, 5, 3, 6]));
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-2i64..3, 12)) {
            let m = mat(3, 4, &entries);
            prop_assert_eq!(m.rank() + m.nullspace().dim(), 4);
        }
    }
}
