//! Exact dense linear algebra over any of the scalar fields in this crate.
//!
//! Plain Gaussian elimination with exact division; sizes here are tiny
//! (Gram matrices up to 105 x 105), so no fraction-free tricks are needed.

use crate::cyclo::CycloElem;
use crate::field::FieldElem;
use crate::gaussrat::GaussRat;

/// Field operations with contextual zero/one (cyclotomic elements carry
/// their order, so constants are derived from an exemplar).
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
}

impl Scalar for FieldElem {
    fn zero_like(&self) -> Self {
        FieldElem::zero()
    }
    fn one_like(&self) -> Self {
        FieldElem::one()
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        FieldElem::conj(self)
    }
}

impl Scalar for CycloElem {
    fn zero_like(&self) -> Self {
        CycloElem::zero(self.order())
    }
    fn one_like(&self) -> Self {
        CycloElem::one(self.order())
    }
    fn is_zero(&self) -> bool {
        CycloElem::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        CycloElem::conj(self)
    }
}

impl Scalar for GaussRat {
    fn zero_like(&self) -> Self {
        GaussRat::zero()
    }
    fn one_like(&self) -> Self {
        GaussRat::one()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        GaussRat::conj(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn exemplar(&self) -> &T {
        &self.data[0]
    }

    pub fn identity_like(n: usize, exemplar: &T) -> Self {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                exemplar.one_like()
            } else {
                exemplar.zero_like()
            }
        })
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    pub fn mat_mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let zero = self.exemplar().zero_like();
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(rhs.at(k, j)));
            }
            acc
        })
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        let zero = self.exemplar().zero_like();
        (0..self.rows)
            .map(|i| {
                let mut acc = zero.clone();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    /// In-place reduction to row echelon form; returns pivot columns.
    /// When `mirror` is given it receives the same row operations.
    fn echelon(&mut self, mut mirror: Option<&mut Matrix<T>>) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
                if let Some(m) = mirror.as_deref_mut() {
                    for j in 0..m.cols {
                        m.data.swap(p * m.cols + j, r * m.cols + j);
                    }
                }
            }
            let inv = self.at(r, c).one_like().div(self.at(r, c));
            for j in 0..self.cols {
                *self.at_mut(r, j) = self.at(r, j).mul(&inv);
            }
            if let Some(m) = mirror.as_deref_mut() {
                for j in 0..m.cols {
                    *m.at_mut(r, j) = m.at(r, j).mul(&inv);
                }
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let f = self.at(i, c).clone();
                for j in 0..self.cols {
                    let t = self.at(r, j).mul(&f);
                    *self.at_mut(i, j) = self.at(i, j).sub(&t);
                }
                if let Some(m) = mirror.as_deref_mut() {
                    for j in 0..m.cols {
                        let t = m.at(r, j).mul(&f);
                        *m.at_mut(i, j) = m.at(i, j).sub(&t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelon(None).len()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.echelon(None);
        (m, pivots)
    }

    /// Basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        if self.rows == 0 || self.cols == 0 {
            return Vec::new();
        }
        let zero = self.exemplar().zero_like();
        let one = self.exemplar().one_like();
        let (m, pivots) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![zero.clone(); self.cols];
                v[fc] = one.clone();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = m.at(r, fc).neg();
                }
                v
            })
            .collect()
    }

    /// Solve `A x = b`; `None` when inconsistent. Free variables are set to
    /// zero, so the answer is the canonical particular solution.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(self.rows, b.len());
        let zero = self.exemplar().zero_like();
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.echelon(None);
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![zero; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        if self.rows == 0 {
            return Some(self.clone());
        }
        let mut a = self.clone();
        let mut inv = Matrix::identity_like(self.rows, self.exemplar());
        let pivots = a.echelon(Some(&mut inv));
        if pivots.len() == self.rows {
            Some(inv)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElem;

    fn fe(n: i64) -> FieldElem {
        FieldElem::from_int(n)
    }

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_rows(vec![
            vec![fe(1), fe(2), fe(3)],
            vec![fe(2), fe(4), fe(6)],
            vec![fe(1), fe(0), fe(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let img = m.apply(&ns[0]);
        assert!(img.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_rows(vec![vec![fe(2), fe(1)], vec![fe(1), fe(1)]]);
        let x = m.solve(&[fe(3), fe(2)]).unwrap();
        assert_eq!(x, vec![fe(1), fe(1)]);
        let inv = m.inverse().unwrap();
        let prod = m.mat_mul(&inv);
        assert_eq!(prod, Matrix::identity_like(2, &fe(1)));
    }

    #[test]
    fn inconsistent_system() {
        let m = Matrix::from_rows(vec![vec![fe(1), fe(1)], vec![fe(2), fe(2)]]);
        assert!(m.solve(&[fe(1), fe(3)]).is_none());
    }
}
