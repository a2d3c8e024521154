//! Dense exact-rational matrices with the handful of operations the engine
//! needs: products, commutators, rank, inverse and determinant.

use num_traits::{One, Zero};

use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.nonzeros() {
            t[(j, i)] = v.clone();
        }
        t
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let d = &f * &self[(r, j)];
                    self[(i, j)] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Q::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let d = &f * &m[(c, j)];
                    m[(i, j)] -= d;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Q::one();
        }
        let piv = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Solves `self * x = b` when the solution exists and is unique.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        let n = self.cols;
        let mut aug = Matrix::zeros(self.rows, n + 1);
        for i in 0..self.rows {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n)] = b[i].clone();
        }
        let piv = aug.rref();
        if piv.len() != n || piv.last() == Some(&n) {
            return None;
        }
        Some((0..n).map(|i| aug[(i, n)].clone()).collect())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
    }

    #[test]
    fn rank_and_determinant() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.determinant(), q(0));
        let b = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(b.determinant(), q(1));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[0, 3, 1], &[1, 0, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn solve_unique() {
        let a = m(&[&[2, 0], &[0, 4], &[0, 0]]);
        assert_eq!(a.solve(&[q(1), q(1), q(0)]).unwrap(), vec![q_frac(1, 2), q_frac(1, 4)]);
        assert!(a.solve(&[q(1), q(1), q(1)]).is_none());
    }
}
