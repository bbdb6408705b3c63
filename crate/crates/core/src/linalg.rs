//! Dense matrices over an exact field: products, rank and linear solves by
//! fraction-exact Gaussian elimination.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|x| T::from_int(*x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = T::one() / m[(r, c)].clone();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let delta = f.clone() * m[(r, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The unique solution of `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        if self.rows != self.cols || b.len() != self.rows {
            return Err(Error::ShapeMismatch("solve needs a square system".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, n + 1);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n)] = b[i].clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, p)| *p != i) {
            return Err(Error::ShapeMismatch("singular system".into()));
        }
        Ok((0..n).map(|i| red[(i, n)].clone()).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigQ, Q};

    fn m(rows: &[Vec<i64>]) -> Matrix<Q> {
        Matrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(m(&[vec![0, 0], vec![0, 0]]).rank(), 0);
        assert_eq!(m(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]).rank(), 3);
        assert_eq!(Matrix::<Q>::zeros(0, 3).rank(), 0);
        assert_eq!(Matrix::<BigQ>::from_int_rows(&[vec![2, -1], vec![-1, 2]]).unwrap().rank(), 2);
    }

    #[test]
    fn solve_cartan_system() {
        let a = m(&[vec![2, -1], vec![-1, 2]]);
        let x = a.solve(&[Q::from_int(1), Q::from_int(0)]).unwrap();
        assert_eq!(x, vec![Q::new(2, 3), Q::new(1, 3)]);
        assert!(m(&[vec![1, 1], vec![1, 1]]).solve(&[Q::from_int(1), Q::from_int(1)]).is_err());
    }

    #[test]
    fn product_shapes() {
        let a = m(&[vec![1, 2, 3]]);
        let b = m(&[vec![1], vec![1], vec![1]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[vec![6]]));
        assert_eq!(b.mul(&a).unwrap().rank(), 1);
        assert!(a.mul(&a).is_err());
    }
}
