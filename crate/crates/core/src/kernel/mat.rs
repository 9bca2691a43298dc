//! Dense row-major matrices over an arbitrary scalar ring.
//!
//! One representation serves every scalar used in this crate: exact rationals,
//! Gaussian rationals, big integers, `f64`, and `Complex64`. Elimination-based
//! routines live in [`super::linalg`]; this module only provides the container
//! and ring arithmetic.

use num::traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Ring operations required of a matrix entry.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A dense `rows x cols` matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix from row vectors.
    ///
    /// # Panics
    /// Panics if the rows are ragged or empty.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        let data = rows.into_iter().flatten().collect();
        Mat {
            rows: nrows,
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: Vec<Vec<T>>) -> Self {
        assert!(!cols.is_empty(), "matrix needs at least one column");
        let rows = cols[0].len();
        assert!(cols.iter().all(|c| c.len() == rows), "ragged columns");
        Mat::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn flat(&self) -> &[T] {
        &self.data
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
