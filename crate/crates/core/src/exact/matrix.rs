use std::fmt;
use std::ops::Index;

use super::scalar::ExactScalar;
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact scalar.
///
/// Storage and the indexing API are 0-based; formulas in the docs are stated
/// with 1-based `(i, j)` positions.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: ExactScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Builds a matrix from a function of the 0-based position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn try_from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<T>,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j)?);
            }
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid("ragged matrix rows".into()));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(ExactScalar::is_integral)
    }

    /// Entries as integers, when every entry is integral and fits in `i64`.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.iter_rows()
            .map(|r| r.iter().map(ExactScalar::to_i64_exact).collect())
            .collect()
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::Shape {
                lhs: self.shape(),
                rhs: rhs.shape(),
            });
        }
        Self::try_from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).try_fold(T::zero(), |acc, k| {
                acc.add_exact(&self[(i, k)].mul_exact(&rhs[(k, j)])?)
            })
        })
    }

    pub fn add(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.shape() != rhs.shape() {
            return Err(Error::Shape {
                lhs: self.shape(),
                rhs: rhs.shape(),
            });
        }
        Self::try_from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].add_exact(&rhs[(i, j)])
        })
    }

    pub fn sub(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.shape() != rhs.shape() {
            return Err(Error::Shape {
                lhs: self.shape(),
                rhs: rhs.shape(),
            });
        }
        Self::try_from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].sub_exact(&rhs[(i, j)])
        })
    }

    /// Row vector times matrix, `x · self`.
    pub fn left_mul(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.rows {
            return Err(Error::Shape {
                lhs: (1, x.len()),
                rhs: self.shape(),
            });
        }
        (0..self.cols)
            .map(|j| {
                x.iter().enumerate().try_fold(T::zero(), |acc, (i, xi)| {
                    if xi.is_zero() {
                        Ok(acc)
                    } else {
                        acc.add_exact(&xi.mul_exact(&self[(i, j)])?)
                    }
                })
            })
            .collect()
    }

    /// Gauss-Jordan inverse over the exact field.
    pub fn inverse(&self) -> Result<Matrix<T>> {
        if self.rows != self.cols {
            return Err(Error::Shape {
                lhs: self.shape(),
                rhs: self.shape(),
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::<T>::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::Singular)?;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = a[(col, col)].clone();
            for j in 0..n {
                a.set(col, j, a[(col, j)].div_exact(&p)?);
                inv.set(col, j, inv[(col, j)].div_exact(&p)?);
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    a.set(r, j, a[(r, j)].sub_exact(&f.mul_exact(&a[(col, j)])?)?);
                    inv.set(r, j, inv[(r, j)].sub_exact(&f.mul_exact(&inv[(col, j)])?)?);
                }
            }
        }
        Ok(inv)
    }

    /// Solves `self · x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        if self.rows != self.cols || b.len() != self.rows {
            return Err(Error::Shape {
                lhs: self.shape(),
                rhs: (b.len(), 1),
            });
        }
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, n + 1, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !aug[(r, col)].is_zero())
                .ok_or(Error::Singular)?;
            aug.swap_rows(pivot, col);
            let p = aug[(col, col)].clone();
            for j in col..=n {
                aug.set(col, j, aug[(col, j)].div_exact(&p)?);
            }
            for r in 0..n {
                if r == col || aug[(r, col)].is_zero() {
                    continue;
                }
                let f = aug[(r, col)].clone();
                for j in col..=n {
                    aug.set(r, j, aug[(r, j)].sub_exact(&f.mul_exact(&aug[(col, j)])?)?);
                }
            }
        }
        Ok((0..n).map(|i| aug[(i, n)].clone()).collect())
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

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}
