use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed};

use super::vector::Vector;
use super::GeometryError;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, GeometryError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(GeometryError::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        let nrows = rows.len();
        Ok(Matrix {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from a flat row-major buffer.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, GeometryError> {
        if data.len() != rows * cols {
            return Err(GeometryError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn column(&self, c: usize) -> Vector<T> {
        Vector::new((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }
}

impl<T: Clone + Num> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            *m.get_mut(i, i) = T::one();
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GeometryError> {
        if self.cols != other.rows {
            return Err(GeometryError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let prod = a.clone() * other.get(k, c).clone();
                    let slot = out.get_mut(r, c);
                    *slot = slot.clone() + prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vector(&self, v: &Vector<T>) -> Result<Vector<T>, GeometryError> {
        if self.cols != v.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        Ok(Vector::new(
            (0..self.rows)
                .map(|r| {
                    self.row(r)
                        .iter()
                        .zip(v)
                        .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
                })
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GeometryError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(GeometryError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }
}

/// Integer matrix; used for lattice automorphisms and Smith decompositions.
pub type IntMatrix = Matrix<BigInt>;

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, GeometryError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> Matrix<BigRational> {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    /// Exact determinant of a square matrix.
    pub fn determinant(&self) -> Result<BigInt, GeometryError> {
        if !self.is_square() {
            return Err(GeometryError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let det = super::linalg::determinant(&self.to_rational())?;
        debug_assert!(det.is_integer());
        Ok(det.to_integer())
    }

    /// True iff the matrix is square with determinant +1 or -1.
    pub fn is_unimodular(&self) -> bool {
        self.determinant().map(|d| d.abs().is_one()).unwrap_or(false)
    }
}

/// Rows separated by `;`, entries by `,`.
impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(";")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        Ok(())
    }
}
