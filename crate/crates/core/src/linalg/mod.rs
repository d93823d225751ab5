//! Dense exact linear algebra: matrices, row reduction, solving, and
//! subspace/quotient bookkeeping. Vectors are plain `Vec<Scalar>`.

mod subspace;
pub mod vector;

pub use subspace::{quotient, span, QuotientSpace, SubspaceBasis};
pub use vector::kron;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Dense row-major matrix with recorded dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch { expected: field.to_string(), found: x.field().to_string() });
                }
            }
            data.extend(row.iter().cloned());
        }
        Ok(Matrix { field, rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Matrix of a linear operator, built by evaluating it on unit vectors.
    pub fn from_operator(field: Field, n_in: usize, n_out: usize, op: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Self {
        let columns: Vec<Vec<Scalar>> = (0..n_in)
            .map(|j| {
                let out = op(&vector::unit(field, n_in, j));
                assert_eq!(out.len(), n_out, "operator output has wrong length");
                out
            })
            .collect();
        Self::from_columns(field, n_out, &columns)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| vector::dot(self.row(i), v)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Kronecker product, row-major: entry ((i,k),(j,l)) = a[i][j]·b[k][l].
    pub fn kron(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.field, self.rows * other.rows, self.cols * other.cols, |r, c| {
            let (i, k) = (r / other.rows, r % other.rows);
            let (j, l) = (c / other.cols, c % other.cols);
            self.get(i, j) * other.get(k, l)
        })
    }

    /// Stacks the rows of `other` under `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Reduced row-echelon form, pivot columns and rank.
    pub fn rref(&self) -> (Matrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let x = m.get(row, j) * &inv;
                m.set(row, j, x);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let x = m.get(r, j) - &(&factor * m.get(row, j));
                    m.set(r, j, x);
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        (m, pivots, rank)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// One solution of `self · x = b` with free variables set to zero, or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let augmented = Matrix::from_fn(self.field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots, _) = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Echelon basis of the null space.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        let (r, pivots, _) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&f| {
                let mut v = vector::zeros(self.field, self.cols);
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect();
        span(self.field, self.cols, &vectors).expect("kernel vectors have ambient length")
    }
}

/// Free-function form of [`Matrix::rref`].
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>, usize) {
    m.rref()
}

pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    m.solve(b)
}

pub fn kernel_basis(m: &Matrix) -> SubspaceBasis {
    m.kernel_basis()
}
