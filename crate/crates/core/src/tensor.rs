use crate::linalg::vector;
use crate::scalar::{Field, Scalar};

/// Structure constants of a bilinear map: `t[i][j][k]` is the coefficient of
/// output basis vector `k` on the input pair `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    field: Field,
    dims: (usize, usize, usize),
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: Field, d1: usize, d2: usize, d3: usize) -> Self {
        Tensor3 { field, dims: (d1, d2, d3), data: vec![field.zero(); d1 * d2 * d3] }
    }

    pub fn from_fn(field: Field, d1: usize, d2: usize, d3: usize, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Self {
        let mut t = Self::zeros(field, d1, d2, d3);
        for i in 0..d1 {
            for j in 0..d2 {
                let v = f(i, j);
                assert_eq!(v.len(), d3, "fibre ({i},{j}) has wrong length");
                t.set_fibre(i, j, v);
            }
        }
        t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.dims.1 + j) * self.dims.2
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j) + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, x: Scalar) {
        let o = self.offset(i, j);
        self.data[o + k] = x;
    }

    /// Output vector for the basis pair `(i, j)`.
    pub fn fibre(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j);
        &self.data[o..o + self.dims.2]
    }

    pub fn set_fibre(&mut self, i: usize, j: usize, v: Vec<Scalar>) {
        let o = self.offset(i, j);
        for (k, x) in v.into_iter().enumerate() {
            self.data[o + k] = x;
        }
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn entries_mut(&mut self) -> &mut [Scalar] {
        &mut self.data
    }

    /// Evaluates the bilinear map on coordinate vectors.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dims.0, "first argument has wrong length");
        assert_eq!(y.len(), self.dims.1, "second argument has wrong length");
        let mut out = vector::zeros(self.field, self.dims.2);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vector::axpy(&mut out, &(xi * yj), self.fibre(i, j));
            }
        }
        out
    }

    /// Evaluates with a basis element in the first slot.
    pub fn apply_left(&self, i: usize, y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(y.len(), self.dims.1, "second argument has wrong length");
        let mut out = vector::zeros(self.field, self.dims.2);
        for (j, yj) in y.iter().enumerate() {
            vector::axpy(&mut out, yj, self.fibre(i, j));
        }
        out
    }
}
