use super::{vector, Matrix};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A subspace stored by its reduced row-echelon basis. Two subspaces are
/// equal iff their echelon bases are identical, so `PartialEq` is subspace
/// equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    field: Field,
    ambient: usize,
    vectors: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

/// Canonical echelon basis of the span of `vectors`.
pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<SubspaceBasis> {
    if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} in ambient dimension {ambient}",
            bad.len()
        )));
    }
    if vectors.is_empty() {
        return Ok(SubspaceBasis::zero(field, ambient));
    }
    let (r, pivots, rank) = Matrix::from_rows(field, ambient, vectors)?.rref();
    Ok(SubspaceBasis {
        field,
        ambient,
        vectors: (0..rank).map(|i| r.row(i).to_vec()).collect(),
        pivots,
    })
}

impl SubspaceBasis {
    pub fn zero(field: Field, ambient: usize) -> Self {
        SubspaceBasis { field, ambient, vectors: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        SubspaceBasis {
            field,
            ambient,
            vectors: (0..ambient).map(|i| vector::unit(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient × dim matrix whose columns are the basis vectors.
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.vectors)
    }

    /// Vector with the given coordinates in this basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut v = vector::zeros(self.field, self.ambient);
        for (c, b) in coords.iter().zip(&self.vectors) {
            vector::axpy(&mut v, c, b);
        }
        v
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is not a member.
    pub fn coords_in(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        // Echelon form: the coordinate on basis vector i is v[pivot_i].
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.combine(&coords) == v {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        matches!(self.coords_in(v), Ok(Some(_)))
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }

    /// dim × ambient matrix sending members to their coordinates (rows are
    /// read off the pivot columns). Only meaningful on members.
    pub fn coordinate_matrix(&self) -> Matrix {
        Matrix::from_fn(self.field, self.dim(), self.ambient, |i, j| {
            if self.pivots[i] == j {
                self.field.one()
            } else {
                self.field.zero()
            }
        })
    }
}

/// Quotient of an ambient space by the span of relation vectors, realised
/// with the complement spanned by the non-pivot unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient: usize,
    relations: SubspaceBasis,
    projection: Matrix,
    section: Matrix,
}

pub fn quotient(field: Field, ambient: usize, relations: &[Vec<Scalar>]) -> Result<QuotientSpace> {
    let relations = span(field, ambient, relations)?;
    let free: Vec<usize> = (0..ambient).filter(|c| !relations.pivots.contains(c)).collect();
    let q = free.len();
    let section = Matrix::from_fn(field, ambient, q, |i, j| {
        if free[j] == i {
            field.one()
        } else {
            field.zero()
        }
    });
    // proj(v) = v[free] - Σ_i v[pivot_i] · r_i[free]
    let mut projection = Matrix::zeros(field, q, ambient);
    for (j, &f) in free.iter().enumerate() {
        projection.set(j, f, field.one());
    }
    for (r, &p) in relations.vectors.iter().zip(&relations.pivots) {
        for (j, &f) in free.iter().enumerate() {
            projection.set(j, p, -&r[f]);
        }
    }
    Ok(QuotientSpace { ambient, relations, projection, section })
}

impl QuotientSpace {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn relations(&self) -> &SubspaceBasis {
        &self.relations
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.section.mul_vec(coords)
    }
}
