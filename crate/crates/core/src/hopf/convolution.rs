//! The convolution algebra Hom(C, A): (f∗g)(c) = f(c₁)g(c₂), with unit
//! `unit∘ε`.

use super::{AlgebraData, CoalgebraData};
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix};
use crate::report::{expect_eq, CheckReport};
use crate::scalar::{Field, Scalar};

/// A linear map C → A (or C⊗C → A) stored as a codomain × domain matrix,
/// viewed as an element of a convolution algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMapHom {
    matrix: Matrix,
}

impl LinMapHom {
    pub fn new(matrix: Matrix) -> Self {
        LinMapHom { matrix }
    }

    /// Map given by its images of the domain basis.
    pub fn from_images(field: Field, codomain: usize, images: &[Vec<Scalar>]) -> Self {
        LinMapHom { matrix: Matrix::from_columns(field, codomain, images) }
    }

    /// Inverse of [`LinMapHom::to_vec`]: row-major entries.
    pub fn from_vec(field: Field, codomain: usize, domain: usize, v: &[Scalar]) -> Self {
        LinMapHom { matrix: Matrix::from_fn(field, codomain, domain, |i, j| v[i * domain + j].clone()) }
    }

    pub fn to_vec(&self) -> Vec<Scalar> {
        (0..self.codomain()).flat_map(|i| self.matrix.row(i).to_vec()).collect()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn domain(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    /// Image of the i-th domain basis vector.
    pub fn image(&self, i: usize) -> Vec<Scalar> {
        self.matrix.column(i)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x)
    }
}

/// `unit∘ε`, the unit of Hom(C, A).
pub fn unit_counit(c: &CoalgebraData, a: &AlgebraData) -> LinMapHom {
    let images: Vec<Vec<Scalar>> = (0..c.dim()).map(|i| vector::scale(&c.counit()[i], a.unit())).collect();
    LinMapHom::from_images(c.field(), a.dim(), &images)
}

/// Picks `C` or `C⊗C` to match the domain of `f`.
fn coalgebra_for(c: &CoalgebraData, domain: usize) -> Result<CoalgebraData> {
    if domain == c.dim() {
        Ok(c.clone())
    } else if domain == c.dim() * c.dim() {
        Ok(c.tensor_square())
    } else {
        Err(Error::DimensionMismatch(format!(
            "map has domain dimension {domain}, coalgebra has dimension {}",
            c.dim()
        )))
    }
}

fn convolve_in(f: &LinMapHom, g: &LinMapHom, c: &CoalgebraData, a: &AlgebraData) -> LinMapHom {
    let images: Vec<Vec<Scalar>> = (0..c.dim())
        .map(|i| {
            let mut out = a.zero();
            for (coef, idx) in c.terms(i) {
                let prod = a.mul(&f.image(idx[0]), &g.image(idx[1]));
                vector::axpy(&mut out, &coef, &prod);
            }
            out
        })
        .collect();
    LinMapHom::from_images(c.field(), a.dim(), &images)
}

fn check_shapes(f: &LinMapHom, g: &LinMapHom, a: &AlgebraData) -> Result<()> {
    if f.domain() != g.domain() || f.codomain() != a.dim() || g.codomain() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cannot convolve {}x{} with {}x{} into an algebra of dimension {}",
            f.codomain(),
            f.domain(),
            g.codomain(),
            g.domain(),
            a.dim()
        )));
    }
    Ok(())
}

/// `(f∗g)(c) = f(c₁)g(c₂)`. When the maps are defined on C⊗C the tensor
/// square coalgebra is used.
pub fn convolution(f: &LinMapHom, g: &LinMapHom, c: &CoalgebraData, a: &AlgebraData) -> Result<LinMapHom> {
    check_shapes(f, g, a)?;
    let c = coalgebra_for(c, f.domain())?;
    Ok(convolve_in(f, g, &c, a))
}

/// Solves `f∗g = g∗f = unit∘ε` for g; `None` if no solution exists.
pub fn convolution_inverse(f: &LinMapHom, c: &CoalgebraData, a: &AlgebraData) -> Result<Option<LinMapHom>> {
    let c = coalgebra_for(c, f.domain())?;
    if f.codomain() != a.dim() {
        return Err(Error::DimensionMismatch("map codomain differs from algebra".into()));
    }
    let field = c.field();
    let (m, n) = (a.dim(), c.dim());
    let unknowns = m * n;
    let left = Matrix::from_operator(field, unknowns, unknowns, |g| {
        convolve_in(f, &LinMapHom::from_vec(field, m, n, g), &c, a).to_vec()
    });
    let right = Matrix::from_operator(field, unknowns, unknowns, |g| {
        convolve_in(&LinMapHom::from_vec(field, m, n, g), f, &c, a).to_vec()
    });
    let target = unit_counit(&c, a).to_vec();
    let rhs: Vec<Scalar> = target.iter().chain(&target).cloned().collect();
    Ok(left.vstack(&right).solve(&rhs)?.map(|g| LinMapHom::from_vec(field, m, n, &g)))
}

/// The spanning set {E_ij : c_k ↦ δ_ik a_j} of Hom(C, A).
pub fn elementary_maps(field: Field, domain: usize, codomain: usize) -> Vec<LinMapHom> {
    let mut out = Vec::with_capacity(domain * codomain);
    for i in 0..domain {
        for j in 0..codomain {
            let mut m = Matrix::zeros(field, codomain, domain);
            m.set(j, i, field.one());
            out.push(LinMapHom::new(m));
        }
    }
    out
}

/// Centrality of `f` in Hom(C, A) (or Hom(C⊗C, A)), tested against the
/// elementary spanning set. Witness indices are (domain index, codomain index).
pub fn centrality_report(name: &str, f: &LinMapHom, c: &CoalgebraData, a: &AlgebraData) -> Result<CheckReport> {
    let c = coalgebra_for(c, f.domain())?;
    let mut report = CheckReport::new(name);
    for (idx, e) in elementary_maps(c.field(), c.dim(), a.dim()).iter().enumerate() {
        let fe = convolve_in(f, e, &c, a);
        let ef = convolve_in(e, f, &c, a);
        report.check(expect_eq("f∗E = E∗f", &[idx / a.dim(), idx % a.dim()], fe.to_vec(), ef.to_vec()));
    }
    Ok(report)
}

pub fn is_central(f: &LinMapHom, c: &CoalgebraData, a: &AlgebraData) -> Result<bool> {
    Ok(centrality_report("central", f, c, a)?.passed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::groups::{cyclic_group, group_algebra};

    fn qc2_on_q() -> (crate::hopf::HopfAlgebraData, AlgebraData) {
        let (t, i) = cyclic_group(2);
        (group_algebra(Field::Rational, &t, &i).unwrap(), AlgebraData::diagonal(Field::Rational, 1))
    }

    #[test]
    fn unit_is_neutral() {
        let (h, a) = qc2_on_q();
        let q = Field::Rational;
        let g = LinMapHom::from_images(q, 1, &[vec![q.from_i64(5)], vec![q.from_i64(-2)]]);
        let u = unit_counit(h.coalgebra(), &a);
        assert_eq!(convolution(&u, &g, h.coalgebra(), &a).unwrap(), g);
        assert_eq!(convolution(&g, &u, h.coalgebra(), &a).unwrap(), g);
    }

    #[test]
    fn group_like_inverse() {
        let (h, a) = qc2_on_q();
        let q = Field::Rational;
        let v = LinMapHom::from_images(q, 1, &[vec![q.one()], vec![q.from_i64(3)]]);
        let inv = convolution_inverse(&v, h.coalgebra(), &a).unwrap().unwrap();
        assert_eq!(inv.image(1), vec![q.ratio(1, 3).unwrap()]);
        assert_eq!(inv.image(0), vec![q.one()]);
        let u = unit_counit(h.coalgebra(), &a);
        assert_eq!(convolution_inverse(&u, h.coalgebra(), &a).unwrap(), Some(u));
        let singular = LinMapHom::from_images(q, 1, &[vec![q.one()], vec![q.zero()]]);
        assert_eq!(convolution_inverse(&singular, h.coalgebra(), &a).unwrap(), None);
    }

    #[test]
    fn shape_errors() {
        let (h, a) = qc2_on_q();
        let q = Field::Rational;
        let bad = LinMapHom::new(Matrix::zeros(q, 1, 3));
        assert!(convolution(&bad, &bad, h.coalgebra(), &a).is_err());
    }

    #[test]
    fn maps_on_tensor_square() {
        let (h, a) = qc2_on_q();
        let q = Field::Rational;
        // ω(h,l) with ω(g,g) = 2; inverse has ω'(g,g) = 1/2
        let w = LinMapHom::from_images(q, 1, &[vec![q.one()], vec![q.one()], vec![q.one()], vec![q.from_i64(2)]]);
        let inv = convolution_inverse(&w, h.coalgebra(), &a).unwrap().unwrap();
        assert_eq!(inv.image(3), vec![q.ratio(1, 2).unwrap()]);
    }
}
