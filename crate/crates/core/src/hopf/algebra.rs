use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, SubspaceBasis};
use crate::report::{expect_eq, sweep, CheckReport};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor3;

/// A finite-dimensional unital algebra given by structure constants:
/// `mult[i][j][k]` is the coefficient of `e_k` in `e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    labels: Vec<String>,
    mult: Tensor3,
    unit: Vec<Scalar>,
}

impl AlgebraData {
    pub fn new(labels: Vec<String>, mult: Tensor3, unit: Vec<Scalar>) -> Result<Self> {
        let n = labels.len();
        if mult.dims() != (n, n, n) {
            return Err(Error::DimensionMismatch(format!(
                "multiplication tensor has dims {:?}, expected ({n}, {n}, {n})",
                mult.dims()
            )));
        }
        if unit.len() != n {
            return Err(Error::DimensionMismatch(format!("unit has length {}, expected {n}", unit.len())));
        }
        Ok(AlgebraData { labels, mult, unit })
    }

    /// `k^n` with componentwise product.
    pub fn diagonal(field: Field, n: usize) -> Self {
        let mut mult = Tensor3::zeros(field, n, n, n);
        for i in 0..n {
            mult.set(i, i, i, field.one());
        }
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        AlgebraData { labels, mult, unit: vec![field.one(); n] }
    }

    /// Upper triangular 2×2 matrices, basis (E11, E12, E22).
    pub fn upper_triangular(field: Field) -> Self {
        let mut mult = Tensor3::zeros(field, 3, 3, 3);
        // E11E11 = E11, E11E12 = E12, E12E22 = E12, E22E22 = E22
        mult.set(0, 0, 0, field.one());
        mult.set(0, 1, 1, field.one());
        mult.set(1, 2, 1, field.one());
        mult.set(2, 2, 2, field.one());
        let labels = ["E11", "E12", "E22"].iter().map(|s| s.to_string()).collect();
        AlgebraData { labels, mult, unit: vector::from_i64(field, &[1, 0, 1]) }
    }

    /// The algebra structure induced on a subspace closed under the product,
    /// with the given unit (coordinates in the ambient algebra).
    pub fn restrict(&self, sub: &SubspaceBasis, unit: &[Scalar], labels: Vec<String>) -> Result<Self> {
        let d = sub.dim();
        let mut mult = Tensor3::zeros(self.field(), d, d, d);
        for i in 0..d {
            for j in 0..d {
                let p = self.mul(&sub.vectors()[i], &sub.vectors()[j]);
                let c = sub.coords_in(&p)?.ok_or_else(|| {
                    Error::ClosureViolation(format!("product of subspace basis vectors {i}, {j} leaves the subspace"))
                })?;
                mult.set_fibre(i, j, c);
            }
        }
        let unit = sub
            .coords_in(unit)?
            .ok_or_else(|| Error::ClosureViolation("unit is not in the subspace".into()))?;
        AlgebraData::new(labels, mult, unit)
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn mult_mut(&mut self) -> &mut Tensor3 {
        &mut self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field(), self.dim(), i)
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vector::zeros(self.field(), self.dim())
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.mult.apply(x, y)
    }

    /// Product of a sequence of elements, left to right.
    pub fn mul_all(&self, factors: &[&[Scalar]]) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mult.fibre(i, j) == self.mult.fibre(j, i)))
    }

    /// Whether `x` commutes with every basis element.
    pub fn is_central(&self, x: &[Scalar]) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.basis(i);
            self.mul(x, &b) == self.mul(&b, x)
        })
    }

    /// Center as a subspace of the algebra.
    pub fn center(&self) -> SubspaceBasis {
        let n = self.dim();
        let f = self.field();
        let blocks: Vec<Matrix> = (0..n)
            .map(|i| {
                let b = self.basis(i);
                Matrix::from_operator(f, n, n, |x| vector::sub(&self.mul(x, &b), &self.mul(&b, x)))
            })
            .collect();
        stack(f, n, &blocks).kernel_basis()
    }

    /// Left-multiplication operator by `x`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_operator(self.field(), self.dim(), self.dim(), |y| self.mul(x, y))
    }
}

/// Vertical concatenation of matrices sharing a column count.
pub(crate) fn stack(field: Field, cols: usize, blocks: &[Matrix]) -> Matrix {
    blocks.iter().fold(Matrix::zeros(field, 0, cols), |acc, b| acc.vstack(b))
}

/// Associativity and two-sided unit laws on every basis tuple.
pub fn verify_algebra(a: &AlgebraData) -> CheckReport {
    let n = a.dim();
    let mut report = CheckReport::new("algebra");
    report.add_section(sweep("associativity", &[n, n, n], |t| {
        let (x, y, z) = (a.basis(t[0]), a.basis(t[1]), a.basis(t[2]));
        let lhs = a.mul(&a.mul(&x, &y), &z);
        let rhs = a.mul(&x, &a.mul(&y, &z));
        expect_eq("(xy)z = x(yz)", t, lhs, rhs).into_iter().collect()
    }));
    report.add_section(sweep("unit", &[n], |t| {
        let x = a.basis(t[0]);
        let mut out = Vec::new();
        out.extend(expect_eq("1x = x", t, a.mul(a.unit(), &x), x.clone()));
        out.extend(expect_eq("x1 = x", t, a.mul(&x, a.unit()), x));
        out
    }));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::groups::group_algebra;

    #[test]
    fn group_and_diagonal_algebras_pass() {
        let q = Field::Rational;
        let c2 = group_algebra(q, &[vec![0, 1], vec![1, 0]], &[0, 1]).unwrap();
        assert!(verify_algebra(c2.algebra()).passed());
        assert!(verify_algebra(&AlgebraData::diagonal(q, 2)).passed());
        assert!(verify_algebra(&AlgebraData::upper_triangular(q)).passed());
    }

    #[test]
    fn corrupted_entry_is_caught() {
        let q = Field::Rational;
        let c2 = group_algebra(q, &[vec![0, 1], vec![1, 0]], &[0, 1]).unwrap();
        let mut a = c2.algebra().clone();
        // 1·1 = 2·1; note g·g = 2 alone would still be an algebra (Q[x]/(x²-2))
        a.mult_mut().set(0, 0, 0, q.from_i64(2));
        let r = verify_algebra(&a);
        assert!(!r.passed());
        let v = r.section("associativity").unwrap().violations[0].clone();
        assert_eq!(v.indices.len(), 3);
        assert_ne!(v.lhs, v.rhs);
    }

    #[test]
    fn center_of_triangular_is_scalars() {
        let t = AlgebraData::upper_triangular(Field::Rational);
        let z = t.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(t.unit()));
        assert!(!t.is_central(&t.basis(0)));
    }
}
