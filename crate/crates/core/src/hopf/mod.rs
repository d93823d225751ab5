//! Finite-dimensional algebras, coalgebras and Hopf algebras given by
//! structure constants, with axiom verifiers, the convolution algebra and
//! integrals.

mod algebra;
mod coalgebra;
pub mod convolution;
pub mod groups;

pub use algebra::{verify_algebra, AlgebraData};
pub use coalgebra::{verify_coalgebra, CoalgebraData, Term};
pub use convolution::{
    centrality_report, convolution, convolution_inverse, is_central, unit_counit, LinMapHom,
};
pub use groups::{function_algebra, group_algebra};

pub(crate) use algebra::stack;

use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, SubspaceBasis};
use crate::report::{expect_eq, sweep, CheckReport};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
    /// Column i holds S(e_i).
    antipode: Matrix,
}

impl HopfAlgebraData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData, antipode: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if coalgebra.dim() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "algebra dim {n}, coalgebra dim {}, antipode {}x{}",
                coalgebra.dim(),
                antipode.rows(),
                antipode.cols()
            )));
        }
        Ok(HopfAlgebraData { algebra, coalgebra, antipode })
    }

    /// The one-dimensional Hopf algebra k.
    pub fn trivial(field: Field) -> Self {
        groups::group_algebra(field, &[vec![0]], &[0]).expect("trivial group")
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn algebra_mut(&mut self) -> &mut AlgebraData {
        &mut self.algebra
    }

    pub fn coalgebra_mut(&mut self) -> &mut CoalgebraData {
        &mut self.coalgebra
    }

    pub fn antipode_mut(&mut self) -> &mut Matrix {
        &mut self.antipode
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        self.algebra.basis(i)
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(x, y)
    }

    /// `e_i · e_j` as a vector.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.algebra.mult().fibre(i, j)
    }

    pub fn s(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(x)
    }

    pub fn epsilon(&self, i: usize) -> &Scalar {
        &self.coalgebra.counit()[i]
    }

    pub fn sweedler(&self, i: usize, parts: usize) -> Vec<coalgebra::Term> {
        self.coalgebra.sweedler(i, parts)
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }
}

/// Algebra, coalgebra, bialgebra compatibility and antipode axioms.
pub fn verify_hopf(h: &HopfAlgebraData) -> CheckReport {
    let n = h.dim();
    let f = h.field();
    let a = &h.algebra;
    let c = &h.coalgebra;
    let mut report = CheckReport::new("hopf");
    report.add_section(verify_algebra(a));
    report.add_section(verify_coalgebra(c));

    let mut bialgebra = sweep("bialgebra", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = c.delta(h.mul_basis(i, j));
        let mut rhs = vector::zeros(f, n * n);
        for (c1, x) in c.terms(i) {
            for (c2, y) in c.terms(j) {
                let term = vector::kron(h.mul_basis(x[0], y[0]), h.mul_basis(x[1], y[1]));
                vector::axpy(&mut rhs, &(&c1 * &c2), &term);
            }
        }
        let mut out = Vec::new();
        out.extend(expect_eq("Δ(xy) = Δ(x)Δ(y)", t, lhs, rhs));
        out.extend(expect_eq(
            "ε(xy) = ε(x)ε(y)",
            t,
            vec![c.epsilon(h.mul_basis(i, j))],
            vec![h.epsilon(i) * h.epsilon(j)],
        ));
        out
    });
    bialgebra.check(expect_eq("Δ(1) = 1⊗1", &[], c.delta(h.unit()), vector::kron(h.unit(), h.unit())));
    bialgebra.check(expect_eq("ε(1) = 1", &[], vec![c.epsilon(h.unit())], vec![f.one()]));
    bialgebra.sort();
    report.add_section(bialgebra);

    report.add_section(sweep("antipode", &[n], |t| {
        let i = t[0];
        let mut left = vector::zeros(f, n);
        let mut right = vector::zeros(f, n);
        for (coef, x) in c.terms(i) {
            vector::axpy(&mut left, &coef, &h.mul(&h.antipode.column(x[0]), &h.basis(x[1])));
            vector::axpy(&mut right, &coef, &h.mul(&h.basis(x[0]), &h.antipode.column(x[1])));
        }
        let target = vector::scale(h.epsilon(i), h.unit());
        let mut out = Vec::new();
        out.extend(expect_eq("S(h₁)h₂ = ε(h)1", t, left, target.clone()));
        out.extend(expect_eq("h₁S(h₂) = ε(h)1", t, right, target));
        out
    }));
    report
}

pub fn is_cocommutative(h: &HopfAlgebraData) -> bool {
    h.is_cocommutative()
}

/// Solution space of `x·t = ε(x)t` for every basis x.
pub fn left_integrals(h: &HopfAlgebraData) -> SubspaceBasis {
    let n = h.dim();
    let f = h.field();
    let blocks: Vec<Matrix> = (0..n)
        .map(|x| {
            let bx = h.basis(x);
            Matrix::from_operator(f, n, n, |t| vector::sub(&h.mul(&bx, t), &vector::scale(h.epsilon(x), t)))
        })
        .collect();
    stack(f, n, &blocks).kernel_basis()
}

/// Solution space of `t·x = ε(x)t` for every basis x.
pub fn right_integrals(h: &HopfAlgebraData) -> SubspaceBasis {
    let n = h.dim();
    let f = h.field();
    let blocks: Vec<Matrix> = (0..n)
        .map(|x| {
            let bx = h.basis(x);
            Matrix::from_operator(f, n, n, |t| vector::sub(&h.mul(t, &bx), &vector::scale(h.epsilon(x), t)))
        })
        .collect();
    stack(f, n, &blocks).kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::groups::{cyclic_group, small_groups, symmetric_group_s3};
    use super::*;

    const Q: Field = Field::Rational;

    fn qc(n: usize) -> HopfAlgebraData {
        let (t, i) = cyclic_group(n);
        group_algebra(Q, &t, &i).unwrap()
    }

    #[test]
    fn group_algebras_are_hopf() {
        assert!(verify_hopf(&qc(2)).passed());
        assert!(verify_hopf(&qc(3)).passed());
        assert!(verify_hopf(&HopfAlgebraData::trivial(Q)).passed());
    }

    #[test]
    fn wrong_antipode_fails() {
        let mut h = qc(3);
        *h.antipode_mut() = Matrix::identity(Q, 3);
        let r = verify_hopf(&h);
        let anti = r.section("antipode").unwrap();
        assert!(!anti.passed());
        assert_eq!(anti.violations[0].indices, vec![1]);
        assert!(r.section("bialgebra").unwrap().passed());
    }

    #[test]
    fn cocommutativity() {
        assert!(is_cocommutative(&qc(2)));
        assert!(is_cocommutative(&qc(3)));
        let (s3, _) = symmetric_group_s3();
        let dual = function_algebra(Q, &s3).unwrap();
        assert!(verify_hopf(&dual).passed());
        assert!(!is_cocommutative(&dual));
        let (c3, _) = cyclic_group(3);
        assert!(is_cocommutative(&function_algebra(Q, &c3).unwrap()));
    }

    #[test]
    fn integrals_examples() {
        let t2 = left_integrals(&qc(2));
        assert_eq!(t2.dim(), 1);
        assert!(t2.contains(&vector::from_i64(Q, &[1, 1])));
        let t3 = left_integrals(&qc(3));
        assert!(t3.contains(&vector::from_i64(Q, &[1, 1, 1])));
        let trivial = left_integrals(&HopfAlgebraData::trivial(Q));
        assert_eq!(trivial, SubspaceBasis::full(Q, 1));
    }

    #[test]
    fn all_small_groups_verify() {
        for (name, (table, inv)) in small_groups() {
            let h = group_algebra(Q, &table, &inv).unwrap();
            assert!(verify_hopf(&h).passed(), "{name}");
            assert!(is_cocommutative(&h), "{name}");
        }
    }

    #[test]
    fn dual_integral_is_delta_at_identity() {
        // in k^G the left integral is δ_e
        let (c3, _) = cyclic_group(3);
        let dual = function_algebra(Q, &c3).unwrap();
        let ints = left_integrals(&dual);
        assert_eq!(ints.dim(), 1);
        assert!(ints.contains(&vector::unit(Q, 3, 0)));
        assert_eq!(right_integrals(&dual), ints);
    }
}
