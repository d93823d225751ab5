use crate::error::{Error, Result};
use crate::linalg::vector;
use crate::report::{expect_eq, sweep, CheckReport};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor3;

/// A finite-dimensional coalgebra: `comult[i][j][k]` is the coefficient of
/// `e_j ⊗ e_k` in `Δ(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    comult: Tensor3,
    counit: Vec<Scalar>,
}

/// One summand `coeff · e_{i1} ⊗ … ⊗ e_{ik}` of an iterated coproduct.
pub type Term = (Scalar, Vec<usize>);

impl CoalgebraData {
    pub fn new(comult: Tensor3, counit: Vec<Scalar>) -> Result<Self> {
        let n = counit.len();
        if comult.dims() != (n, n, n) {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication tensor has dims {:?}, expected ({n}, {n}, {n})",
                comult.dims()
            )));
        }
        Ok(CoalgebraData { comult, counit })
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn comult(&self) -> &Tensor3 {
        &self.comult
    }

    pub fn comult_mut(&mut self) -> &mut Tensor3 {
        &mut self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn counit_mut(&mut self) -> &mut Vec<Scalar> {
        &mut self.counit
    }

    /// `Δ(x)` as a vector of length n² (row-major Kronecker indexing).
    pub fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vector::zeros(self.field(), n * n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                vector::axpy(&mut out[j * n..(j + 1) * n], xi, self.comult.fibre(i, j));
            }
        }
        out
    }

    pub fn epsilon(&self, x: &[Scalar]) -> Scalar {
        vector::dot(&self.counit, x)
    }

    /// Nonzero terms of `Δ(e_i)`.
    pub fn terms(&self, i: usize) -> Vec<Term> {
        let n = self.dim();
        let mut out = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let c = self.comult.get(i, j, k);
                if !c.is_zero() {
                    out.push((c.clone(), vec![j, k]));
                }
            }
        }
        out
    }

    /// Nonzero terms of the iterated coproduct `e_i ↦ e_{i(1)} ⊗ … ⊗ e_{i(parts)}`,
    /// expanding the last factor each time.
    pub fn sweedler(&self, i: usize, parts: usize) -> Vec<Term> {
        assert!(parts >= 1, "at least one tensor factor");
        let mut terms = vec![(self.field().one(), vec![i])];
        for _ in 1..parts {
            let mut next = Vec::new();
            for (c, idx) in terms {
                let last = *idx.last().expect("nonempty");
                for (d, pair) in self.terms(last) {
                    let mut t = idx[..idx.len() - 1].to_vec();
                    t.extend(pair);
                    next.push((&c * &d, t));
                }
            }
            terms = next;
        }
        terms
    }

    /// The coalgebra C⊗C with Δ = (id⊗τ⊗id)(Δ⊗Δ) and ε⊗ε; basis index
    /// (i, j) ↦ i·n + j.
    pub fn tensor_square(&self) -> CoalgebraData {
        let n = self.dim();
        let f = self.field();
        let mut comult = Tensor3::zeros(f, n * n, n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                for (c, a) in self.terms(i) {
                    for (d, b) in self.terms(j) {
                        // (e_{a0}⊗e_{b0}) ⊗ (e_{a1}⊗e_{b1})
                        let left = a[0] * n + b[0];
                        let right = a[1] * n + b[1];
                        let x = comult.get(i * n + j, left, right) + &(&c * &d);
                        comult.set(i * n + j, left, right, x);
                    }
                }
            }
        }
        let counit = vector::kron(&self.counit, &self.counit);
        CoalgebraData { comult, counit }
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.comult.get(i, j, k) == self.comult.get(i, k, j))))
    }
}

/// Coassociativity and counit laws on every basis element.
pub fn verify_coalgebra(c: &CoalgebraData) -> CheckReport {
    let n = c.dim();
    let f = c.field();
    let mut report = CheckReport::new("coalgebra");
    report.add_section(sweep("coassociativity", &[n], |t| {
        let i = t[0];
        let mut lhs = vector::zeros(f, n * n * n);
        let mut rhs = vector::zeros(f, n * n * n);
        for (c1, a) in c.terms(i) {
            // (Δ⊗id): split the first factor
            for (c2, b) in c.terms(a[0]) {
                lhs[(b[0] * n + b[1]) * n + a[1]] += &(&c1 * &c2);
            }
            // (id⊗Δ): split the second factor
            for (c2, b) in c.terms(a[1]) {
                rhs[(a[0] * n + b[0]) * n + b[1]] += &(&c1 * &c2);
            }
        }
        expect_eq("(Δ⊗id)Δ = (id⊗Δ)Δ", t, lhs, rhs).into_iter().collect()
    }));
    report.add_section(sweep("counit", &[n], |t| {
        let i = t[0];
        let mut left = vector::zeros(f, n);
        let mut right = vector::zeros(f, n);
        for (coef, a) in c.terms(i) {
            left[a[1]] += &(&coef * &c.counit[a[0]]);
            right[a[0]] += &(&coef * &c.counit[a[1]]);
        }
        let e = vector::unit(f, n, i);
        let mut out = Vec::new();
        out.extend(expect_eq("(ε⊗id)Δ = id", t, left, e.clone()));
        out.extend(expect_eq("(id⊗ε)Δ = id", t, right, e));
        out
    }));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::groups::{cyclic_group, function_algebra, group_algebra, symmetric_group_s3};

    #[test]
    fn group_like_coalgebra_passes() {
        let (table, inv) = cyclic_group(2);
        let h = group_algebra(Field::Rational, &table, &inv).unwrap();
        assert!(verify_coalgebra(h.coalgebra()).passed());
    }

    #[test]
    fn dual_coalgebra_passes() {
        let (table, _) = cyclic_group(2);
        let h = function_algebra(Field::Rational, &table).unwrap();
        assert!(verify_coalgebra(h.coalgebra()).passed());
        let (s3, _) = symmetric_group_s3();
        assert!(verify_coalgebra(function_algebra(Field::Rational, &s3).unwrap().coalgebra()).passed());
    }

    #[test]
    fn corrupted_counit_fails() {
        let (table, inv) = cyclic_group(2);
        let h = group_algebra(Field::Rational, &table, &inv).unwrap();
        let mut c = h.coalgebra().clone();
        c.counit_mut()[1] = Field::Rational.from_i64(2);
        let r = verify_coalgebra(&c);
        assert!(!r.section("counit").unwrap().passed());
    }

    #[test]
    fn iterated_coproduct_of_dual_basis() {
        let (table, _) = cyclic_group(3);
        let h = function_algebra(Field::Rational, &table).unwrap();
        // Δ²(δ_0) has one term per pair (a, b), c = -(a+b)
        assert_eq!(h.coalgebra().sweedler(0, 3).len(), 9);
        assert_eq!(h.coalgebra().tensor_square().dim(), 9);
        assert!(verify_coalgebra(&h.coalgebra().tensor_square()).passed());
    }
}
