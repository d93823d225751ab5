use super::{
    cocycle_condition, multiplicativity, twisted_module, unit_acts_trivially, verify_twisted_partial,
    TwistedPartialAction,
};
use crate::error::{Error, Result};
use crate::hopf::{AlgebraData, HopfAlgebraData};
use crate::linalg::{span, vector, SubspaceBasis};
use crate::report::{expect_eq, sweep, CheckReport};
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

/// A global twisted action (▷, u) of H on B. Stored in the same shape as a
/// twisted partial action, with the twist in the cocycle slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalTwistedAction {
    inner: TwistedPartialAction,
}

impl GlobalTwistedAction {
    pub fn new(hopf: HopfAlgebraData, algebra: AlgebraData, action: Tensor3, twist: Tensor3) -> Result<Self> {
        Ok(GlobalTwistedAction { inner: TwistedPartialAction::new(hopf, algebra, action, twist)? })
    }

    /// The twist `u(h,l) = ε(h)ε(l)1_B`.
    pub fn untwisted(hopf: HopfAlgebraData, algebra: AlgebraData, action: Tensor3) -> Result<Self> {
        let (n, m) = (hopf.dim(), algebra.dim());
        let twist = Tensor3::from_fn(hopf.field(), n, n, m, |i, j| {
            vector::scale(&(hopf.epsilon(i) * hopf.epsilon(j)), algebra.unit())
        });
        Self::new(hopf, algebra, action, twist)
    }

    pub fn hopf(&self) -> &HopfAlgebraData {
        self.inner.hopf()
    }

    pub fn algebra(&self) -> &AlgebraData {
        self.inner.algebra()
    }

    pub fn action(&self) -> &Tensor3 {
        self.inner.action()
    }

    pub fn twist(&self) -> &Tensor3 {
        self.inner.cocycle()
    }

    pub fn twist_mut(&mut self) -> &mut Tensor3 {
        self.inner.cocycle_mut()
    }

    pub fn act(&self, h: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.inner.act(h, b)
    }

    pub fn act_basis(&self, i: usize, b: &[Scalar]) -> Vec<Scalar> {
        self.inner.act_basis(i, b)
    }

    pub fn u(&self, h: &[Scalar], l: &[Scalar]) -> Vec<Scalar> {
        self.inner.omega(h, l)
    }

    pub fn u_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.inner.omega_basis(i, j)
    }

    /// The same data read as a twisted partial action on all of B with ω = u.
    pub fn as_partial(&self) -> &TwistedPartialAction {
        &self.inner
    }
}

/// The six global axioms, one section each.
pub fn verify_global(g: &GlobalTwistedAction) -> CheckReport {
    let t = &g.inner;
    let (n, m) = (t.dim_h(), t.dim_a());
    let b = t.algebra();
    let h = t.hopf();
    let mut report = CheckReport::new("global");
    report.add_section(sweep("unit_action", &[m], |i| unit_acts_trivially(t, i).into_iter().collect()));
    report.add_section(sweep("multiplicative", &[n, m, m], |i| multiplicativity(t, i).into_iter().collect()));
    report.add_section(sweep("unit_preserved", &[n], |idx| {
        let rhs = vector::scale(h.epsilon(idx[0]), b.unit());
        expect_eq("h▷1 = ε(h)1", idx, t.e(idx[0]), rhs).into_iter().collect()
    }));
    report.add_section(sweep("twist_normalized", &[n], |idx| {
        let x = h.basis(idx[0]);
        let rhs = vector::scale(h.epsilon(idx[0]), b.unit());
        let mut out = Vec::new();
        out.extend(expect_eq("u(1,h) = ε(h)1", idx, t.omega(h.unit(), &x), rhs.clone()));
        out.extend(expect_eq("u(h,1) = ε(h)1", idx, t.omega(&x, h.unit()), rhs));
        out
    }));
    report.add_section(sweep("twisted_module", &[n, n, m], |i| twisted_module(t, i).into_iter().collect()));
    report.add_section(sweep("cocycle", &[n, n, n], |i| cocycle_condition(t, i).into_iter().collect()));
    report
}

/// A central idempotent `1_A` of B together with the ideal `A = 1_A·B`,
/// held as its own algebra on an echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralIdempotent {
    element: Vec<Scalar>,
    ideal: SubspaceBasis,
    algebra: AlgebraData,
}

impl CentralIdempotent {
    pub fn new(b: &AlgebraData, element: Vec<Scalar>) -> Result<Self> {
        if element.len() != b.dim() {
            return Err(Error::DimensionMismatch(format!(
                "idempotent has {} coordinates, algebra has dimension {}",
                element.len(),
                b.dim()
            )));
        }
        if b.mul(&element, &element) != element {
            return Err(Error::NotIdempotent);
        }
        if !b.is_central(&element) {
            return Err(Error::NotCentral("1_A does not commute with B".into()));
        }
        let gens: Vec<Vec<Scalar>> = (0..b.dim()).map(|i| b.mul(&element, &b.basis(i))).collect();
        let ideal = span(b.field(), b.dim(), &gens)?;
        let labels = ideal.pivots().iter().map(|&p| b.labels()[p].clone()).collect();
        let algebra = b.restrict(&ideal, &element, labels)?;
        Ok(CentralIdempotent { element, ideal, algebra })
    }

    pub fn element(&self) -> &[Scalar] {
        &self.element
    }

    pub fn ideal(&self) -> &SubspaceBasis {
        &self.ideal
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    /// Coordinates in A of an element of B lying in the ideal.
    pub fn to_ideal(&self, b: &[Scalar]) -> Result<Vec<Scalar>> {
        self.ideal
            .coords_in(b)?
            .ok_or_else(|| Error::ClosureViolation("element is not in the ideal 1_A·B".into()))
    }

    /// An element of A written in B.
    pub fn to_ambient(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.ideal.combine(a)
    }
}

/// The twisted partial action induced on `A = 1_A·B`:
/// `h·a = 1_A(h▷a)` and `ω(h,l) = (h₁·1_A)u(h₂,l₁)(h₃l₂·1_A)`.
pub fn induce_partial(g: &GlobalTwistedAction, one_a: &[Scalar]) -> Result<(TwistedPartialAction, CentralIdempotent)> {
    let b = g.algebra();
    let h = g.hopf();
    let idem = CentralIdempotent::new(b, one_a.to_vec())?;
    let a = idem.algebra().clone();
    let (n, m) = (h.dim(), a.dim());
    let field = h.field();
    // h·x in B for x ∈ B.
    let partial = |x: &[Scalar], y: &[Scalar]| b.mul(one_a, &g.act(x, y));

    let mut action = Tensor3::zeros(field, n, m, m);
    for i in 0..n {
        for j in 0..m {
            let img = partial(&h.basis(i), &idem.to_ambient(&a.basis(j)));
            action.set_fibre(i, j, idem.to_ideal(&img)?);
        }
    }
    let mut cocycle = Tensor3::zeros(field, n, n, m);
    for i in 0..n {
        for j in 0..n {
            let mut w = b.zero();
            for (c, x) in h.sweedler(i, 3) {
                for (d, y) in h.sweedler(j, 2) {
                    let left = partial(&h.basis(x[0]), one_a);
                    let right = partial(&h.mul(&h.basis(x[2]), &h.basis(y[1])), one_a);
                    let term = b.mul_all(&[&left, g.u_basis(x[1], y[0]), &right]);
                    vector::axpy(&mut w, &(&c * &d), &term);
                }
            }
            cocycle.set_fibre(i, j, idem.to_ideal(&w)?);
        }
    }
    let tpa = TwistedPartialAction::new(h.clone(), a, action, cocycle)?;
    let check = verify_twisted_partial(&tpa);
    if !check.passed() {
        return Err(Error::Invariant(format!("induced action fails its axioms:\n{}", check.summary())));
    }
    Ok((tpa, idem))
}
