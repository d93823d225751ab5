//! Twisted partial actions (α, ω) of a Hopf algebra H on an algebra A,
//! global twisted actions (β, u), and their axiom verifiers.

mod global;
mod symmetric;

pub use global::{induce_partial, verify_global, CentralIdempotent, GlobalTwistedAction};
pub use symmetric::{e_map, verify_symmetric, SymmetricReport};

use crate::error::{Error, Result};
use crate::hopf::{AlgebraData, HopfAlgebraData};
use crate::linalg::{vector, Matrix};
use crate::report::{expect_eq, sweep, CheckReport};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor3;

/// `action[i][j][k]` = coefficient of `a_k` in `h_i · a_j`;
/// `cocycle[i][j][k]` = coefficient of `a_k` in `ω(h_i, h_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedPartialAction {
    hopf: HopfAlgebraData,
    algebra: AlgebraData,
    action: Tensor3,
    cocycle: Tensor3,
}

impl TwistedPartialAction {
    pub fn new(hopf: HopfAlgebraData, algebra: AlgebraData, action: Tensor3, cocycle: Tensor3) -> Result<Self> {
        let (n, m) = (hopf.dim(), algebra.dim());
        if action.dims() != (n, m, m) {
            return Err(Error::DimensionMismatch(format!(
                "action tensor has dims {:?}, expected ({n}, {m}, {m})",
                action.dims()
            )));
        }
        if cocycle.dims() != (n, n, m) {
            return Err(Error::DimensionMismatch(format!(
                "cocycle tensor has dims {:?}, expected ({n}, {n}, {m})",
                cocycle.dims()
            )));
        }
        let f = hopf.field();
        for other in [algebra.field(), action.field(), cocycle.field()] {
            if other != f {
                return Err(Error::FieldMismatch { expected: f.to_string(), found: other.to_string() });
            }
        }
        Ok(TwistedPartialAction { hopf, algebra, action, cocycle })
    }

    /// The cocycle `ω(h, l) = h·(l·1_A)`, which makes any partial action a
    /// twisted partial action with trivial ω.
    pub fn with_trivial_cocycle(hopf: HopfAlgebraData, algebra: AlgebraData, action: Tensor3) -> Result<Self> {
        let (n, m) = (hopf.dim(), algebra.dim());
        let f = hopf.field();
        let mut cocycle = Tensor3::zeros(f, n, n, m);
        for h in 0..n {
            for l in 0..n {
                let inner = action.apply_left(l, algebra.unit());
                cocycle.set_fibre(h, l, action.apply_left(h, &inner));
            }
        }
        Self::new(hopf, algebra, action, cocycle)
    }

    pub fn field(&self) -> Field {
        self.hopf.field()
    }

    pub fn hopf(&self) -> &HopfAlgebraData {
        &self.hopf
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn action(&self) -> &Tensor3 {
        &self.action
    }

    pub fn cocycle(&self) -> &Tensor3 {
        &self.cocycle
    }

    pub fn action_mut(&mut self) -> &mut Tensor3 {
        &mut self.action
    }

    pub fn cocycle_mut(&mut self) -> &mut Tensor3 {
        &mut self.cocycle
    }

    /// Replaces the action and cocycle, keeping H and A.
    pub fn with_structure(&self, action: Tensor3, cocycle: Tensor3) -> Result<Self> {
        Self::new(self.hopf.clone(), self.algebra.clone(), action, cocycle)
    }

    pub fn dim_h(&self) -> usize {
        self.hopf.dim()
    }

    pub fn dim_a(&self) -> usize {
        self.algebra.dim()
    }

    /// `h · a` for arbitrary vectors.
    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.action.apply(h, a)
    }

    /// `h_i · a`.
    pub fn act_basis(&self, i: usize, a: &[Scalar]) -> Vec<Scalar> {
        self.action.apply_left(i, a)
    }

    pub fn omega(&self, h: &[Scalar], l: &[Scalar]) -> Vec<Scalar> {
        self.cocycle.apply(h, l)
    }

    pub fn omega_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.cocycle.fibre(i, j)
    }

    /// `e(h_i) = h_i · 1_A`.
    pub fn e(&self, i: usize) -> Vec<Scalar> {
        self.act_basis(i, self.algebra.unit())
    }

    pub fn mul_a(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(x, y)
    }
}

// Identity evaluators shared by the partial and global verifiers.

fn multiplicativity(t: &TwistedPartialAction, idx: &[usize]) -> Option<crate::report::Violation> {
    let (h, j, k) = (idx[0], idx[1], idx[2]);
    let a = &t.algebra;
    let lhs = t.act_basis(h, a.mult().fibre(j, k));
    let mut rhs = a.zero();
    for (c, x) in t.hopf.sweedler(h, 2) {
        let prod = a.mul(&t.act_basis(x[0], &a.basis(j)), &t.act_basis(x[1], &a.basis(k)));
        vector::axpy(&mut rhs, &c, &prod);
    }
    expect_eq("h·(ab) = (h₁·a)(h₂·b)", idx, lhs, rhs)
}

fn unit_acts_trivially(t: &TwistedPartialAction, idx: &[usize]) -> Option<crate::report::Violation> {
    let a = t.algebra.basis(idx[0]);
    expect_eq("1_H·a = a", idx, t.act(t.hopf.unit(), &a), a)
}

/// `(h₁·(l₁·a))ω(h₂,l₂) = ω(h₁,l₁)(h₂l₂·a)`.
fn twisted_module(t: &TwistedPartialAction, idx: &[usize]) -> Option<crate::report::Violation> {
    let (h, l, j) = (idx[0], idx[1], idx[2]);
    let a = t.algebra.basis(j);
    let mut lhs = t.algebra.zero();
    let mut rhs = t.algebra.zero();
    for (c, x) in t.hopf.sweedler(h, 2) {
        for (d, y) in t.hopf.sweedler(l, 2) {
            let cd = &c * &d;
            let inner = t.act_basis(x[0], &t.act_basis(y[0], &a));
            vector::axpy(&mut lhs, &cd, &t.mul_a(&inner, t.omega_basis(x[1], y[1])));
            let moved = t.act(t.hopf.mul_basis(x[1], y[1]), &a);
            vector::axpy(&mut rhs, &cd, &t.mul_a(t.omega_basis(x[0], y[0]), &moved));
        }
    }
    expect_eq("(h₁·(l₁·a))ω(h₂,l₂) = ω(h₁,l₁)(h₂l₂·a)", idx, lhs, rhs)
}

/// `ω(h,l) = ω(h₁,l₁)(h₂l₂·1_A)`.
fn cocycle_absorbs_unit(t: &TwistedPartialAction, idx: &[usize]) -> Option<crate::report::Violation> {
    let (h, l) = (idx[0], idx[1]);
    let mut rhs = t.algebra.zero();
    for (c, x) in t.hopf.sweedler(h, 2) {
        for (d, y) in t.hopf.sweedler(l, 2) {
            let e = t.act(t.hopf.mul_basis(x[1], y[1]), t.algebra.unit());
            vector::axpy(&mut rhs, &(&c * &d), &t.mul_a(t.omega_basis(x[0], y[0]), &e));
        }
    }
    expect_eq("ω(h,l) = ω(h₁,l₁)(h₂l₂·1_A)", idx, t.omega_basis(h, l).to_vec(), rhs)
}

/// `(h₁·ω(l₁,m₁))ω(h₂,l₂m₂) = ω(h₁,l₁)ω(h₂l₂,m)`.
fn cocycle_condition(t: &TwistedPartialAction, idx: &[usize]) -> Option<crate::report::Violation> {
    let (h, l, m) = (idx[0], idx[1], idx[2]);
    let mut lhs = t.algebra.zero();
    let mut rhs = t.algebra.zero();
    let em = t.hopf.basis(m);
    for (c, x) in t.hopf.sweedler(h, 2) {
        for (d, y) in t.hopf.sweedler(l, 2) {
            let cd = &c * &d;
            for (e, z) in t.hopf.sweedler(m, 2) {
                let left = t.act_basis(x[0], t.omega_basis(y[0], z[0]));
                let right = t.omega(&t.hopf.basis(x[1]), t.hopf.mul_basis(y[1], z[1]));
                vector::axpy(&mut lhs, &(&cd * &e), &t.mul_a(&left, &right));
            }
            let right = t.omega(t.hopf.mul_basis(x[1], y[1]), &em);
            vector::axpy(&mut rhs, &cd, &t.mul_a(t.omega_basis(x[0], y[0]), &right));
        }
    }
    expect_eq("(h₁·ω(l₁,m₁))ω(h₂,l₂m₂) = ω(h₁,l₁)ω(h₂l₂,m)", idx, lhs, rhs)
}

/// `ω(1,h) = ω(h,1) = h·1_A`.
fn normalization(t: &TwistedPartialAction, idx: &[usize]) -> Vec<crate::report::Violation> {
    let h = t.hopf.basis(idx[0]);
    let one = t.hopf.unit();
    let e = t.e(idx[0]);
    let mut out = Vec::new();
    out.extend(expect_eq("ω(1,h) = h·1_A", idx, t.omega(one, &h), e.clone()));
    out.extend(expect_eq("ω(h,1) = h·1_A", idx, t.omega(&h, one), e));
    out
}

/// Partial H-module algebra axioms for an action alone.
pub fn verify_partial_module_algebra(hopf: &HopfAlgebraData, algebra: &AlgebraData, action: &Tensor3) -> Result<CheckReport> {
    let (n, m) = (hopf.dim(), algebra.dim());
    let cocycle = Tensor3::zeros(hopf.field(), n, n, m);
    let t = TwistedPartialAction::new(hopf.clone(), algebra.clone(), action.clone(), cocycle)?;
    let mut report = CheckReport::new("partial_module_algebra");
    report.add_section(sweep("multiplicative", &[n, m, m], |i| multiplicativity(&t, i).into_iter().collect()));
    report.add_section(sweep("unit", &[m], |i| unit_acts_trivially(&t, i).into_iter().collect()));
    report.add_section(sweep("partial_composition", &[n, n, m], |idx| {
        let (h, g, j) = (idx[0], idx[1], idx[2]);
        let a = algebra.basis(j);
        let lhs = t.act_basis(h, &t.act_basis(g, &a));
        let mut rhs = algebra.zero();
        for (c, x) in hopf.sweedler(h, 2) {
            let moved = t.act(hopf.mul_basis(x[1], g), &a);
            vector::axpy(&mut rhs, &c, &algebra.mul(&t.e(x[0]), &moved));
        }
        expect_eq("h·(g·a) = (h₁·1_A)(h₂g·a)", idx, lhs, rhs).into_iter().collect()
    }));
    Ok(report)
}

/// The four defining identities of a twisted partial action, one section each.
pub fn verify_twisted_partial(t: &TwistedPartialAction) -> CheckReport {
    let (n, m) = (t.dim_h(), t.dim_a());
    let mut report = CheckReport::new("twisted_partial");
    report.add_section(sweep("unit_action", &[m], |i| unit_acts_trivially(t, i).into_iter().collect()));
    report.add_section(sweep("multiplicative", &[n, m, m], |i| multiplicativity(t, i).into_iter().collect()));
    report.add_section(sweep("twisted_module", &[n, n, m], |i| twisted_module(t, i).into_iter().collect()));
    report.add_section(sweep("cocycle_unit", &[n, n], |i| cocycle_absorbs_unit(t, i).into_iter().collect()));
    report
}

/// `ω(h,l) = (h₁·(l₁·1_A))ω(h₂,l₂) = (h₁·1_A)ω(h₂,l)`.
pub fn verify_lemma31(t: &TwistedPartialAction) -> CheckReport {
    let n = t.dim_h();
    sweep("lemma31", &[n, n], |idx| {
        let (h, l) = (idx[0], idx[1]);
        let w = t.omega_basis(h, l).to_vec();
        let mut first = t.algebra.zero();
        let mut second = t.algebra.zero();
        for (c, x) in t.hopf.sweedler(h, 2) {
            for (d, y) in t.hopf.sweedler(l, 2) {
                let inner = t.act_basis(x[0], &t.e(y[0]));
                vector::axpy(&mut first, &(&c * &d), &t.mul_a(&inner, t.omega_basis(x[1], y[1])));
            }
            vector::axpy(&mut second, &c, &t.mul_a(&t.e(x[0]), t.omega_basis(x[1], l)));
        }
        let mut out = Vec::new();
        out.extend(expect_eq("ω(h,l) = (h₁·(l₁·1_A))ω(h₂,l₂)", idx, w.clone(), first));
        out.extend(expect_eq("ω(h,l) = (h₁·1_A)ω(h₂,l)", idx, w, second));
        out
    })
}

/// The three conditions under which A#H is unital with 1#1 and
/// associative: normalization, twisted module, 2-cocycle.
pub fn verify_crossed_conditions(t: &TwistedPartialAction) -> CheckReport {
    let (n, m) = (t.dim_h(), t.dim_a());
    let mut report = CheckReport::new("crossed_conditions");
    report.add_section(sweep("normalization", &[n], |i| normalization(t, i)));
    report.add_section(sweep("twisted_module", &[n, n, m], |i| twisted_module(t, i).into_iter().collect()));
    report.add_section(sweep("cocycle", &[n, n, n], |i| cocycle_condition(t, i).into_iter().collect()));
    report
}

/// Whether `h·(l·1_A) = ω(h,l) = (h₁·1_A)(h₂l·1_A)` on all basis pairs.
pub fn is_trivial_cocycle(t: &TwistedPartialAction) -> bool {
    let n = t.dim_h();
    (0..n).all(|h| {
        (0..n).all(|l| {
            let w = t.omega_basis(h, l);
            let nested = t.act_basis(h, &t.e(l));
            let mut split = t.algebra.zero();
            for (c, x) in t.hopf.sweedler(h, 2) {
                let moved = t.act(t.hopf.mul_basis(x[1], l), t.algebra.unit());
                vector::axpy(&mut split, &c, &t.mul_a(&t.e(x[0]), &moved));
            }
            nested == w && split == w
        })
    })
}

/// Def-3.2-style comparison of two twisted partial actions of the same H
/// along a linear map `map: A → A'` (an A' × A matrix). Sections:
/// multiplicative, unital, intertwines the action, carries ω to ω′, and
/// (when `require_iso`) bijective.
pub fn verify_morphism(src: &TwistedPartialAction, dst: &TwistedPartialAction, map: &Matrix, require_iso: bool) -> Result<CheckReport> {
    let (n, m) = (src.dim_h(), src.dim_a());
    if dst.dim_h() != n || map.cols() != m || map.rows() != dst.dim_a() {
        return Err(Error::DimensionMismatch("morphism shape does not match the actions".into()));
    }
    let mut report = CheckReport::new(if require_iso { "equivalence" } else { "morphism" });
    report.add_section(sweep("multiplicative", &[m, m], |idx| {
        let lhs = map.mul_vec(src.algebra.mult().fibre(idx[0], idx[1]));
        let rhs = dst.mul_a(&map.column(idx[0]), &map.column(idx[1]));
        expect_eq("θ(ab) = θ(a)θ(b)", idx, lhs, rhs).into_iter().collect()
    }));
    report.add_section(sweep("intertwines", &[n, m], |idx| {
        let lhs = map.mul_vec(&src.act_basis(idx[0], &src.algebra.basis(idx[1])));
        let rhs = dst.act_basis(idx[0], &map.column(idx[1]));
        expect_eq("θ(h·a) = h·θ(a)", idx, lhs, rhs).into_iter().collect()
    }));
    if require_iso {
        let mut unital = CheckReport::new("unital");
        unital.check(expect_eq("θ(1) = 1", &[], map.mul_vec(src.algebra.unit()), dst.algebra.unit().to_vec()));
        report.add_section(unital);
        report.add_section(sweep("cocycle", &[n, n], |idx| {
            let lhs = map.mul_vec(src.omega_basis(idx[0], idx[1]));
            let rhs = dst.omega_basis(idx[0], idx[1]).to_vec();
            expect_eq("θ(ω(h,l)) = ω′(h,l)", idx, lhs, rhs).into_iter().collect()
        }));
        let mut bij = CheckReport::new("bijective");
        if map.rows() != m || map.rank() != m {
            bij.fail("θ bijective", &[map.rank()]);
        }
        report.add_section(bij);
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
