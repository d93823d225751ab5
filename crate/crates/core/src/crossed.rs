//! The partial crossed product A#_{α,ω}H as a subspace of A⊗H, the global
//! crossed product B#_u H, the right H-coaction and the canonical map.

use crate::error::{Error, Result};
use crate::hopf::{verify_algebra, AlgebraData};
use crate::linalg::{quotient, span, vector, Matrix, QuotientSpace, SubspaceBasis};
use crate::partial::{verify_crossed_conditions, verify_global, verify_twisted_partial, GlobalTwistedAction, TwistedPartialAction};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

/// Structure constants of `(a⊗h)(b⊗l) = a(h₁·b)ω(h₂,l₁) ⊗ h₃l₂` on all of
/// A⊗H, indexed `i·dim H + j` for `a_i⊗h_j`.
pub fn ambient_product_table(t: &TwistedPartialAction) -> Tensor3 {
    let (na, nh) = (t.dim_a(), t.dim_h());
    let n = na * nh;
    let h = t.hopf();
    let a = t.algebra();
    let thirds: Vec<_> = (0..nh).map(|i| h.sweedler(i, 3)).collect();
    let halves: Vec<_> = (0..nh).map(|i| h.sweedler(i, 2)).collect();
    Tensor3::from_fn(t.field(), n, n, n, |p, q| {
        let (i, hi) = (p / nh, p % nh);
        let (j, li) = (q / nh, q % nh);
        let mut out = vector::zeros(t.field(), n);
        for (c, x) in &thirds[hi] {
            let moved = a.mul(&a.basis(i), &t.act_basis(x[0], &a.basis(j)));
            for (d, y) in &halves[li] {
                let left = a.mul(&moved, t.omega_basis(x[1], y[0]));
                let right = h.mul_basis(x[2], y[1]);
                vector::axpy(&mut out, &(c * d), &vector::kron(&left, right));
            }
        }
        out
    })
}

/// A#_{α,ω}H on its computed echelon basis. Elements are coordinate
/// vectors in that basis; `to_ambient`/`from_ambient` convert to A⊗H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedProductAlgebra {
    tpa: TwistedPartialAction,
    basis: SubspaceBasis,
    algebra: AlgebraData,
    embedding: Matrix,
}

/// Builds the crossed product without checking the axioms first; fails only
/// when a product of basis elements leaves the span.
pub fn build_partial_crossed_unchecked(t: &TwistedPartialAction) -> Result<CrossedProductAlgebra> {
    let (na, nh) = (t.dim_a(), t.dim_h());
    let field = t.field();
    let a = t.algebra();
    let h = t.hopf();
    let mut gens = Vec::with_capacity(na * nh);
    for i in 0..na {
        for j in 0..nh {
            let mut v = vector::zeros(field, na * nh);
            for (c, x) in h.sweedler(j, 2) {
                let left = a.mul(&a.basis(i), &t.e(x[0]));
                vector::axpy(&mut v, &c, &vector::kron(&left, &h.basis(x[1])));
            }
            gens.push(v);
        }
    }
    let basis = span(field, na * nh, &gens)?;
    let table = ambient_product_table(t);
    let d = basis.dim();
    let mut mult = Tensor3::zeros(field, d, d, d);
    for p in 0..d {
        for q in 0..d {
            let prod = table.apply(&basis.vectors()[p], &basis.vectors()[q]);
            let coords = basis.coords_in(&prod)?.ok_or_else(|| {
                Error::ClosureViolation(format!("product of crossed-product basis elements {p}, {q} leaves the span"))
            })?;
            mult.set_fibre(p, q, coords);
        }
    }
    let one = vector::kron(a.unit(), h.unit());
    let unit = basis
        .coords_in(&one)?
        .ok_or_else(|| Error::ClosureViolation("1_A⊗1_H is not in the crossed product".into()))?;
    let labels = basis
        .pivots()
        .iter()
        .map(|&p| format!("{}#{}", a.labels()[p / nh], h.algebra().labels()[p % nh]))
        .collect();
    let algebra = AlgebraData::new(labels, mult, unit)?;
    let cols: Vec<Vec<Scalar>> = (0..na)
        .map(|i| {
            let v = vector::kron(&a.basis(i), h.unit());
            basis.coords_in(&v)?.ok_or_else(|| Error::ClosureViolation("a⊗1_H is not in the crossed product".into()))
        })
        .collect::<Result<_>>()?;
    let embedding = Matrix::from_columns(field, d, &cols);
    Ok(CrossedProductAlgebra { tpa: t.clone(), basis, algebra, embedding })
}

/// A#_{α,ω}H for a verified twisted partial action.
pub fn build_partial_crossed(t: &TwistedPartialAction) -> Result<CrossedProductAlgebra> {
    for report in [verify_twisted_partial(t), verify_crossed_conditions(t)] {
        if !report.passed() {
            return Err(Error::PreconditionFailed(format!("{} does not hold:\n{}", report.name, report.summary())));
        }
    }
    build_partial_crossed_unchecked(t)
}

impl CrossedProductAlgebra {
    pub fn tpa(&self) -> &TwistedPartialAction {
        &self.tpa
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// The basis as vectors of A⊗H.
    pub fn basis(&self) -> &SubspaceBasis {
        &self.basis
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    /// Matrix of `a ↦ a#1_H`, dim × dim A.
    pub fn embedding(&self) -> &Matrix {
        &self.embedding
    }

    pub fn embed(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.embedding.mul_vec(a)
    }

    pub fn to_ambient(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.basis.combine(x)
    }

    pub fn from_ambient(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.basis
            .coords_in(v)?
            .ok_or_else(|| Error::ClosureViolation("vector is not in the crossed product".into()))
    }

    /// `a#h = a(h₁·1_A)⊗h₂` in basis coordinates.
    pub fn element(&self, a: &[Scalar], h: &[Scalar]) -> Result<Vec<Scalar>> {
        let t = &self.tpa;
        let mut v = vector::zeros(t.field(), t.dim_a() * t.dim_h());
        for (k, hk) in h.iter().enumerate() {
            if hk.is_zero() {
                continue;
            }
            for (c, x) in t.hopf().sweedler(k, 2) {
                let left = t.mul_a(a, &t.e(x[0]));
                vector::axpy(&mut v, &(hk * &c), &vector::kron(&left, &t.hopf().basis(x[1])));
            }
        }
        self.from_ambient(&v)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(x, y)
    }
}

pub fn multiply(cp: &CrossedProductAlgebra, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
    let d = cp.dim();
    if x.len() != d || y.len() != d {
        return Err(Error::DimensionMismatch(format!(
            "operands of length {} and {} in a crossed product of dimension {d}",
            x.len(),
            y.len()
        )));
    }
    Ok(cp.mul(x, y))
}

/// Associativity on all basis triples and the unit laws for 1_A#1_H.
pub fn verify_assoc_unital(cp: &CrossedProductAlgebra) -> CheckReport {
    let mut r = verify_algebra(&cp.algebra);
    r.name = "assoc_unital".into();
    r
}

/// B#_u H on all of B⊗H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalCrossedProduct {
    global: GlobalTwistedAction,
    inner: CrossedProductAlgebra,
}

impl GlobalCrossedProduct {
    pub fn global(&self) -> &GlobalTwistedAction {
        &self.global
    }

    pub fn as_crossed(&self) -> &CrossedProductAlgebra {
        &self.inner
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn algebra(&self) -> &AlgebraData {
        self.inner.algebra()
    }
}

pub fn build_global_crossed(g: &GlobalTwistedAction) -> Result<GlobalCrossedProduct> {
    let report = verify_global(g);
    if !report.passed() {
        return Err(Error::PreconditionFailed(format!("global axioms fail:\n{}", report.summary())));
    }
    let inner = build_partial_crossed_unchecked(g.as_partial())?;
    debug_assert_eq!(inner.dim(), g.algebra().dim() * g.hopf().dim());
    Ok(GlobalCrossedProduct { global: g.clone(), inner })
}

/// The right coaction `ρ(a#h) = (a#h₁)⊗h₂` and its coinvariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction {
    /// (dim·dim H) × dim, target index `r·dim H + k`.
    pub matrix: Matrix,
    pub coinvariants: SubspaceBasis,
    /// Whether the coinvariants are exactly `A#1_H`.
    pub coinvariants_are_a: bool,
}

pub fn comodule_coaction(cp: &CrossedProductAlgebra) -> Result<Coaction> {
    let t = &cp.tpa;
    let (na, nh, d) = (t.dim_a(), t.dim_h(), cp.dim());
    let field = t.field();
    let h = t.hopf();
    let mut cols = Vec::with_capacity(d);
    for r in 0..d {
        let v = &cp.basis.vectors()[r];
        // (id⊗Δ) on A⊗H, then read off one A⊗H slice per second H factor.
        let mut slices = vec![vector::zeros(field, na * nh); nh];
        for (p, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = (p / nh, p % nh);
            for (coef, x) in h.sweedler(j, 2) {
                slices[x[1]][i * nh + x[0]] += &(c * &coef);
            }
        }
        let mut col = vector::zeros(field, d * nh);
        for (k, slice) in slices.iter().enumerate() {
            let coords = cp.from_ambient(slice)?;
            for (s, x) in coords.into_iter().enumerate() {
                col[s * nh + k] = x;
            }
        }
        cols.push(col);
    }
    let matrix = Matrix::from_columns(field, d * nh, &cols);
    let unit_h = h.unit();
    let trivial = Matrix::from_operator(field, d, d * nh, |x| vector::kron(x, unit_h));
    let diff = Matrix::from_fn(field, d * nh, d, |i, j| matrix.get(i, j) - trivial.get(i, j));
    let coinvariants = diff.kernel_basis();
    let image = span(field, d, &(0..na).map(|i| cp.embedding.column(i)).collect::<Vec<_>>())?;
    let coinvariants_are_a = image == coinvariants;
    Ok(Coaction { matrix, coinvariants, coinvariants_are_a })
}

/// Coassociativity and counitality of ρ on every basis element.
pub fn verify_coaction(cp: &CrossedProductAlgebra, rho: &Coaction) -> CheckReport {
    let t = &cp.tpa;
    let (nh, d) = (t.dim_h(), cp.dim());
    let field = t.field();
    let h = t.hopf();
    let mut report = CheckReport::new("coaction");
    for r in 0..d {
        let once = rho.matrix.column(r);
        // (ρ⊗id)ρ and (id⊗Δ)ρ in R⊗H⊗H, index (s·nH + k)·nH + l.
        let mut left = vector::zeros(field, d * nh * nh);
        let mut right = vector::zeros(field, d * nh * nh);
        let mut counit = vector::zeros(field, d);
        for s in 0..d {
            for k in 0..nh {
                let c = &once[s * nh + k];
                if c.is_zero() {
                    continue;
                }
                let again = rho.matrix.column(s);
                for s2 in 0..d {
                    for k2 in 0..nh {
                        left[(s2 * nh + k2) * nh + k] += &(c * &again[s2 * nh + k2]);
                    }
                }
                for (coef, x) in h.sweedler(k, 2) {
                    right[(s * nh + x[0]) * nh + x[1]] += &(c * &coef);
                }
                counit[s] += &(c * h.epsilon(k));
            }
        }
        report.check(crate::report::expect_eq("(ρ⊗id)ρ = (id⊗Δ)ρ", &[r], left, right));
        report.check(crate::report::expect_eq("(id⊗ε)ρ = id", &[r], counit, vector::unit(field, d, r)));
    }
    report
}

/// The canonical map `x⊗_A y ↦ x·y₍₀₎ ⊗ y₍₁₎` on the balanced tensor product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalMap {
    pub balanced: QuotientSpace,
    /// (dim·dim H) × dim(balanced).
    pub matrix: Matrix,
    pub rank: usize,
    /// Bijective onto all of (A#H)⊗H.
    pub bijective: bool,
    /// Dimension of `span{x·(S(h₁)·1_A)⊗h₂}`, the codomain that replaces
    /// (A#H)⊗H for partial actions.
    pub partial_target_dim: usize,
    /// Injective with image equal to that partial codomain.
    pub bijective_onto_partial_target: bool,
}

/// `(A#H)⊗_A(A#H)` as the quotient of R⊗R (index `x·dim + y`) by
/// `x·a⊗y − x⊗a·y`.
pub fn balanced_tensor(cp: &CrossedProductAlgebra) -> Result<QuotientSpace> {
    let d = cp.dim();
    let field = cp.tpa.field();
    let mut relations = Vec::new();
    for i in 0..cp.tpa.dim_a() {
        let a = cp.embedding.column(i);
        let right_by_a: Vec<Vec<Scalar>> = (0..d).map(|x| cp.mul(&vector::unit(field, d, x), &a)).collect();
        let left_by_a: Vec<Vec<Scalar>> = (0..d).map(|y| cp.mul(&a, &vector::unit(field, d, y))).collect();
        for x in 0..d {
            for y in 0..d {
                let lhs = vector::kron(&right_by_a[x], &vector::unit(field, d, y));
                let rhs = vector::kron(&vector::unit(field, d, x), &left_by_a[y]);
                relations.push(vector::sub(&lhs, &rhs));
            }
        }
    }
    quotient(field, d * d, &relations)
}

pub fn canonical_map(cp: &CrossedProductAlgebra) -> Result<CanonicalMap> {
    let rho = comodule_coaction(cp)?;
    if !rho.coinvariants_are_a {
        return Err(Error::CoinvariantsMismatch(format!(
            "coinvariants have dimension {}, A has dimension {}",
            rho.coinvariants.dim(),
            cp.tpa.dim_a()
        )));
    }
    let t = &cp.tpa;
    let (nh, d) = (t.dim_h(), cp.dim());
    let field = t.field();
    let balanced = balanced_tensor(cp)?;
    let on_pairs = Matrix::from_operator(field, d * d, d * nh, |v| {
        let mut out = vector::zeros(field, d * nh);
        for (p, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (x, y) = (p / d, p % d);
            let ry = rho.matrix.column(y);
            for s in 0..d {
                for k in 0..nh {
                    let coef = &ry[s * nh + k];
                    if coef.is_zero() {
                        continue;
                    }
                    let prod = cp.algebra.mult().fibre(x, s);
                    for (r, pr) in prod.iter().enumerate() {
                        out[r * nh + k] += &(&(c * coef) * pr);
                    }
                }
            }
        }
        out
    });
    let matrix = on_pairs.mul(balanced.section());
    let rank = matrix.rank();
    let q = balanced.dim();
    let bijective = rank == q && rank == d * nh;

    let h = t.hopf();
    let mut target = Vec::new();
    for x in 0..d {
        for j in 0..nh {
            let mut v = vector::zeros(field, d * nh);
            for (c, idx) in h.sweedler(j, 2) {
                let s1 = t.act(&h.s(&h.basis(idx[0])), t.algebra().unit());
                let prod = cp.mul(&vector::unit(field, d, x), &cp.embed(&s1));
                vector::axpy(&mut v, &c, &vector::kron(&prod, &h.basis(idx[1])));
            }
            target.push(v);
        }
    }
    let target = span(field, d * nh, &target)?;
    let image_inside = (0..q).all(|j| target.contains(&matrix.column(j)));
    let bijective_onto_partial_target = rank == q && image_inside && rank == target.dim();
    Ok(CanonicalMap {
        balanced,
        matrix,
        rank,
        bijective,
        partial_target_dim: target.dim(),
        bijective_onto_partial_target,
    })
}

#[cfg(test)]
mod tests;
