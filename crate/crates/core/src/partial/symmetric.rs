use super::TwistedPartialAction;
use crate::error::Result;
use crate::hopf::{centrality_report, convolution, is_central, LinMapHom};
use crate::linalg::{vector, Matrix};
use crate::report::{expect_eq, sweep, CheckReport};
use crate::scalar::Scalar;

/// Outcome of the symmetry check, with the convolution inverse of ω when
/// one exists in the ideal generated by `f₁∗f₂`.
#[derive(Clone, Debug)]
pub struct SymmetricReport {
    pub report: CheckReport,
    pub omega_inverse: Option<LinMapHom>,
}

impl SymmetricReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

fn pair_map(t: &TwistedPartialAction, f: impl Fn(usize, usize) -> Vec<Scalar>) -> LinMapHom {
    let n = t.dim_h();
    let images: Vec<Vec<Scalar>> = (0..n * n).map(|p| f(p / n, p % n)).collect();
    LinMapHom::from_images(t.field(), t.dim_a(), &images)
}

/// `f₁(h⊗k) = (h·1_A)ε(k)`.
pub fn f1(t: &TwistedPartialAction) -> LinMapHom {
    pair_map(t, |h, k| vector::scale(t.hopf().epsilon(k), &t.e(h)))
}

/// `f₂(h⊗k) = hk·1_A`.
pub fn f2(t: &TwistedPartialAction) -> LinMapHom {
    pair_map(t, |h, k| t.act(t.hopf().mul_basis(h, k), t.algebra().unit()))
}

/// ω as a map on H⊗H.
pub fn omega_map(t: &TwistedPartialAction) -> LinMapHom {
    pair_map(t, |h, k| t.omega_basis(h, k).to_vec())
}

/// Solves `ω∗ω′ = ω′∗ω = F`, `F∗ω′ = ω′∗F = ω′` with `F = f₁∗f₂`.
fn solve_inverse(t: &TwistedPartialAction, f: &LinMapHom) -> Result<Option<LinMapHom>> {
    let field = t.field();
    let cs = t.hopf().coalgebra().tensor_square();
    let a = t.algebra();
    let (m, d) = (t.dim_a(), cs.dim());
    let w = omega_map(t);
    // Shapes are fixed by construction, so convolution cannot fail here.
    let conv = |x: &LinMapHom, y: &LinMapHom| convolution(x, y, &cs, a).expect("matching shapes").to_vec();
    let system = Matrix::from_operator(field, m * d, 4 * m * d, |x| {
        let x = LinMapHom::from_vec(field, m, d, x);
        let xv = x.to_vec();
        let mut out = conv(&w, &x);
        out.extend(conv(&x, &w));
        out.extend(vector::sub(&conv(f, &x), &xv));
        out.extend(vector::sub(&conv(&x, f), &xv));
        out
    });
    let target = f.to_vec();
    let mut rhs = target.clone();
    rhs.extend(target);
    rhs.extend(vector::zeros(field, 2 * m * d));
    Ok(system.solve(&rhs)?.map(|x| LinMapHom::from_vec(field, m, d, &x)))
}

/// Symmetry: centrality of f₁ and f₂ in Hom(H⊗H, A), the composition law
/// `h·(k·1_A) = (h₁·1_A)(h₂k·1_A)`, and a convolution inverse ω′ of ω in
/// the ideal generated by `f₁∗f₂`.
pub fn verify_symmetric(t: &TwistedPartialAction) -> Result<SymmetricReport> {
    let n = t.dim_h();
    let coalg = t.hopf().coalgebra();
    let (m1, m2) = (f1(t), f2(t));
    let mut report = CheckReport::new("symmetric");
    report.add_section(centrality_report("f1_central", &m1, coalg, t.algebra())?);
    report.add_section(centrality_report("f2_central", &m2, coalg, t.algebra())?);
    report.add_section(sweep("composition", &[n, n], |idx| {
        let (h, k) = (idx[0], idx[1]);
        let lhs = t.act_basis(h, &t.e(k));
        let mut rhs = t.algebra().zero();
        for (c, x) in t.hopf().sweedler(h, 2) {
            let moved = t.act(t.hopf().mul_basis(x[1], k), t.algebra().unit());
            vector::axpy(&mut rhs, &c, &t.mul_a(&t.e(x[0]), &moved));
        }
        expect_eq("h·(k·1_A) = (h₁·1_A)(h₂k·1_A)", idx, lhs, rhs).into_iter().collect()
    }));
    let f = convolution(&m1, &m2, coalg, t.algebra())?;
    let omega_inverse = solve_inverse(t, &f)?;
    let mut inv = CheckReport::new("omega_inverse");
    if omega_inverse.is_none() {
        inv.fail("ω∗ω′ = ω′∗ω = f₁∗f₂ with ω′ in ⟨f₁∗f₂⟩", &[]);
    }
    report.add_section(inv);
    Ok(SymmetricReport { report, omega_inverse })
}

/// `e(h) = h·1_A` and whether it is central in Hom(H, A).
pub fn e_map(t: &TwistedPartialAction) -> Result<(LinMapHom, bool)> {
    let images: Vec<Vec<Scalar>> = (0..t.dim_h()).map(|i| t.e(i)).collect();
    let e = LinMapHom::from_images(t.field(), t.dim_a(), &images);
    let central = is_central(&e, t.hopf().coalgebra(), t.algebra())?;
    Ok((e, central))
}

#[cfg(test)]
pub(super) fn convolution_commutes(t: &TwistedPartialAction) -> bool {
    let (a, b) = (f1(t), f2(t));
    let c = t.hopf().coalgebra();
    convolution(&a, &b, c, t.algebra()).unwrap() == convolution(&b, &a, c, t.algebra()).unwrap()
}
