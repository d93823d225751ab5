//! The Morita context between A#_{α,ω}H and B#_u H attached to an
//! enveloping action.

use crate::crossed::{build_global_crossed, build_partial_crossed_unchecked, CrossedProductAlgebra, GlobalCrossedProduct};
use crate::error::{Error, Result};
use crate::globalization::{verify_enveloping, EnvelopingActionData};
use crate::linalg::{span, vector, Matrix, SubspaceBasis};
use crate::report::{expect_eq, sweep, CheckReport, Violation};
use crate::scalar::Scalar;

/// R = A#H, S = B#_u H, Φ: R → S (dim S × dim R), and the bimodules M, N
/// as subspaces of S (vectors in B⊗H coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoritaContextData {
    pub r: CrossedProductAlgebra,
    pub s: GlobalCrossedProduct,
    pub phi: Matrix,
    pub phi_image: SubspaceBasis,
    pub m: SubspaceBasis,
    pub n: SubspaceBasis,
}

/// `a⊗h ↦ θ(a)⊗h` on A⊗H coordinates.
fn theta_tensor_id(env: &EnvelopingActionData, v: &[Scalar]) -> Vec<Scalar> {
    let nh = env.tpa.dim_h();
    let nb = env.global.algebra().dim();
    let field = env.tpa.field();
    let mut out = vector::zeros(field, nb * nh);
    for (p, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, j) = (p / nh, p % nh);
        let img = env.theta.column(i);
        for (k, x) in img.iter().enumerate() {
            out[k * nh + j] += &(c * x);
        }
    }
    out
}

/// Φ on the computed basis of R, with multiplicativity and injectivity checks.
pub fn phi_embed(env: &EnvelopingActionData, r: &CrossedProductAlgebra, s: &GlobalCrossedProduct) -> (Matrix, CheckReport) {
    let field = env.tpa.field();
    let cols: Vec<Vec<Scalar>> = r.basis().vectors().iter().map(|v| theta_tensor_id(env, v)).collect();
    let phi = Matrix::from_columns(field, s.dim(), &cols);
    let d = r.dim();
    let mut report = sweep("phi", &[d, d], |idx| {
        let lhs = phi.mul_vec(r.algebra().mult().fibre(idx[0], idx[1]));
        let rhs = s.algebra().mul(&phi.column(idx[0]), &phi.column(idx[1]));
        expect_eq("Φ(xy) = Φ(x)Φ(y)", idx, lhs, rhs).into_iter().collect()
    });
    if phi.rank() != d {
        report.fail("Φ injective", &[phi.rank(), d]);
    }
    (phi, report)
}

/// `M = Φ(A⊗H) = θ(A)⊗H`.
pub fn build_m(env: &EnvelopingActionData) -> Result<SubspaceBasis> {
    let (na, nh) = (env.tpa.dim_a(), env.tpa.dim_h());
    let field = env.tpa.field();
    let gens: Vec<Vec<Scalar>> = (0..na * nh).map(|p| theta_tensor_id(env, &vector::unit(field, na * nh, p))).collect();
    span(field, env.global.algebra().dim() * nh, &gens)
}

/// `N = span{(h₁▷θ(a))⊗h₂}`.
pub fn build_n(env: &EnvelopingActionData) -> Result<SubspaceBasis> {
    let (na, nh) = (env.tpa.dim_a(), env.tpa.dim_h());
    let field = env.tpa.field();
    let hopf = env.tpa.hopf();
    let mut gens = Vec::with_capacity(na * nh);
    for i in 0..na {
        let ta = env.theta.column(i);
        for j in 0..nh {
            let mut v = vector::zeros(field, env.global.algebra().dim() * nh);
            for (c, x) in hopf.sweedler(j, 2) {
                let moved = env.global.act_basis(x[0], &ta);
                vector::axpy(&mut v, &c, &vector::kron(&moved, &hopf.basis(x[1])));
            }
            gens.push(v);
        }
    }
    span(field, env.global.algebra().dim() * nh, &gens)
}

/// Builds the context without checking the enveloping axioms, so that
/// broken data can be fed to the module and pairing verifiers.
pub fn build_morita_context_unchecked(env: &EnvelopingActionData) -> Result<MoritaContextData> {
    let r = build_partial_crossed_unchecked(&env.tpa)?;
    let s = build_global_crossed(&env.global)?;
    let (phi, _) = phi_embed(env, &r, &s);
    let phi_image = span(env.tpa.field(), s.dim(), &(0..r.dim()).map(|i| phi.column(i)).collect::<Vec<_>>())?;
    let m = build_m(env)?;
    let n = build_n(env)?;
    Ok(MoritaContextData { r, s, phi, phi_image, m, n })
}

pub fn build_morita_context(env: &EnvelopingActionData) -> Result<MoritaContextData> {
    let report = verify_enveloping(env);
    if !report.passed() {
        return Err(Error::PreconditionFailed(format!("not an enveloping action:\n{}", report.summary())));
    }
    build_morita_context_unchecked(env)
}

impl MoritaContextData {
    fn mul_s(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.s.algebra().mul(x, y)
    }

    fn phi_r(&self, i: usize) -> Vec<Scalar> {
        self.phi.column(i)
    }

    fn s_basis(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.s.algebra().field(), self.s.dim(), i)
    }
}

fn membership(identity: &str, idx: &[usize], space: &SubspaceBasis, v: Vec<Scalar>) -> Option<Violation> {
    (!space.contains(&v)).then(|| Violation::new(identity, idx, v, Vec::new()))
}

/// The four module structures, each as a closure sweep plus the unit law:
/// M·S ⊆ M, S·N ⊆ N, Φ(R)·M ⊆ M, N·Φ(R) ⊆ N.
pub fn verify_module_structures(ctx: &MoritaContextData) -> CheckReport {
    let (dm, dn, dr, ds) = (ctx.m.dim(), ctx.n.dim(), ctx.r.dim(), ctx.s.dim());
    let one_s = ctx.s.algebra().unit().to_vec();
    let one_r = ctx.phi.mul_vec(ctx.r.unit());
    let mut report = CheckReport::new("module_structures");

    let mut section = sweep("m_right_s", &[dm, ds], |idx| {
        let p = ctx.mul_s(&ctx.m.vectors()[idx[0]], &ctx.s_basis(idx[1]));
        membership("m·s ∈ M", idx, &ctx.m, p).into_iter().collect()
    });
    for (i, m) in ctx.m.vectors().iter().enumerate() {
        section.check(expect_eq("m·1 = m", &[i], ctx.mul_s(m, &one_s), m.clone()));
    }
    report.add_section(section);

    let mut section = sweep("n_left_s", &[ds, dn], |idx| {
        let p = ctx.mul_s(&ctx.s_basis(idx[0]), &ctx.n.vectors()[idx[1]]);
        membership("s·n ∈ N", idx, &ctx.n, p).into_iter().collect()
    });
    for (i, n) in ctx.n.vectors().iter().enumerate() {
        section.check(expect_eq("1·n = n", &[i], ctx.mul_s(&one_s, n), n.clone()));
    }
    report.add_section(section);

    let mut section = sweep("m_left_r", &[dr, dm], |idx| {
        let p = ctx.mul_s(&ctx.phi_r(idx[0]), &ctx.m.vectors()[idx[1]]);
        membership("Φ(r)·m ∈ M", idx, &ctx.m, p).into_iter().collect()
    });
    for (i, m) in ctx.m.vectors().iter().enumerate() {
        section.check(expect_eq("Φ(1)·m = m", &[i], ctx.mul_s(&one_r, m), m.clone()));
    }
    report.add_section(section);

    let mut section = sweep("n_right_r", &[dn, dr], |idx| {
        let p = ctx.mul_s(&ctx.n.vectors()[idx[0]], &ctx.phi_r(idx[1]));
        membership("n·Φ(r) ∈ N", idx, &ctx.n, p).into_iter().collect()
    });
    for (i, n) in ctx.n.vectors().iter().enumerate() {
        section.check(expect_eq("n·Φ(1) = n", &[i], ctx.mul_s(n, &one_r), n.clone()));
    }
    report.add_section(section);
    report
}

/// Pairing verdicts plus the strictness data, which is reported but does
/// not enter the verdict.
#[derive(Clone, Debug)]
pub struct MoritaPairings {
    pub report: CheckReport,
    pub sigma_rank: usize,
    pub tau_rank: usize,
    pub sigma_surjective: bool,
    pub tau_surjective: bool,
}

/// σ(n⊗m) = nm ∈ S and τ(m⊗n) = mn ∈ Φ(R): balancedness, the τ image,
/// and both mixed associativity laws on basis triples; ranks of the images.
pub fn verify_morita_pairings(ctx: &MoritaContextData) -> MoritaPairings {
    let (dm, dn, dr, ds) = (ctx.m.dim(), ctx.n.dim(), ctx.r.dim(), ctx.s.dim());
    let m = |i: usize| &ctx.m.vectors()[i];
    let n = |i: usize| &ctx.n.vectors()[i];
    let mut report = CheckReport::new("pairings");

    report.add_section(sweep("sigma_balanced", &[dn, dr, dm], |idx| {
        let r = ctx.phi_r(idx[1]);
        let lhs = ctx.mul_s(&ctx.mul_s(n(idx[0]), &r), m(idx[2]));
        let rhs = ctx.mul_s(n(idx[0]), &ctx.mul_s(&r, m(idx[2])));
        expect_eq("σ(n·r⊗m) = σ(n⊗r·m)", idx, lhs, rhs).into_iter().collect()
    }));
    report.add_section(sweep("tau_balanced", &[dm, ds, dn], |idx| {
        let s = ctx.s_basis(idx[1]);
        let lhs = ctx.mul_s(&ctx.mul_s(m(idx[0]), &s), n(idx[2]));
        let rhs = ctx.mul_s(m(idx[0]), &ctx.mul_s(&s, n(idx[2])));
        expect_eq("τ(m·s⊗n) = τ(m⊗s·n)", idx, lhs, rhs).into_iter().collect()
    }));
    report.add_section(sweep("tau_image", &[dm, dn], |idx| {
        let p = ctx.mul_s(m(idx[0]), n(idx[1]));
        membership("τ(m⊗n) ∈ Φ(R)", idx, &ctx.phi_image, p).into_iter().collect()
    }));
    report.add_section(sweep("mixed_sigma", &[dn, dm, dn], |idx| {
        let lhs = ctx.mul_s(&ctx.mul_s(n(idx[0]), m(idx[1])), n(idx[2]));
        let rhs = ctx.mul_s(n(idx[0]), &ctx.mul_s(m(idx[1]), n(idx[2])));
        expect_eq("σ(n⊗m)·n′ = n·τ(m⊗n′)", idx, lhs, rhs).into_iter().collect()
    }));
    report.add_section(sweep("mixed_tau", &[dm, dn, dm], |idx| {
        let lhs = ctx.mul_s(m(idx[0]), &ctx.mul_s(n(idx[1]), m(idx[2])));
        let rhs = ctx.mul_s(&ctx.mul_s(m(idx[0]), n(idx[1])), m(idx[2]));
        expect_eq("m·σ(n⊗m′) = τ(m⊗n)·m′", idx, lhs, rhs).into_iter().collect()
    }));

    let field = ctx.r.tpa().field();
    let mut sigma = Vec::with_capacity(dn * dm);
    for i in 0..dn {
        for j in 0..dm {
            sigma.push(ctx.mul_s(n(i), m(j)));
        }
    }
    let mut tau = Vec::with_capacity(dm * dn);
    for i in 0..dm {
        for j in 0..dn {
            tau.push(ctx.mul_s(m(i), n(j)));
        }
    }
    let sigma_rank = span(field, ds, &sigma).map(|s| s.dim()).unwrap_or(0);
    let tau_rank = span(field, ds, &tau).map(|s| s.dim()).unwrap_or(0);
    let sigma_surjective = sigma_rank == ds;
    let tau_surjective = tau_rank == dr;
    if !sigma_surjective {
        report.note(format!("σ is not surjective: image dimension {sigma_rank} < {ds}"));
    }
    if !tau_surjective {
        report.note(format!("τ is not surjective: image dimension {tau_rank} < {dr}"));
    }
    MoritaPairings { report, sigma_rank, tau_rank, sigma_surjective, tau_surjective }
}

#[cfg(test)]
mod tests;
