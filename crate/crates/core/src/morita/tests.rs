use super::*;
use crate::fixtures::{c3_partial, cyclic_shift, degenerate_swap, scalar_twist_global};
use crate::globalization::globalize_group_partial;
use crate::linalg::vector::from_i64;
use crate::scalar::Field;

const Q: Field = Field::Rational;

fn c3_env() -> EnvelopingActionData {
    let theta = Matrix::from_columns(Q, 3, &[from_i64(Q, &[1, 0, 0]), from_i64(Q, &[0, 1, 0])]);
    EnvelopingActionData::new(c3_partial(Q), cyclic_shift(Q, 3), theta).unwrap()
}

#[test]
fn c3_context() {
    let env = c3_env();
    let ctx = build_morita_context(&env).unwrap();
    let (_, phi) = phi_embed(&env, &ctx.r, &ctx.s);
    assert!(phi.passed());
    assert_eq!(ctx.phi.rank(), 4);
    assert_eq!((ctx.m.dim(), ctx.s.dim()), (6, 9));
    let modules = verify_module_structures(&ctx);
    assert!(modules.passed(), "{}", modules.summary());
    let pairings = verify_morita_pairings(&ctx);
    assert!(pairings.report.passed(), "{}", pairings.report.summary());
    assert!(pairings.sigma_surjective);
    assert!(pairings.tau_surjective);
}

#[test]
fn generated_globalization_gives_the_same_dimensions() {
    let env = globalize_group_partial(&c3_partial(Q)).unwrap();
    let ctx = build_morita_context(&env).unwrap();
    assert_eq!((ctx.r.dim(), ctx.m.dim(), ctx.n.dim(), ctx.s.dim()), (4, 6, 6, 9));
}

#[test]
fn degenerate_context() {
    let theta = Matrix::from_columns(Q, 2, &[from_i64(Q, &[1, 0])]);
    let env = EnvelopingActionData::new(degenerate_swap(Q), cyclic_shift(Q, 2), theta).unwrap();
    let ctx = build_morita_context(&env).unwrap();
    assert_eq!((ctx.r.dim(), ctx.m.dim(), ctx.n.dim(), ctx.s.dim()), (1, 2, 2, 4));
    assert!(verify_module_structures(&ctx).passed());
    let p = verify_morita_pairings(&ctx);
    assert!(p.report.passed());
    // ℚ and M₂(ℚ) ≅ ℚ²#ℚC₂ are Morita equivalent; N⊗M → S is onto.
    assert_eq!(p.sigma_rank, 4);
    assert!(p.tau_surjective);
}

#[test]
fn identity_enveloping_is_trivial() {
    let g = scalar_twist_global(Q, Q.from_i64(3));
    let env = EnvelopingActionData::new(g.as_partial().clone(), g.clone(), Matrix::identity(Q, 1)).unwrap();
    let ctx = build_morita_context(&env).unwrap();
    assert_eq!(ctx.phi, Matrix::identity(Q, 2));
    assert!(verify_module_structures(&ctx).passed());
    let p = verify_morita_pairings(&ctx);
    assert!(p.report.passed() && p.sigma_surjective && p.tau_surjective);
}

#[test]
fn non_ideal_image_breaks_the_right_module() {
    let theta = Matrix::from_columns(Q, 3, &[from_i64(Q, &[1, 0, 0]), from_i64(Q, &[0, 1, 1])]);
    let env = EnvelopingActionData::new(c3_partial(Q), cyclic_shift(Q, 3), theta).unwrap();
    assert!(matches!(build_morita_context(&env), Err(Error::PreconditionFailed(_))));
    let ctx = build_morita_context_unchecked(&env).unwrap();
    let r = verify_module_structures(&ctx);
    let right = r.section("m_right_s").unwrap();
    assert!(!right.passed());
    assert_eq!(right.violations[0].indices.len(), 2);
}

#[test]
fn corrupted_theta_breaks_phi() {
    let theta = Matrix::from_columns(Q, 3, &[from_i64(Q, &[1, 0, 0]), from_i64(Q, &[1, 1, 0])]);
    let env = EnvelopingActionData::new(c3_partial(Q), cyclic_shift(Q, 3), theta).unwrap();
    let ctx = build_morita_context_unchecked(&env).unwrap();
    let (_, report) = phi_embed(&env, &ctx.r, &ctx.s);
    assert!(!report.passed());
}
