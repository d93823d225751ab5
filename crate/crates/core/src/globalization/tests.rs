use super::*;
use crate::fixtures::{c3_partial, cyclic, cyclic_shift, degenerate_swap, scalar_twist, trivial_action};
use crate::scalar::Field;

const Q: Field = Field::Rational;

fn inclusion(rows: usize, cols: &[usize]) -> Matrix {
    let columns: Vec<Vec<Scalar>> = cols.iter().map(|&r| vector::unit(Q, rows, r)).collect();
    Matrix::from_columns(Q, rows, &columns)
}

fn failing(r: &CheckReport) -> Vec<String> {
    r.sections.iter().filter(|s| !s.passed()).map(|s| s.name.clone()).collect()
}

#[test]
fn shift_envelopes_the_c3_fixture() {
    let env = EnvelopingActionData::new(c3_partial(Q), cyclic_shift(Q, 3), inclusion(3, &[0, 1])).unwrap();
    let r = verify_enveloping(&env);
    assert!(r.passed(), "{}", r.summary());
    // ω(g,g) = 0 while u(g,g) = 1, so the bare compatibility fails.
    assert!(!r.notes.is_empty());
}

#[test]
fn swap_envelopes_the_degenerate_fixture() {
    let env = EnvelopingActionData::new(degenerate_swap(Q), cyclic_shift(Q, 2), inclusion(2, &[0])).unwrap();
    assert!(verify_enveloping(&env).passed());
}

#[test]
fn a_fixed_coordinate_breaks_admissibility() {
    let h = cyclic(Q, 2);
    let b = AlgebraData::diagonal(Q, 3);
    let perm = [[0usize, 1, 2], [1, 0, 2]];
    let action = Tensor3::from_fn(Q, 2, 3, 3, |g, k| vector::unit(Q, 3, perm[g][k]));
    let global = GlobalTwistedAction::untwisted(h, b, action).unwrap();
    let env = EnvelopingActionData::new(degenerate_swap(Q), global, inclusion(3, &[0])).unwrap();
    let r = verify_enveloping(&env);
    assert_eq!(failing(&r), vec!["e_admissible".to_string()]);
    assert_eq!(r.section("e_admissible").unwrap().violations[0].indices, vec![2, 3]);
}

#[test]
fn globalizing_c3() {
    let env = globalize_group_partial(&c3_partial(Q)).unwrap();
    let b = env.global.algebra();
    assert_eq!(b.dim(), 3);
    assert!(b.is_commutative());
    // θ(1_A) covers two of the three primitive idempotents.
    let one = env.theta_unit();
    let moved: Vec<Vec<Scalar>> = (0..3).map(|g| env.global.act_basis(g, &one)).collect();
    let sum = moved.iter().fold(b.zero(), |acc, v| vector::add(&acc, v));
    assert_eq!(sum, vector::scale(&Q.from_i64(2), b.unit()));
    assert!(round_trip(&env).unwrap().passed());
}

#[test]
fn globalizing_c3_matches_the_shift_up_to_basis() {
    let env = globalize_group_partial(&c3_partial(Q)).unwrap();
    let b = env.global.algebra();
    let one = env.theta_unit();
    let t1: Vec<Scalar> = env.global.act_basis(1, &one);
    let t2: Vec<Scalar> = env.global.act_basis(2, &one);
    // With θ1 = (1,1,0) in k³, pairwise products of its translates are the
    // primitive idempotents, which the shift permutes.
    let p0 = b.mul(&one, &t2);
    let p1 = b.mul(&one, &t1);
    let p2 = b.mul(&t1, &t2);
    let iso = Matrix::from_columns(Q, 3, &[p0.clone(), p1.clone(), p2.clone()]);
    assert_eq!(iso.rank(), 3);
    let shift = cyclic_shift(Q, 3);
    for g in 0..3 {
        for k in 0..3 {
            let lhs = env.global.act_basis(g, &iso.column(k));
            let rhs = iso.mul_vec(&shift.act_basis(g, &vector::unit(Q, 3, k)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn globalizing_a_global_action_is_trivial() {
    let t = cyclic_shift(Q, 3).as_partial().clone();
    let env = globalize_group_partial(&t).unwrap();
    assert_eq!(env.global.algebra().dim(), 3);
    assert_eq!(env.theta.rank(), 3);
    assert!(round_trip(&env).unwrap().passed());
}

#[test]
fn globalizing_the_degenerate_fixture() {
    let env = globalize_group_partial(&degenerate_swap(Q)).unwrap();
    assert_eq!(env.global.algebra().dim(), 2);
    assert_eq!(env.theta_unit().len(), 2);
    let one = env.theta_unit();
    let swapped = env.global.act_basis(1, &one);
    assert_eq!(vector::add(&one, &swapped), env.global.algebra().unit().to_vec());
    assert!(round_trip(&env).unwrap().passed());
}

#[test]
fn globalization_preconditions() {
    assert!(matches!(globalize_group_partial(&scalar_twist(Q, Q.from_i64(2))), Err(Error::PreconditionFailed(_))));
    let dual = crate::hopf::function_algebra(Q, &crate::hopf::groups::cyclic_group(2).0).unwrap();
    let t = trivial_action(dual, AlgebraData::diagonal(Q, 1));
    assert!(matches!(globalize_group_partial(&t), Err(Error::NonGroupHopf(_))));
}

#[test]
fn every_single_corruption_is_detected() {
    let env = globalize_group_partial(&c3_partial(Q)).unwrap();
    let (n1, n2, n3) = env.global.twist().dims();
    for i in 0..n1 {
        for j in 0..n2 {
            for k in 0..n3 {
                let mut bad = env.clone();
                let x = bad.global.twist().get(i, j, k) + &Q.one();
                bad.global.twist_mut().set(i, j, k, x);
                assert!(!verify_enveloping(&bad).passed(), "u entry ({i},{j},{k})");
            }
        }
    }
    for r in 0..env.theta.rows() {
        for c in 0..env.theta.cols() {
            let mut bad = env.clone();
            let x = bad.theta.get(r, c) + &Q.one();
            bad.theta.set(r, c, x);
            assert!(!verify_enveloping(&bad).passed(), "θ entry ({r},{c})");
        }
    }
}
