use super::*;
use crate::fixtures::{
    c3_partial, coboundary_twisted_regular, cyclic_shift, degenerate_swap, scalar_twist, scalar_twist_global,
    trivial_action, trivial_hopf_triangular, triangular_corner,
};
use crate::hopf::groups::{cyclic_group, direct_product};
use crate::hopf::unit_counit;
use crate::linalg::vector::from_i64;
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn q(n: i64, d: i64) -> Scalar {
    Q.ratio(n, d).unwrap()
}

fn section<'a>(r: &'a CheckReport, name: &str) -> &'a CheckReport {
    r.section(name).unwrap_or_else(|| panic!("no section {name}"))
}

#[test]
fn partial_module_algebra_examples() {
    let t = trivial_hopf_triangular(Q);
    assert!(verify_partial_module_algebra(t.hopf(), t.algebra(), t.action()).unwrap().passed());
    let c3 = c3_partial(Q);
    assert!(verify_partial_module_algebra(c3.hopf(), c3.algebra(), c3.action()).unwrap().passed());
    let global = trivial_action(crate::fixtures::cyclic(Q, 3), crate::hopf::AlgebraData::upper_triangular(Q));
    assert!(verify_partial_module_algebra(global.hopf(), global.algebra(), global.action()).unwrap().passed());
}

#[test]
fn reversed_composition_law_is_not_enough() {
    let t = triangular_corner(Q);
    // Oracle for the reversed law h·(g·a) = (h₂g·a)(h₁·1_A) on group-likes.
    for h in 0..2 {
        for g in 0..2 {
            for j in 0..3 {
                let a = t.algebra().basis(j);
                let lhs = t.act_basis(h, &t.act_basis(g, &a));
                let rhs = t.mul_a(&t.act(t.hopf().mul_basis(h, g), &a), &t.e(h));
                assert_eq!(lhs, rhs);
            }
        }
    }
    let r = verify_partial_module_algebra(t.hopf(), t.algebra(), t.action()).unwrap();
    let comp = section(&r, "partial_composition");
    assert!(!comp.passed());
    // g·(g·E12) = 0 but (g·1_A)(g²·E12) = E11·E12 = E12.
    assert_eq!(comp.violations[0].indices, vec![1, 1, 1]);
    assert!(section(&r, "multiplicative").passed());
}

#[test]
fn twisted_partial_examples() {
    assert!(verify_twisted_partial(cyclic_shift(Q, 3).as_partial()).passed());
    let c3 = c3_partial(Q);
    assert!(verify_twisted_partial(&c3).passed());
    assert_eq!(c3.omega_basis(1, 1), from_i64(Q, &[0, 0]).as_slice());
    assert_eq!(c3.omega_basis(1, 2), from_i64(Q, &[0, 1]).as_slice());

    let ones = Tensor3::from_fn(Q, 3, 3, 2, |_, _| from_i64(Q, &[1, 1]));
    let bad = c3.with_structure(c3.action().clone(), ones).unwrap();
    let r = verify_twisted_partial(&bad);
    assert!(!section(&r, "cocycle_unit").passed());
    assert!(section(&r, "multiplicative").passed());
    // ω(g,g) = 1_A while ω(g,g)(g²·1_A) = (1,0).
    assert!(section(&r, "cocycle_unit").violations.iter().any(|v| v.indices == vec![1, 1]));
}

#[test]
fn cocycle_support_examples() {
    assert!(verify_lemma31(&c3_partial(Q)).passed());
    assert!(verify_lemma31(&trivial_hopf_triangular(Q)).passed());
    let mut bad = c3_partial(Q);
    bad.cocycle_mut().set_fibre(1, 1, from_i64(Q, &[1, 0]));
    let r = verify_lemma31(&bad);
    assert!(!r.passed());
    assert!(r.violations.iter().all(|v| v.indices == vec![1, 1]));
}

#[test]
fn crossed_conditions_examples() {
    for lambda in [q(2, 1), q(-3, 1), q(1, 2)] {
        let t = scalar_twist(Q, lambda);
        assert!(verify_twisted_partial(&t).passed());
        assert!(verify_crossed_conditions(&t).passed());
    }
    assert!(verify_crossed_conditions(&c3_partial(Q)).passed());
    let mut bad = c3_partial(Q);
    bad.cocycle_mut().set_fibre(0, 1, from_i64(Q, &[1, 1]));
    let r = verify_crossed_conditions(&bad);
    let norm = section(&r, "normalization");
    assert!(!norm.passed());
    assert_eq!(norm.violations[0].indices, vec![1]);
}

#[test]
fn trivial_cocycle_detection() {
    assert!(is_trivial_cocycle(&c3_partial(Q)));
    assert!(!is_trivial_cocycle(&scalar_twist(Q, q(2, 1))));
    assert!(is_trivial_cocycle(cyclic_shift(Q, 3).as_partial()));
}

#[test]
fn global_examples() {
    assert!(verify_global(&cyclic_shift(Q, 3)).passed());
    assert!(verify_global(&scalar_twist_global(Q, q(5, 1))).passed());
    let mut bad = cyclic_shift(Q, 3);
    bad.twist_mut().set_fibre(1, 1, from_i64(Q, &[0, 1, 0]));
    let r = verify_global(&bad);
    assert!(!section(&r, "cocycle").passed());
    assert!(section(&r, "twist_normalized").passed());
}

#[test]
fn induced_from_shift_is_the_c3_fixture() {
    let (t, idem) = induce_partial(&cyclic_shift(Q, 3), &from_i64(Q, &[1, 1, 0])).unwrap();
    assert_eq!(t, c3_partial(Q));
    assert_eq!(idem.ideal().dim(), 2);
    assert_eq!(idem.to_ambient(&from_i64(Q, &[2, 3])), from_i64(Q, &[2, 3, 0]));
}

#[test]
fn induced_from_swap_is_degenerate() {
    let t = degenerate_swap(Q);
    assert_eq!(t.dim_a(), 1);
    assert_eq!(t.act_basis(1, &[Q.one()]), vec![Q.zero()]);
    assert_eq!(t.omega_basis(1, 1), &[Q.zero()]);
    assert_eq!(t.omega_basis(0, 0), &[Q.one()]);
    assert!(verify_crossed_conditions(&t).passed());
}

#[test]
fn inducing_along_the_unit_returns_the_global_action() {
    let g = scalar_twist_global(Q, q(7, 1));
    let (t, _) = induce_partial(&g, &[Q.one()]).unwrap();
    assert_eq!(&t, g.as_partial());
    let g = cyclic_shift(Q, 3);
    let (t, _) = induce_partial(&g, &from_i64(Q, &[1, 1, 1])).unwrap();
    assert_eq!(&t, g.as_partial());
}

#[test]
fn induce_rejects_bad_idempotents() {
    let g = cyclic_shift(Q, 3);
    assert_eq!(induce_partial(&g, &from_i64(Q, &[2, 0, 0])).unwrap_err(), Error::NotIdempotent);
    let t = trivial_hopf_triangular(Q);
    let g = GlobalTwistedAction::new(t.hopf().clone(), t.algebra().clone(), t.action().clone(), t.cocycle().clone()).unwrap();
    assert!(matches!(induce_partial(&g, &from_i64(Q, &[1, 0, 0])), Err(Error::NotCentral(_))));
}

#[test]
fn morphism_between_equal_actions() {
    let (t, _) = induce_partial(&cyclic_shift(Q, 3), &from_i64(Q, &[1, 1, 0])).unwrap();
    let id = Matrix::identity(Q, 2);
    assert!(verify_morphism(&t, &c3_partial(Q), &id, true).unwrap().passed());
    let swap = Matrix::from_rows(Q, 2, &[from_i64(Q, &[0, 1]), from_i64(Q, &[1, 0])]).unwrap();
    let r = verify_morphism(&t, &c3_partial(Q), &swap, true).unwrap();
    assert!(!section(&r, "intertwines").passed());
    assert!(section(&r, "multiplicative").passed());
}

#[test]
fn symmetric_scalar_twist() {
    let t = scalar_twist(Q, q(2, 1));
    let s = verify_symmetric(&t).unwrap();
    assert!(s.passed(), "{}", s.report.summary());
    let inv = s.omega_inverse.unwrap();
    assert_eq!(inv.image(3), vec![q(1, 2)]);
    assert_eq!(inv.image(0), vec![q(1, 1)]);
    assert!(symmetric::convolution_commutes(&t));
}

#[test]
fn symmetric_c3_and_corruption() {
    let t = c3_partial(Q);
    let s = verify_symmetric(&t).unwrap();
    assert!(s.passed(), "{}", s.report.summary());
    assert!(symmetric::convolution_commutes(&t));
    // The inverse must satisfy the defining equations when re-checked.
    let inv = s.omega_inverse.unwrap();
    let coalg = t.hopf().coalgebra();
    let f = crate::hopf::convolution(&symmetric::f1(&t), &symmetric::f2(&t), coalg, t.algebra()).unwrap();
    let w = symmetric::omega_map(&t);
    assert_eq!(crate::hopf::convolution(&w, &inv, coalg, t.algebra()).unwrap(), f);

    let mut bad = t.clone();
    bad.action_mut().set_fibre(1, 1, from_i64(Q, &[1, 0]));
    let bad = TwistedPartialAction::with_trivial_cocycle(bad.hopf().clone(), bad.algebra().clone(), bad.action().clone()).unwrap();
    let s = verify_symmetric(&bad).unwrap();
    let comp = section(&s.report, "composition");
    assert!(!comp.passed());
    assert_eq!(comp.violations[0].indices, vec![1, 1]);
}

#[test]
fn e_map_examples() {
    let t = trivial_hopf_triangular(Q);
    let (e, _) = e_map(&t).unwrap();
    assert_eq!(e, unit_counit(t.hopf().coalgebra(), t.algebra()));
    let (e, central) = e_map(&c3_partial(Q)).unwrap();
    assert_eq!(e.image(1), from_i64(Q, &[0, 1]));
    assert_eq!(e.image(2), from_i64(Q, &[1, 0]));
    assert!(central);
    let (_, central) = e_map(&triangular_corner(Q)).unwrap();
    assert!(!central);
}

fn twisted_regular(group: usize, seed: &[i64]) -> GlobalTwistedAction {
    let groups = [cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4), direct_product(&cyclic_group(2), &cyclic_group(2))];
    coboundary_twisted_regular(Q, &groups[group % groups.len()], seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn induced_actions_satisfy_every_axiom(
        group in 0usize..5,
        seed in prop::collection::vec(prop_oneof![1i64..5, -4i64..0], 16),
        mask in 1u32..16,
        twisted in any::<bool>(),
    ) {
        let g = if twisted { twisted_regular(group, &seed) } else { twisted_regular(group, &[1]) };
        prop_assert!(verify_global(&g).passed());
        let n = g.algebra().dim();
        let bits: Vec<i64> = (0..n).map(|x| ((mask >> x) & 1) as i64).collect();
        prop_assume!(bits.contains(&1));
        let (t, _) = induce_partial(&g, &from_i64(Q, &bits)).unwrap();
        prop_assert!(verify_twisted_partial(&t).passed());
        prop_assert!(verify_lemma31(&t).passed());
        prop_assert!(verify_crossed_conditions(&t).passed());
        if is_trivial_cocycle(&t) {
            prop_assert!(verify_partial_module_algebra(t.hopf(), t.algebra(), t.action()).unwrap().passed());
        }
        let s = verify_symmetric(&t).unwrap();
        if s.passed() {
            prop_assert!(symmetric::convolution_commutes(&t));
        }
    }
}
