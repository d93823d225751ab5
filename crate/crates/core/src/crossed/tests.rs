use super::*;
use crate::fixtures::{c3_partial, cyclic, cyclic_shift, degenerate_swap, scalar_twist, scalar_twist_global, trivial_action};
use crate::linalg::vector::from_i64;
use crate::partial::induce_partial;
use crate::scalar::Field;

const Q: Field = Field::Rational;

#[test]
fn c3_crossed_product_has_the_expected_basis() {
    let cp = build_partial_crossed(&c3_partial(Q)).unwrap();
    assert_eq!(cp.dim(), 4);
    // Ambient index a_i⊗h_j ↦ 3i + j: (1,0)#1, (1,0)#g², (0,1)#1, (0,1)#g.
    let expected: Vec<Vec<Scalar>> = [0usize, 2, 3, 4].iter().map(|&p| vector::unit(Q, 6, p)).collect();
    assert_eq!(cp.basis(), &span(Q, 6, &expected).unwrap());
    assert!(verify_assoc_unital(&cp).passed());
}

#[test]
fn c3_products() {
    let cp = build_partial_crossed(&c3_partial(Q)).unwrap();
    let (e0, e1) = (from_i64(Q, &[1, 0]), from_i64(Q, &[0, 1]));
    let h = |k: usize| vector::unit(Q, 3, k);
    let x = cp.element(&e1, &h(1)).unwrap();
    let y = cp.element(&e0, &h(2)).unwrap();
    assert_eq!(multiply(&cp, &x, &y).unwrap(), cp.element(&e1, &h(0)).unwrap());
    assert!(vector::is_zero(&multiply(&cp, &x, &x).unwrap()));
    assert_eq!(multiply(&cp, cp.unit(), &x).unwrap(), x);
    assert!(multiply(&cp, &x, &[Q.one()]).is_err());
}

#[test]
fn scalar_twist_squares_to_lambda() {
    let lambda = Q.from_i64(5);
    let cp = build_partial_crossed(&scalar_twist(Q, lambda.clone())).unwrap();
    assert_eq!(cp.dim(), 2);
    let g = cp.element(&[Q.one()], &vector::unit(Q, 2, 1)).unwrap();
    assert_eq!(cp.mul(&g, &g), vector::scale(&lambda, cp.unit()));
    assert!(verify_assoc_unital(&cp).passed());
}

#[test]
fn degenerate_crossed_product_is_a() {
    let cp = build_partial_crossed(&degenerate_swap(Q)).unwrap();
    assert_eq!(cp.dim(), 1);
    assert_eq!(cp.embedding(), &Matrix::identity(Q, 1));
}

#[test]
fn broken_cocycle_breaks_associativity() {
    let h = cyclic(Q, 3);
    let t = trivial_action(h, AlgebraData::diagonal(Q, 1));
    let mut bad = t.clone();
    bad.cocycle_mut().set_fibre(1, 2, vec![Q.from_i64(2)]);
    assert!(matches!(build_partial_crossed(&bad), Err(Error::PreconditionFailed(_))));
    let cp = build_partial_crossed_unchecked(&bad).unwrap();
    let r = verify_assoc_unital(&cp);
    let assoc = r.section("associativity").unwrap();
    assert!(!assoc.passed());
    // (g·g)·g = g²·g picks up ω(g²,g) = 1, g·(g·g) picks up ω(g,g²) = 2.
    assert!(assoc.violations.iter().any(|v| v.indices == vec![1, 1, 1]));
}

#[test]
fn global_crossed_products() {
    let shift = build_global_crossed(&cyclic_shift(Q, 3)).unwrap();
    assert_eq!(shift.dim(), 9);
    assert!(verify_assoc_unital(shift.as_crossed()).passed());

    let lambda = Q.from_i64(-3);
    let g = build_global_crossed(&scalar_twist_global(Q, lambda.clone())).unwrap();
    let x = vector::unit(Q, 2, 1);
    assert_eq!(g.algebra().mul(&x, &x), vector::scale(&lambda, g.algebra().unit()));

    // Trivial action and twist give the tensor product algebra.
    let h = cyclic(Q, 2);
    let b = AlgebraData::upper_triangular(Q);
    let t = trivial_action(h.clone(), b.clone());
    let plain = GlobalTwistedAction::new(h.clone(), b.clone(), t.action().clone(), t.cocycle().clone()).unwrap();
    let cp = build_global_crossed(&plain).unwrap();
    for p in 0..6 {
        for q in 0..6 {
            let expected = vector::kron(b.mult().fibre(p / 2, q / 2), h.mul_basis(p % 2, q % 2));
            assert_eq!(cp.algebra().mult().fibre(p, q), expected.as_slice());
        }
    }

    let mut bad = cyclic_shift(Q, 3);
    bad.twist_mut().set_fibre(1, 1, from_i64(Q, &[0, 1, 0]));
    assert!(matches!(build_global_crossed(&bad), Err(Error::PreconditionFailed(_))));
}

#[test]
fn global_and_induced_along_the_unit_agree() {
    let g = cyclic_shift(Q, 3);
    let full = build_global_crossed(&g).unwrap();
    let (t, _) = induce_partial(&g, &from_i64(Q, &[1, 1, 1])).unwrap();
    let cp = build_partial_crossed(&t).unwrap();
    assert_eq!(cp.dim(), full.dim());
    assert_eq!(cp.algebra().mult(), full.algebra().mult());
}

#[test]
fn coinvariants() {
    for (t, dim) in [(scalar_twist(Q, Q.from_i64(2)), 1), (c3_partial(Q), 2), (degenerate_swap(Q), 1)] {
        let cp = build_partial_crossed(&t).unwrap();
        let rho = comodule_coaction(&cp).unwrap();
        assert!(rho.coinvariants_are_a);
        assert_eq!(rho.coinvariants.dim(), dim);
        assert!(verify_coaction(&cp, &rho).passed());
    }
    let cp = build_global_crossed(&cyclic_shift(Q, 3)).unwrap();
    let rho = comodule_coaction(cp.as_crossed()).unwrap();
    assert!(verify_coaction(cp.as_crossed(), &rho).passed());
    assert_eq!(rho.coinvariants.dim(), 3);
}

#[test]
fn canonical_maps() {
    let cp = build_partial_crossed(&scalar_twist(Q, Q.one())).unwrap();
    let can = canonical_map(&cp).unwrap();
    assert_eq!(can.balanced.dim(), 4);
    assert_eq!((can.matrix.rows(), can.matrix.cols()), (4, 4));
    assert!(can.bijective);

    let cp = build_partial_crossed(&c3_partial(Q)).unwrap();
    let can = canonical_map(&cp).unwrap();
    assert_eq!(can.balanced.dim(), 8);
    assert!(!can.bijective);
    assert_eq!(can.partial_target_dim, 8);
    assert!(can.bijective_onto_partial_target);

    let cp = build_partial_crossed(&degenerate_swap(Q)).unwrap();
    let can = canonical_map(&cp).unwrap();
    assert_eq!(can.balanced.dim(), 1);
    assert_eq!(can.matrix.rows(), 2);
    assert!(!can.bijective);
}

mod properties {
    use super::*;
    use crate::fixtures::coboundary_twisted_regular;
    use crate::hopf::groups::small_groups;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn induced_crossed_products_close_and_associate(
            group in 0usize..5,
            values in prop::collection::vec(prop_oneof![1i64..4, -3i64..0], 9),
            mask in 1u32..16,
        ) {
            let (_, grp) = &small_groups()[group];
            let g = coboundary_twisted_regular(Q, grp, &values);
            let n = g.algebra().dim();
            let bits: Vec<i64> = (0..n).map(|x| ((mask >> x) & 1) as i64).collect();
            prop_assume!(bits.contains(&1));
            let full = build_global_crossed(&g).unwrap();
            prop_assert_eq!(full.dim(), n * n);
            let (t, _) = induce_partial(&g, &from_i64(Q, &bits)).unwrap();
            let cp = build_partial_crossed(&t).unwrap();
            prop_assert!(cp.dim() <= t.dim_a() * t.dim_h());
            prop_assert!(verify_assoc_unital(&cp).passed());
            let rho = comodule_coaction(&cp).unwrap();
            prop_assert!(verify_coaction(&cp, &rho).passed());
        }
    }
}
