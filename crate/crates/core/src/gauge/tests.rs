use super::*;
use crate::fixtures::{c3_partial, cyclic_shift, scalar_twist};
use crate::partial::{verify_lemma31, verify_twisted_partial};
use crate::scalar::Field;
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn scalar_gauge(t: &TwistedPartialAction, mu: i64) -> GaugePair {
    let v = LinMapHom::from_images(Q, 1, &[vec![Q.one()], vec![Q.from_i64(mu)]]);
    weak_conv_inverse(&v, t).unwrap().unwrap()
}

#[test]
fn inverses() {
    let t = c3_partial(Q);
    let (e, _) = e_map(&t).unwrap();
    let pair = weak_conv_inverse(&e, &t).unwrap().unwrap();
    assert_eq!(pair.v_inv, e);
    assert!(!pair.fully_invertible);

    let f = scalar_twist(Q, Q.from_i64(2));
    let pair = scalar_gauge(&f, 4);
    assert_eq!(pair.v_inv.image(1), vec![Q.ratio(1, 4).unwrap()]);
    assert!(pair.fully_invertible);

    let zero = LinMapHom::from_images(Q, 1, &[vec![Q.one()], vec![Q.zero()]]);
    assert!(weak_conv_inverse(&zero, &f).unwrap().is_none());
    let bad = LinMapHom::from_images(Q, 1, &[vec![Q.from_i64(2)], vec![Q.one()]]);
    assert!(matches!(weak_conv_inverse(&bad, &f), Err(Error::PreconditionFailed(_))));
}

#[test]
fn scalar_gauges() {
    let f = scalar_twist(Q, Q.from_i64(2));
    let id = GaugePair::identity(&f);
    assert_eq!(gauge_cocycle(&f, &id), *f.cocycle());
    assert_eq!(gauge_action(&f, &id), *f.action());
    let g = scalar_gauge(&f, 3);
    assert_eq!(gauge_cocycle(&f, &g).get(1, 1, 0), &Q.from_i64(18));
    assert_eq!(gauge_action(&f, &g), *f.action());
}

#[test]
fn c3_gauged_by_e_is_unchanged() {
    let t = c3_partial(Q);
    let (e, _) = e_map(&t).unwrap();
    let pair = weak_conv_inverse(&e, &t).unwrap().unwrap();
    let g = gauged(&t, &pair);
    assert!(verify_twisted_partial(&g).passed());
    assert_eq!(g, t);
    let (iso, report) = theorem54_iso(&t, &pair).unwrap();
    assert!(report.passed(), "{}", report.summary());
    assert_eq!(iso, Matrix::identity(Q, 4));
}

#[test]
fn gauge_isomorphism_on_scalar_twists() {
    let f = scalar_twist(Q, Q.from_i64(2));
    let (iso, report) = theorem54_iso(&f, &GaugePair::identity(&f)).unwrap();
    assert!(report.passed());
    assert_eq!(iso, Matrix::identity(Q, 2));
    let (iso, report) = theorem54_iso(&f, &scalar_gauge(&f, 3)).unwrap();
    assert!(report.passed(), "{}", report.summary());
    // 1#g ↦ (1/3)#g, and (1/3 x)² = 18/9 = 2.
    assert_eq!(iso.get(1, 1), &Q.ratio(1, 3).unwrap());
}

#[test]
fn composite_gauges() {
    let f = scalar_twist(Q, Q.from_i64(2));
    let (v, u) = (scalar_gauge(&f, 2), scalar_gauge(&f, 3));
    assert!(verify_lemma53(&f, &v, &u).unwrap().passed());
    let vu = compose(&f, &v, &u).unwrap();
    assert_eq!(gauge_cocycle(&f, &vu).get(1, 1, 0), &Q.from_i64(72));
    let id = GaugePair::identity(&f);
    assert!(verify_lemma53(&f, &v, &id).unwrap().passed());
}

#[test]
fn composition_of_isomorphisms() {
    let f = scalar_twist(Q, Q.from_i64(5));
    let (v, u) = (scalar_gauge(&f, 2), scalar_gauge(&f, -7));
    let (psi_u, _) = theorem54_iso(&f, &u).unwrap();
    let (psi_v, _) = theorem54_iso(&gauged(&f, &u), &v).unwrap();
    let (psi_vu, _) = theorem54_iso(&f, &compose(&f, &v, &u).unwrap()).unwrap();
    assert_eq!(psi_vu, psi_v.mul(&psi_u));
}

#[test]
fn equisatisfiability_of_a_broken_cocycle() {
    let h = crate::fixtures::cyclic(Q, 3);
    let t = crate::fixtures::trivial_action(h, crate::hopf::AlgebraData::diagonal(Q, 1));
    let mut bad = t.clone();
    bad.cocycle_mut().set_fibre(1, 2, vec![Q.from_i64(2)]);
    let v = LinMapHom::from_images(Q, 1, &[vec![Q.one()], vec![Q.from_i64(3)], vec![Q.from_i64(-1)]]);
    let pair = weak_conv_inverse(&v, &bad).unwrap().unwrap();
    let r = verify_equisatisfiability(&bad, &pair);
    assert!(r.passed(), "{}", r.summary());
    assert!(!verify_crossed_conditions(&gauged(&bad, &pair)).section("cocycle").unwrap().passed());
}

/// Gauges of the shift-induced actions on k² and k³: v(1) = 1_A and the
/// other values are diagonal with entries drawn from `values`.
fn partial_with_gauge(n: usize, mask: u32, values: &[i64]) -> Option<(TwistedPartialAction, GaugePair)> {
    let bits: Vec<i64> = (0..n).map(|x| ((mask >> x) & 1) as i64).collect();
    if !bits.contains(&1) {
        return None;
    }
    let (t, _) = crate::partial::induce_partial(&cyclic_shift(Q, n), &vector::from_i64(Q, &bits)).unwrap();
    let na = t.dim_a();
    let images: Vec<Vec<Scalar>> = (0..n)
        .map(|g| if g == 0 { t.algebra().unit().to_vec() } else { (0..na).map(|k| Q.from_i64(values[(g * na + k) % values.len()])).collect() })
        .collect();
    let v = LinMapHom::from_images(Q, na, &images);
    weak_conv_inverse(&v, &t).unwrap().map(|g| (t, g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gauging_preserves_every_verdict(
        n in 2usize..4,
        mask in 1u32..8,
        values in prop::collection::vec(prop_oneof![1i64..5, -4i64..0], 6),
        second in prop::collection::vec(prop_oneof![1i64..5, -4i64..0], 6),
    ) {
        let Some((t, g)) = partial_with_gauge(n, mask, &values) else { return Ok(()) };
        let gt = gauged(&t, &g);
        prop_assert_eq!(verify_twisted_partial(&t).passed(), verify_twisted_partial(&gt).passed());
        prop_assert!(verify_lemma31(&gt).passed());
        prop_assert!(verify_equisatisfiability(&t, &g).passed());
        let (_, iso) = theorem54_iso(&t, &g).unwrap();
        prop_assert!(iso.passed());
        if let Some((_, u)) = partial_with_gauge(n, mask, &second) {
            prop_assert!(verify_lemma53(&t, &g, &u).unwrap().passed());
        }
    }
}
