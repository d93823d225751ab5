//! The shipped definition files, rebuilt from the library fixtures so the
//! two cannot drift apart.

use super::spec::{GlobalSpec, SpecFile};
use crate::fixtures::{c3_partial, cyclic_shift, degenerate_swap, scalar_twist, trivial_hopf_triangular};
use crate::globalization::globalize_group_partial;
use crate::hopf::LinMapHom;
use crate::linalg::vector;
use crate::scalar::Field;

/// `(file stem, spec)` for every file under `fixtures/`.
pub fn library() -> Vec<(&'static str, SpecFile)> {
    let q = Field::Rational;
    let half = q.ratio(1, 2).expect("2 is invertible");

    let mut c3 = SpecFile::from_partial(&c3_partial(q));
    c3.integral_t = Some(vector::from_i64(q, &[1, 1, 1]));
    c3.center_c = Some(vec![half.clone(), half.clone()]);

    let env = globalize_group_partial(&c3_partial(q)).expect("the shift restriction globalizes");
    let mut c3_env = SpecFile::from_partial(&c3_partial(q));
    c3_env.global = Some(GlobalSpec { algebra: env.global.algebra().clone(), action: env.global.action().clone() });
    c3_env.twist = Some(env.global.twist().clone());
    c3_env.theta = Some(env.theta.clone());

    let shift = cyclic_shift(q, 3);
    let mut c3_induced = SpecFile::new(q);
    c3_induced.hopf = Some(shift.hopf().clone());
    c3_induced.global = Some(GlobalSpec { algebra: shift.algebra().clone(), action: shift.action().clone() });
    c3_induced.idempotent = Some(vector::from_i64(q, &[1, 1, 0]));

    let mut coc1 = SpecFile::from_partial(&scalar_twist(q, q.one()));
    coc1.integral_t = Some(vector::from_i64(q, &[1, 1]));
    coc1.center_c = Some(vec![half]);

    let mut coc2 = SpecFile::from_partial(&scalar_twist(q, q.from_i64(2)));
    coc2.gauge = Some(LinMapHom::from_images(q, 1, &[vec![q.one()], vec![q.from_i64(3)]]));

    vec![
        ("c3_partial", c3),
        ("c3_enveloping", c3_env),
        ("c3_induced", c3_induced),
        ("scalar_twist_1", coc1),
        ("scalar_twist_2_gauge", coc2),
        ("degenerate_swap", SpecFile::from_partial(&degenerate_swap(q))),
        ("trivial_hopf_triangular", SpecFile::from_partial(&trivial_hopf_triangular(q))),
    ]
}
