//! Small worked examples used by tests, the CLI and the acceptance suite.

use crate::hopf::groups::{cyclic_group, GroupTable};
use crate::hopf::{group_algebra, AlgebraData, HopfAlgebraData};
use crate::linalg::vector;
use crate::partial::{induce_partial, GlobalTwistedAction, TwistedPartialAction};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor3;

pub fn cyclic(field: Field, n: usize) -> HopfAlgebraData {
    let (table, inverse) = cyclic_group(n);
    group_algebra(field, &table, &inverse).expect("cyclic groups are groups")
}

/// kG acting on k^G by left translation, `g ▷ e_x = e_{gx}`, with trivial twist.
pub fn regular_action(field: Field, group: &GroupTable) -> GlobalTwistedAction {
    let (table, inverse) = group;
    let n = table.len();
    let hopf = group_algebra(field, table, inverse).expect("valid group table");
    let b = AlgebraData::diagonal(field, n);
    let action = Tensor3::from_fn(field, n, n, n, |g, x| vector::unit(field, n, table[g][x]));
    GlobalTwistedAction::untwisted(hopf, b, action).expect("shapes agree")
}

/// The regular action twisted by the coboundary of `v: G → k^G`,
/// `u(g,h) = (g▷v(h))v(g)v(gh)⁻¹`, where `v(1) = 1` and the other values
/// cycle through `values` (which must be nonzero). The identity must be
/// element 0.
pub fn coboundary_twisted_regular(field: Field, group: &GroupTable, values: &[i64]) -> GlobalTwistedAction {
    let base = regular_action(field, group);
    let n = group.0.len();
    let b = base.algebra();
    let v: Vec<Vec<Scalar>> = (0..n)
        .map(|g| {
            if g == 0 {
                b.unit().to_vec()
            } else {
                (0..n).map(|x| field.from_i64(values[(g * n + x) % values.len()])).collect()
            }
        })
        .collect();
    let inv = |x: &[Scalar]| -> Vec<Scalar> { x.iter().map(|c| c.inv().expect("nonzero values")).collect() };
    let twist = Tensor3::from_fn(field, n, n, n, |g, h| {
        let moved = base.act_basis(g, &v[h]);
        b.mul_all(&[&moved, &v[g], &inv(&v[group.0[g][h]])])
    });
    GlobalTwistedAction::new(base.hopf().clone(), b.clone(), base.action().clone(), twist).expect("shapes agree")
}

/// kCₙ acting on kⁿ by cyclically shifting coordinates, `g ▷ e_k = e_{k+1}`.
pub fn cyclic_shift(field: Field, n: usize) -> GlobalTwistedAction {
    regular_action(field, &cyclic_group(n))
}

/// kC₃ on B = k³ by the shift, restricted to `1_A = (1,1,0)`: A = k²,
/// `g·(x,y) = (0,x)`, `g²·(x,y) = (y,0)`, trivial cocycle.
pub fn c3_partial(field: Field) -> TwistedPartialAction {
    let h = cyclic(field, 3);
    let a = AlgebraData::diagonal(field, 2);
    let rows: [[[i64; 2]; 2]; 3] = [[[1, 0], [0, 1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]];
    let action = Tensor3::from_fn(field, 3, 2, 2, |g, j| vector::from_i64(field, &rows[g][j]));
    TwistedPartialAction::with_trivial_cocycle(h, a, action).expect("shapes agree")
}

/// kC₂ acting trivially on k with `u(g,g) = λ`, read as a global action.
pub fn scalar_twist_global(field: Field, lambda: Scalar) -> GlobalTwistedAction {
    let h = cyclic(field, 2);
    let a = AlgebraData::diagonal(field, 1);
    let action = Tensor3::from_fn(field, 2, 1, 1, |_, _| vec![field.one()]);
    let twist = Tensor3::from_fn(field, 2, 2, 1, |g, l| {
        vec![if g == 1 && l == 1 { lambda.clone() } else { field.one() }]
    });
    GlobalTwistedAction::new(h, a, action, twist).expect("shapes agree")
}

/// The same data as [`scalar_twist_global`] as a twisted partial action.
pub fn scalar_twist(field: Field, lambda: Scalar) -> TwistedPartialAction {
    scalar_twist_global(field, lambda).as_partial().clone()
}

/// kC₂ on k² by the swap, restricted to `1_A = (1,0)`: A = k and `g·a = 0`.
pub fn degenerate_swap(field: Field) -> TwistedPartialAction {
    let (t, _) = induce_partial(&cyclic_shift(field, 2), &vector::from_i64(field, &[1, 0]))
        .expect("(1,0) is a central idempotent");
    t
}

/// The trivial Hopf algebra k acting on upper triangular 2×2 matrices.
pub fn trivial_hopf_triangular(field: Field) -> TwistedPartialAction {
    let h = HopfAlgebraData::trivial(field);
    let a = AlgebraData::upper_triangular(field);
    trivial_action(h, a)
}

/// `h·a = ε(h)a` with `ω(h,l) = ε(h)ε(l)1_A`.
pub fn trivial_action(h: HopfAlgebraData, a: AlgebraData) -> TwistedPartialAction {
    let field = h.field();
    let (n, m) = (h.dim(), a.dim());
    let action = Tensor3::from_fn(field, n, m, m, |i, j| vector::scale(h.epsilon(i), &a.basis(j)));
    TwistedPartialAction::with_trivial_cocycle(h, a, action).expect("shapes agree")
}

/// kC₂ on upper triangular matrices with `g·a = a₁₁E₁₁`. It satisfies the
/// partial composition law only with the factors written in reverse
/// order, and `e(g) = E₁₁` is not central in Hom(H, A).
pub fn triangular_corner(field: Field) -> TwistedPartialAction {
    let h = cyclic(field, 2);
    let a = AlgebraData::upper_triangular(field);
    let action = Tensor3::from_fn(field, 2, 3, 3, |g, j| {
        if g == 0 {
            a.basis(j)
        } else if j == 0 {
            a.basis(0)
        } else {
            a.zero()
        }
    });
    TwistedPartialAction::with_trivial_cocycle(h, a, action).expect("shapes agree")
}
