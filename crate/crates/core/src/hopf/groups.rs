//! Group algebras kG and their duals k^G built from Cayley tables.

use super::{AlgebraData, CoalgebraData, HopfAlgebraData};
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor3;

/// Cayley table (`table[a][b]` is the index of `ab`) and inverse list.
pub type GroupTable = (Vec<Vec<usize>>, Vec<usize>);

fn identity_of(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if let Some(i) = table.iter().position(|r| r.len() != n) {
        return Err(Error::NotAGroup(format!("row {i} has length {}, expected {n}", table[i].len())));
    }
    if table.iter().flatten().any(|&x| x >= n) {
        return Err(Error::NotAGroup("entry out of range".into()));
    }
    (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))
}

/// Checks the group axioms and returns the identity index.
pub fn validate_group(table: &[Vec<usize>], inverse: &[usize]) -> Result<usize> {
    let e = identity_of(table)?;
    let n = table.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
    }
    if inverse.len() != n {
        return Err(Error::NotAGroup("inverse list has wrong length".into()));
    }
    for (a, &b) in inverse.iter().enumerate() {
        if b >= n || table[a][b] != e || table[b][a] != e {
            return Err(Error::NotAGroup(format!("{b} is not an inverse of {a}")));
        }
    }
    Ok(e)
}

/// kG with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_algebra(field: Field, table: &[Vec<usize>], inverse: &[usize]) -> Result<HopfAlgebraData> {
    let e = validate_group(table, inverse)?;
    let n = table.len();
    let mut mult = Tensor3::zeros(field, n, n, n);
    let mut comult = Tensor3::zeros(field, n, n, n);
    for a in 0..n {
        comult.set(a, a, a, field.one());
        for b in 0..n {
            mult.set(a, b, table[a][b], field.one());
        }
    }
    let labels = (0..n).map(|i| if i == e { "1".to_string() } else { format!("g{i}") }).collect();
    let algebra = AlgebraData::new(labels, mult, vector::unit(field, n, e))?;
    let coalgebra = CoalgebraData::new(comult, vec![field.one(); n])?;
    let antipode = Matrix::from_fn(field, n, n, |i, j| if inverse[j] == i { field.one() } else { field.zero() });
    HopfAlgebraData::new(algebra, coalgebra, antipode)
}

/// k^G, the dual of kG: pointwise product on δ_x, Δ(δ_x) = Σ_{yz=x} δ_y⊗δ_z.
pub fn function_algebra(field: Field, table: &[Vec<usize>]) -> Result<HopfAlgebraData> {
    let e = identity_of(table)?;
    let n = table.len();
    let inverse: Vec<usize> = (0..n)
        .map(|a| (0..n).find(|&b| table[a][b] == e).ok_or_else(|| Error::NotAGroup(format!("{a} has no inverse"))))
        .collect::<Result<_>>()?;
    validate_group(table, &inverse)?;
    let mut mult = Tensor3::zeros(field, n, n, n);
    let mut comult = Tensor3::zeros(field, n, n, n);
    for y in 0..n {
        mult.set(y, y, y, field.one());
        for z in 0..n {
            comult.set(table[y][z], y, z, field.one());
        }
    }
    let labels = (0..n).map(|i| format!("d{i}")).collect();
    let algebra = AlgebraData::new(labels, mult, vec![field.one(); n])?;
    let coalgebra = CoalgebraData::new(comult, vector::unit(field, n, e))?;
    let antipode = Matrix::from_fn(field, n, n, |i, j| if inverse[j] == i { field.one() } else { field.zero() });
    HopfAlgebraData::new(algebra, coalgebra, antipode)
}

/// Recovers the group from a Hopf algebra whose basis consists of
/// group-like elements closed under multiplication.
pub fn group_of(h: &HopfAlgebraData) -> Result<GroupTable> {
    let n = h.dim();
    let unit_index = |v: &[Scalar]| -> Option<usize> {
        let k = v.iter().position(|x| !x.is_zero())?;
        (v[k].is_one() && v.iter().filter(|x| !x.is_zero()).count() == 1).then_some(k)
    };
    for i in 0..n {
        let terms = h.coalgebra().terms(i);
        let grouplike = terms.len() == 1 && terms[0].0.is_one() && terms[0].1 == [i, i];
        if !grouplike || !h.epsilon(i).is_one() {
            return Err(Error::NonGroupHopf(format!("basis element {i} is not group-like")));
        }
    }
    let table = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    unit_index(h.mul_basis(i, j))
                        .ok_or_else(|| Error::NonGroupHopf(format!("product of basis elements {i}, {j} is not a basis element")))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let inverse = (0..n)
        .map(|i| unit_index(&h.antipode().column(i)).ok_or_else(|| Error::NonGroupHopf(format!("antipode of {i} is not a basis element"))))
        .collect::<Result<Vec<usize>>>()?;
    validate_group(&table, &inverse).map_err(|e| Error::NonGroupHopf(e.to_string()))?;
    Ok((table, inverse))
}

pub fn cyclic_group(n: usize) -> GroupTable {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let inverse = (0..n).map(|a| (n - a) % n).collect();
    (table, inverse)
}

pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
    let (m, n) = (g.0.len(), h.0.len());
    let table = (0..m * n)
        .map(|x| (0..m * n).map(|y| g.0[x / n][y / n] * n + h.0[x % n][y % n]).collect())
        .collect();
    let inverse = (0..m * n).map(|x| g.1[x / n] * n + h.1[x % n]).collect();
    (table, inverse)
}

/// S₃ as permutations of {0,1,2}; index 0 is the identity.
pub fn symmetric_group_s3() -> GroupTable {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| perms.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect())
        .collect();
    let inverse = (0..6).map(|a| (0..6).find(|&b| table[a][b] == 0).expect("group")).collect();
    (table, inverse)
}

/// Every group of order at most 6, up to isomorphism.
pub fn small_groups() -> Vec<(&'static str, GroupTable)> {
    vec![
        ("C1", cyclic_group(1)),
        ("C2", cyclic_group(2)),
        ("C3", cyclic_group(3)),
        ("C4", cyclic_group(4)),
        ("C2xC2", direct_product(&cyclic_group(2), &cyclic_group(2))),
        ("C5", cyclic_group(5)),
        ("C6", cyclic_group(6)),
        ("S3", symmetric_group_s3()),
    ]
}
