//! Helpers for vectors stored as `Vec<Scalar>` / `&[Scalar]`.

use crate::scalar::{Field, Scalar};

pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn from_i64(field: Field, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    let mut acc = match a.first() {
        Some(x) => x.field().zero(),
        None => return Field::Rational.zero(),
    };
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c · v`.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    assert_eq!(acc.len(), v.len(), "vector length mismatch");
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

/// Row-major Kronecker product: index (i, j) ↦ i·len(w) + j.
pub fn kron(v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(v.len() * w.len());
    for x in v {
        for y in w {
            out.push(x * y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_examples() {
        let f = Field::Rational;
        assert_eq!(kron(&from_i64(f, &[1, 0]), &from_i64(f, &[0, 1])), from_i64(f, &[0, 1, 0, 0]));
        assert_eq!(kron(&from_i64(f, &[1, 1]), &from_i64(f, &[1, 1])), from_i64(f, &[1, 1, 1, 1]));
        for i in 0..3 {
            for j in 0..2 {
                assert_eq!(kron(&unit(f, 3, i), &unit(f, 2, j)), unit(f, 6, i * 2 + j));
            }
        }
    }
}
