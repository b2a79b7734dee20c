//! Dense coordinate vectors (`Vec<Scalar>` against the algebra's basis).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub fn zero(field: Field, dim: usize) -> Vec<Scalar> {
    vec![field.zero(); dim]
}

pub fn basis(field: Field, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero(field, dim);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

pub fn sum<'a>(field: Field, dim: usize, terms: impl IntoIterator<Item = &'a Vec<Scalar>>) -> Vec<Scalar> {
    let mut acc = zero(field, dim);
    for t in terms {
        acc = add(&acc, t);
    }
    acc
}

/// Checks that `v` has length `dim` and every entry lies in `field`.
pub fn check(field: Field, dim: usize, v: &[Scalar]) -> Result<()> {
    if v.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        });
    }
    for x in v {
        field.expect_same(x.field())?;
    }
    Ok(())
}
