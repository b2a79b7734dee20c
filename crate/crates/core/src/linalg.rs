//! Square matrices over an exact field, acting on column vectors.
//!
//! Column `j` of a [`LinearOperator`] is the image of the basis vector `e_j`,
//! so `compose(f, g)` is the matrix product `F * G` and means "apply `g`
//! first".

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::vector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOperator {
    field: Field,
    dim: usize,
    /// Row-major.
    entries: Vec<Scalar>,
}

impl LinearOperator {
    /// Builds an operator from its rows.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("operator of dimension 0".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            vector::check(field, dim, &row)?;
            entries.extend(row);
        }
        Ok(LinearOperator { field, dim, entries })
    }

    pub fn from_fn(field: Field, dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Result<Self> {
        let rows = (0..dim).map(|r| (0..dim).map(|c| f(r, c)).collect()).collect();
        Self::from_rows(field, rows)
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn identity(field: Field, dim: usize) -> Self {
        Self::from_fn(field, dim, |r, c| if r == c { field.one() } else { field.zero() })
            .expect("identity is well formed")
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        Self::from_fn(field, dim, |_, _| field.zero()).expect("zero is well formed")
    }

    pub fn diagonal(field: Field, diag: &[Scalar]) -> Result<Self> {
        vector::check(field, diag.len(), diag)?;
        Self::from_fn(
            field,
            diag.len(),
            |r, c| {
                if r == c {
                    diag[r].clone()
                } else {
                    field.zero()
                }
            },
        )
    }

    pub fn scalar(field: Field, dim: usize, c: &Scalar) -> Result<Self> {
        field.expect_same(c.field())?;
        Ok(Self::identity(field, dim).scaled(c))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim)
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Image of `e_j`.
    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|r| self.entry(r, j).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.field, self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        vector::check(self.field, self.dim, v)?;
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.rows()
            .map(|row| {
                let mut acc = self.field.zero();
                for (a, x) in row.iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    fn check_compatible(&self, other: &LinearOperator) -> Result<()> {
        self.field.expect_same(other.field)?;
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// `self ∘ g`: apply `g` first.
    pub fn compose(&self, g: &LinearOperator) -> Result<LinearOperator> {
        self.check_compatible(g)?;
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = self.field.zero();
                for k in 0..n {
                    let a = self.entry(r, k);
                    let b = g.entry(k, c);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(LinearOperator {
            field: self.field,
            dim: n,
            entries,
        })
    }

    pub fn add(&self, other: &LinearOperator) -> Result<LinearOperator> {
        self.check_compatible(other)?;
        Ok(LinearOperator {
            field: self.field,
            dim: self.dim,
            entries: vector::add(&self.entries, &other.entries),
        })
    }

    pub fn sub(&self, other: &LinearOperator) -> Result<LinearOperator> {
        self.check_compatible(other)?;
        Ok(LinearOperator {
            field: self.field,
            dim: self.dim,
            entries: vector::sub(&self.entries, &other.entries),
        })
    }

    pub fn scaled(&self, c: &Scalar) -> LinearOperator {
        LinearOperator {
            field: self.field,
            dim: self.dim,
            entries: vector::scale(c, &self.entries),
        }
    }

    pub fn pow(&self, n: u32) -> LinearOperator {
        let mut acc = Self::identity(self.field, self.dim);
        for _ in 0..n {
            acc = acc.compose(self).expect("same shape");
        }
        acc
    }

    pub fn commutes_with(&self, other: &LinearOperator) -> Result<bool> {
        Ok(self.compose(other)? == other.compose(self)?)
    }

    /// Gauss-Jordan elimination on `[A | I]`. The pivot in each column is the
    /// first nonzero entry at or below the diagonal.
    pub fn inverse(&self) -> Result<LinearOperator> {
        let n = self.dim;
        let mut a: Vec<Vec<Scalar>> = self.rows().map(<[Scalar]>::to_vec).collect();
        let mut inv: Vec<Vec<Scalar>> = Self::identity(self.field, n).rows().map(<[Scalar]>::to_vec).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::NotBijective)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = a[col][col].inverse()?;
            a[col] = vector::scale(&scale, &a[col]);
            inv[col] = vector::scale(&scale, &inv[col]);
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = -&a[r][col];
                let (pa, pi) = (a[col].clone(), inv[col].clone());
                vector::axpy(&mut a[r], &factor, &pa);
                vector::axpy(&mut inv[r], &factor, &pi);
            }
        }
        Self::from_rows(self.field, inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    /// Entrywise image in `F_p`.
    pub fn reduce_mod(&self, p: u64) -> Result<LinearOperator> {
        let field = Field::prime(p)?;
        Ok(LinearOperator {
            field,
            dim: self.dim,
            entries: self.entries.iter().map(|x| x.reduce_mod(p)).collect::<Result<_>>()?,
        })
    }
}

impl fmt::Display for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
