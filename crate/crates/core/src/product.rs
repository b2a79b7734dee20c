//! Bilinear products stored as rank-3 structure-constant tensors.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::LinearOperator;
use crate::scalar::{Field, Scalar};
use crate::vector;

/// `μ(e_i, e_j) = Σ_k coeffs[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearProduct {
    field: Field,
    dim: usize,
    /// Flattened `[i][j][k]`.
    coeffs: Vec<Scalar>,
}

impl BilinearProduct {
    pub fn zero(field: Field, dim: usize) -> Self {
        BilinearProduct {
            field,
            dim,
            coeffs: vector::zero(field, dim * dim * dim),
        }
    }

    /// Sparse constructor; repeated `(i, j, k)` entries are summed.
    pub fn from_entries(field: Field, dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidAlgebra("product of dimension 0".into()));
        }
        let mut m = Self::zero(field, dim);
        for (i, j, k, c) in entries {
            field.expect_same(c.field())?;
            for idx in [*i, *j, *k] {
                if idx >= dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: idx,
                    });
                }
            }
            let slot = m.index(*i, *j, *k);
            m.coeffs[slot] = &m.coeffs[slot] + c;
        }
        Ok(m)
    }

    /// Convenience for integer structure constants.
    pub fn from_i64_entries(field: Field, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let entries: Vec<_> = entries
            .iter()
            .map(|&(i, j, k, c)| (i, j, k, field.from_i64(c)))
            .collect();
        Self::from_entries(field, dim, &entries)
    }

    /// Builds the tensor from the value of the product on each basis pair.
    pub fn from_basis_images(field: Field, dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                vector::check(field, dim, &v)?;
                coeffs.extend(v);
            }
        }
        Ok(BilinearProduct { field, dim, coeffs })
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[self.index(i, j, k)]
    }

    /// Copy with one structure constant replaced.
    pub fn with_coeff(&self, i: usize, j: usize, k: usize, value: Scalar) -> Result<Self> {
        self.field.expect_same(value.field())?;
        let mut m = self.clone();
        let slot = m.index(i, j, k);
        m.coeffs[slot] = value;
        Ok(m)
    }

    /// `μ(e_i, e_j)` as a coordinate slice.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = self.index(i, j, 0);
        &self.coeffs[start..start + self.dim]
    }

    /// Nonzero structure constants in lexicographic `(i, j, k)` order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let d = self.dim;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(n, c)| (n / (d * d), (n / d) % d, n % d, c))
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.coeffs)
    }

    /// `Σ_{i,j} x_i y_j μ(e_i, e_j)`.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        vector::check(self.field, self.dim, x)?;
        vector::check(self.field, self.dim, y)?;
        Ok(self.apply_unchecked(x, y))
    }

    pub(crate) fn apply_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vector::zero(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vector::axpy(&mut acc, &(xi * yj), self.basis_product(i, j));
            }
        }
        acc
    }

    fn check_operator(&self, f: &LinearOperator) -> Result<()> {
        self.field.expect_same(f.field())?;
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: f.dim(),
            });
        }
        Ok(())
    }

    fn check_product(&self, other: &BilinearProduct) -> Result<()> {
        self.field.expect_same(other.field)?;
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// The product `(x, y) ↦ μ(f(x), g(y))`.
    pub fn conjugate(&self, f: &LinearOperator, g: &LinearOperator) -> Result<Self> {
        self.check_operator(f)?;
        self.check_operator(g)?;
        let fc: Vec<_> = (0..self.dim).map(|i| f.column(i)).collect();
        let gc: Vec<_> = (0..self.dim).map(|j| g.column(j)).collect();
        Self::from_basis_images(self.field, self.dim, |i, j| self.apply_unchecked(&fc[i], &gc[j]))
    }

    /// `(x, y) ↦ f(μ(x, y))`.
    pub fn post_compose(&self, f: &LinearOperator) -> Result<Self> {
        self.check_operator(f)?;
        Self::from_basis_images(self.field, self.dim, |i, j| f.apply_unchecked(self.basis_product(i, j)))
    }

    /// The opposite product `(x, y) ↦ μ(y, x)`.
    pub fn transpose(&self) -> Self {
        Self::from_basis_images(self.field, self.dim, |i, j| self.basis_product(j, i).to_vec()).expect("same shape")
    }

    pub fn add(&self, other: &BilinearProduct) -> Result<Self> {
        self.check_product(other)?;
        Ok(BilinearProduct {
            field: self.field,
            dim: self.dim,
            coeffs: vector::add(&self.coeffs, &other.coeffs),
        })
    }

    pub fn sub(&self, other: &BilinearProduct) -> Result<Self> {
        self.check_product(other)?;
        Ok(BilinearProduct {
            field: self.field,
            dim: self.dim,
            coeffs: vector::sub(&self.coeffs, &other.coeffs),
        })
    }

    pub fn scaled(&self, c: &Scalar) -> Result<Self> {
        self.field.expect_same(c.field())?;
        Ok(BilinearProduct {
            field: self.field,
            dim: self.dim,
            coeffs: vector::scale(c, &self.coeffs),
        })
    }

    pub fn reduce_mod(&self, p: u64) -> Result<Self> {
        Ok(BilinearProduct {
            field: Field::prime(p)?,
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| c.reduce_mod(p)).collect::<Result<_>>()?,
        })
    }
}
