//! Algebra records: products, structure maps and the declared kind.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::LinearOperator;
use crate::product::BilinearProduct;
use crate::scalar::{Field, Scalar};
use crate::vector;

pub const PREC: &str = "prec";
pub const SUCC: &str = "succ";
pub const BRACKET: &str = "bracket";
pub const MUL: &str = "mul";

/// The structure an instance claims to carry. A declared intent: the checkers
/// decide whether the claim holds, nothing reclassifies an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    BiHomAssociative,
    BiHomLie,
    LeftBiHomLie,
    RightBiHomLie,
    LeftBiHomLeibniz,
    RightBiHomLeibniz,
    LeftBiHomPreLie,
    RightBiHomPreLie,
    BiHomDendriform,
    PlainLie,
    PlainLeftPreLie,
    PlainRightPreLie,
    PlainLeftLeibniz,
    PlainRightLeibniz,
    PlainAssociative,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 15] = [
        AlgebraKind::BiHomAssociative,
        AlgebraKind::BiHomLie,
        AlgebraKind::LeftBiHomLie,
        AlgebraKind::RightBiHomLie,
        AlgebraKind::LeftBiHomLeibniz,
        AlgebraKind::RightBiHomLeibniz,
        AlgebraKind::LeftBiHomPreLie,
        AlgebraKind::RightBiHomPreLie,
        AlgebraKind::BiHomDendriform,
        AlgebraKind::PlainLie,
        AlgebraKind::PlainLeftPreLie,
        AlgebraKind::PlainRightPreLie,
        AlgebraKind::PlainLeftLeibniz,
        AlgebraKind::PlainRightLeibniz,
        AlgebraKind::PlainAssociative,
    ];

    pub fn name(self) -> &'static str {
        use AlgebraKind::*;
        match self {
            BiHomAssociative => "BiHomAssociative",
            BiHomLie => "BiHomLie",
            LeftBiHomLie => "LeftBiHomLie",
            RightBiHomLie => "RightBiHomLie",
            LeftBiHomLeibniz => "LeftBiHomLeibniz",
            RightBiHomLeibniz => "RightBiHomLeibniz",
            LeftBiHomPreLie => "LeftBiHomPreLie",
            RightBiHomPreLie => "RightBiHomPreLie",
            BiHomDendriform => "BiHomDendriform",
            PlainLie => "PlainLie",
            PlainLeftPreLie => "PlainLeftPreLie",
            PlainRightPreLie => "PlainRightPreLie",
            PlainLeftLeibniz => "PlainLeftLeibniz",
            PlainRightLeibniz => "PlainRightLeibniz",
            PlainAssociative => "PlainAssociative",
        }
    }

    /// Plain kinds carry `alpha = beta = id`.
    pub fn is_plain(self) -> bool {
        use AlgebraKind::*;
        matches!(
            self,
            PlainLie | PlainLeftPreLie | PlainRightPreLie | PlainLeftLeibniz | PlainRightLeibniz | PlainAssociative
        )
    }

    pub fn product_count(self) -> usize {
        if self == AlgebraKind::BiHomDendriform {
            2
        } else {
            1
        }
    }

    /// Label given to the product of freshly built instances of this kind.
    pub fn default_label(self) -> &'static str {
        use AlgebraKind::*;
        match self {
            BiHomLie | LeftBiHomLie | RightBiHomLie | LeftBiHomLeibniz | RightBiHomLeibniz | PlainLie
            | PlainLeftLeibniz | PlainRightLeibniz => BRACKET,
            _ => MUL,
        }
    }

    /// The kind obtained by transposing the product and swapping the maps.
    pub fn opposite(self) -> Option<AlgebraKind> {
        use AlgebraKind::*;
        Some(match self {
            LeftBiHomLie => RightBiHomLie,
            RightBiHomLie => LeftBiHomLie,
            LeftBiHomLeibniz => RightBiHomLeibniz,
            RightBiHomLeibniz => LeftBiHomLeibniz,
            LeftBiHomPreLie => RightBiHomPreLie,
            RightBiHomPreLie => LeftBiHomPreLie,
            PlainLeftPreLie => PlainRightPreLie,
            PlainRightPreLie => PlainLeftPreLie,
            PlainLeftLeibniz => PlainRightLeibniz,
            PlainRightLeibniz => PlainLeftLeibniz,
            _ => return None,
        })
    }

    /// Plain kinds map to their BiHom counterpart; BiHom kinds are fixed.
    pub fn bihom(self) -> AlgebraKind {
        use AlgebraKind::*;
        match self {
            PlainLie => BiHomLie,
            PlainLeftPreLie => LeftBiHomPreLie,
            PlainRightPreLie => RightBiHomPreLie,
            PlainLeftLeibniz => LeftBiHomLeibniz,
            PlainRightLeibniz => RightBiHomLeibniz,
            PlainAssociative => BiHomAssociative,
            other => other,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidAlgebra(format!("unknown kind {s:?}")))
    }
}

/// A basis tuple on which an identity fails, with `LHS - RHS` in coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ViolationWitness {
    pub identity_label: String,
    pub basis_indices: Vec<usize>,
    pub residual: Vec<Scalar>,
}

impl ViolationWitness {
    /// `None` when the residual vanishes.
    pub fn from_residual(label: &str, indices: &[usize], residual: Vec<Scalar>) -> Option<Self> {
        (!vector::is_zero(&residual)).then(|| ViolationWitness {
            identity_label: label.to_string(),
            basis_indices: indices.to_vec(),
            residual,
        })
    }
}

impl fmt::Display for ViolationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: [", self.identity_label, self.basis_indices)?;
        for (n, x) in self.residual.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// `(L, products, alpha, beta)` against one fixed ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraInstance {
    name: String,
    dim: usize,
    field: Field,
    basis_labels: Vec<String>,
    products: BTreeMap<String, BilinearProduct>,
    alpha: LinearOperator,
    beta: LinearOperator,
    kind: AlgebraKind,
}

impl AlgebraInstance {
    pub fn new(
        name: impl Into<String>,
        kind: AlgebraKind,
        basis_labels: Vec<String>,
        products: BTreeMap<String, BilinearProduct>,
        alpha: LinearOperator,
        beta: LinearOperator,
    ) -> Result<Self> {
        let dim = alpha.dim();
        let field = alpha.field();
        let shape = |what: &str, d: usize, f: Field| -> Result<()> {
            field.expect_same(f)?;
            if d != dim {
                return Err(Error::InvalidAlgebra(format!(
                    "{what} has dimension {d}, expected {dim}"
                )));
            }
            Ok(())
        };
        shape("beta", beta.dim(), beta.field())?;
        shape("basis", basis_labels.len(), field)?;
        for (label, m) in &products {
            shape(&format!("product {label:?}"), m.dim(), m.field())?;
        }
        if products.len() != kind.product_count() {
            return Err(Error::ProductArity {
                kind,
                expected: kind.product_count(),
                found: products.len(),
            });
        }
        if kind == AlgebraKind::BiHomDendriform && !(products.contains_key(PREC) && products.contains_key(SUCC)) {
            return Err(Error::InvalidAlgebra(
                "dendriform products must be labelled \"prec\" and \"succ\"".into(),
            ));
        }
        if kind.is_plain() && !(alpha.is_identity() && beta.is_identity()) {
            return Err(Error::InvalidAlgebra(format!(
                "{kind} requires identity structure maps"
            )));
        }
        Ok(AlgebraInstance {
            name: name.into(),
            dim,
            field,
            basis_labels,
            products,
            alpha,
            beta,
            kind,
        })
    }

    /// Single-product instance.
    pub fn with_single_product(
        name: impl Into<String>,
        kind: AlgebraKind,
        basis_labels: Vec<String>,
        product: BilinearProduct,
        alpha: LinearOperator,
        beta: LinearOperator,
    ) -> Result<Self> {
        let mut products = BTreeMap::new();
        products.insert(kind.default_label().to_string(), product);
        Self::new(name, kind, basis_labels, products, alpha, beta)
    }

    /// Single-product instance with identity structure maps.
    pub fn untwisted(
        name: impl Into<String>,
        kind: AlgebraKind,
        basis_labels: Vec<String>,
        product: BilinearProduct,
    ) -> Result<Self> {
        let id = LinearOperator::identity(product.field(), product.dim());
        Self::with_single_product(name, kind, basis_labels, product, id.clone(), id)
    }

    pub fn dendriform(
        name: impl Into<String>,
        basis_labels: Vec<String>,
        prec: BilinearProduct,
        succ: BilinearProduct,
        alpha: LinearOperator,
        beta: LinearOperator,
    ) -> Result<Self> {
        let mut products = BTreeMap::new();
        products.insert(PREC.to_string(), prec);
        products.insert(SUCC.to_string(), succ);
        Self::new(name, AlgebraKind::BiHomDendriform, basis_labels, products, alpha, beta)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn alpha(&self) -> &LinearOperator {
        &self.alpha
    }

    pub fn beta(&self) -> &LinearOperator {
        &self.beta
    }

    pub fn products(&self) -> &BTreeMap<String, BilinearProduct> {
        &self.products
    }

    pub fn product(&self, label: &str) -> Result<&BilinearProduct> {
        self.products
            .get(label)
            .ok_or_else(|| Error::UnknownProduct(label.to_string()))
    }

    /// The product of a single-product kind.
    pub fn sole_product(&self) -> Result<(&str, &BilinearProduct)> {
        match self.products.iter().next() {
            Some((label, m)) if self.products.len() == 1 => Ok((label.as_str(), m)),
            _ => Err(Error::ProductArity {
                kind: self.kind,
                expected: 1,
                found: self.products.len(),
            }),
        }
    }

    /// `(prec, succ)` of a dendriform instance.
    pub fn dendriform_products(&self) -> Result<(&BilinearProduct, &BilinearProduct)> {
        match (self.products.get(PREC), self.products.get(SUCC)) {
            (Some(p), Some(s)) if self.products.len() == 2 => Ok((p, s)),
            _ => Err(Error::ProductArity {
                kind: self.kind,
                expected: 2,
                found: self.products.len(),
            }),
        }
    }

    pub fn with_name(&self, name: impl Into<String>) -> Self {
        let mut a = self.clone();
        a.name = name.into();
        a
    }

    /// Re-declares the kind; validation is the same as in [`AlgebraInstance::new`].
    pub fn with_kind(&self, kind: AlgebraKind) -> Result<Self> {
        Self::new(
            self.name.clone(),
            kind,
            self.basis_labels.clone(),
            self.products.clone(),
            self.alpha.clone(),
            self.beta.clone(),
        )
    }

    pub fn with_product(&self, label: &str, product: BilinearProduct) -> Result<Self> {
        if !self.products.contains_key(label) {
            return Err(Error::UnknownProduct(label.to_string()));
        }
        let mut products = self.products.clone();
        products.insert(label.to_string(), product);
        Self::new(
            self.name.clone(),
            self.kind,
            self.basis_labels.clone(),
            products,
            self.alpha.clone(),
            self.beta.clone(),
        )
    }

    pub fn with_maps(&self, alpha: LinearOperator, beta: LinearOperator) -> Result<Self> {
        Self::new(
            self.name.clone(),
            self.kind,
            self.basis_labels.clone(),
            self.products.clone(),
            alpha,
            beta,
        )
    }

    /// Reduction of every structure constant and map entry modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Self> {
        let products = self
            .products
            .iter()
            .map(|(l, m)| Ok((l.clone(), m.reduce_mod(p)?)))
            .collect::<Result<_>>()?;
        Self::new(
            self.name.clone(),
            self.kind,
            self.basis_labels.clone(),
            products,
            self.alpha.reduce_mod(p)?,
            self.beta.reduce_mod(p)?,
        )
    }

    pub(crate) fn check_operator(&self, f: &LinearOperator) -> Result<()> {
        self.field.expect_same(f.field())?;
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: f.dim(),
            });
        }
        Ok(())
    }
}

/// Default basis labels `e1, ..., en`.
pub fn default_basis(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

pub const COMMUTE_LABEL: &str = "alphabeta-commute";

/// Witnesses for `f ∘ g ≠ g ∘ f`, one per basis vector where they differ.
pub fn commutation_witnesses(label: &str, f: &LinearOperator, g: &LinearOperator) -> Result<Vec<ViolationWitness>> {
    let fg = f.compose(g)?;
    let gf = g.compose(f)?;
    Ok((0..f.dim())
        .filter_map(|j| ViolationWitness::from_residual(label, &[j], vector::sub(&fg.column(j), &gf.column(j))))
        .collect())
}

/// Witnesses for `f(m(e_i, e_j)) ≠ m(f e_i, f e_j)`.
pub fn multiplicativity_witnesses(
    label: &str,
    m: &BilinearProduct,
    f: &LinearOperator,
) -> Result<Vec<ViolationWitness>> {
    let lhs = m.post_compose(f)?;
    let rhs = m.conjugate(f, f)?;
    let d = m.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let r = vector::sub(lhs.basis_product(i, j), rhs.basis_product(i, j));
            out.extend(ViolationWitness::from_residual(label, &[i, j], r));
        }
    }
    Ok(out)
}

fn multiplicativity_label(map: &str, product: &str, several: bool) -> String {
    if several {
        format!("eqalfabeta:{map}[{product}]")
    } else {
        format!("eqalfabeta:{map}")
    }
}

/// Commuting structure maps plus multiplicativity of both maps for every
/// product. Empty iff the shared preamble of all BiHom definitions holds.
pub fn validate_preamble(a: &AlgebraInstance) -> Vec<ViolationWitness> {
    let mut out = commutation_witnesses(COMMUTE_LABEL, &a.alpha, &a.beta).expect("instance is well formed");
    let several = a.products.len() > 1;
    for (label, m) in &a.products {
        for (name, f) in [("alpha", &a.alpha), ("beta", &a.beta)] {
            let l = multiplicativity_label(name, label, several);
            out.extend(multiplicativity_witnesses(&l, m, f).expect("instance is well formed"));
        }
    }
    out
}

pub fn is_bijective_pair(a: &AlgebraInstance) -> bool {
    a.alpha.is_invertible() && a.beta.is_invertible()
}

/// `(A, m, alpha, beta) ↦ (A, m^op, beta, alpha)`, flipping left and right.
pub fn opposite_flip(a: &AlgebraInstance) -> Result<AlgebraInstance> {
    let kind = a.kind.opposite().ok_or(Error::NoOpposite(a.kind))?;
    let products = a.products.iter().map(|(l, m)| (l.clone(), m.transpose())).collect();
    AlgebraInstance::new(
        a.name.clone(),
        kind,
        a.basis_labels.clone(),
        products,
        a.beta.clone(),
        a.alpha.clone(),
    )
}
