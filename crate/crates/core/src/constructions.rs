//! Constructions that build a new algebra from old data.
//!
//! Every construction first certifies its hypotheses (the input satisfies its
//! declared kind, the extra maps commute and are multiplicative, `R` is a
//! Rota-Baxter operator commuting with the structure maps). A failed
//! hypothesis is an [`Error::Hypothesis`] carrying the witnesses. Passing
//! [`Hypotheses::Skip`] builds the output regardless; only the checks that
//! are needed to even write the formula down (matching shapes, invertible
//! maps) are kept.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{
    commutation_witnesses, is_bijective_pair, multiplicativity_witnesses, AlgebraInstance, AlgebraKind,
    ViolationWitness,
};
use crate::checkers::{check_kind, check_rota_baxter};
use crate::error::{Error, Result};
use crate::linalg::LinearOperator;
use crate::product::BilinearProduct;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Hypotheses {
    #[default]
    Check,
    Skip,
}

impl Hypotheses {
    fn checked(self) -> bool {
        self == Hypotheses::Check
    }
}

fn require(clause: impl Into<alloc::string::String>, witnesses: Vec<ViolationWitness>) -> Result<()> {
    if witnesses.is_empty() {
        Ok(())
    } else {
        Err(Error::hypothesis(clause, witnesses))
    }
}

fn require_kind(a: &AlgebraInstance, allowed: &[AlgebraKind], reason: &'static str) -> Result<()> {
    if allowed.contains(&a.kind()) {
        Ok(())
    } else {
        Err(Error::UnsupportedKind { kind: a.kind(), reason })
    }
}

fn require_input_valid(a: &AlgebraInstance) -> Result<()> {
    require(format!("input is a {}", a.kind()), check_kind(a))
}

fn require_rota_baxter(a: &AlgebraInstance, label: &str, r: &LinearOperator, weight: &Scalar) -> Result<()> {
    let w = check_rota_baxter(a, label, r, weight)?;
    require(
        format!("R is a Rota-Baxter operator of weight {weight} commuting with alpha, beta"),
        w,
    )
}

fn check_shapes(a: &AlgebraInstance, maps: &[&LinearOperator]) -> Result<()> {
    maps.iter().try_for_each(|f| a.check_operator(f))
}

/// `(alpha⁻¹ ∘ beta, alpha ∘ beta⁻¹)`, computed once per construction.
fn twisting_pair(a: &AlgebraInstance) -> Result<(LinearOperator, LinearOperator)> {
    let alpha_inv = a.alpha().inverse()?;
    let beta_inv = a.beta().inverse()?;
    Ok((alpha_inv.compose(a.beta())?, a.alpha().compose(&beta_inv)?))
}

/// `(x, y) ↦ m(x, y) - n(A y, B x)`
fn antisymmetrize(
    m: &BilinearProduct,
    n: &BilinearProduct,
    pair: &(LinearOperator, LinearOperator),
) -> Result<BilinearProduct> {
    m.sub(&n.conjugate(&pair.0, &pair.1)?.transpose())
}

fn rebuild(a: &AlgebraInstance, name: &str, kind: AlgebraKind, product: BilinearProduct) -> Result<AlgebraInstance> {
    AlgebraInstance::with_single_product(
        name,
        kind,
        a.basis_labels().to_vec(),
        product,
        a.alpha().clone(),
        a.beta().clone(),
    )
}

/// New products `m(alpha2(x), beta2(y))` with structure maps
/// `(alpha ∘ alpha2, beta ∘ beta2)`; plain kinds become their BiHom
/// counterpart. Requires `alpha2`, `beta2` to be morphisms of the input
/// (multiplicative for each product, commuting with `alpha` and `beta`) that
/// commute with each other.
pub fn generalized_twist(
    a: &AlgebraInstance,
    alpha2: &LinearOperator,
    beta2: &LinearOperator,
    mode: Hypotheses,
) -> Result<AlgebraInstance> {
    check_shapes(a, &[alpha2, beta2])?;
    if mode.checked() {
        require_input_valid(a)?;
        let pairs = [
            ("alpha2", alpha2, "beta2", beta2),
            ("alpha2", alpha2, "alpha", a.alpha()),
            ("alpha2", alpha2, "beta", a.beta()),
            ("beta2", beta2, "alpha", a.alpha()),
            ("beta2", beta2, "beta", a.beta()),
        ];
        for (fname, f, gname, g) in pairs {
            let label = format!("commute({fname},{gname})");
            require(label.clone(), commutation_witnesses(&label, f, g)?)?;
        }
        for (label, m) in a.products() {
            for (fname, f) in [("alpha2", alpha2), ("beta2", beta2)] {
                let l = format!("eqalfabeta:{fname}[{label}]");
                require(l.clone(), multiplicativity_witnesses(&l, m, f)?)?;
            }
        }
    }
    let products = a
        .products()
        .iter()
        .map(|(l, m)| Ok((l.clone(), m.conjugate(alpha2, beta2)?)))
        .collect::<Result<_>>()?;
    AlgebraInstance::new(
        format!("{}-twisted", a.name()),
        a.kind().bihom(),
        a.basis_labels().to_vec(),
        products,
        a.alpha().compose(alpha2)?,
        a.beta().compose(beta2)?,
    )
}

/// Yau twist `{x, y} = [alpha2(x), beta2(y)]`. For a plain input the new
/// structure maps are exactly `(alpha2, beta2)`; a Lie input is tagged
/// [`AlgebraKind::BiHomLie`].
pub fn yau_twist(
    a: &AlgebraInstance,
    alpha2: &LinearOperator,
    beta2: &LinearOperator,
    mode: Hypotheses,
) -> Result<AlgebraInstance> {
    generalized_twist(a, alpha2, beta2, mode)
}

/// `[x, y] = x·y - (α⁻¹β(y))·(αβ⁻¹(x))` on a left or right BiHom-pre-Lie
/// algebra with bijective structure maps.
pub fn prelie_derived_bracket(a: &AlgebraInstance, mode: Hypotheses) -> Result<AlgebraInstance> {
    use AlgebraKind::*;
    let (_, m) = a.sole_product()?;
    if mode.checked() {
        require_kind(
            a,
            &[LeftBiHomPreLie, RightBiHomPreLie, PlainLeftPreLie, PlainRightPreLie],
            "needs a left or right BiHom-pre-Lie algebra",
        )?;
        require_input_valid(a)?;
    }
    let pair = twisting_pair(a)?;
    let bracket = antisymmetrize(m, m, &pair)?;
    rebuild(a, &format!("{}-bracket", a.name()), BiHomLie, bracket)
}

fn rb_prelie(a: &AlgebraInstance, r: &LinearOperator, left: bool, mode: Hypotheses) -> Result<AlgebraInstance> {
    use AlgebraKind::*;
    check_shapes(a, &[r])?;
    let (label, m) = a.sole_product()?;
    let zero = a.field().zero();
    if mode.checked() {
        let allowed: &[AlgebraKind] = if left {
            &[LeftBiHomLie, PlainLie]
        } else {
            &[RightBiHomLie, PlainLie]
        };
        require_kind(a, allowed, "needs a left (resp. right) BiHom-Lie algebra")?;
        require_input_valid(a)?;
        require_rota_baxter(a, label, r, &zero)?;
    }
    let id = LinearOperator::identity(a.field(), a.dim());
    let (product, kind, suffix) = if left {
        (m.conjugate(r, &id)?, LeftBiHomPreLie, "rb-left")
    } else {
        (m.conjugate(&id, r)?, RightBiHomPreLie, "rb-right")
    };
    rebuild(a, &format!("{}-{suffix}", a.name()), kind, product)
}

/// `x·y = [R(x), y]` for a weight-0 Rota-Baxter operator `R` commuting with
/// the structure maps of a left BiHom-Lie algebra.
pub fn rb_prelie_left(a: &AlgebraInstance, r: &LinearOperator, mode: Hypotheses) -> Result<AlgebraInstance> {
    rb_prelie(a, r, true, mode)
}

/// `x·y = [x, R(y)]`, the right-handed version of [`rb_prelie_left`].
pub fn rb_prelie_right(a: &AlgebraInstance, r: &LinearOperator, mode: Hypotheses) -> Result<AlgebraInstance> {
    rb_prelie(a, r, false, mode)
}

/// `m(R x, y) + m(x, R y) + λ m(x, y)`
fn rb_sum(m: &BilinearProduct, r: &LinearOperator, weight: &Scalar) -> Result<BilinearProduct> {
    let id = LinearOperator::identity(m.field(), m.dim());
    m.conjugate(r, &id)?.add(&m.conjugate(&id, r)?)?.add(&m.scaled(weight)?)
}

fn rb_derived(
    a: &AlgebraInstance,
    r: &LinearOperator,
    weight: &Scalar,
    allowed: &[AlgebraKind],
    reason: &'static str,
    mode: Hypotheses,
) -> Result<AlgebraInstance> {
    check_shapes(a, &[r])?;
    a.field().expect_same(weight.field())?;
    let (label, m) = a.sole_product()?;
    if mode.checked() {
        require_kind(a, allowed, reason)?;
        require_input_valid(a)?;
        require_rota_baxter(a, label, r, weight)?;
    }
    let product = rb_sum(m, r, weight)?;
    let out = a.with_product(label, product)?.with_name(format!("{}-rb", a.name()));
    Ok(out)
}

/// `{x, y} = [R(x), y] + [x, R(y)] + λ[x, y]` on a BiHom-Lie, left/right
/// BiHom-Lie or left/right BiHom-Leibniz algebra; the kind is preserved.
pub fn rb_derived_bracket(
    a: &AlgebraInstance,
    r: &LinearOperator,
    weight: &Scalar,
    mode: Hypotheses,
) -> Result<AlgebraInstance> {
    use AlgebraKind::*;
    rb_derived(
        a,
        r,
        weight,
        &[
            BiHomLie,
            LeftBiHomLie,
            RightBiHomLie,
            LeftBiHomLeibniz,
            RightBiHomLeibniz,
            PlainLie,
            PlainLeftLeibniz,
            PlainRightLeibniz,
        ],
        "needs a BiHom-Lie or BiHom-Leibniz algebra",
        mode,
    )
}

/// `a ∗ b = R(a)·b + a·R(b) + λ a·b` on a BiHom-associative algebra.
pub fn rb_assoc_derived_product(
    a: &AlgebraInstance,
    r: &LinearOperator,
    weight: &Scalar,
    mode: Hypotheses,
) -> Result<AlgebraInstance> {
    use AlgebraKind::*;
    rb_derived(
        a,
        r,
        weight,
        &[BiHomAssociative, PlainAssociative],
        "needs a BiHom-associative algebra",
        mode,
    )
}

/// Splits a BiHom-dendriform algebra with bijective structure maps into
/// `x ⊳ y = x≻y - (α⁻¹β(y))≺(αβ⁻¹(x))` (left BiHom-pre-Lie) and
/// `x ⊲ y = x≺y - (α⁻¹β(y))≻(αβ⁻¹(x))` (right BiHom-pre-Lie).
pub fn dendriform_to_prelie(a: &AlgebraInstance, mode: Hypotheses) -> Result<(AlgebraInstance, AlgebraInstance)> {
    let (prec, succ) = a.dendriform_products()?;
    if mode.checked() {
        require_input_valid(a)?;
    }
    let pair = twisting_pair(a)?;
    let left = antisymmetrize(succ, prec, &pair)?;
    let right = antisymmetrize(prec, succ, &pair)?;
    Ok((
        rebuild(a, &format!("{}-left", a.name()), AlgebraKind::LeftBiHomPreLie, left)?,
        rebuild(a, &format!("{}-right", a.name()), AlgebraKind::RightBiHomPreLie, right)?,
    ))
}

/// Dendriform structure `x≺y = x·R(y) + λ x·y`, `x≻y = R(x)·y` from a
/// Rota-Baxter operator of weight `λ` on a BiHom-associative algebra, used
/// to build dendriform fixtures.
pub fn rb_dendriform(
    a: &AlgebraInstance,
    r: &LinearOperator,
    weight: &Scalar,
    mode: Hypotheses,
) -> Result<AlgebraInstance> {
    use AlgebraKind::*;
    check_shapes(a, &[r])?;
    a.field().expect_same(weight.field())?;
    let (label, m) = a.sole_product()?;
    if mode.checked() {
        require_kind(
            a,
            &[BiHomAssociative, PlainAssociative],
            "needs a BiHom-associative algebra",
        )?;
        require_input_valid(a)?;
        require_rota_baxter(a, label, r, weight)?;
    }
    let id = LinearOperator::identity(a.field(), a.dim());
    AlgebraInstance::dendriform(
        format!("{}-dend", a.name()),
        a.basis_labels().to_vec(),
        m.conjugate(&id, r)?.add(&m.scaled(weight)?)?,
        m.conjugate(r, &id)?,
        a.alpha().clone(),
        a.beta().clone(),
    )
}

/// Requires bijective structure maps; shorthand for callers that want the
/// error before doing any work.
pub fn require_bijective(a: &AlgebraInstance) -> Result<()> {
    if is_bijective_pair(a) {
        Ok(())
    } else {
        Err(Error::NotBijective)
    }
}
