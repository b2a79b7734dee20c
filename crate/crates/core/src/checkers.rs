//! Exact identity checkers.
//!
//! Every identity is a multilinear expression in its arguments, so it holds on
//! the whole space iff it holds on all basis tuples. Each identity is written
//! once as a residual (`LHS - RHS`) on arbitrary vectors; the checkers
//! evaluate it on basis tuples in lexicographic order and report every tuple
//! with a nonzero residual.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{commutation_witnesses, validate_preamble, AlgebraInstance, AlgebraKind, ViolationWitness};
use crate::error::{Error, Result};
use crate::linalg::LinearOperator;
use crate::product::BilinearProduct;
use crate::scalar::{Field, Scalar};
use crate::vector::{self, add, sub};

pub const PREAMBLE_LABEL: &str = "preamble";
pub const RB_LABEL: &str = "RBrel";
pub const RB_ALPHA_LABEL: &str = "Ralpha:alpha";
pub const RB_BETA_LABEL: &str = "Ralpha:beta";
pub const RGRAF_LABEL: &str = "Rgraf";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `α(x)(yz) = (xy)β(z)`
    BiHomAssociativity,
    /// `[β(x), α(y)] = -[β(y), α(x)]`
    BiHomSkewSymmetry,
    /// cyclic sum of `[β²(x), [β(y), α(z)]]` vanishes
    BiHomJacobi,
    /// cyclic sum of `[[β(x), α(y)], α²(z)]` vanishes
    AlternativeJacobi,
    /// `[αβ(x), [y, z]] = [[β(x), y], β(z)] + [β(y), [α(x), z]]`
    LeftBiHomLeibniz,
    /// `[[x, y], αβ(z)] = [[x, β(z)], α(y)] + [α(x), [y, α(z)]]`
    RightBiHomLeibniz,
    /// `αβ(x)·(α(y)·z) - (β(x)·α(y))·β(z)` is symmetric in `x, y`
    LeftBiHomPreLie,
    /// `α(x)·(β(y)·α(z)) - (x·β(y))·αβ(z)` is symmetric in `y, z`
    RightBiHomPreLie,
    /// `(x≺y)≺β(z) = α(x)≺(y≺z + y≻z)`
    DendriformPrec,
    /// `(x≻y)≺β(z) = α(x)≻(y≺z)`
    DendriformMixed,
    /// `α(x)≻(y≻z) = (x≺y + x≻y)≻β(z)`
    DendriformSucc,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::BiHomAssociativity,
        Identity::BiHomSkewSymmetry,
        Identity::BiHomJacobi,
        Identity::AlternativeJacobi,
        Identity::LeftBiHomLeibniz,
        Identity::RightBiHomLeibniz,
        Identity::LeftBiHomPreLie,
        Identity::RightBiHomPreLie,
        Identity::DendriformPrec,
        Identity::DendriformMixed,
        Identity::DendriformSucc,
    ];

    /// Equation tag used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Identity::BiHomAssociativity => "eqasso",
            Identity::BiHomSkewSymmetry => "BHskewsym",
            Identity::BiHomJacobi => "BiHomJacobi",
            Identity::AlternativeJacobi => "altBiHomJacobi",
            Identity::LeftBiHomLeibniz => "leftBHleibniz",
            Identity::RightBiHomLeibniz => "rightBHleibniz",
            Identity::LeftBiHomPreLie => "lBHpL",
            Identity::RightBiHomPreLie => "rBHpL",
            Identity::DendriformPrec => "BiHomdend6",
            Identity::DendriformMixed => "BiHomdend7",
            Identity::DendriformSucc => "BiHomdend8",
        }
    }

    pub fn arity(self) -> usize {
        if self == Identity::BiHomSkewSymmetry {
            2
        } else {
            3
        }
    }

    pub fn is_dendriform(self) -> bool {
        matches!(
            self,
            Identity::DendriformPrec | Identity::DendriformMixed | Identity::DendriformSucc
        )
    }

    /// Identities making up the definition of `kind` (the preamble aside).
    pub fn for_kind(kind: AlgebraKind) -> &'static [Identity] {
        use AlgebraKind::*;
        match kind {
            BiHomAssociative | PlainAssociative => &[Identity::BiHomAssociativity],
            BiHomLie | PlainLie => &[Identity::BiHomSkewSymmetry, Identity::BiHomJacobi],
            LeftBiHomLie => &[Identity::BiHomSkewSymmetry, Identity::LeftBiHomLeibniz],
            RightBiHomLie => &[Identity::BiHomSkewSymmetry, Identity::RightBiHomLeibniz],
            LeftBiHomLeibniz | PlainLeftLeibniz => &[Identity::LeftBiHomLeibniz],
            RightBiHomLeibniz | PlainRightLeibniz => &[Identity::RightBiHomLeibniz],
            LeftBiHomPreLie | PlainLeftPreLie => &[Identity::LeftBiHomPreLie],
            RightBiHomPreLie | PlainRightPreLie => &[Identity::RightBiHomPreLie],
            BiHomDendriform => &[
                Identity::DendriformPrec,
                Identity::DendriformMixed,
                Identity::DendriformSucc,
            ],
        }
    }
}

/// Products and maps of one instance, ready for evaluation.
struct Evaluator<'a> {
    alpha: &'a LinearOperator,
    beta: &'a LinearOperator,
    products: Products<'a>,
}

enum Products<'a> {
    Single(&'a BilinearProduct),
    Dendriform {
        prec: &'a BilinearProduct,
        succ: &'a BilinearProduct,
    },
}

impl<'a> Evaluator<'a> {
    fn new(a: &'a AlgebraInstance, identity: Identity) -> Result<Self> {
        let products = if identity.is_dendriform() {
            let (prec, succ) = a.dendriform_products()?;
            Products::Dendriform { prec, succ }
        } else {
            Products::Single(a.sole_product()?.1)
        };
        Ok(Evaluator {
            alpha: a.alpha(),
            beta: a.beta(),
            products,
        })
    }

    fn a(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.alpha.apply_unchecked(x)
    }

    fn b(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.beta.apply_unchecked(x)
    }

    fn m(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        match self.products {
            Products::Single(m) => m.apply_unchecked(x, y),
            Products::Dendriform { .. } => unreachable!("single-product identity"),
        }
    }

    fn prec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        match self.products {
            Products::Dendriform { prec, .. } => prec.apply_unchecked(x, y),
            Products::Single(_) => unreachable!("dendriform identity"),
        }
    }

    fn succ(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        match self.products {
            Products::Dendriform { succ, .. } => succ.apply_unchecked(x, y),
            Products::Single(_) => unreachable!("dendriform identity"),
        }
    }

    fn jacobi_term(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        self.m(&self.b(&self.b(x)), &self.m(&self.b(y), &self.a(z)))
    }

    fn alt_jacobi_term(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        self.m(&self.m(&self.b(x), &self.a(y)), &self.a(&self.a(z)))
    }

    fn left_associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let ab_x = self.a(&self.b(x));
        let lhs = self.m(&ab_x, &self.m(&self.a(y), z));
        let rhs = self.m(&self.m(&self.b(x), &self.a(y)), &self.b(z));
        sub(&lhs, &rhs)
    }

    fn right_associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let lhs = self.m(&self.a(x), &self.m(&self.b(y), &self.a(z)));
        let rhs = self.m(&self.m(x, &self.b(y)), &self.a(&self.b(z)));
        sub(&lhs, &rhs)
    }

    fn residual(&self, identity: Identity, args: &[&[Scalar]]) -> Vec<Scalar> {
        let x = args[0];
        let y = args[1];
        match identity {
            Identity::BiHomSkewSymmetry => add(&self.m(&self.b(x), &self.a(y)), &self.m(&self.b(y), &self.a(x))),
            _ => {
                let z = args[2];
                self.residual3(identity, x, y, z)
            }
        }
    }

    fn residual3(&self, identity: Identity, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        match identity {
            Identity::BiHomAssociativity => {
                let lhs = self.m(&self.a(x), &self.m(y, z));
                let rhs = self.m(&self.m(x, y), &self.b(z));
                sub(&lhs, &rhs)
            }
            Identity::BiHomJacobi => {
                let t1 = self.jacobi_term(x, y, z);
                let t2 = self.jacobi_term(y, z, x);
                let t3 = self.jacobi_term(z, x, y);
                add(&add(&t1, &t2), &t3)
            }
            Identity::AlternativeJacobi => {
                let t1 = self.alt_jacobi_term(x, y, z);
                let t2 = self.alt_jacobi_term(y, z, x);
                let t3 = self.alt_jacobi_term(z, x, y);
                add(&add(&t1, &t2), &t3)
            }
            Identity::LeftBiHomLeibniz => {
                let lhs = self.m(&self.a(&self.b(x)), &self.m(y, z));
                let r1 = self.m(&self.m(&self.b(x), y), &self.b(z));
                let r2 = self.m(&self.b(y), &self.m(&self.a(x), z));
                sub(&sub(&lhs, &r1), &r2)
            }
            Identity::RightBiHomLeibniz => {
                let lhs = self.m(&self.m(x, y), &self.a(&self.b(z)));
                let r1 = self.m(&self.m(x, &self.b(z)), &self.a(y));
                let r2 = self.m(&self.a(x), &self.m(y, &self.a(z)));
                sub(&sub(&lhs, &r1), &r2)
            }
            Identity::LeftBiHomPreLie => sub(&self.left_associator(x, y, z), &self.left_associator(y, x, z)),
            Identity::RightBiHomPreLie => sub(&self.right_associator(x, y, z), &self.right_associator(x, z, y)),
            Identity::DendriformPrec => {
                let lhs = self.prec(&self.prec(x, y), &self.b(z));
                let rhs = self.prec(&self.a(x), &add(&self.prec(y, z), &self.succ(y, z)));
                sub(&lhs, &rhs)
            }
            Identity::DendriformMixed => {
                let lhs = self.prec(&self.succ(x, y), &self.b(z));
                let rhs = self.succ(&self.a(x), &self.prec(y, z));
                sub(&lhs, &rhs)
            }
            Identity::DendriformSucc => {
                let lhs = self.succ(&self.a(x), &self.succ(y, z));
                let rhs = self.succ(&add(&self.prec(x, y), &self.succ(x, y)), &self.b(z));
                sub(&lhs, &rhs)
            }
            Identity::BiHomSkewSymmetry => unreachable!(),
        }
    }
}

/// Evaluates `LHS - RHS` of `identity` on arbitrary vectors.
pub fn residual(a: &AlgebraInstance, identity: Identity, args: &[&[Scalar]]) -> Result<Vec<Scalar>> {
    if args.len() != identity.arity() {
        return Err(Error::DimensionMismatch {
            expected: identity.arity(),
            found: args.len(),
        });
    }
    for v in args {
        vector::check(a.field(), a.dim(), v)?;
    }
    Ok(Evaluator::new(a, identity)?.residual(identity, args))
}

/// Basis tuples of the given arity in lexicographic order.
pub(crate) fn basis_tuples(dim: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(arity as u32);
    (0..total).map(move |mut n| {
        let mut t = alloc::vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = n % dim;
            n /= dim;
        }
        t
    })
}

pub fn check_identity(a: &AlgebraInstance, identity: Identity) -> Result<Vec<ViolationWitness>> {
    let ev = Evaluator::new(a, identity)?;
    let basis: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| vector::basis(a.field(), a.dim(), i)).collect();
    Ok(basis_tuples(a.dim(), identity.arity())
        .filter_map(|t| {
            let args: Vec<&[Scalar]> = t.iter().map(|&i| basis[i].as_slice()).collect();
            ViolationWitness::from_residual(identity.label(), &t, ev.residual(identity, &args))
        })
        .collect())
}

pub fn check_bihom_associativity(a: &AlgebraInstance) -> Result<Vec<ViolationWitness>> {
    check_identity(a, Identity::BiHomAssociativity)
}

pub fn check_bihom_skew_symmetry(a: &AlgebraInstance) -> Result<Vec<ViolationWitness>> {
    check_identity(a, Identity::BiHomSkewSymmetry)
}

pub fn check_bihom_jacobi(a: &AlgebraInstance) -> Result<Vec<ViolationWitness>> {
    check_identity(a, Identity::BiHomJacobi)
}

pub fn check_alternative_jacobi(a: &AlgebraInstance) -> Result<Vec<ViolationWitness>> {
    check_identity(a, Identity::AlternativeJacobi)
}

pub fn check_left_bihom_leibniz(a: &AlgebraInstance) -> Result<Vec<ViolationWitness>> {
    check_identity(a, Identity::LeftBiHomLeibniz)
}

pub fn check_right_bihom_leibniz(a: &AlgebraInstance) -> Result<Vec<ViolationWitness>> {
    check_identity(a, Identity::RightBiHomLeibniz)
}

pub fn check_left_bihom_prelie(a: &AlgebraInstance) -> Result<Vec<ViolationWitness>> {
    check_identity(a, Identity::LeftBiHomPreLie)
}

pub fn check_right_bihom_prelie(a: &AlgebraInstance) -> Result<Vec<ViolationWitness>> {
    check_identity(a, Identity::RightBiHomPreLie)
}

/// All three dendriform axioms, in order.
pub fn check_bihom_dendriform(a: &AlgebraInstance) -> Result<Vec<ViolationWitness>> {
    let mut out = check_identity(a, Identity::DendriformPrec)?;
    out.extend(check_identity(a, Identity::DendriformMixed)?);
    out.extend(check_identity(a, Identity::DendriformSucc)?);
    Ok(out)
}

/// Outcome of one named clause of a kind check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub label: String,
    pub witnesses: Vec<ViolationWitness>,
}

impl IdentityOutcome {
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Preamble followed by every identity of `kind`, one outcome each.
pub fn check_as(a: &AlgebraInstance, kind: AlgebraKind) -> Result<Vec<IdentityOutcome>> {
    let mut out = alloc::vec![IdentityOutcome {
        label: PREAMBLE_LABEL.to_string(),
        witnesses: validate_preamble(a),
    }];
    for &id in Identity::for_kind(kind) {
        out.push(IdentityOutcome {
            label: id.label().to_string(),
            witnesses: check_identity(a, id)?,
        });
    }
    Ok(out)
}

/// Runs the preamble and the identity set of the instance's declared kind.
pub fn check_kind_detailed(a: &AlgebraInstance) -> Vec<IdentityOutcome> {
    check_as(a, a.kind()).expect("declared kind matches product arity")
}

pub fn check_kind(a: &AlgebraInstance) -> Vec<ViolationWitness> {
    check_kind_detailed(a).into_iter().flat_map(|o| o.witnesses).collect()
}

/// `m(Rx, Ry) - R(m(Rx, y) + m(x, Ry) + λ m(x, y))`
pub fn rota_baxter_residual(
    m: &BilinearProduct,
    r: &LinearOperator,
    weight: &Scalar,
    x: &[Scalar],
    y: &[Scalar],
) -> Vec<Scalar> {
    let rx = r.apply_unchecked(x);
    let ry = r.apply_unchecked(y);
    let lhs = m.apply_unchecked(&rx, &ry);
    let inner = add(
        &add(&m.apply_unchecked(&rx, y), &m.apply_unchecked(x, &ry)),
        &vector::scale(weight, &m.apply_unchecked(x, y)),
    );
    sub(&lhs, &r.apply_unchecked(&inner))
}

fn check_rb_inputs(a: &AlgebraInstance, r: &LinearOperator, weight: &Scalar) -> Result<()> {
    a.check_operator(r)?;
    a.field().expect_same(weight.field())
}

/// Rota-Baxter condition of weight `weight` on all basis pairs, then
/// `R∘α = α∘R` and `R∘β = β∘R`.
pub fn check_rota_baxter(
    a: &AlgebraInstance,
    product_label: &str,
    r: &LinearOperator,
    weight: &Scalar,
) -> Result<Vec<ViolationWitness>> {
    check_rb_inputs(a, r, weight)?;
    let m = a.product(product_label)?;
    let mut out = rota_baxter_condition(m, r, weight);
    out.extend(commutation_witnesses(RB_ALPHA_LABEL, r, a.alpha())?);
    out.extend(commutation_witnesses(RB_BETA_LABEL, r, a.beta())?);
    Ok(out)
}

/// The Rota-Baxter condition alone, on all basis pairs of `m`.
pub fn rota_baxter_condition(m: &BilinearProduct, r: &LinearOperator, weight: &Scalar) -> Vec<ViolationWitness> {
    let field: Field = m.field();
    let d = m.dim();
    let basis: Vec<Vec<Scalar>> = (0..d).map(|i| vector::basis(field, d, i)).collect();
    basis_tuples(d, 2)
        .filter_map(|t| {
            let res = rota_baxter_residual(m, r, weight, &basis[t[0]], &basis[t[1]]);
            ViolationWitness::from_residual(RB_LABEL, &t, res)
        })
        .collect()
}

/// `R({x, y}) = [R(x), R(y)]` on all basis pairs.
pub fn check_rgraf(
    bracket: &BilinearProduct,
    derived: &BilinearProduct,
    r: &LinearOperator,
) -> Result<Vec<ViolationWitness>> {
    let lhs = derived.post_compose(r)?;
    let rhs = bracket.conjugate(r, r)?;
    Ok(basis_tuples(bracket.dim(), 2)
        .filter_map(|t| {
            let res = sub(lhs.basis_product(t[0], t[1]), rhs.basis_product(t[0], t[1]));
            ViolationWitness::from_residual(RGRAF_LABEL, &t, res)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::default_basis;
    use alloc::vec;

    const Q: Field = Field::Rational;

    fn sl2_with(he: i64) -> AlgebraInstance {
        let m = BilinearProduct::from_i64_entries(
            Q,
            3,
            &[
                (0, 1, 1, he),
                (1, 0, 1, -he),
                (0, 2, 2, -2),
                (2, 0, 2, 2),
                (1, 2, 0, 1),
                (2, 1, 0, -1),
            ],
        )
        .unwrap();
        AlgebraInstance::untwisted("sl2", AlgebraKind::PlainLie, default_basis(3), m).unwrap()
    }

    fn plain(kind: AlgebraKind, dim: usize, entries: &[(usize, usize, usize, i64)]) -> AlgebraInstance {
        let m = BilinearProduct::from_i64_entries(Q, dim, entries).unwrap();
        AlgebraInstance::untwisted("t", kind, default_basis(dim), m).unwrap()
    }

    fn z2group() -> AlgebraInstance {
        plain(
            AlgebraKind::PlainAssociative,
            2,
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)],
        )
    }

    #[test]
    fn tuples_are_lexicographic() {
        let t: Vec<_> = basis_tuples(2, 2).collect();
        assert_eq!(t, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(basis_tuples(3, 3).count(), 27);
    }

    #[test]
    fn zero_product_satisfies_everything() {
        let z = plain(AlgebraKind::PlainLie, 2, &[]);
        for id in Identity::ALL.into_iter().filter(|i| !i.is_dendriform()) {
            assert!(check_identity(&z, id).unwrap().is_empty(), "{id:?}");
        }
    }

    #[test]
    fn sl2_is_lie() {
        let a = sl2_with(2);
        assert!(check_kind(&a).is_empty());
        assert!(check_alternative_jacobi(&a).unwrap().is_empty());
        assert!(check_left_bihom_leibniz(&a).unwrap().is_empty());
        assert!(check_right_bihom_leibniz(&a).unwrap().is_empty());
    }

    #[test]
    fn sl2_with_wrong_constant_breaks_jacobi() {
        // [h,e] = 3e: J(h,e,f) = [h,[e,f]] + [e,[f,h]] + [f,[h,e]] = 0 + [e, 2f] + [f, 3e] = 2h - 3h = -h
        let w = check_bihom_jacobi(&sl2_with(3)).unwrap();
        let hef = w.iter().find(|w| w.basis_indices == vec![0, 1, 2]).unwrap();
        assert_eq!(hef.residual, vec![Q.from_i64(-1), Q.zero(), Q.zero()]);
    }

    #[test]
    fn skew_symmetry_witness() {
        let a = sl2_with(2);
        let (_, m) = a.sole_product().unwrap();
        // c[0][1] := +c[1][0], i.e. [h,e] = -2e = [e,h]
        let bad = m.with_coeff(0, 1, 1, Q.from_i64(-2)).unwrap();
        let a = a.with_product("bracket", bad).unwrap();
        let w = check_bihom_skew_symmetry(&a).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w[0].basis_indices, vec![0, 1]);
        assert_eq!(w[0].residual, vec![Q.zero(), Q.from_i64(-4), Q.zero()]);
        assert_eq!(w[1].basis_indices, vec![1, 0]);
    }

    #[test]
    fn leibniz_but_not_right_leibniz() {
        // [e1,e1] = e2: every double bracket vanishes, so both hold
        let a = plain(AlgebraKind::PlainLeftLeibniz, 2, &[(0, 0, 1, 1)]);
        assert!(check_left_bihom_leibniz(&a).unwrap().is_empty());
        assert!(check_right_bihom_leibniz(&a).unwrap().is_empty());
        // [e1,e1] = e2, [e1,e2] = e2 is a classical left Leibniz algebra that is not right Leibniz:
        // right: [[e1,e1],e1] - [[e1,e1],e1] - [e1,[e1,e1]] = -[e1,e2] = -e2
        let b = plain(AlgebraKind::PlainLeftLeibniz, 2, &[(0, 0, 1, 1), (0, 1, 1, 1)]);
        assert!(check_left_bihom_leibniz(&b).unwrap().is_empty());
        let w = check_right_bihom_leibniz(&b).unwrap();
        assert_eq!(w[0].basis_indices, vec![0, 0, 0]);
        assert_eq!(w[0].residual, vec![Q.zero(), Q.from_i64(-1)]);
    }

    #[test]
    fn associative_algebras_are_pre_lie() {
        let a = z2group();
        assert!(check_bihom_associativity(&a).unwrap().is_empty());
        assert!(check_left_bihom_prelie(&a).unwrap().is_empty());
        assert!(check_right_bihom_prelie(&a).unwrap().is_empty());
    }

    #[test]
    fn constant_product_is_associative() {
        // e_i e_j = e1 for all i, j: (e_i e_j) e_k = e1 e_k = e1 and e_i (e_j e_k) = e_i e1 = e1
        let mut entries = vec![];
        for i in 0..2 {
            for j in 0..2 {
                entries.push((i, j, 0, 1));
            }
        }
        let a = plain(AlgebraKind::PlainAssociative, 2, &entries);
        assert!(check_bihom_associativity(&a).unwrap().is_empty());
    }

    #[test]
    fn dendriform_arity_enforced() {
        let a = z2group();
        assert!(matches!(check_bihom_dendriform(&a), Err(Error::ProductArity { .. })));
    }

    #[test]
    fn rota_baxter_trivial_operators() {
        let a = sl2_with(2);
        let zero = LinearOperator::zero(Q, 3);
        let id = LinearOperator::identity(Q, 3);
        assert!(check_rota_baxter(&a, "bracket", &zero, &Q.zero()).unwrap().is_empty());
        assert!(check_rota_baxter(&a, "bracket", &id, &Q.from_i64(-1))
            .unwrap()
            .is_empty());
        let w = check_rota_baxter(&a, "bracket", &id, &Q.zero()).unwrap();
        assert!(!w.is_empty());
        assert!(w.iter().all(|w| w.identity_label == RB_LABEL));
    }

    #[test]
    fn rota_baxter_commutation_clause() {
        // R = e1 ↦ 0, e2 ↦ e1 ... commutes with nothing diagonal and nonscalar
        let z = plain(AlgebraKind::PlainLie, 2, &[]);
        let alpha = LinearOperator::diagonal(Q, &[Q.one(), Q.from_i64(2)]).unwrap();
        let a = z
            .with_kind(AlgebraKind::BiHomLie)
            .unwrap()
            .with_maps(alpha.clone(), alpha)
            .unwrap();
        let r = LinearOperator::from_i64_rows(Q, &[&[0, 1], &[0, 0]]).unwrap();
        let w = check_rota_baxter(&a, "bracket", &r, &Q.zero()).unwrap();
        let labels: Vec<_> = w.iter().map(|w| w.identity_label.as_str()).collect();
        assert_eq!(labels, vec![RB_ALPHA_LABEL, RB_BETA_LABEL]);
    }
}
