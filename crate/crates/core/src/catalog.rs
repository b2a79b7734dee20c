//! Small hand-auditable algebras over `Q` with known-good twisting maps.
//!
//! The untwisted entries use textbook structure constants. The `-bihom`
//! entries are twists of those by their first non-identity suggested pair,
//! so they carry non-identity structure maps.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{default_basis, AlgebraInstance, AlgebraKind};
use crate::constructions::{rb_dendriform, yau_twist, Hypotheses};
use crate::error::{Error, Result};
use crate::linalg::LinearOperator;
use crate::product::BilinearProduct;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub instance: AlgebraInstance,
    pub notes: String,
    /// Commuting pairs `(f, g)` of morphisms of `instance` that also commute
    /// with its structure maps, i.e. valid Yau-twist data.
    pub suggested_maps: Vec<(LinearOperator, LinearOperator)>,
}

const Q: Field = Field::Rational;

const IDS: [&str; 15] = [
    "abelian2",
    "aff1",
    "sl2",
    "heis3",
    "leibniz2",
    "prelie2",
    "z2group",
    "uptri2",
    "dend3",
    "aff1-bihom",
    "sl2-bihom",
    "leibniz2-bihom",
    "prelie2-bihom",
    "z2group-bihom",
    "uptri2-bihom",
];

pub fn catalog_list() -> Vec<&'static str> {
    IDS.to_vec()
}

pub fn catalog_get(id: &str) -> Result<CatalogEntry> {
    match id {
        "abelian2" => Ok(abelian2()),
        "aff1" => Ok(aff1()),
        "sl2" => Ok(sl2()),
        "heis3" => Ok(heis3()),
        "leibniz2" => Ok(leibniz2()),
        "prelie2" => Ok(prelie2()),
        "z2group" => Ok(z2group()),
        "uptri2" => Ok(uptri2()),
        "dend3" => Ok(dend3()),
        _ => match id.strip_suffix("-bihom") {
            Some(base @ ("aff1" | "sl2" | "leibniz2" | "prelie2" | "z2group" | "uptri2")) => {
                Ok(twisted(catalog_get(base)?))
            }
            _ => Err(Error::UnknownEntry(id.to_string())),
        },
    }
}

/// Every entry, in [`catalog_list`] order.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    IDS.iter().map(|id| catalog_get(id).expect("listed id")).collect()
}

fn q(n: i64, d: i64) -> Scalar {
    Q.ratio(n, d).expect("nonzero denominator")
}

fn diag(xs: &[(i64, i64)]) -> LinearOperator {
    let d: Vec<Scalar> = xs.iter().map(|&(n, den)| q(n, den)).collect();
    LinearOperator::diagonal(Q, &d).expect("well formed")
}

fn id(dim: usize) -> LinearOperator {
    LinearOperator::identity(Q, dim)
}

fn labels(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn entry(
    id: &str,
    kind: AlgebraKind,
    basis: Vec<String>,
    constants: &[(usize, usize, usize, i64)],
    notes: &str,
    suggested_maps: Vec<(LinearOperator, LinearOperator)>,
) -> CatalogEntry {
    let dim = basis.len();
    let m = BilinearProduct::from_i64_entries(Q, dim, constants).expect("well formed");
    CatalogEntry {
        id: id.to_string(),
        instance: AlgebraInstance::untwisted(id, kind, basis, m).expect("well formed"),
        notes: notes.to_string(),
        suggested_maps,
    }
}

fn abelian2() -> CatalogEntry {
    entry(
        "abelian2",
        AlgebraKind::PlainLie,
        default_basis(2),
        &[],
        "Two-dimensional abelian Lie algebra: every bracket is zero, so every linear map is a morphism.",
        vec![(id(2), id(2)), (diag(&[(2, 1), (1, 1)]), diag(&[(1, 1), (3, 1)]))],
    )
}

fn aff1() -> CatalogEntry {
    entry(
        "aff1",
        AlgebraKind::PlainLie,
        default_basis(2),
        &[(0, 1, 1, 1), (1, 0, 1, -1)],
        "Non-abelian two-dimensional Lie algebra (affine line): [e1,e2] = e2. diag(1,t) is an automorphism for t != 0.",
        vec![(id(2), id(2)), (diag(&[(1, 1), (2, 1)]), diag(&[(1, 1), (3, 1)]))],
    )
}

fn sl2() -> CatalogEntry {
    entry(
        "sl2",
        AlgebraKind::PlainLie,
        labels(&["h", "e", "f"]),
        &[
            (0, 1, 1, 2),
            (1, 0, 1, -2),
            (0, 2, 2, -2),
            (2, 0, 2, 2),
            (1, 2, 0, 1),
            (2, 1, 0, -1),
        ],
        "sl(2) in the Chevalley basis: [h,e] = 2e, [h,f] = -2f, [e,f] = h. The torus diag(1,t,1/t) acts by automorphisms.",
        vec![
            (id(3), id(3)),
            (diag(&[(1, 1), (2, 1), (1, 2)]), diag(&[(1, 1), (3, 1), (1, 3)])),
        ],
    )
}

fn heis3() -> CatalogEntry {
    entry(
        "heis3",
        AlgebraKind::PlainLie,
        default_basis(3),
        &[(0, 1, 2, 1), (1, 0, 2, -1)],
        "Three-dimensional Heisenberg algebra: [e1,e2] = e3 central. diag(a,b,ab) is an automorphism for ab != 0.",
        vec![
            (id(3), id(3)),
            (diag(&[(1, 1), (2, 1), (2, 1)]), diag(&[(3, 1), (1, 1), (3, 1)])),
        ],
    )
}

fn leibniz2() -> CatalogEntry {
    entry(
        "leibniz2",
        AlgebraKind::PlainLeftLeibniz,
        default_basis(2),
        &[(0, 0, 1, 1)],
        "Two-dimensional Leibniz algebra with [e1,e1] = e2; not skew-symmetric, hence not Lie. diag(a,a^2) is an automorphism.",
        vec![
            (id(2), id(2)),
            (diag(&[(2, 1), (4, 1)]), diag(&[(3, 1), (9, 1)])),
        ],
    )
}

fn prelie2() -> CatalogEntry {
    entry(
        "prelie2",
        AlgebraKind::PlainLeftPreLie,
        default_basis(2),
        &[(0, 0, 1, 1)],
        "Two-dimensional algebra with e1.e1 = e2 (commutative, associative, hence left pre-Lie). diag(a,a^2) is an automorphism.",
        vec![
            (id(2), id(2)),
            (diag(&[(2, 1), (4, 1)]), diag(&[(3, 1), (9, 1)])),
        ],
    )
}

fn z2group() -> CatalogEntry {
    entry(
        "z2group",
        AlgebraKind::PlainAssociative,
        labels(&["e0", "e1"]),
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)],
        "Group algebra of Z/2 with basis the group elements e0 = 1, e1 = g. The character twist diag(1,-1) is an automorphism.",
        vec![
            (id(2), id(2)),
            (diag(&[(1, 1), (-1, 1)]), diag(&[(1, 1), (-1, 1)])),
        ],
    )
}

fn uptri2() -> CatalogEntry {
    entry(
        "uptri2",
        AlgebraKind::PlainAssociative,
        labels(&["E11", "E12", "E22"]),
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
        "Upper triangular 2x2 matrices with matrix-unit basis. Conjugation by diag(1,t) gives the automorphism diag(1,t,1).",
        vec![
            (id(3), id(3)),
            (diag(&[(1, 1), (2, 1), (1, 1)]), diag(&[(1, 1), (3, 1), (1, 1)])),
        ],
    )
}

/// `R(E11) = R(E22) = E12`, `R(E12) = 0`: weight-0 Rota-Baxter on `uptri2`.
pub fn uptri2_rota_baxter() -> LinearOperator {
    LinearOperator::from_i64_rows(Q, &[&[0, 0, 0], &[1, 0, 1], &[0, 0, 0]]).expect("well formed")
}

fn dend3() -> CatalogEntry {
    let base = uptri2().instance;
    let instance = rb_dendriform(&base, &uptri2_rota_baxter(), &base.field().zero(), Hypotheses::Check)
        .expect("weight-0 Rota-Baxter operator")
        .with_name("dend3");
    CatalogEntry {
        id: "dend3".to_string(),
        instance,
        notes: "Dendriform structure x<y = xR(y), x>y = R(x)y on uptri2 from the weight-0 Rota-Baxter operator R(E11) = R(E22) = E12, R(E12) = 0.".to_string(),
        suggested_maps: vec![(id(3), id(3))],
    }
}

fn twisted(base: CatalogEntry) -> CatalogEntry {
    let (f, g) = base
        .suggested_maps
        .iter()
        .find(|(f, g)| !(f.is_identity() && g.is_identity()))
        .cloned()
        .expect("every base entry lists a non-identity pair");
    let id = alloc::format!("{}-bihom", base.id);
    let instance = yau_twist(&base.instance, &f, &g, Hypotheses::Check)
        .expect("suggested maps satisfy the twist hypotheses")
        .with_name(id.clone());
    // diagonal maps commute with the diagonal twist, so the base list stays valid
    let notes = alloc::format!("Yau twist of {} by alpha = {f}, beta = {g}.", base.id);
    CatalogEntry {
        id,
        instance,
        notes,
        suggested_maps: base.suggested_maps,
    }
}
