//! Finding and certifying Rota-Baxter operators.
//!
//! [`enumerate_rb_fp`] walks a whole ansatz family of matrices over `F_p` in
//! lexicographic order of the row-major entries. Candidates are screened by a
//! word-sized predicate and every hit is re-certified with the exact checker
//! before it is returned. [`lift_to_rationals`] then looks for small-height
//! rational preimages of an `F_p` solution that still satisfy the identity
//! over `Q`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::AlgebraInstance;
use crate::checkers::check_rota_baxter;
use crate::error::{Error, Result};
use crate::linalg::LinearOperator;
use crate::scalar::{Field, Scalar};

/// Largest family `enumerate_rb_fp` will walk.
pub const BUDGET_LOG2: u32 = 25;

/// Which entries of the candidate matrix are free; the rest are zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Ansatz {
    #[default]
    Full,
    UpperTriangular,
    Diagonal,
    /// Strictly upper triangular.
    Nilpotent,
}

impl Ansatz {
    pub const ALL: [Ansatz; 4] = [
        Ansatz::Full,
        Ansatz::UpperTriangular,
        Ansatz::Diagonal,
        Ansatz::Nilpotent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Ansatz::Full => "full",
            Ansatz::UpperTriangular => "upper-triangular",
            Ansatz::Diagonal => "diagonal",
            Ansatz::Nilpotent => "nilpotent",
        }
    }

    pub fn is_free(self, row: usize, col: usize) -> bool {
        match self {
            Ansatz::Full => true,
            Ansatz::UpperTriangular => row <= col,
            Ansatz::Diagonal => row == col,
            Ansatz::Nilpotent => row < col,
        }
    }

    /// Row-major positions of the free entries.
    pub fn free_positions(self, dim: usize) -> Vec<(usize, usize)> {
        (0..dim)
            .flat_map(|r| (0..dim).map(move |c| (r, c)))
            .filter(|&(r, c)| self.is_free(r, c))
            .collect()
    }
}

impl fmt::Display for Ansatz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Ansatz {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ansatz::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or(Error::InvalidConfig("unknown ansatz"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    modulus: u64,
    weight: Scalar,
    require_commute_with_maps: bool,
    ansatz: Ansatz,
    max_candidates: usize,
}

impl SearchConfig {
    pub const DEFAULT_MODULUS: u64 = 5;
    pub const DEFAULT_MAX_CANDIDATES: usize = 100_000;

    /// `weight` may be given over `Q`; it is reduced mod `modulus`.
    pub fn new(modulus: u64, weight: &Scalar) -> Result<Self> {
        let field = Field::prime(modulus)?;
        let weight = match weight.field() {
            Field::Rational => weight.reduce_mod(modulus)?,
            other => {
                field.expect_same(other)?;
                weight.clone()
            }
        };
        Ok(SearchConfig {
            modulus,
            weight,
            require_commute_with_maps: true,
            ansatz: Ansatz::Full,
            max_candidates: Self::DEFAULT_MAX_CANDIDATES,
        })
    }

    pub fn with_ansatz(mut self, ansatz: Ansatz) -> Self {
        self.ansatz = ansatz;
        self
    }

    pub fn with_commute_requirement(mut self, require: bool) -> Self {
        self.require_commute_with_maps = require;
        self
    }

    pub fn with_max_candidates(mut self, max: usize) -> Result<Self> {
        if max == 0 {
            return Err(Error::InvalidConfig("max_candidates must be at least 1"));
        }
        self.max_candidates = max;
        Ok(self)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn require_commute_with_maps(&self) -> bool {
        self.require_commute_with_maps
    }

    pub fn ansatz(&self) -> Ansatz {
        self.ansatz
    }

    pub fn max_candidates(&self) -> usize {
        self.max_candidates
    }

    /// Number of matrices in the ansatz family, `None` on overflow.
    pub fn family_size(&self, dim: usize) -> Option<u64> {
        let free = u32::try_from(self.ansatz.free_positions(dim).len()).ok()?;
        self.modulus.checked_pow(free)
    }

    /// Budget guard: the family may hold at most `2^BUDGET_LOG2` matrices.
    pub fn check_budget(&self, dim: usize) -> Result<()> {
        match self.family_size(dim) {
            Some(n) if n <= 1u64 << BUDGET_LOG2 => Ok(()),
            size => Err(Error::BudgetExceeded {
                family_size: match size {
                    Some(n) => n.to_string(),
                    None => alloc::format!("{}^{}", self.modulus, self.ansatz.free_positions(dim).len()),
                },
                budget_log2: BUDGET_LOG2,
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorSource {
    Enumeration,
    Lift,
    UserProvided,
}

impl OperatorSource {
    pub fn name(self) -> &'static str {
        match self {
            OperatorSource::Enumeration => "enumeration",
            OperatorSource::Lift => "lift",
            OperatorSource::UserProvided => "user",
        }
    }
}

/// A Rota-Baxter operator that passed [`check_rota_baxter`] on the product
/// named by [`CertifiedOperator::product_label`]. Only this module builds
/// values of this type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CertifiedOperator {
    operator: LinearOperator,
    weight: Scalar,
    product_label: String,
    source: OperatorSource,
}

impl CertifiedOperator {
    pub fn operator(&self) -> &LinearOperator {
        &self.operator
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn field(&self) -> Field {
        self.operator.field()
    }

    pub fn product_label(&self) -> &str {
        &self.product_label
    }

    pub fn source(&self) -> OperatorSource {
        self.source
    }

    pub fn verified(&self) -> bool {
        true
    }

    pub fn into_operator(self) -> LinearOperator {
        self.operator
    }
}

fn certify(
    a: &AlgebraInstance,
    label: &str,
    r: LinearOperator,
    weight: &Scalar,
    source: OperatorSource,
) -> Result<CertifiedOperator> {
    let witnesses = check_rota_baxter(a, label, &r, weight)?;
    if !witnesses.is_empty() {
        return Err(Error::hypothesis(
            alloc::format!("R is a Rota-Baxter operator of weight {weight} commuting with alpha, beta"),
            witnesses,
        ));
    }
    Ok(CertifiedOperator {
        operator: r,
        weight: weight.clone(),
        product_label: label.to_string(),
        source,
    })
}

/// Certifies a caller-supplied operator on the sole product of `a`, or fails
/// with every witness attached.
pub fn verify_user_operator(a: &AlgebraInstance, r: &LinearOperator, weight: &Scalar) -> Result<CertifiedOperator> {
    let (label, _) = a.sole_product()?;
    certify(a, label, r.clone(), weight, OperatorSource::UserProvided)
}

/// Word-sized copy of the data needed by the predicate.
struct FastModel {
    p: u64,
    d: usize,
    /// `c[(i*d + j)*d + k]`
    c: Vec<u64>,
    alpha: Vec<u64>,
    beta: Vec<u64>,
    weight: u64,
}

impl FastModel {
    fn residues(xs: &[Scalar]) -> Vec<u64> {
        xs.iter().map(|x| x.fp_value().expect("prime field")).collect()
    }

    fn new(a: &AlgebraInstance, label: &str, weight: &Scalar) -> Result<Self> {
        let m = a.product(label)?;
        let d = a.dim();
        let mut c = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                c.extend(Self::residues(m.basis_product(i, j)));
            }
        }
        Ok(FastModel {
            p: a.field().modulus().expect("prime field"),
            d,
            c,
            alpha: Self::residues(a.alpha().entries()),
            beta: Self::residues(a.beta().entries()),
            weight: weight.fp_value().expect("prime field"),
        })
    }

    fn mul(&self, x: u64, y: u64) -> u64 {
        ((x as u128 * y as u128) % self.p as u128) as u64
    }

    fn add(&self, x: u64, y: u64) -> u64 {
        (x + y) % self.p
    }

    fn commutes(&self, r: &[u64], f: &[u64]) -> bool {
        let d = self.d;
        for row in 0..d {
            for col in 0..d {
                let (mut rf, mut fr) = (0, 0);
                for k in 0..d {
                    rf = self.add(rf, self.mul(r[row * d + k], f[k * d + col]));
                    fr = self.add(fr, self.mul(f[row * d + k], r[k * d + col]));
                }
                if rf != fr {
                    return false;
                }
            }
        }
        true
    }

    /// `Σ_{a,b} x_a y_b c[a][b]`
    fn product(&self, x: &[u64], y: &[u64], out: &mut [u64]) {
        let d = self.d;
        out.fill(0);
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (b, &yb) in y.iter().enumerate() {
                if yb == 0 {
                    continue;
                }
                let s = self.mul(xa, yb);
                let base = (a * d + b) * d;
                for (k, o) in out.iter_mut().enumerate() {
                    *o = self.add(*o, self.mul(s, self.c[base + k]));
                }
            }
        }
    }

    fn rota_baxter(&self, r: &[u64], scratch: &mut Scratch) -> bool {
        let d = self.d;
        let Scratch { cols, lhs, t, inner } = scratch;
        for j in 0..d {
            for i in 0..d {
                cols[j * d + i] = r[i * d + j];
            }
        }
        for i in 0..d {
            for j in 0..d {
                let rx = &cols[i * d..(i + 1) * d];
                let ry = &cols[j * d..(j + 1) * d];
                self.product(rx, ry, lhs);
                inner.fill(0);
                // m(Rx, e_j) + m(e_i, Ry) + λ m(e_i, e_j)
                for (k, slot) in inner.iter_mut().enumerate() {
                    let mut acc = self.mul(self.weight, self.c[(i * d + j) * d + k]);
                    for a in 0..d {
                        acc = self.add(acc, self.mul(rx[a], self.c[(a * d + j) * d + k]));
                        acc = self.add(acc, self.mul(ry[a], self.c[(i * d + a) * d + k]));
                    }
                    *slot = acc;
                }
                for k in 0..d {
                    let mut acc = 0;
                    for a in 0..d {
                        acc = self.add(acc, self.mul(r[k * d + a], inner[a]));
                    }
                    t[k] = acc;
                }
                if lhs != t {
                    return false;
                }
            }
        }
        true
    }

    fn accepts(&self, r: &[u64], require_commute: bool, scratch: &mut Scratch) -> bool {
        (!require_commute || (self.commutes(r, &self.alpha) && self.commutes(r, &self.beta)))
            && self.rota_baxter(r, scratch)
    }
}

struct Scratch {
    cols: Vec<u64>,
    lhs: Vec<u64>,
    t: Vec<u64>,
    inner: Vec<u64>,
}

impl Scratch {
    fn new(d: usize) -> Self {
        Scratch {
            cols: vec![0; d * d],
            lhs: vec![0; d],
            t: vec![0; d],
            inner: vec![0; d],
        }
    }
}

/// Every matrix of the ansatz family that is a Rota-Baxter operator of the
/// configured weight on the sole product of `a` (and commutes with the
/// structure maps if required), in lexicographic order of row-major entries,
/// truncated to `max_candidates`.
///
/// `a` must be over `F_p` with `p = cfg.modulus()`; families larger than
/// `2^BUDGET_LOG2` are refused rather than truncated.
pub fn enumerate_rb_fp(a: &AlgebraInstance, cfg: &SearchConfig) -> Result<Vec<CertifiedOperator>> {
    let field = Field::prime(cfg.modulus)?;
    field.expect_same(a.field())?;
    field.expect_same(cfg.weight.field())?;
    let (label, _) = a.sole_product()?;
    let d = a.dim();
    cfg.check_budget(d)?;

    let model = FastModel::new(a, label, &cfg.weight)?;
    let free: Vec<usize> = cfg
        .ansatz
        .free_positions(d)
        .into_iter()
        .map(|(r, c)| r * d + c)
        .collect();
    let mut r = vec![0u64; d * d];
    let mut scratch = Scratch::new(d);
    let mut out = Vec::new();
    loop {
        if model.accepts(&r, cfg.require_commute_with_maps, &mut scratch) {
            let op = LinearOperator::from_fn(field, d, |row, col| field.from_i64(r[row * d + col] as i64))?;
            let cert = if cfg.require_commute_with_maps {
                certify(a, label, op, &cfg.weight, OperatorSource::Enumeration)?
            } else {
                certify_rb_only(a, label, op, &cfg.weight)?
            };
            out.push(cert);
            if out.len() == cfg.max_candidates {
                break;
            }
        }
        // odometer, last free entry fastest
        let mut carry = true;
        for &pos in free.iter().rev() {
            r[pos] += 1;
            if r[pos] < cfg.modulus {
                carry = false;
                break;
            }
            r[pos] = 0;
        }
        if carry {
            break;
        }
    }
    Ok(out)
}

/// Certification when commuting with the structure maps was not requested:
/// only the Rota-Baxter witnesses must vanish.
fn certify_rb_only(a: &AlgebraInstance, label: &str, r: LinearOperator, weight: &Scalar) -> Result<CertifiedOperator> {
    let m = a.product(label)?;
    let witnesses = crate::checkers::rota_baxter_condition(m, &r, weight);
    if !witnesses.is_empty() {
        return Err(Error::hypothesis(
            alloc::format!("R is a Rota-Baxter operator of weight {weight}"),
            witnesses,
        ));
    }
    Ok(CertifiedOperator {
        operator: r,
        weight: weight.clone(),
        product_label: label.to_string(),
        source: OperatorSource::Enumeration,
    })
}

/// Search box for rational preimages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftConfig {
    /// Numerators range over `[-numerator_bound, numerator_bound]`.
    pub numerator_bound: i64,
    /// Denominators range over `[1, denominator_bound]`.
    pub denominator_bound: i64,
    /// Rational weight; when `None`, small-height preimages of the
    /// candidate's weight are tried in order.
    pub weight: Option<Scalar>,
    /// Refuse to start when the box holds more combinations than this.
    pub max_attempts: u64,
}

impl Default for LiftConfig {
    fn default() -> Self {
        LiftConfig {
            numerator_bound: 3,
            denominator_bound: 3,
            weight: None,
            max_attempts: 1 << 16,
        }
    }
}

fn height(n: i64, d: i64) -> i64 {
    if n == 0 {
        0
    } else {
        n.abs().max(d)
    }
}

/// Distinct rationals `n/d` in the box reducing to `residue` mod `p`, as
/// `(height, value)` sorted by height, then denominator, then numerator.
fn preimages(residue: u64, p: u64, cfg: &LiftConfig) -> Vec<(i64, (i64, i64))> {
    let mut out: Vec<(i64, (i64, i64))> = Vec::new();
    for den in 1..=cfg.denominator_bound {
        for num in -cfg.numerator_bound..=cfg.numerator_bound {
            let g = num_integer::gcd(num, den);
            if g != 1 && num != 0 {
                continue;
            }
            if num == 0 && den != 1 {
                continue;
            }
            let Ok(s) = Field::Rational.ratio(num, den).and_then(|s| s.reduce_mod(p)) else {
                continue;
            };
            if s.fp_value() == Some(residue) {
                out.push((height(num, den), (num, den)));
            }
        }
    }
    out.sort_by_key(|&(h, (n, d))| (h, d, n.abs(), n < 0));
    out
}

/// Tries small-height rational preimages of `candidate`, smallest maximal
/// entry height first, and returns the first one certified over `Q` on
/// `a_q`. `a_q` must reduce mod `p` to an algebra on which `candidate` is
/// still certified; otherwise [`Error::ReductionMismatch`].
pub fn lift_to_rationals(
    a_q: &AlgebraInstance,
    candidate: &CertifiedOperator,
    cfg: &LiftConfig,
) -> Result<Option<CertifiedOperator>> {
    Field::Rational.expect_same(a_q.field())?;
    let p = candidate.field().modulus().ok_or(Error::ReductionMismatch)?;
    let a_p = a_q.reduce_mod(p).map_err(|_| Error::ReductionMismatch)?;
    if a_p.dim() != candidate.operator.dim() {
        return Err(Error::ReductionMismatch);
    }
    match check_rota_baxter(&a_p, &candidate.product_label, &candidate.operator, &candidate.weight) {
        Ok(w) if w.is_empty() => {}
        _ => return Err(Error::ReductionMismatch),
    }
    let weights: Vec<Scalar> = match &cfg.weight {
        Some(w) => {
            Field::Rational.expect_same(w.field())?;
            if w.reduce_mod(p).ok().as_ref() != Some(&candidate.weight) {
                return Err(Error::ReductionMismatch);
            }
            vec![w.clone()]
        }
        None => preimages(candidate.weight.fp_value().expect("prime field"), p, cfg)
            .into_iter()
            .map(|(_, (n, d))| Field::Rational.ratio(n, d))
            .collect::<Result<_>>()?,
    };

    let d = a_q.dim();
    let choices: Vec<Vec<(i64, (i64, i64))>> = candidate
        .operator
        .entries()
        .iter()
        .map(|x| preimages(x.fp_value().expect("prime field"), p, cfg))
        .collect();
    if choices.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let total = choices
        .iter()
        .try_fold(weights.len() as u64, |acc, c| acc.checked_mul(c.len() as u64));
    match total {
        Some(n) if n <= cfg.max_attempts => {}
        _ => {
            return Err(Error::BudgetExceeded {
                family_size: total.map_or_else(|| "overflow".to_string(), |n| n.to_string()),
                budget_log2: 64 - cfg.max_attempts.leading_zeros(),
            })
        }
    }
    let max_height = choices.iter().flatten().map(|c| c.0).max().unwrap_or(0);

    for weight in &weights {
        for bound in 0..=max_height {
            let allowed: Vec<Vec<(i64, i64)>> = choices
                .iter()
                .map(|c| c.iter().filter(|e| e.0 <= bound).map(|e| e.1).collect())
                .collect();
            if allowed.iter().any(Vec::is_empty) {
                continue;
            }
            let mut idx = vec![0usize; allowed.len()];
            loop {
                let picks: Vec<(i64, i64)> = idx.iter().zip(&allowed).map(|(&i, a)| a[i]).collect();
                // combinations below `bound` were tried in an earlier round
                if picks.iter().any(|&(n, dd)| height(n, dd) == bound) {
                    let r = LinearOperator::from_fn(Field::Rational, d, |row, col| {
                        let (n, dd) = picks[row * d + col];
                        Field::Rational.ratio(n, dd).expect("nonzero denominator")
                    })?;
                    if let Ok(c) = certify(a_q, &candidate.product_label, r, weight, OperatorSource::Lift) {
                        return Ok(Some(c));
                    }
                }
                let mut carry = true;
                for (slot, a) in idx.iter_mut().zip(&allowed).rev() {
                    *slot += 1;
                    if *slot < a.len() {
                        carry = false;
                        break;
                    }
                    *slot = 0;
                }
                if carry {
                    break;
                }
            }
        }
    }
    Ok(None)
}
