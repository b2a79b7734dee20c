//! Command bodies. Each returns a complete [`Report`]; printing and the
//! process exit code are left to the binary.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use bihom_core::catalog::catalog_get;
use bihom_core::checkers::{check_kind_detailed, check_rgraf, check_rota_baxter};
use bihom_core::constructions::{
    dendriform_to_prelie, generalized_twist, prelie_derived_bracket, rb_assoc_derived_product, rb_derived_bracket,
    rb_prelie_left, rb_prelie_right, Hypotheses,
};
use bihom_core::rota_baxter::{enumerate_rb_fp, lift_to_rationals, Ansatz, LiftConfig, SearchConfig};
use bihom_core::{AlgebraInstance, AlgebraKind, Error, Field, LinearOperator, Scalar};

use crate::format::{
    digest, parse_algebra_file, parse_matrix_file, serialize_instance, serialize_matrix, sha256_hex, AlgebraDocument,
};
use crate::report::{matrix_strings, InputDigest, LiftView, OperatorEntry, Report, Section, Status, Verdict};

/// What every command shares: the echoed command line and whether to stamp
/// the report with the current time.
#[derive(Clone, Debug, Default)]
pub struct Invocation {
    pub command: String,
    pub timestamps: bool,
}

impl Invocation {
    pub fn new(command: impl Into<String>) -> Self {
        Invocation {
            command: command.into(),
            timestamps: false,
        }
    }

    fn report(&self) -> Report {
        let mut r = Report::new(self.command.clone());
        if self.timestamps {
            r.timestamp = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .ok()
                .map(|d| d.as_secs());
        }
        r
    }
}

fn input_error(report: &mut Report, title: &str, message: impl fmt::Display) {
    let mut s = Section::new(title);
    s.messages.push(format!("error: {message}"));
    report.sections.push(s);
    report.escalate(Status::InputError);
}

/// Reports a failed construction: hypothesis witnesses become a failing
/// verdict, other errors a message with the matching status.
fn construction_error(report: &mut Report, title: &str, e: &Error, basis: &[String]) {
    let mut s = Section::new(title);
    s.messages.push(format!("error: {e}"));
    if let Error::Hypothesis { clause, witnesses } = e {
        s.verdicts.push(Verdict::new(clause.clone(), witnesses, basis));
    }
    report.sections.push(s);
    report.escalate(Status::of_error(e));
}

/// Reads and parses an algebra file, recording its digest.
fn load(report: &mut Report, path: &Path, kind_override: Option<AlgebraKind>) -> Option<AlgebraDocument> {
    let shown = path.display().to_string();
    let parsed = std::fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|text| parse_algebra_file(&text).map_err(|e| e.to_string()));
    let mut doc = match parsed {
        Ok(doc) => doc,
        Err(e) => {
            report.inputs.push(InputDigest {
                path: shown.clone(),
                sha256: None,
            });
            input_error(report, &shown, e);
            return None;
        }
    };
    report.inputs.push(InputDigest {
        path: shown.clone(),
        sha256: Some(digest(&doc)),
    });
    if let Some(kind) = kind_override {
        match doc.instance.with_kind(kind) {
            Ok(a) => doc.instance = a,
            Err(e) => {
                input_error(report, &shown, e);
                return None;
            }
        }
    }
    Some(doc)
}

fn load_matrix(report: &mut Report, path: &Path, field: Field, dim: usize) -> Option<LinearOperator> {
    let shown = path.display().to_string();
    let parsed = std::fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|text| parse_matrix_file(&text, field, dim).map_err(|e| e.to_string()));
    match parsed {
        Ok(f) => {
            report.inputs.push(InputDigest {
                path: shown,
                sha256: Some(sha256_hex(serialize_matrix(&f).as_bytes())),
            });
            Some(f)
        }
        Err(e) => {
            report.inputs.push(InputDigest {
                path: shown.clone(),
                sha256: None,
            });
            input_error(report, &shown, e);
            None
        }
    }
}

fn check_section(title: &str, a: &AlgebraInstance) -> Section {
    let mut s = Section::new(title);
    s.kind = Some(a.kind().name().to_string());
    s.verdicts = check_kind_detailed(a)
        .iter()
        .map(|o| Verdict::from_outcome(o, a.basis_labels()))
        .collect();
    s
}

/// Runs the declared kind's identity set on every file, in path order.
pub fn check(inv: &Invocation, paths: &[impl AsRef<Path>], kind_override: Option<AlgebraKind>) -> Report {
    let mut report = inv.report();
    let mut sorted: Vec<&Path> = paths.iter().map(AsRef::as_ref).collect();
    sorted.sort();
    for path in sorted {
        if let Some(doc) = load(&mut report, path, kind_override) {
            let title = format!("{} ({})", doc.instance.name(), path.display());
            report.push(check_section(&title, &doc.instance));
        }
    }
    report
}

fn mode(unchecked: bool) -> Hypotheses {
    if unchecked {
        Hypotheses::Skip
    } else {
        Hypotheses::Check
    }
}

/// Section for a constructed instance: its canonical file and a re-check
/// against its declared kind, plus any extra verdicts.
fn output_section(a: &AlgebraInstance, unchecked: bool, extra: Vec<Verdict>) -> Section {
    let mut s = check_section(&format!("constructed {}", a.name()), a);
    s.verdicts.extend(extra);
    s.unverified = unchecked;
    s.output = Some(serialize_instance(a));
    s
}

pub fn twist(
    inv: &Invocation,
    path: &Path,
    alpha2: &Path,
    beta2: &Path,
    kind_override: Option<AlgebraKind>,
    unchecked: bool,
) -> Report {
    let mut report = inv.report();
    let Some(doc) = load(&mut report, path, kind_override) else {
        return report;
    };
    let a = &doc.instance;
    let (Some(f), Some(g)) = (
        load_matrix(&mut report, alpha2, a.field(), a.dim()),
        load_matrix(&mut report, beta2, a.field(), a.dim()),
    ) else {
        return report;
    };
    match generalized_twist(a, &f, &g, mode(unchecked)) {
        Ok(t) => report.push(output_section(&t, unchecked, Vec::new())),
        Err(e) => construction_error(&mut report, "twist", &e, a.basis_labels()),
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    PrelieBracket,
    RbPrelieLeft,
    RbPrelieRight,
    RbBracket,
    RbAssoc,
    DendriformSplit,
}

impl Construction {
    pub const ALL: [Construction; 6] = [
        Construction::PrelieBracket,
        Construction::RbPrelieLeft,
        Construction::RbPrelieRight,
        Construction::RbBracket,
        Construction::RbAssoc,
        Construction::DendriformSplit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::PrelieBracket => "prelie-bracket",
            Construction::RbPrelieLeft => "rb-prelie-left",
            Construction::RbPrelieRight => "rb-prelie-right",
            Construction::RbBracket => "rb-bracket",
            Construction::RbAssoc => "rb-assoc",
            Construction::DendriformSplit => "dendriform-split",
        }
    }

    fn needs_operator(self) -> bool {
        !matches!(self, Construction::PrelieBracket | Construction::DendriformSplit)
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown construction {s:?}"))
    }
}

/// `name` from the file's operator list, or the built-ins `zero` and
/// `identity` (weight 0 unless `--weight` says otherwise).
fn resolve_operator(doc: &AlgebraDocument, name: &str) -> Option<(LinearOperator, Scalar)> {
    let a = &doc.instance;
    if let Some(op) = doc.operator(name) {
        return Some((op.matrix.clone(), op.weight.clone()));
    }
    let f = a.field();
    match name {
        "zero" => Some((LinearOperator::zero(f, a.dim()), f.zero())),
        "identity" => Some((LinearOperator::identity(f, a.dim()), f.zero())),
        _ => None,
    }
}

pub struct DeriveArgs<'a> {
    pub construction: Construction,
    pub operator: Option<&'a str>,
    pub weight: Option<&'a str>,
    pub kind_override: Option<AlgebraKind>,
    pub unchecked: bool,
}

pub fn derive(inv: &Invocation, path: &Path, args: &DeriveArgs<'_>) -> Report {
    let mut report = inv.report();
    let Some(doc) = load(&mut report, path, args.kind_override) else {
        return report;
    };
    let a = &doc.instance;
    let basis = a.basis_labels();
    let c = args.construction;
    let hyp = mode(args.unchecked);
    let title = c.name();

    let operator = if c.needs_operator() {
        let Some(name) = args.operator else {
            input_error(&mut report, title, format!("{c} needs --operator"));
            return report;
        };
        let Some((r, file_weight)) = resolve_operator(&doc, name) else {
            input_error(&mut report, title, format!("no operator named {name:?}"));
            return report;
        };
        let weight = match args.weight {
            Some(w) => match a.field().parse(w) {
                Ok(w) => w,
                Err(e) => {
                    input_error(&mut report, title, e);
                    return report;
                }
            },
            None => file_weight,
        };
        if matches!(c, Construction::RbPrelieLeft | Construction::RbPrelieRight) && !weight.is_zero() {
            input_error(
                &mut report,
                title,
                format!("{c} needs a weight-0 operator, got weight {weight}"),
            );
            return report;
        }
        Some((r, weight))
    } else {
        None
    };

    let built: Result<Vec<(AlgebraInstance, Vec<Verdict>)>, Error> = match (c, &operator) {
        (Construction::PrelieBracket, _) => prelie_derived_bracket(a, hyp).map(|b| vec![(b, vec![])]),
        (Construction::DendriformSplit, _) => dendriform_to_prelie(a, hyp).map(|(l, r)| vec![(l, vec![]), (r, vec![])]),
        (Construction::RbPrelieLeft, Some((r, _))) => rb_prelie_left(a, r, hyp).map(|b| vec![(b, vec![])]),
        (Construction::RbPrelieRight, Some((r, _))) => rb_prelie_right(a, r, hyp).map(|b| vec![(b, vec![])]),
        (Construction::RbBracket | Construction::RbAssoc, Some((r, w))) => {
            let out = if c == Construction::RbBracket {
                rb_derived_bracket(a, r, w, hyp)
            } else {
                rb_assoc_derived_product(a, r, w, hyp)
            };
            out.and_then(|b| {
                let (label, old) = a.sole_product()?;
                let new = b.sole_product()?.1;
                let mut extra = vec![Verdict::new(
                    format!("RBrel (weight {w}) on output"),
                    &check_rota_baxter(&b, label, r, w)?,
                    basis,
                )];
                if c == Construction::RbBracket {
                    extra.push(Verdict::new("Rgraf", &check_rgraf(old, new, r)?, basis));
                }
                Ok(vec![(b, extra)])
            })
        }
        (_, None) => unreachable!("operator resolved above"),
    };
    match built {
        Ok(outputs) => {
            for (b, extra) in outputs {
                report.push(output_section(&b, args.unchecked, extra));
            }
        }
        Err(e) => construction_error(&mut report, title, &e, basis),
    }
    report
}

pub struct SearchArgs<'a> {
    pub weight: &'a str,
    pub modulus: u64,
    pub ansatz: Ansatz,
    pub lift: bool,
    pub max_candidates: Option<usize>,
    pub require_commute: bool,
}

pub fn rb_search(inv: &Invocation, path: &Path, args: &SearchArgs<'_>) -> Report {
    let mut report = inv.report();
    let Some(doc) = load(&mut report, path, None) else {
        return report;
    };
    let a = &doc.instance;
    let p = args.modulus;
    let title = format!("rb-search {} mod {p}", a.name());
    let prepared = (|| -> Result<(AlgebraInstance, Option<Scalar>, SearchConfig), Error> {
        let (a_p, w_q) = match a.field() {
            Field::Rational => {
                let w = Field::Rational.parse(args.weight)?;
                (a.reduce_mod(p)?, Some(w))
            }
            Field::Prime(q) if q == p => (a.clone(), None),
            other => {
                return Err(Error::FieldMismatch {
                    left: other,
                    right: Field::prime(p)?,
                })
            }
        };
        let w = match &w_q {
            Some(w) => w.clone(),
            None => a_p.field().parse(args.weight)?,
        };
        let mut cfg = SearchConfig::new(p, &w)?
            .with_ansatz(args.ansatz)
            .with_commute_requirement(args.require_commute);
        if let Some(m) = args.max_candidates {
            cfg = cfg.with_max_candidates(m)?;
        }
        Ok((a_p, w_q, cfg))
    })();
    let (a_p, w_q, cfg) = match prepared {
        Ok(x) => x,
        Err(e) => {
            construction_error(&mut report, &title, &e, a.basis_labels());
            return report;
        }
    };
    if args.lift && w_q.is_none() {
        input_error(&mut report, &title, "--lift needs an algebra over Q");
        return report;
    }
    let found = match enumerate_rb_fp(&a_p, &cfg) {
        Ok(found) => found,
        Err(e) => {
            construction_error(&mut report, &title, &e, a.basis_labels());
            return report;
        }
    };

    let mut s = Section::new(title);
    let family = cfg
        .family_size(a.dim())
        .map_or_else(|| "more than 2^64".to_string(), |n| n.to_string());
    s.messages.push(format!(
        "ansatz {}, weight {}, commuting with alpha and beta {}, family size {family}",
        cfg.ansatz(),
        cfg.weight(),
        if cfg.require_commute_with_maps() {
            "required"
        } else {
            "not required"
        },
    ));
    let (label, _) = a_p.sole_product().expect("enumeration succeeded on a single product");
    let mut lifted = 0;
    for c in &found {
        let verified = check_rota_baxter(&a_p, label, c.operator(), c.weight()).is_ok_and(|w| w.is_empty());
        if !verified {
            report.escalate(Status::Violation);
        }
        let lift = w_q.as_ref().filter(|_| args.lift).map(|w| {
            let lcfg = LiftConfig {
                weight: Some(w.clone()),
                ..LiftConfig::default()
            };
            match lift_to_rationals(a, c, &lcfg) {
                Ok(Some(l)) => {
                    lifted += 1;
                    let verified = check_rota_baxter(a, label, l.operator(), l.weight()).is_ok_and(|w| w.is_empty());
                    LiftView::Found {
                        matrix: matrix_strings(l.operator()),
                        weight: l.weight().to_string(),
                        verified,
                    }
                }
                Ok(None) => LiftView::NotFound,
                Err(e) => LiftView::Skipped { reason: e.to_string() },
            }
        });
        s.operators.push(OperatorEntry {
            source: c.source().name().to_string(),
            matrix: matrix_strings(c.operator()),
            weight: c.weight().to_string(),
            verified,
            lift,
        });
    }
    let mut summary = format!("{} operator(s) found", found.len());
    if found.len() == cfg.max_candidates() {
        summary.push_str(" (stopped at --max)");
    }
    if args.lift {
        summary.push_str(&format!(", {lifted} lifted to Q"));
    }
    s.messages.push(summary);
    report.push(s);
    report
}

/// Canonical file text of a catalog entry.
pub fn catalog_export(id: &str) -> Result<String, Error> {
    Ok(serialize_instance(&catalog_get(id)?.instance))
}
