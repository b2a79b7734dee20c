//! Command reports, rendered as aligned text or JSON. Both renderings are a
//! pure function of the report, which holds no timestamp unless asked to.

use std::fmt::Write as _;

use bihom_core::checkers::IdentityOutcome;
use bihom_core::{Error, LinearOperator, Scalar, ViolationWitness};
use serde::Serialize;

/// Ordered by severity; a report's status is the worst one seen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    #[default]
    Pass,
    Violation,
    InputError,
    Budget,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Violation => 1,
            Status::InputError => 2,
            Status::Budget => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Violation => "violation",
            Status::InputError => "input-error",
            Status::Budget => "budget",
        }
    }

    /// How a core error surfaces: failed hypotheses and preconditions are
    /// violations, limits are budget errors, everything else is bad input.
    pub fn of_error(e: &Error) -> Status {
        match e {
            Error::Hypothesis { .. } | Error::UnsupportedKind { .. } | Error::NotBijective => Status::Violation,
            Error::BudgetExceeded { .. } => Status::Budget,
            _ => Status::InputError,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub path: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sha256: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessView {
    pub at: Vec<String>,
    pub residual: Vec<String>,
}

impl WitnessView {
    pub fn new(w: &ViolationWitness, basis: &[String]) -> Self {
        WitnessView {
            at: w
                .basis_indices
                .iter()
                .map(|&i| basis.get(i).cloned().unwrap_or_else(|| i.to_string()))
                .collect(),
            residual: w.residual.iter().map(Scalar::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub label: String,
    pub pass: bool,
    pub witnesses: Vec<WitnessView>,
}

impl Verdict {
    pub fn new(label: impl Into<String>, witnesses: &[ViolationWitness], basis: &[String]) -> Self {
        Verdict {
            label: label.into(),
            pass: witnesses.is_empty(),
            witnesses: witnesses.iter().map(|w| WitnessView::new(w, basis)).collect(),
        }
    }

    pub fn from_outcome(o: &IdentityOutcome, basis: &[String]) -> Self {
        Verdict::new(o.label.clone(), &o.witnesses, basis)
    }
}

pub fn matrix_strings(f: &LinearOperator) -> Vec<Vec<String>> {
    f.rows().map(|r| r.iter().map(Scalar::to_string).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum LiftView {
    Found {
        matrix: Vec<Vec<String>>,
        weight: String,
        verified: bool,
    },
    NotFound,
    Skipped {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorEntry {
    pub source: String,
    pub matrix: Vec<Vec<String>>,
    pub weight: String,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lift: Option<LiftView>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Section {
    pub title: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    /// Built with hypothesis checks skipped.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub unverified: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub messages: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub operators: Vec<OperatorEntry>,
    /// Canonical algebra file of a constructed instance.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            ..Section::default()
        }
    }

    pub fn passes(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub inputs: Vec<InputDigest>,
    pub sections: Vec<Section>,
    pub status: Status,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            ..Report::default()
        }
    }

    pub fn escalate(&mut self, s: Status) {
        self.status = self.status.max(s);
    }

    /// Adds a section, escalating to a violation if any verdict fails.
    pub fn push(&mut self, section: Section) {
        if !section.passes() {
            self.escalate(Status::Violation);
        }
        self.sections.push(section);
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "$ {}", self.command);
        if let Some(t) = self.timestamp {
            let _ = writeln!(s, "timestamp {t}");
        }
        let path_width = self.inputs.iter().map(|i| i.path.len()).max().unwrap_or(0);
        for i in &self.inputs {
            let digest = i.sha256.as_deref().unwrap_or("-");
            let _ = writeln!(s, "input  {:path_width$}  sha256 {digest}", i.path);
        }
        for sec in &self.sections {
            s.push('\n');
            let _ = write!(s, "[{}]", sec.title);
            if let Some(k) = &sec.kind {
                let _ = write!(s, " {k}");
            }
            if sec.unverified {
                s.push_str(" (unverified: hypotheses not checked)");
            }
            s.push('\n');
            for m in &sec.messages {
                let _ = writeln!(s, "  {m}");
            }
            let width = sec.verdicts.iter().map(|v| v.label.len()).max().unwrap_or(0);
            for v in &sec.verdicts {
                if v.pass {
                    let _ = writeln!(s, "  {:width$}  pass", v.label);
                } else {
                    let _ = writeln!(s, "  {:width$}  FAIL  {} witness(es)", v.label, v.witnesses.len());
                    for w in &v.witnesses {
                        let _ = writeln!(s, "      at ({}): [{}]", w.at.join(", "), w.residual.join(", "));
                    }
                }
            }
            for (n, op) in sec.operators.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "  #{n:<4} {}  weight {}  {}  {}",
                    render_matrix(&op.matrix),
                    op.weight,
                    op.source,
                    if op.verified { "verified" } else { "NOT VERIFIED" }
                );
                match &op.lift {
                    None => {}
                    Some(LiftView::Found {
                        matrix,
                        weight,
                        verified,
                    }) => {
                        let tag = if *verified { "verified" } else { "NOT VERIFIED" };
                        let _ = writeln!(s, "        lift {}  weight {weight}  {tag}", render_matrix(matrix));
                    }
                    Some(LiftView::NotFound) => {
                        let _ = writeln!(s, "        lift none in search box");
                    }
                    Some(LiftView::Skipped { reason }) => {
                        let _ = writeln!(s, "        lift skipped: {reason}");
                    }
                }
            }
            if let Some(out) = &sec.output {
                for line in out.lines() {
                    let _ = writeln!(s, "  | {line}");
                }
            }
        }
        let _ = writeln!(s, "\nstatus: {} (exit {})", self.status.name(), self.exit_code());
        s
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_text()
        }
    }
}

fn render_matrix(m: &[Vec<String>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", rows.join(", "))
}
