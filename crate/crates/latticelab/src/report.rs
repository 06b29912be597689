//! Verification reports and their json, csv and human renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use latticelab_core::registry::{Detail, Evaluation, IdentityRecord, Kind, Outcome};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "latticelab-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Pass,
    Fail,
    ConjectureConsistent,
    ConjectureInconsistent,
    Error,
    Timeout,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::ConjectureConsistent => "CONJECTURE-CONSISTENT",
            Verdict::ConjectureInconsistent => "CONJECTURE-INCONSISTENT",
            Verdict::Error => "ERROR",
            Verdict::Timeout => "TIMEOUT",
        }
    }
}

impl From<Outcome> for Verdict {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::Pass => Verdict::Pass,
            Outcome::Fail => Verdict::Fail,
            Outcome::ConjectureConsistent => Verdict::ConjectureConsistent,
            Outcome::ConjectureInconsistent => Verdict::ConjectureInconsistent,
            Outcome::Error => Verdict::Error,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    pub exponent: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub digits: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum RecordDetail {
    Coefficients { level: u64, sturm_bound: u64, checked: usize, mismatch: Option<Mismatch> },
    Residuals { tolerance: u32, items: Vec<Residual> },
    Error { message: String },
    Timeout { after_secs: u64 },
}

impl From<&Detail> for RecordDetail {
    fn from(d: &Detail) -> Self {
        match d {
            Detail::Coefficients(c) => RecordDetail::Coefficients {
                level: c.level,
                sturm_bound: c.sturm_bound,
                checked: c.checked,
                mismatch: c.mismatch.as_ref().map(|(e, l, r)| Mismatch { exponent: e.clone(), lhs: l.clone(), rhs: r.clone() }),
            },
            Detail::Residuals { tolerance, items } => RecordDetail::Residuals {
                tolerance: *tolerance,
                items: items
                    .iter()
                    .map(|i| Residual {
                        label: i.label.clone(),
                        lhs: i.lhs.clone(),
                        rhs: i.rhs.clone(),
                        residual: i.residual.clone(),
                        digits: i.digits,
                    })
                    .collect(),
            },
            Detail::Error(message) => RecordDetail::Error { message: message.clone() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordReport {
    pub id: String,
    pub kind: String,
    pub status: String,
    pub anchor: String,
    pub summary: String,
    pub verdict: Verdict,
    pub precision: u32,
    pub digits: Option<f64>,
    pub seconds: f64,
    pub detail: RecordDetail,
}

impl RecordReport {
    pub fn new(record: &IdentityRecord, eval: &Evaluation, seconds: f64) -> Self {
        RecordReport {
            verdict: eval.outcome.into(),
            precision: eval.precision,
            digits: eval.digits,
            detail: (&eval.detail).into(),
            ..RecordReport::bare(record, seconds)
        }
    }

    pub fn timeout(record: &IdentityRecord, precision: u32, after_secs: u64) -> Self {
        RecordReport {
            verdict: Verdict::Timeout,
            precision,
            detail: RecordDetail::Timeout { after_secs },
            ..RecordReport::bare(record, after_secs as f64)
        }
    }

    fn bare(record: &IdentityRecord, seconds: f64) -> Self {
        RecordReport {
            id: record.id.into(),
            kind: record.kind.name().into(),
            status: record.status.name().into(),
            anchor: record.anchor.into(),
            summary: record.summary.into(),
            verdict: Verdict::Error,
            precision: record.params.precision,
            digits: None,
            seconds,
            detail: RecordDetail::Error { message: String::new() },
        }
    }

    pub fn is_conjecture(&self) -> bool {
        self.kind == Kind::NumericConjecture.name()
    }

    /// Whether this record makes the run fail.
    pub fn is_failure(&self) -> bool {
        !self.is_conjecture() && self.verdict != Verdict::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub version: String,
    pub precision: u32,
    pub guard_digits: u32,
    pub n_terms: Option<usize>,
    /// No evaluator draws random numbers; recorded for completeness.
    pub seed: u64,
    pub records: Vec<RecordReport>,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| r.is_failure()).count()
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failures() > 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown format `{0}` (expected json, csv or human)")]
pub struct UnknownFormat(pub String);

impl FromStr for Format {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "human" => Ok(Format::Human),
            _ => Err(UnknownFormat(s.into())),
        }
    }
}

pub fn emit(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Csv => to_csv(report),
        Format::Human => to_human(report),
    }
}

pub fn to_json(report: &VerificationReport) -> String {
    serde_json::to_string_pretty(report).expect("report types serialize")
}

pub fn from_json(text: &str) -> serde_json::Result<VerificationReport> {
    serde_json::from_str(text)
}

fn digits_cell(d: Option<f64>) -> String {
    d.map(|d| format!("{d:.2}")).unwrap_or_default()
}

pub fn to_csv(report: &VerificationReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "kind", "verdict", "digits", "seconds"]).expect("in-memory write");
    for r in &report.records {
        let secs = format!("{:.3}", r.seconds);
        w.write_record([r.id.as_str(), &r.kind, r.verdict.name(), &digits_cell(r.digits), &secs]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn to_human(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "latticelab {} at {} digits (+{} guard)", report.version, report.precision, report.guard_digits);
    let (conj, gated): (Vec<&RecordReport>, Vec<&RecordReport>) = report.records.iter().partition(|r| r.is_conjecture());
    let section = |out: &mut String, title: &str, rows: &[&RecordReport]| {
        if rows.is_empty() {
            return;
        }
        let _ = writeln!(out, "\n{title}");
        for r in rows {
            let _ = writeln!(out, "  {:<24} {:<24} {:>7} {:>8.2}s  {}", r.id, r.verdict.name(), digits_cell(r.digits), r.seconds, note(r));
        }
    };
    section(&mut out, "Identities and theorems", &gated);
    section(&mut out, "Conjectures (reported, never gating)", &conj);
    let _ = writeln!(out, "\n{} records, {} failing", report.records.len(), report.failures());
    out
}

fn note(r: &RecordReport) -> String {
    match &r.detail {
        RecordDetail::Coefficients { checked, sturm_bound, mismatch: None, .. } => {
            format!("{checked} coefficients (Sturm bound {sturm_bound})")
        }
        RecordDetail::Coefficients { mismatch: Some(m), .. } => {
            format!("first mismatch at q^{}: {} vs {}", m.exponent, m.lhs, m.rhs)
        }
        RecordDetail::Residuals { tolerance, items } => {
            let worst = items.iter().min_by(|a, b| a.digits.total_cmp(&b.digits));
            match worst {
                Some(w) => format!("residual {} (tolerance 1e-{tolerance})", w.residual),
                None => String::new(),
            }
        }
        RecordDetail::Error { message } => message.clone(),
        RecordDetail::Timeout { after_secs } => format!("no result after {after_secs}s"),
    }
}
