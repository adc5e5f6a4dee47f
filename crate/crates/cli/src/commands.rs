//! The commands behind the `freeperm` binary, as functions from document
//! text to an [`Outcome`].

use freeperm::adjunction::{check_adjunction, check_adjunction_corrupted};
use freeperm::multicat::{validate_multicategory, validate_multifunctor, validate_multinat};
use freeperm::permcat::{validate_monoidal_nat, validate_permcat, validate_smfunctor};
use freeperm::{Bounds, Status, VerificationReport};

use crate::document::{parse_document, to_json, Document};
use crate::error::CliError;
use crate::materialize::{end_document, free_document};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    pub format: Format,
    pub bounds: Bounds,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            format: Format::Text,
            bounds: Bounds::default(),
        }
    }
}

/// What a command prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Pass | Status::PassWithTruncation => EXIT_PASS,
        Status::Fail => EXIT_FAIL,
    }
}

pub fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Text => report.render_text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize to JSON");
            s.push('\n');
            s
        }
    }
}

fn report_outcome(report: &VerificationReport, opts: &Options) -> Outcome {
    Outcome {
        code: exit_code(report.status),
        stdout: render(report, opts.format),
        stderr: String::new(),
    }
}

/// Runs the validator matching the document's kind.
pub fn validate(text: &str, opts: &Options) -> Result<Outcome, CliError> {
    let b = &opts.bounds;
    let report = match parse_document(text)? {
        Document::Multicategory(m) => validate_multicategory(&m, b),
        Document::Permcat(c) => validate_permcat(&c, b),
        Document::Multifunctor(d) => validate_multifunctor(&d.functor()?, b),
        Document::SmFunctor(d) => validate_smfunctor(&d.functor()?, b),
        Document::Multinat(d) => validate_multinat(&d.transformation()?, b),
        Document::MonoidalNat(d) => validate_monoidal_nat(&d.transformation()?, b),
        Document::Free(_) => {
            return Err(CliError::Usage(
                "free_truncation documents are output only and cannot be validated".into(),
            ))
        }
    };
    Ok(report_outcome(&report, opts))
}

/// `F(M)` up to `bounds.profile` as a `free_truncation` document.
pub fn free(text: &str, opts: &Options) -> Result<Outcome, CliError> {
    let m = match parse_document(text)? {
        Document::Multicategory(m) => m,
        other => return Err(expected("multicategory", &other)),
    };
    let (doc, warnings) = free_document(&m, opts.bounds.profile)?;
    let mut out = Outcome::ok(to_json(&Document::Free(doc)));
    for w in warnings {
        out.stderr.push_str(&format!("warning: {w}\n"));
    }
    Ok(out)
}

/// `End(C)` up to `bounds.arity` as a multicategory document. An invalid
/// `C` fails with its validation report instead.
pub fn end(text: &str, opts: &Options) -> Result<Outcome, CliError> {
    let c = match parse_document(text)? {
        Document::Permcat(c) => c,
        other => return Err(expected("permcat", &other)),
    };
    let report = validate_permcat(&c, &opts.bounds);
    if !report.passed() {
        return Ok(report_outcome(&report, opts));
    }
    let end = end_document(&c, opts.bounds.arity)?;
    Ok(Outcome::ok(to_json(&Document::Multicategory(end))))
}

/// Validates `M` and `C`, then runs every check of `F ⊣ End` on the pair.
pub fn check_adjunction_cmd(
    m_text: &str,
    c_text: &str,
    opts: &Options,
    corrupt_counit: bool,
) -> Result<Outcome, CliError> {
    let m = match parse_document(m_text)? {
        Document::Multicategory(m) => m,
        other => return Err(expected("multicategory", &other)),
    };
    let c = match parse_document(c_text)? {
        Document::Permcat(c) => c,
        other => return Err(expected("permcat", &other)),
    };
    let b = &opts.bounds;
    let mut report = VerificationReport::new(format!("F ⊣ End on ({}, {})", m.name(), c.name()));
    report.include("multicategory", validate_multicategory(&m, b));
    report.include("permcat", validate_permcat(&c, b));
    let witness = if corrupt_counit {
        check_adjunction_corrupted(&m, &c, b)
    } else {
        check_adjunction(&m, &c, b)
    };
    let consolidated = witness.consolidated();
    for fam in consolidated.families {
        let name = fam.name.clone();
        report.family(&name).merge(fam);
    }
    let report = report.finish();
    Ok(report_outcome(&report, opts))
}

fn expected(kind: &str, found: &Document) -> CliError {
    CliError::Schema(format!("expected a {kind} document, found kind `{}`", found.kind()))
}
