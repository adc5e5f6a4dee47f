//! Structured pass/fail records for axiom checks.
//!
//! A report is a list of axiom families. Each family counts the instances it
//! verified, the instances it could not evaluate because they left a
//! truncation bound, and the instances that failed. Failures keep a witness:
//! the tuple that broke the law, rendered as labelled strings.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Failures retained per family. The failure count is always exact.
pub const MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    PassWithTruncation,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::PassWithTruncation => "pass-with-truncation",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessEntry {
    pub role: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub instance: Vec<WitnessEntry>,
    pub detail: String,
}

impl Witness {
    pub fn new(instance: Vec<(String, String)>, detail: impl Into<String>) -> Self {
        Self {
            instance: instance
                .into_iter()
                .map(|(role, value)| WitnessEntry { role, value })
                .collect(),
            detail: detail.into(),
        }
    }

    /// Value recorded under `role`, if any.
    pub fn get(&self, role: &str) -> Option<&str> {
        self.instance
            .iter()
            .find(|e| e.role == role)
            .map(|e| e.value.as_str())
    }

    /// True if any entry of the instance mentions `needle`.
    pub fn mentions(&self, needle: &str) -> bool {
        self.instance.iter().any(|e| e.value.contains(needle)) || self.detail.contains(needle)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyRecord {
    pub name: String,
    pub checked: u64,
    pub unchecked: u64,
    pub failed: u64,
    pub witnesses: Vec<Witness>,
}

impl FamilyRecord {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            unchecked: 0,
            failed: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn pass(&mut self) {
        self.checked += 1;
    }

    pub fn skip(&mut self) {
        self.unchecked += 1;
    }

    pub fn skip_many(&mut self, n: u64) {
        self.unchecked += n;
    }

    pub fn fail(&mut self, witness: Witness) {
        self.checked += 1;
        self.failed += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    /// Records a boolean check; `instance` is only rendered on failure.
    pub fn check(
        &mut self,
        ok: bool,
        instance: impl FnOnce() -> Vec<(String, String)>,
        detail: impl FnOnce() -> String,
    ) {
        if ok {
            self.pass();
        } else {
            self.fail(Witness::new(instance(), detail()));
        }
    }

    /// Records the outcome of comparing two evaluated sides of a law.
    ///
    /// A truncation error on either side marks the instance unchecked; any
    /// other error is a failure.
    pub fn check_eq<T: PartialEq>(
        &mut self,
        lhs: Result<T>,
        rhs: Result<T>,
        instance: impl FnOnce() -> Vec<(String, String)>,
        show: impl Fn(&T) -> String,
    ) {
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => {
                if a == b {
                    self.pass();
                } else {
                    self.fail(Witness::new(
                        instance(),
                        format!("{} ≠ {}", show(&a), show(&b)),
                    ));
                }
            }
            (Err(e), _) | (_, Err(e)) => self.error(e, instance),
        }
    }

    /// Records an evaluation error against this family.
    pub fn error(&mut self, e: Error, instance: impl FnOnce() -> Vec<(String, String)>) {
        if e.is_truncation() {
            self.skip();
        } else {
            self.fail(Witness::new(instance(), e.to_string()));
        }
    }

    pub fn merge(&mut self, other: FamilyRecord) {
        self.checked += other.checked;
        self.unchecked += other.unchecked;
        self.failed += other.failed;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }

    pub fn status(&self) -> Status {
        if self.failed > 0 {
            Status::Fail
        } else if self.unchecked > 0 {
            Status::PassWithTruncation
        } else {
            Status::Pass
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub subject: String,
    pub status: Status,
    pub families: Vec<FamilyRecord>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            status: Status::Pass,
            families: Vec::new(),
        }
    }

    /// Declares families up front so they are listed in a fixed order even
    /// when no instance reaches them.
    pub fn with_families(subject: impl Into<String>, names: &[&str]) -> Self {
        let mut report = Self::new(subject);
        for name in names {
            report.families.push(FamilyRecord::new(*name));
        }
        report
    }

    pub fn family(&mut self, name: &str) -> &mut FamilyRecord {
        let idx = match self.families.iter().position(|f| f.name == name) {
            Some(i) => i,
            None => {
                self.families.push(FamilyRecord::new(name));
                self.families.len() - 1
            }
        };
        &mut self.families[idx]
    }

    pub fn get(&self, name: &str) -> Option<&FamilyRecord> {
        self.families.iter().find(|f| f.name == name)
    }

    /// Folds `other` into this report family by family.
    pub fn absorb(&mut self, other: VerificationReport) {
        for fam in other.families {
            let name = fam.name.clone();
            self.family(&name).merge(fam);
        }
        self.refresh();
    }

    /// Appends the families of `other` under `prefix/`.
    pub fn include(&mut self, prefix: &str, other: VerificationReport) {
        for mut fam in other.families {
            fam.name = format!("{prefix}/{}", fam.name);
            let name = fam.name.clone();
            self.family(&name).merge(fam);
        }
        self.refresh();
    }

    /// Recomputes the overall status from the families.
    pub fn refresh(&mut self) -> Status {
        self.status = self
            .families
            .iter()
            .map(FamilyRecord::status)
            .fold(Status::Pass, |acc, s| match (acc, s) {
                (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
                (Status::PassWithTruncation, _) | (_, Status::PassWithTruncation) => {
                    Status::PassWithTruncation
                }
                _ => Status::Pass,
            });
        self.status
    }

    pub fn finish(mut self) -> Self {
        self.refresh();
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn total_failed(&self) -> u64 {
        self.families.iter().map(|f| f.failed).sum()
    }

    pub fn total_checked(&self) -> u64 {
        self.families.iter().map(|f| f.checked).sum()
    }

    /// First witness recorded by `family`, if it failed.
    pub fn witness(&self, family: &str) -> Option<&Witness> {
        self.get(family).and_then(|f| f.witnesses.first())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "subject: {}", self.subject);
        let _ = writeln!(out, "status: {}", self.status);
        for fam in &self.families {
            let tag = match fam.status() {
                Status::Fail => "FAIL",
                _ => "ok",
            };
            let _ = write!(out, "  [{tag}] {}: {} checked", fam.name, fam.checked);
            if fam.unchecked > 0 {
                let _ = write!(out, ", {} unchecked (beyond bound)", fam.unchecked);
            }
            if fam.failed > 0 {
                let _ = write!(out, ", {} failed", fam.failed);
            }
            out.push('\n');
            for w in &fam.witnesses {
                let parts: Vec<String> = w
                    .instance
                    .iter()
                    .map(|e| format!("{}={}", e.role, e.value))
                    .collect();
                let _ = writeln!(out, "      witness: {} -- {}", parts.join(", "), w.detail);
            }
        }
        out
    }
}
