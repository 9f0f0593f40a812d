//! Suite certificates: input digests, the ordered check list and a verdict.
//!
//! Serialisation is byte-deterministic: maps are ordered, witnesses are the
//! canonical first failures, and input paths are reduced to base names.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::report::{CheckEntry, CheckReport};

pub const CERTIFICATE_SCHEMA: &str = "hopfcert-certificate/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn of(report: &CheckReport) -> Self {
        if report.passed() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Process exit code: 0 on pass, 1 on fail.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub file: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedWitness {
    pub indices: Vec<usize>,
    pub lhs: Vec<(usize, String)>,
    pub rhs: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedCheck {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<CertifiedWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&CheckEntry> for CertifiedCheck {
    fn from(e: &CheckEntry) -> Self {
        let literal = |v: &crate::linalg::Vector| {
            v.entries()
                .iter()
                .map(|(i, c)| (*i, c.to_literal()))
                .collect()
        };
        CertifiedCheck {
            name: e.name.clone(),
            passed: e.passed,
            informational: e.informational,
            witness: e.witness.as_ref().map(|w| CertifiedWitness {
                indices: w.indices.clone(),
                lhs: literal(&w.lhs),
                rhs: literal(&w.rhs),
            }),
            note: e.note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub engine_version: String,
    pub suite: String,
    pub field: String,
    /// Keyed by input role.
    pub inputs: BTreeMap<String, InputDigest>,
    pub checks: Vec<CertifiedCheck>,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn new(
        suite: &str,
        field: crate::scalar::Field,
        inputs: BTreeMap<String, InputDigest>,
        report: &CheckReport,
    ) -> Self {
        Certificate {
            schema: CERTIFICATE_SCHEMA.into(),
            engine_version: crate::ENGINE_VERSION.into(),
            suite: suite.into(),
            field: field.to_string(),
            inputs,
            checks: report.entries.iter().map(CertifiedCheck::from).collect(),
            verdict: Verdict::of(report),
        }
    }

    pub fn to_json(&self) -> String {
        super::format::to_json(self)
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        super::format::from_json(text)
    }

    pub fn check(&self, name: &str) -> Option<&CertifiedCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite:  {}", self.suite);
        let _ = writeln!(out, "field:  {}", self.field);
        let _ = writeln!(out, "engine: {}", self.engine_version);
        for (role, d) in &self.inputs {
            let _ = writeln!(out, "input:  {role} = {} (sha256 {})", d.file, d.sha256);
        }
        for c in &self.checks {
            let status = match (c.passed, c.informational) {
                (true, false) => "PASS",
                (false, false) => "FAIL",
                (true, true) => "info: true",
                (false, true) => "info: false",
            };
            let _ = writeln!(out, "[{status}] {}", c.name);
            if let Some(note) = &c.note {
                let _ = writeln!(out, "        note: {note}");
            }
            if let Some(w) = &c.witness {
                let side = |v: &[(usize, String)]| {
                    if v.is_empty() {
                        "0".to_string()
                    } else {
                        v.iter()
                            .map(|(i, c)| format!("{c}·e{i}"))
                            .collect::<Vec<_>>()
                            .join(" + ")
                    }
                };
                let _ = writeln!(out, "        witness at {:?}", w.indices);
                let _ = writeln!(out, "          lhs = {}", side(&w.lhs));
                let _ = writeln!(out, "          rhs = {}", side(&w.rhs));
            }
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }
}
