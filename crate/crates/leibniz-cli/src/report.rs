//! Deterministic check reports.
//!
//! A report serializes to JSON with stable field order (struct order plus
//! sorted maps) and contains no timestamps, so identical inputs and seeds
//! produce byte-identical machine output. The human rendering is a
//! line-per-check summary using the same data.

use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const TOOL_NAME: &str = "leibniz";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Info,
}

impl Verdict {
    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Info => "info",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    /// `catalog:<name>`, `file:<path>`, or `builtin:<what>`.
    pub source: String,
    /// SHA-256 of the canonical input bytes.
    pub digest: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelectionInfo {
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, serde_json::Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: InputInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub selection: Option<SelectionInfo>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(command: &str, input: InputInfo) -> Self {
        Report {
            tool: TOOL_NAME,
            version: TOOL_VERSION,
            command: command.to_string(),
            input,
            selection: None,
            checks: Vec::new(),
            verdict: Verdict::Pass,
        }
    }

    pub fn with_selection(mut self, selection: SelectionInfo) -> Self {
        self.selection = Some(selection);
        self
    }

    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict, detail: impl Into<String>) {
        self.push_data(name, verdict, detail, BTreeMap::new());
    }

    pub fn push_data(
        &mut self,
        name: impl Into<String>,
        verdict: Verdict,
        detail: impl Into<String>,
        data: BTreeMap<String, serde_json::Value>,
    ) {
        if verdict == Verdict::Fail {
            self.verdict = Verdict::Fail;
        }
        self.checks.push(Check {
            name: name.into(),
            verdict,
            detail: detail.into(),
            data,
        });
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Stable machine rendering (pretty JSON plus trailing newline).
    pub fn machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} {} — {} on {}\n",
            self.tool, self.version, self.command, self.input.source
        ));
        if let Some(sel) = &self.selection {
            out.push_str(&format!("selection: {}", sel.mode));
            if let Some(n) = sel.samples {
                out.push_str(&format!(", samples={n}"));
            }
            if let Some(seed) = &sel.seed {
                out.push_str(&format!(", seed={seed}"));
            }
            out.push('\n');
        }
        for check in &self.checks {
            out.push_str(&format!(
                "  [{}] {}: {}\n",
                check.verdict.label(),
                check.name,
                check.detail
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("sha256:{:x}", hasher.finalize())
}

pub fn json_str(value: impl Into<String>) -> serde_json::Value {
    serde_json::Value::String(value.into())
}
