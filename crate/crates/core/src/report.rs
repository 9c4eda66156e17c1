//! Machine-readable reports.
//!
//! ```text
//! { "version", "config", "entries": [ { "name", "paper_tag", "required",
//!   "max_residual", "tolerance", "samples", "pass", … } ], … }
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::config::RunConfig;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Comparison {
    /// Passes when the value is strictly below the tolerance.
    #[serde(rename = "<")]
    Below,
    /// Passes when the value is at least the threshold.
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "==")]
    Equal,
}

impl Comparison {
    pub fn holds(self, value: f64, bound: f64) -> bool {
        match self {
            Comparison::Below => value < bound,
            Comparison::AtLeast => value >= bound,
            Comparison::Equal => value == bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VariantResidual {
    pub label: String,
    pub max_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEntry {
    pub name: String,
    /// The identity under test, written out.
    pub paper_tag: String,
    pub required: bool,
    pub max_residual: f64,
    pub tolerance: f64,
    pub samples: usize,
    pub pass: bool,
    pub comparison: Comparison,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fock_residual: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub variants: Vec<VariantResidual>,
}

impl ReportEntry {
    pub fn new(name: &str, tag: &str, required: bool, value: f64, tolerance: f64, samples: usize) -> Self {
        Self::compare(name, tag, required, value, Comparison::Below, tolerance, samples)
    }

    pub fn compare(
        name: &str,
        tag: &str,
        required: bool,
        value: f64,
        comparison: Comparison,
        tolerance: f64,
        samples: usize,
    ) -> Self {
        ReportEntry {
            name: name.to_string(),
            paper_tag: tag.to_string(),
            required,
            max_residual: value,
            tolerance,
            samples,
            pass: comparison.holds(value, tolerance),
            comparison,
            matrix_residual: None,
            fock_residual: None,
            variants: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub version: u32,
    pub config: RunConfig,
    pub entries: Vec<ReportEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub conventions: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub diagnostics: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(config: RunConfig, entries: Vec<ReportEntry>) -> Self {
        Report {
            version: REPORT_VERSION,
            config,
            entries,
            conventions: Vec::new(),
            diagnostics: BTreeMap::new(),
        }
    }

    pub fn required_pass(&self) -> bool {
        self.entries.iter().filter(|e| e.required).all(|e| e.pass)
    }

    pub fn first_required_failure(&self) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.required && !e.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} (seed {})", self.config.command, self.config.seed);
        for e in &self.entries {
            let status = match (e.pass, e.required) {
                (true, _) => "PASS",
                (false, true) => "FAIL",
                (false, false) => "info",
            };
            let cmp = match e.comparison {
                Comparison::Below => "<",
                Comparison::AtLeast => ">=",
                Comparison::Equal => "==",
            };
            let _ = writeln!(
                out,
                "[{status}] {:<32} {:.3e} {cmp} {:.1e}  ({} samples{})",
                e.name,
                e.max_residual,
                e.tolerance,
                e.samples,
                if e.required { "" } else { ", exploratory" }
            );
            for v in &e.variants {
                let _ = writeln!(out, "         {:<30} {:.3e}", v.label, v.max_residual);
            }
        }
        for (k, v) in &self.diagnostics {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for c in &self.conventions {
            let _ = writeln!(out, "  convention: {c}");
        }
        out
    }
}
