//! Check records and their JSON / CSV / text renderings.
//!
//! JSON layout: `{ "version", "config", "checks": [ { "name", "paper_ref",
//! "value", "expected", "tolerance", "pass", "runtime_s" } ] }`. Floats are
//! written in shortest round-trip form. `runtime_s` is `null` unless timings
//! were requested, so reports for a fixed configuration are byte-stable.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const REPORT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The claim or formula the check exercises, or `"plumbing"`.
    pub paper_ref: String,
    pub value: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub runtime_s: Option<f64>,
}

impl Check {
    /// Passes when `|value − expected| ≤ tolerance`.
    pub fn within(name: impl Into<String>, claim: &str, value: f64, expected: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            paper_ref: claim.to_string(),
            value,
            expected,
            tolerance,
            pass: (value - expected).abs() <= tolerance,
            runtime_s: None,
        }
    }

    /// A residual that should vanish: passes when `value ≤ tolerance`.
    pub fn residual(name: impl Into<String>, claim: &str, value: f64, tolerance: f64) -> Self {
        Self::within(name, claim, value, 0.0, tolerance)
    }

    pub fn with_runtime(mut self, seconds: Option<f64>) -> Self {
        self.runtime_s = seconds;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Serialize)]
struct Document<'a, C: Serialize> {
    version: &'a str,
    config: &'a C,
    checks: &'a [Check],
}

/// Renders the checks in the requested format.
pub fn render<C: Serialize>(checks: &[Check], config: &C, format: Format) -> Result<String> {
    if checks.is_empty() {
        return Err(Error::Report("no checks to report".into()));
    }
    match format {
        Format::Json => {
            let doc = Document {
                version: REPORT_VERSION,
                config,
                checks,
            };
            let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::Report(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "paper_ref", "value", "expected", "tolerance", "pass", "runtime_s"])
                .map_err(|e| Error::Report(e.to_string()))?;
            for c in checks {
                w.write_record([
                    c.name.clone(),
                    c.paper_ref.clone(),
                    c.value.to_string(),
                    c.expected.to_string(),
                    c.tolerance.to_string(),
                    c.pass.to_string(),
                    c.runtime_s.map(|t| t.to_string()).unwrap_or_default(),
                ])
                .map_err(|e| Error::Report(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Report(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Report(e.to_string()))
        }
        Format::Text => Ok(render_text(checks)),
    }
}

fn render_text(checks: &[Check]) -> String {
    let rows: Vec<[String; 5]> = checks
        .iter()
        .map(|c| {
            [
                c.name.clone(),
                format!("{:.6e}", c.value),
                format!("{:.6e}", c.expected),
                format!("{:.1e}", c.tolerance),
                if c.pass { "PASS".into() } else { "FAIL".into() },
            ]
        })
        .collect();
    let header = ["check", "value", "expected", "tolerance", "status"];
    let mut widths = header.map(str::len);
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: [&str; 5]| {
        let _ = writeln!(
            out,
            "{:<w0$}  {:>w1$}  {:>w2$}  {:>w3$}  {:<w4$}",
            cells[0],
            cells[1],
            cells[2],
            cells[3],
            cells[4],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2],
            w3 = widths[3],
            w4 = widths[4],
        );
    };
    line(&mut out, header);
    for r in &rows {
        line(&mut out, [&r[0], &r[1], &r[2], &r[3], &r[4]]);
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let _ = writeln!(out, "{passed}/{} checks passed", checks.len());
    out
}

/// Renders and writes the report to `path`, or to stdout when `path` is `None`.
pub fn emit_report<C: Serialize>(checks: &[Check], config: &C, format: Format, path: Option<&Path>) -> Result<()> {
    let text = render(checks, config, format)?;
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Report(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<Check> {
        vec![
            Check::within("charge", "plumbing", 0.999_999_999_999_123_4, 1.0, 1e-8),
            Check::residual("defect", "plumbing", 1.0 / 3.0, 1e-12),
        ]
    }

    #[test]
    fn empty_is_an_error() {
        assert!(render(&[], &(), Format::Json).is_err());
        assert!(emit_report(&[], &(), Format::Text, None).is_err());
    }

    #[test]
    fn pass_logic() {
        let c = sample();
        assert!(c[0].pass);
        assert!(!c[1].pass);
        assert!(!Check::within("nan", "plumbing", f64::NAN, 1.0, 1.0).pass);
    }

    #[test]
    fn json_round_trips_exactly() {
        let checks = sample();
        let text = render(&checks, &serde_json::json!({"n": 2}), Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["version"], REPORT_VERSION);
        let back: Vec<Check> = serde_json::from_value(v["checks"].clone()).unwrap();
        assert_eq!(back, checks);
        assert_eq!(back[0].value.to_bits(), checks[0].value.to_bits());
        assert!(v["checks"][0]["runtime_s"].is_null());
    }

    #[test]
    fn csv_and_text() {
        let csv = render(&sample(), &(), Format::Csv).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "name,paper_ref,value,expected,tolerance,pass,runtime_s");
        assert_eq!(csv.lines().count(), 3);
        let text = render(&sample(), &(), Format::Text).unwrap();
        assert!(text.contains("PASS") && text.contains("FAIL"));
        assert!(text.ends_with("1/2 checks passed\n"));
    }

    #[test]
    fn unwritable_path() {
        let err = emit_report(&sample(), &(), Format::Json, Some(Path::new("/nonexistent/dir/r.json")));
        assert!(matches!(err, Err(Error::Report(_))));
    }
}
