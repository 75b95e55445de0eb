use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::config::RunConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub summary: String,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub certificate: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub config: RunConfig,
    pub checks: Vec<CheckRecord>,
    pub overall: Status,
}

impl Report {
    /// Sorts the records by name and derives the overall status.
    pub fn new(config: RunConfig, mut checks: Vec<CheckRecord>) -> Report {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let overall = if checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        Report {
            schema_version: SCHEMA_VERSION,
            config,
            checks,
            overall,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                write!(out, "{} {}: {}", c.status.tag(), c.name, c.summary).unwrap();
                if let Some(ce) = &c.counterexample {
                    write!(out, " [counterexample: {ce}]").unwrap();
                }
                if let Some(ms) = c.elapsed_ms {
                    write!(out, " ({ms} ms)").unwrap();
                }
                out.push('\n');
            }
            let overall = if report.passed() { "pass" } else { "fail" };
            writeln!(out, "overall: {overall} ({} checks)", report.checks.len()).unwrap();
            out
        }
    }
}
