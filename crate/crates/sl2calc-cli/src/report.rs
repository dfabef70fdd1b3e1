//! Report assembly and rendering.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::check::{Check, Outcome, Params};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        }
    }
}

/// Result of one check. A failure always carries a witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub anchor: String,
    pub params: Params,
    pub status: Status,
    pub witness: Option<String>,
    pub ms: f64,
}

impl CheckReport {
    /// Key for the order-stable layout: name, then canonical params.
    fn sort_key(&self) -> (String, String) {
        (self.name.clone(), serde_json::to_string(&self.params).unwrap_or_default())
    }
}

/// The report of a whole run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, seed: u64, mut checks: Vec<CheckReport>) -> Self {
        checks.sort_by_cached_key(CheckReport::sort_key);
        SuiteReport { suite: suite.into(), seed, checks }
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Fixed-width table followed by a one-line summary.
    pub fn to_text(&self) -> String {
        let params: Vec<String> = self.checks.iter().map(|c| render_params(&c.params)).collect();
        let name_w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0).max(5);
        let param_w = params.iter().map(|p| p.chars().count()).max().unwrap_or(0).max(6);
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}  seed: {}", self.suite, self.seed);
        let _ = writeln!(out, "{:<6} {:<name_w$} {:<param_w$} {:>9}", "STATUS", "CHECK", "PARAMS", "MS");
        for (c, p) in self.checks.iter().zip(&params) {
            let pad = param_w - p.chars().count();
            let _ = writeln!(out, "{:<6} {:<name_w$} {p}{:pad$} {:>9.1}", c.status.label(), c.name, "", c.ms);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "       anchor: {}", c.anchor);
                let _ = writeln!(out, "       witness: {w}");
            }
        }
        let _ = writeln!(
            out,
            "{} checks: {} passed, {} failed, {} skipped",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        );
        out
    }
}

fn render_params(params: &Params) -> String {
    let parts: Vec<String> = params
        .iter()
        .map(|(k, v)| match v {
            serde_json::Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect();
    parts.join(" ")
}

/// Runs every check on the current rayon pool. With `timings` off the `ms`
/// field is zero, which keeps reports byte-identical across runs.
pub fn run_checks(checks: &[Check], timings: bool) -> Vec<CheckReport> {
    checks
        .par_iter()
        .map(|check| {
            let start = Instant::now();
            let outcome = check.run();
            let ms = if timings { (start.elapsed().as_secs_f64() * 1e4).round() / 10.0 } else { 0.0 };
            let (status, witness) = match outcome {
                Outcome::Pass => (Status::Pass, None),
                Outcome::Fail(w) => (Status::Fail, Some(w)),
                Outcome::Skipped(reason) => (Status::Skipped, Some(reason)),
            };
            CheckReport {
                name: check.name.clone(),
                anchor: check.anchor.to_string(),
                params: check.params.clone(),
                status,
                witness,
                ms,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params;

    #[test]
    fn empty_report_json() {
        let r = SuiteReport::new("udot", 3, vec![]);
        let json: serde_json::Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        assert_eq!(json, serde_json::json!({"suite": "udot", "seed": 3, "checks": []}));
        assert!(!r.has_failures());
    }

    #[test]
    fn failures_carry_witnesses_and_sort() {
        let checks = vec![
            Check::new("b", "x", params!("k" => 2), || Outcome::Pass),
            Check::new("b", "x", params!("k" => 1), || Outcome::Fail("lhs ≠ rhs".into())),
            Check::new("a", "y", params!(), || Outcome::Skipped("n/a".into())),
        ];
        let r = SuiteReport::new("t", 0, run_checks(&checks, false));
        let order: Vec<(&str, String)> = r.checks.iter().map(|c| (c.name.as_str(), render_params(&c.params))).collect();
        assert_eq!(order, vec![("a", String::new()), ("b", "k=1".into()), ("b", "k=2".into())]);
        assert_eq!(r.checks[1].witness.as_deref(), Some("lhs ≠ rhs"));
        assert!(r.has_failures());
        assert_eq!(SuiteReport::from_json(&r.to_json().unwrap()).unwrap(), r);
        assert!(r.to_text().contains("3 checks: 1 passed, 1 failed, 1 skipped"));
    }
}
