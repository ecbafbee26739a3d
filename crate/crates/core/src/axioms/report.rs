use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::families::AlgebraFamily;
use crate::graded::SignRule;

/// Cap on stored witnesses per report; every failing case is still counted.
pub const MAX_WITNESSES: usize = 8;

/// One failing case, with enough data to replay it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub case: usize,
    pub what: String,
    pub witness: Value,
    pub expected: Value,
    pub got: Value,
}

/// Outcome of one named check. Failures are data, never errors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub family: Option<AlgebraFamily>,
    pub rule: Option<SignRule>,
    #[serde(rename = "cases")]
    pub cases_run: usize,
    pub failed_cases: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub metrics: BTreeMap<String, i64>,
    pub pass: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.pass
    }

    pub fn metric(&self, key: &str) -> Option<i64> {
        self.metrics.get(key).copied()
    }

    /// Folds several reports into one named report. Metrics are prefixed by source check.
    pub fn merge(check: &str, parts: Vec<CheckReport>) -> CheckReport {
        let mut out = ReportBuilder::new(check);
        if let Some(first) = parts.first() {
            out.family = first.family;
            out.rule = first.rule;
        }
        let elapsed = parts.iter().map(|p| p.elapsed).sum();
        for part in parts {
            out.cases += part.cases_run;
            out.failed += part.failed_cases;
            for f in part.failures {
                if out.failures.len() < MAX_WITNESSES {
                    out.failures.push(Failure {
                        what: format!("{}: {}", part.check, f.what),
                        ..f
                    });
                }
            }
            for (k, v) in part.metrics {
                out.metrics.insert(format!("{}.{}", part.check, k), v);
            }
        }
        CheckReport {
            elapsed,
            ..out.finish()
        }
    }
}

pub(crate) struct ReportBuilder {
    check: String,
    family: Option<AlgebraFamily>,
    rule: Option<SignRule>,
    cases: usize,
    failed: usize,
    failures: Vec<Failure>,
    metrics: BTreeMap<String, i64>,
    started: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(check: &str) -> Self {
        ReportBuilder {
            check: check.to_string(),
            family: None,
            rule: None,
            cases: 0,
            failed: 0,
            failures: Vec::new(),
            metrics: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    pub(crate) fn family(mut self, f: AlgebraFamily) -> Self {
        self.family = Some(f);
        self
    }

    pub(crate) fn rule(mut self, r: SignRule) -> Self {
        self.rule = Some(r);
        self
    }

    pub(crate) fn record(&mut self, outcome: Option<Failure>) {
        self.cases += 1;
        if let Some(f) = outcome {
            self.fail(f);
        }
    }

    pub(crate) fn fail(&mut self, f: Failure) {
        self.failed += 1;
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(f);
        }
    }

    pub(crate) fn metric(&mut self, key: &str, value: i64) {
        self.metrics.insert(key.to_string(), value);
    }

    pub(crate) fn next_case(&self) -> usize {
        self.cases
    }

    pub(crate) fn finish(self) -> CheckReport {
        CheckReport {
            check: self.check,
            family: self.family,
            rule: self.rule,
            cases_run: self.cases,
            failed_cases: self.failed,
            pass: self.failed == 0,
            failures: self.failures,
            metrics: self.metrics,
            elapsed: self.started.elapsed(),
        }
    }
}
