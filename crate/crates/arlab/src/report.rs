//! Structured verdicts for theorem and inequality checks, serialized as
//! stable JSON.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A hypothesis of the statement under test is not met; the check is
    /// neither evidence for nor against.
    InconclusiveHypothesis,
    /// A search bound was exhausted before a certain answer.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Int(i64),
    Bool(bool),
    Str(String),
    Ideal(Vec<String>),
    Seq(Vec<i64>),
}

impl From<u64> for Quantity {
    fn from(v: u64) -> Self {
        Quantity::Int(v as i64)
    }
}
impl From<usize> for Quantity {
    fn from(v: usize) -> Self {
        Quantity::Int(v as i64)
    }
}
impl From<bool> for Quantity {
    fn from(v: bool) -> Self {
        Quantity::Bool(v)
    }
}
impl From<&str> for Quantity {
    fn from(v: &str) -> Self {
        Quantity::Str(v.to_string())
    }
}
impl From<Vec<String>> for Quantity {
    fn from(v: Vec<String>) -> Self {
        Quantity::Ideal(v)
    }
}

/// Verdict of one named check, with the inputs and every computed quantity
/// needed to reproduce it. A failing verdict always carries a certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub inputs: BTreeMap<String, String>,
    pub quantities: BTreeMap<String, Quantity>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

impl CheckReport {
    pub fn new(check: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            inputs: BTreeMap::new(),
            quantities: BTreeMap::new(),
            verdict: Verdict::Pass,
            certificate: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<String>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn quantity(mut self, key: &str, value: impl Into<Quantity>) -> Self {
        self.quantities.insert(key.to_string(), value.into());
        self
    }

    pub fn set_quantity(&mut self, key: &str, value: impl Into<Quantity>) {
        self.quantities.insert(key.to_string(), value.into());
    }

    pub fn fail(mut self, certificate: impl Into<String>) -> Self {
        self.verdict = Verdict::Fail;
        self.certificate = Some(certificate.into());
        self
    }

    pub fn inconclusive_hypothesis(mut self, why: impl Into<String>) -> Self {
        self.verdict = Verdict::InconclusiveHypothesis;
        self.certificate = Some(why.into());
        self
    }

    pub fn inconclusive(mut self, why: impl Into<String>) -> Self {
        self.verdict = Verdict::Inconclusive;
        self.certificate = Some(why.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

/// Results of a named suite. Wall-clock timings are kept for the
/// human-readable summary but excluded from the JSON so that identical
/// inputs produce byte-identical output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
    #[serde(skip)]
    pub timings: Vec<(String, Duration)>,
}

impl SuiteResult {
    pub fn new(suite: &str) -> Self {
        SuiteResult {
            suite: suite.to_string(),
            reports: Vec::new(),
            summary: Summary::default(),
            timings: Vec::new(),
        }
    }

    pub fn push(&mut self, report: CheckReport, elapsed: Duration) {
        match report.verdict {
            Verdict::Pass => self.summary.pass += 1,
            Verdict::Fail => self.summary.fail += 1,
            _ => self.summary.inconclusive += 1,
        }
        self.timings.push((report.check.clone(), elapsed));
        self.reports.push(report);
    }

    pub fn exit_ok(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        for (report, (_, t)) in self.reports.iter().zip(&self.timings) {
            let verdict = match report.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::InconclusiveHypothesis => "INCONCLUSIVE-HYPOTHESIS",
                Verdict::Inconclusive => "INCONCLUSIVE",
            };
            out.push_str(&format!(
                "{verdict:>24}  {}  ({:.2}s)\n",
                report.check,
                t.as_secs_f64()
            ));
        }
        out.push_str(&format!(
            "suite {}: {} pass, {} fail, {} inconclusive\n",
            self.suite, self.summary.pass, self.summary.fail, self.summary.inconclusive
        ));
        out
    }
}
