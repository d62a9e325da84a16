use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub v: u32,
    pub subcommand: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.subcommand);
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for c in &self.checks {
            let tag = if c.verdict { "PASS" } else { "FAIL" };
            let _ = write!(out, "[{tag}] {}", c.name);
            if let Some(ms) = c.duration_ms {
                let _ = write!(out, " ({ms} ms)");
            }
            out.push('\n');
            if let (false, Some(w)) = (c.verdict, &c.witness) {
                let _ = writeln!(out, "       witness: {w}");
            }
        }
        if let Some(r) = &self.result {
            let _ = writeln!(out, "result: {}", serde_json::to_string_pretty(r).unwrap_or_default());
        }
        let _ = writeln!(out, "summary: {} passed, {} failed", self.summary.passed, self.summary.failed);
        out
    }
}

/// Collects check records for one subcommand run.
pub struct Recorder {
    subcommand: String,
    parameters: BTreeMap<String, Value>,
    checks: Vec<CheckRecord>,
    result: Option<Value>,
    timings: bool,
}

impl Recorder {
    pub fn new(subcommand: &str, timings: bool) -> Recorder {
        Recorder { subcommand: subcommand.to_string(), parameters: BTreeMap::new(), checks: Vec::new(), result: None, timings }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.parameters.insert(key.to_string(), serde_json::to_value(value).expect("parameters serialize"));
    }

    pub fn check(&mut self, name: impl Into<String>, verdict: bool, witness: Option<Value>) {
        self.checks.push(CheckRecord { name: name.into(), verdict, witness, duration_ms: None });
    }

    /// Runs `f`, recording its verdict and, when enabled, its duration.
    pub fn timed<T>(&mut self, name: impl Into<String>, f: impl FnOnce() -> (bool, Option<Value>, T)) -> T {
        let start = Instant::now();
        let (verdict, witness, out) = f();
        let duration_ms = self.timings.then(|| start.elapsed().as_millis());
        self.checks.push(CheckRecord { name: name.into(), verdict, witness, duration_ms });
        out
    }

    pub fn result(&mut self, value: impl Serialize) {
        self.result = Some(serde_json::to_value(value).expect("results serialize"));
    }

    pub fn finish(self) -> RunReport {
        let passed = self.checks.iter().filter(|c| c.verdict).count();
        RunReport {
            v: REPORT_VERSION,
            subcommand: self.subcommand,
            parameters: self.parameters,
            summary: Summary { passed, failed: self.checks.len() - passed },
            checks: self.checks,
            result: self.result,
        }
    }
}

pub fn witness(value: impl Serialize) -> Option<Value> {
    Some(serde_json::to_value(value).expect("witnesses serialize"))
}
