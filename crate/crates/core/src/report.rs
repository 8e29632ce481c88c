//! Structured pass/fail records shared by every verification suite.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub millis: u64,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, witness: Option<String>) -> Self {
        Check { name: name.into(), status, witness, millis: 0 }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        Self::new(name, Status::Pass, None)
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self::new(name, Status::Fail, Some(witness.into()))
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Runs `f` and stamps the elapsed milliseconds on the produced check.
pub fn timed(f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    let mut c = f();
    c.millis = start.elapsed().as_millis() as u64;
    c
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub params: Map<String, Value>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            suite: suite.into(),
            params: Map::new(),
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn param(mut self, k: &str, v: impl Into<Value>) -> Self {
        self.params.insert(k.to_string(), v.into());
        self
    }

    pub fn set_param(&mut self, k: &str, v: impl Into<Value>) {
        self.params.insert(k.to_string(), v.into());
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        self.checks.extend(cs);
    }

    /// Appends the checks of `o`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, o: Report) {
        for mut c in o.checks {
            c.name = format!("{}{}", prefix, c.name);
            self.checks.push(c);
        }
    }

    /// Sorts checks by name and recomputes the summary.
    pub fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Inconclusive => s.inconclusive += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        self.summary = s;
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass || c.status == Status::Skipped)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with every timing field zeroed, for reproducibility comparisons.
    pub fn to_json_untimed(&self) -> String {
        let mut r = self.clone();
        for c in r.checks.iter_mut() {
            c.millis = 0;
        }
        r.to_json()
    }
}

/// Truncates long witness renderings.
pub fn clip(s: String) -> String {
    const MAX: usize = 400;
    if s.chars().count() <= MAX {
        s
    } else {
        let mut t: String = s.chars().take(MAX).collect();
        t.push_str(" ...");
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_matches_tallies_and_sorting() {
        let mut r = Report::new("demo");
        r.push(Check::fail("b", "x"));
        r.push(Check::pass("a"));
        r.push(Check::new("c", Status::Skipped, None));
        let r = r.finish();
        assert_eq!(r.checks[0].name, "a");
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, inconclusive: 0, skipped: 1 });
        assert!(!r.all_pass());
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["checks"][1]["status"], "fail");
        assert!(v["checks"][0].get("witness").is_none());
    }
}
