use std::fmt::Write as _;

use finchu::category::Violation;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One verified claim. `witness` is present exactly when the check failed
/// or was skipped, and is enough to replay the failure through the library.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub citation: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<usize>,
}

impl Check {
    pub fn pass(id: impl Into<String>, citation: impl Into<String>, instances: usize) -> Self {
        Check {
            id: id.into(),
            citation: citation.into(),
            status: Status::Pass,
            witness: None,
            instances: Some(instances),
        }
    }

    pub fn fail(id: impl Into<String>, citation: impl Into<String>, witness: Value) -> Self {
        Check {
            id: id.into(),
            citation: citation.into(),
            status: Status::Fail,
            witness: Some(witness),
            instances: None,
        }
    }

    pub fn skipped(id: impl Into<String>, citation: impl Into<String>, reason: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            citation: citation.into(),
            status: Status::Skipped,
            witness: Some(json!({ "reason": reason.into() })),
            instances: None,
        }
    }

    /// Pass with the instance count, or fail with the violation.
    pub fn from_result(id: impl Into<String>, citation: impl Into<String>, r: Result<usize, Violation>) -> Self {
        match r {
            Ok(n) => Check::pass(id, citation, n),
            Err(v) => Check::fail(id, citation, violation(&v)),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn violation(v: &Violation) -> Value {
    json!({ "law": v.law, "detail": v.detail })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub cap: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl Report {
    /// Checks are sorted by id; a repeated id keeps its first occurrence.
    pub fn new(suite: &str, cap: usize, seed: u64, mut checks: Vec<Check>, elapsed_ms: u64) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        checks.dedup_by(|a, b| a.id == b.id);
        Report {
            suite: suite.to_string(),
            cap,
            seed,
            checks,
            elapsed_ms,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (cap {}, seed {})", self.suite, self.cap, self.seed);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = write!(out, "{tag}  {}  [{}]", c.id, c.citation);
            if let Some(n) = c.instances {
                let _ = write!(out, "  {n} instances");
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "      witness: {w}");
            }
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} skipped in {} ms",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped),
            self.elapsed_ms
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_are_sorted_and_deduplicated() {
        let r = Report::new(
            "x",
            2,
            0,
            vec![
                Check::pass("b", "", 1),
                Check::pass("a", "", 1),
                Check::pass("b", "", 2),
            ],
            0,
        );
        let ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["a", "b"]);
        assert_eq!(r.checks[1].instances, Some(1));
    }

    #[test]
    fn json_round_trips() {
        let r = Report::new("x", 2, 7, vec![Check::fail("a", "c", json!({"law": "l"}))], 3);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(!back.all_passed());
    }
}
