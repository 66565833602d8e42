//! Verification records and run summaries.

use serde::{Deserialize, Serialize};

use crate::config::{CheckClass, RunConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

/// Result of one check on one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub class: CheckClass,
    pub outcome: Outcome,
    /// Decided in exact arithmetic rather than in the log2 domain.
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equality: Option<bool>,
    /// Smallest `log2(bound) - log2(value)` seen by the check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin_log2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn is_counterexample(&self) -> bool {
        self.class == CheckClass::ReportOnly && self.outcome == Outcome::Fail
    }

    pub fn is_failure(&self) -> bool {
        self.class == CheckClass::MustHold && self.outcome == Outcome::Fail
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Failure,
    Counterexample,
    Pass,
    /// Above the vertex cap; no checks ran.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordStats {
    pub n: usize,
    pub d: Option<usize>,
    pub alpha: Option<usize>,
    pub edge_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    /// Position in the input, starting at 0.
    pub index: usize,
    pub graph_id: String,
    pub graph6: String,
    pub stats: RecordStats,
    pub status: Status,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<f64>,
}

impl VerificationRecord {
    pub fn status_of(checks: &[CheckRecord]) -> Status {
        if checks.iter().any(CheckRecord::is_failure) {
            Status::Failure
        } else if checks.iter().any(CheckRecord::is_counterexample) {
            Status::Counterexample
        } else {
            Status::Pass
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub passed: usize,
    pub counterexamples: usize,
    pub failures: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Summary {
        let mut s = Summary { graphs: records.len(), ..Summary::default() };
        for r in records {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Counterexample => s.counterexamples += 1,
                Status::Failure => s.failures += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }

    /// 0 when everything passed, 2 when a conjecture failed, 1 when a proved
    /// statement failed.
    pub fn exit_code(&self) -> i32 {
        if self.failures > 0 {
            1
        } else if self.counterexamples > 0 {
            2
        } else {
            0
        }
    }
}

/// Everything `verify` produces; `report` reads this back.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub config: RunConfig,
    pub summary: Summary,
    pub records: Vec<VerificationRecord>,
}
