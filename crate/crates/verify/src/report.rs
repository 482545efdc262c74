use serde::{Deserialize, Serialize};

use gvcrit::SolveStats;

use crate::claims::{Params, Profile};

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The solver ran out of budget, or the instance is outside what the
    /// solver can represent.
    Undecided {
        budget: Option<u64>,
        reason: String,
    },
}

/// A graph together with the values computed for it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Evidence {
    /// graph6, or a named-graph expression for the fixed families.
    pub graph: String,
    pub values: Vec<(String, i64)>,
}

impl Evidence {
    pub fn new(graph: impl Into<String>) -> Self {
        Evidence {
            graph: graph.into(),
            values: Vec::new(),
        }
    }

    pub fn with(mut self, label: impl Into<String>, value: impl TryInto<i64>) -> Self {
        let value = value.try_into().unwrap_or(i64::MAX);
        self.values.push((label.into(), value));
        self
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub statement: String,
    pub parameters: Params,
    pub status: Status,
    /// What was examined, e.g. the census range.
    pub checked: String,
    pub evidence: Vec<Evidence>,
    pub wall_time_ms: u64,
    pub stats: SolveStats,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub undecided: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub profile: Option<Profile>,
    pub allow_stretch: bool,
    pub summary: Summary,
    pub claims: Vec<ClaimReport>,
}

impl RunReport {
    pub fn new(profile: Option<Profile>, allow_stretch: bool, claims: Vec<ClaimReport>) -> Self {
        let mut summary = Summary::default();
        for c in &claims {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Undecided { .. } => summary.undecided += 1,
            }
        }
        RunReport {
            schema_version: SCHEMA_VERSION,
            profile,
            allow_stretch,
            summary,
            claims,
        }
    }
}

impl ClaimReport {
    /// One-line human summary.
    pub fn line(&self) -> String {
        let status = match &self.status {
            Status::Pass => "PASS".to_string(),
            Status::Fail => "FAIL".to_string(),
            Status::Undecided { reason, .. } => format!("UNDECIDED ({reason})"),
        };
        format!(
            "{:<10} {status} [{} ms, {} states] {}",
            self.claim_id, self.wall_time_ms, self.stats.expanded, self.checked
        )
    }
}
