//! Machine-readable verification reports.
//!
//! A report is deterministic given identical inputs: cases are sorted by
//! name, floats serialize with shortest round-trip formatting, and the only
//! run-dependent field is the timestamp, which callers supply explicitly.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseStatus {
    /// Measured error within tolerance.
    Pass,
    /// Measured error above tolerance, or the computation itself failed.
    Fail,
    /// Measured and recorded without asserting; never affects the exit code.
    ReportedOnly,
    /// Some compared quantities hit a vanishing parameter and were skipped;
    /// the remaining comparisons passed. Does not affect the exit code.
    ParameterDegenerate,
}

impl CaseStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseStatus::Pass => "pass",
            CaseStatus::Fail => "fail",
            CaseStatus::ReportedOnly => "reported-only",
            CaseStatus::ParameterDegenerate => "parameter-degenerate",
        }
    }
}

/// One verification case.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseRecord {
    pub name: String,
    /// Stable slug naming the identity under test, for auditing reports.
    pub identity: String,
    /// Printed parameter bindings.
    pub params: String,
    pub lhs: f64,
    pub rhs: f64,
    /// Measured error (relative or absolute per the identity's contract).
    pub error: f64,
    /// Pinned tolerance; absent on reported-only cases.
    pub tolerance: Option<f64>,
    pub status: CaseStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CaseRecord {
    /// An asserted case: passes iff error <= tolerance.
    pub fn asserted(
        name: impl Into<String>,
        identity: impl Into<String>,
        params: impl Into<String>,
        lhs: f64,
        rhs: f64,
        error: f64,
        tolerance: f64,
    ) -> Self {
        let status = if error <= tolerance {
            CaseStatus::Pass
        } else {
            CaseStatus::Fail
        };
        Self {
            name: name.into(),
            identity: identity.into(),
            params: params.into(),
            lhs,
            rhs,
            error,
            tolerance: Some(tolerance),
            status,
            note: None,
        }
    }

    /// A measured-only case that never affects the exit code.
    pub fn reported(
        name: impl Into<String>,
        identity: impl Into<String>,
        params: impl Into<String>,
        lhs: f64,
        rhs: f64,
        error: f64,
        note: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            identity: identity.into(),
            params: params.into(),
            lhs,
            rhs,
            error,
            tolerance: None,
            status: CaseStatus::ReportedOnly,
            note: Some(note.into()),
        }
    }

    /// A case whose computation failed outright.
    pub fn failed(
        name: impl Into<String>,
        identity: impl Into<String>,
        params: impl Into<String>,
        note: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            identity: identity.into(),
            params: params.into(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            error: f64::NAN,
            tolerance: None,
            status: CaseStatus::Fail,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_status(mut self, status: CaseStatus) -> Self {
        self.status = status;
        self
    }
}

/// Counts per status.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub reported_only: usize,
    pub parameter_degenerate: usize,
}

/// A full suite run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub version: String,
    pub timestamp: String,
    pub summary: Summary,
    pub cases: Vec<CaseRecord>,
}

impl VerifyReport {
    /// Assemble a report: cases are sorted by name and counted. The timestamp
    /// starts empty so that report bodies are reproducible; stamp it with
    /// [`VerifyReport::with_timestamp`] at the boundary that cares.
    pub fn new(suite: impl Into<String>, mut cases: Vec<CaseRecord>) -> Self {
        cases.sort_by(|a, b| a.name.cmp(&b.name));
        let mut summary = Summary {
            total: cases.len(),
            ..Summary::default()
        };
        for case in &cases {
            match case.status {
                CaseStatus::Pass => summary.pass += 1,
                CaseStatus::Fail => summary.fail += 1,
                CaseStatus::ReportedOnly => summary.reported_only += 1,
                CaseStatus::ParameterDegenerate => summary.parameter_degenerate += 1,
            }
        }
        Self {
            suite: suite.into(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: String::new(),
            summary,
            cases,
        }
    }

    pub fn with_timestamp(mut self, timestamp: impl Into<String>) -> Self {
        self.timestamp = timestamp.into();
        self
    }

    /// True when no case failed. Reported-only and parameter-degenerate cases
    /// never affect this.
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    /// CSV body with a fixed header; field order matches the JSON fields.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,identity,params,lhs,rhs,error,tolerance,status,note\n");
        for case in &self.cases {
            let tolerance = case.tolerance.map(|t| t.to_string()).unwrap_or_default();
            let note = case.note.as_deref().unwrap_or("");
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                csv_field(&case.name),
                csv_field(&case.identity),
                csv_field(&case.params),
                case.lhs,
                case.rhs,
                case.error,
                tolerance,
                case.status.as_str(),
                csv_field(note),
            ));
        }
        out
    }
}

fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}
