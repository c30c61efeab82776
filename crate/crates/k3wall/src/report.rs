//! Structured scenario reports: an exact JSON document per genus, with every
//! rational rendered as a `p/q` string. Parsing a serialized report gives the
//! identical value back.

use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// The toolkit computed the value and compared it with the expectation.
    Computed,
    /// A recorded assertion the toolkit cannot decide; shown distinctly.
    Assumed,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub kind: CheckKind,
    pub expected: String,
    pub actual: String,
    pub citation: String,
    pub pass: bool,
    /// Marks values obtained by calculation rather than printed in the
    /// source analysis.
    #[serde(default, skip_serializing_if = "is_false")]
    pub derived: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallSummary {
    pub label: String,
    pub pair: [String; 2],
    pub kind: String,
    pub equation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius_sq: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endpoints: Option<[String; 2]>,
    /// Reduced integer coefficients of the α = 0 restriction when its roots
    /// are irrational.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endpoint_quadratic: Option<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleSummary {
    pub wall: String,
    pub class: String,
    pub beta: String,
    pub alpha_sq: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub genus: u32,
    pub checks: Vec<CheckResult>,
    pub walls: Vec<WallSummary>,
    pub holes: Vec<HoleSummary>,
}

impl ScenarioReport {
    /// A report is green when every computed check passes; assumed lines are
    /// recorded, not verified.
    pub fn is_green(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::Computed)
            .all(|c| c.pass)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::Computed && !c.pass)
    }
}

/// Pretty JSON with a trailing newline, UTF-8, LF line endings.
pub fn serialize_report(report: &ScenarioReport) -> Result<String> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    Ok(text)
}

pub fn parse_report(text: &str) -> Result<ScenarioReport> {
    Ok(serde_json::from_str(text)?)
}
