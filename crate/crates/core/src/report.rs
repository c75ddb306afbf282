//! Versioned JSON report of a verification scan.

use serde::{Deserialize, Serialize};

use crate::catalog::FamilyParams;
use crate::verify::{PointRecord, ScanReport, ScanSummary};
use crate::Result;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

/// Limits the summary extrema are held to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// Bound on `|slack| / max(1, bound)`.
    pub slack: f64,
    pub pattern: f64,
    pub gauss: f64,
    pub codazzi: f64,
}

impl Thresholds {
    /// Verdict tolerance for slack and pattern, `1e-6` for the structure residuals.
    pub fn from_tol(tol: f64) -> Self {
        Self {
            slack: tol,
            pattern: tol,
            gauss: 1e-6,
            codazzi: 1e-6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridInfo {
    pub counts: [usize; 3],
    pub ranges: [(f64, f64); 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub tag: String,
    pub a: Option<f64>,
    pub coeffs: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool_version: String,
    pub family: FamilyInfo,
    pub grid: GridInfo,
    pub tol: f64,
    pub thresholds: Thresholds,
    pub summary: ScanSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<PointRecord>>,
    pub status: Status,
}

impl ReportDocument {
    /// Wall time is deliberately left out so reports are reproducible byte for byte.
    pub fn new(params: &FamilyParams, report: &ScanReport, tol: f64, include_points: bool) -> Self {
        let thresholds = Thresholds::from_tol(tol);
        Self {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            family: FamilyInfo {
                tag: params.family.name().to_string(),
                a: params.a,
                coeffs: params.coeffs.as_ref().map(|p| p.to_string()),
            },
            grid: GridInfo {
                counts: report.grid.counts,
                ranges: report.grid.ranges,
            },
            tol,
            thresholds,
            status: status_of(&report.summary, &thresholds),
            summary: report.summary.clone(),
            points: include_points.then(|| report.points.clone()),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self)
            .map_err(|e| crate::Error::config(format!("cannot serialize report: {e}")))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::Error::config(format!("cannot parse report: {e}")))
    }
}

/// PASS exactly when no node failed and every extremum is within its threshold.
pub fn status_of(s: &ScanSummary, t: &Thresholds) -> Status {
    let ok = s.failed == 0
        && s.max_rel_slack <= t.slack
        && s.max_pattern_residual <= t.pattern
        && s.max_gauss_residual <= t.gauss
        && s.max_codazzi_residual <= t.codazzi;
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}
