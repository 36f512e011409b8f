//! Experiment reports and their JSON persistence.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faci::IntervalMethod;
use crate::harness::config::SimulationConfig;
use crate::wiener::FunctionalKind;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodCoverage {
    pub method: IntervalMethod,
    pub empirical_coverage: f64,
    pub covered: usize,
    pub not_covered: usize,
    /// Empty intersections; counted as non-coverage.
    pub empty_count: usize,
    /// Per-replication errors such as a zero time index; counted as non-coverage.
    pub error_count: usize,
    /// Over non-empty intervals; `None` when there are none.
    pub mean_length: Option<f64>,
    pub median_length: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub schema_version: u32,
    pub config: SimulationConfig,
    pub methods: Vec<MethodCoverage>,
    pub wall_time_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionalFit {
    pub functional: FunctionalKind,
    pub reference_law: String,
    pub ks_distance: f64,
    pub sample_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub schema_version: u32,
    pub config: SimulationConfig,
    pub functionals: Vec<FunctionalFit>,
    /// Replications skipped because the sample was degenerate.
    pub error_count: usize,
    pub wall_time_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyPoint {
    pub n: usize,
    pub median_sup_distance: f64,
    pub replications: usize,
    pub error_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub schema_version: u32,
    pub config: SimulationConfig,
    pub points: Vec<DiscrepancyPoint>,
    pub wall_time_ms: Option<u64>,
}

/// Any persisted report, tagged by experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "experiment", rename_all = "snake_case")]
pub enum Report {
    Coverage(CoverageReport),
    Fit(FitReport),
    Discrepancy(DiscrepancyReport),
}

impl Report {
    pub fn wall_time_ms(&self) -> Option<u64> {
        match self {
            Report::Coverage(r) => r.wall_time_ms,
            Report::Fit(r) => r.wall_time_ms,
            Report::Discrepancy(r) => r.wall_time_ms,
        }
    }

    /// Drops the wall-clock field so that the document depends only on the config.
    pub fn without_timing(mut self) -> Self {
        match &mut self {
            Report::Coverage(r) => r.wall_time_ms = None,
            Report::Fit(r) => r.wall_time_ms = None,
            Report::Discrepancy(r) => r.wall_time_ms = None,
        }
        self
    }

    /// One-line `key=value` summary.
    pub fn summary(&self) -> String {
        match self {
            Report::Coverage(r) => {
                let parts: Vec<String> = r
                    .methods
                    .iter()
                    .map(|m| format!("{}={}", m.method.label(), m.empirical_coverage))
                    .collect();
                format!(
                    "experiment=coverage n={} replications={} {}",
                    r.config.n,
                    r.config.replications,
                    parts.join(" ")
                )
            }
            Report::Fit(r) => {
                let parts: Vec<String> = r
                    .functionals
                    .iter()
                    .map(|f| format!("ks[{}]={}", f.reference_law, f.ks_distance))
                    .collect();
                format!(
                    "experiment=fit n={} replications={} {}",
                    r.config.n,
                    r.config.replications,
                    parts.join(" ")
                )
            }
            Report::Discrepancy(r) => {
                let parts: Vec<String> = r
                    .points
                    .iter()
                    .map(|p| format!("median[{}]={}", p.n, p.median_sup_distance))
                    .collect();
                format!(
                    "experiment=discrepancy replications={} {}",
                    r.config.replications,
                    parts.join(" ")
                )
            }
        }
    }
}

/// Writes `report` as pretty-printed JSON.
pub fn persist_report(report: &Report, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(report).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })?;
    text.push('\n');
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_report(path: &Path) -> Result<Report> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })
}
