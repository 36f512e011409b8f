//! Data generators, Lindeberg diagnostics and the Monte Carlo experiment drivers.

mod config;
mod design;
mod experiments;
mod ks;
mod lindeberg;
mod quadrature;
mod report;
mod rng;

pub use config::{SimulationConfig, SCHEMA_VERSION};
pub use design::{generate_sample, Design};
pub use experiments::{
    coverage_experiment, discrepancy_experiment, discrepancy_report, fclt_fit_experiment,
    grid_sup_distance, max_ratio_experiment, raikov_diagnostic, DISCREPANCY_GRID,
};
pub use ks::ks_distance;
pub use lindeberg::{lindeberg_profile, normal_truncated_second_moment};
pub use quadrature::adaptive_simpson;
pub use report::{
    load_report, persist_report, CoverageReport, DiscrepancyPoint, DiscrepancyReport, FitReport,
    FunctionalFit, MethodCoverage, Report,
};
pub use rng::replication_rng;
