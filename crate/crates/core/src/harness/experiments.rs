//! Monte Carlo drivers. Every replication draws from its own stream derived
//! from `(seed, replication)`, and per-replication results are reduced in
//! replication order, so output is independent of the rayon pool size.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::faci::build_interval;
use crate::harness::config::{SimulationConfig, SCHEMA_VERSION};
use crate::harness::design::{generate_sample, Design};
use crate::harness::ks::ks_distance;
use crate::harness::report::{
    CoverageReport, DiscrepancyPoint, DiscrepancyReport, FitReport, FunctionalFit, MethodCoverage,
};
use crate::harness::rng::replication_rng;
use crate::student::{
    endpoint_functional, integral_functional, max_ratio_diagnostic, student_process,
    sup_abs_functional, Center, Sample, StepProcess, TimeFunctionKind, VarianceProfile,
};
use crate::sum::CompensatedSum;
use crate::wiener::FunctionalKind;

/// Number of equally spaced `t` values used by the discrepancy experiment.
pub const DISCREPANCY_GRID: usize = 1024;

#[derive(Debug, Clone, Copy)]
enum Outcome {
    Covered(f64),
    Missed(f64),
    Empty,
    Failed,
}

fn elapsed_ms(start: Instant) -> Option<u64> {
    Some(start.elapsed().as_millis() as u64)
}

fn median(values: &mut [f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    Some(if values.len() % 2 == 1 {
        values[mid]
    } else {
        0.5 * (values[mid - 1] + values[mid])
    })
}

fn draw(design: &Design, n: usize, seed: u64, replication: usize) -> Result<Sample> {
    generate_sample(design, n, &mut replication_rng(seed, replication as u64))
}

/// Empirical coverage of each requested interval for the design's true `mu`.
pub fn coverage_experiment(config: &SimulationConfig) -> Result<CoverageReport> {
    config.validate()?;
    let start = Instant::now();
    let mu = config.design.mu();
    let outcomes: Vec<Vec<Outcome>> = (0..config.replications)
        .into_par_iter()
        .map(|r| {
            let sample = match draw(&config.design, config.n, config.seed, r) {
                Ok(s) => s,
                Err(_) => return vec![Outcome::Failed; config.methods.len()],
            };
            config
                .methods
                .iter()
                .map(
                    |&method| match build_interval(&sample, method, config.alpha) {
                        Ok(ci) if ci.empty => Outcome::Empty,
                        Ok(ci) if ci.contains(mu) => Outcome::Covered(ci.length()),
                        Ok(ci) => Outcome::Missed(ci.length()),
                        Err(_) => Outcome::Failed,
                    },
                )
                .collect()
        })
        .collect();

    let methods = config
        .methods
        .iter()
        .enumerate()
        .map(|(j, &method)| {
            let mut stats = MethodCoverage {
                method,
                empirical_coverage: 0.0,
                covered: 0,
                not_covered: 0,
                empty_count: 0,
                error_count: 0,
                mean_length: None,
                median_length: None,
            };
            let mut lengths = Vec::with_capacity(outcomes.len());
            for row in &outcomes {
                match row[j] {
                    Outcome::Covered(len) => {
                        stats.covered += 1;
                        lengths.push(len);
                    }
                    Outcome::Missed(len) => {
                        stats.not_covered += 1;
                        lengths.push(len);
                    }
                    Outcome::Empty => stats.empty_count += 1,
                    Outcome::Failed => stats.error_count += 1,
                }
            }
            stats.empirical_coverage = stats.covered as f64 / config.replications as f64;
            if !lengths.is_empty() {
                let mut total = CompensatedSum::new();
                total.extend(lengths.iter().copied());
                stats.mean_length = Some(total.value() / lengths.len() as f64);
            }
            stats.median_length = median(&mut lengths);
            stats
        })
        .collect();

    Ok(CoverageReport {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        methods,
        wall_time_ms: elapsed_ms(start),
    })
}

fn evaluate(kind: FunctionalKind, process: &StepProcess, sample: &Sample) -> Result<f64> {
    match kind {
        FunctionalKind::SupAbs => Ok(sup_abs_functional(process)),
        FunctionalKind::Endpoint { t0 } => {
            endpoint_functional(process, sample, &TimeFunctionKind::CenteredSquares, t0)
        }
        FunctionalKind::Integral => Ok(integral_functional(process)),
    }
}

/// Functionals of the `mu`-centered Student process (centered-squares time
/// function) of the original sample, per replication.
fn functional_values(
    design: &Design,
    n: usize,
    seed: u64,
    replication: usize,
    kinds: &[FunctionalKind],
) -> Result<Vec<f64>> {
    let sample = draw(design, n, seed, replication)?;
    let centered = sample.shifted(-design.mu());
    let process = student_process(&centered, &TimeFunctionKind::CenteredSquares)?;
    kinds
        .iter()
        .map(|&kind| evaluate(kind, &process, &sample))
        .collect()
}

/// Kolmogorov–Smirnov distance of each functional's Monte Carlo law from its Wiener limit.
pub fn fclt_fit_experiment(
    config: &SimulationConfig,
    kinds: &[FunctionalKind],
) -> Result<FitReport> {
    config.validate()?;
    for kind in kinds {
        kind.validate()?;
    }
    let start = Instant::now();
    let rows: Vec<Option<Vec<f64>>> = (0..config.replications)
        .into_par_iter()
        .map(|r| functional_values(&config.design, config.n, config.seed, r, kinds).ok())
        .collect();
    let good: Vec<&Vec<f64>> = rows.iter().flatten().collect();
    let error_count = rows.len() - good.len();
    let functionals = kinds
        .iter()
        .enumerate()
        .map(|(j, &kind)| {
            let values: Vec<f64> = good.iter().map(|row| row[j]).collect();
            FunctionalFit {
                functional: kind,
                reference_law: kind.reference_law(),
                ks_distance: ks_distance(&values, |x| kind.reference_cdf(x)),
                sample_count: values.len(),
            }
        })
        .collect();
    let mut echo = config.clone();
    echo.functionals = kinds.to_vec();
    Ok(FitReport {
        schema_version: SCHEMA_VERSION,
        config: echo,
        functionals,
        error_count,
        wall_time_ms: elapsed_ms(start),
    })
}

/// `sup_t |A(t) − B(t)|` over `DISCREPANCY_GRID` equally spaced points of `[0, 1]`.
pub fn grid_sup_distance(a: &StepProcess, b: &StepProcess) -> Result<f64> {
    let last = (DISCREPANCY_GRID - 1) as f64;
    let mut sup = 0.0_f64;
    for j in 0..DISCREPANCY_GRID {
        let t = j as f64 / last;
        sup = sup.max((a.value_at(t)? - b.value_at(t)?).abs());
    }
    Ok(sup)
}

fn discrepancy_once(
    design: &Design,
    profile: &VarianceProfile,
    n: usize,
    seed: u64,
    replication: usize,
) -> Result<f64> {
    let centered = draw(design, n, seed, replication)?.shifted(-design.mu());
    let oracle = student_process(
        &centered,
        &TimeFunctionKind::OracleVariance(profile.clone()),
    )?;
    let empirical = student_process(&centered, &TimeFunctionKind::CenteredSquares)?;
    grid_sup_distance(&oracle, &empirical)
}

/// Median grid sup-distance between the oracle-variance and centered-squares
/// Student processes, for each `n` in `n_grid`.
pub fn discrepancy_experiment(
    design: &Design,
    n_grid: &[usize],
    replications: usize,
    seed: u64,
) -> Result<Vec<DiscrepancyPoint>> {
    design.validate()?;
    if replications == 0 {
        return Err(Error::InvalidConfig(
            "`replications`: must be at least 1".into(),
        ));
    }
    n_grid
        .iter()
        .map(|&n| {
            let profile = design.variance_profile(n)?;
            let distances: Vec<Option<f64>> = (0..replications)
                .into_par_iter()
                .map(|r| discrepancy_once(design, &profile, n, seed, r).ok())
                .collect();
            let mut good: Vec<f64> = distances.iter().flatten().copied().collect();
            let error_count = replications - good.len();
            let median_sup_distance = median(&mut good).ok_or(Error::DegenerateSample(
                "every replication failed in the discrepancy experiment",
            ))?;
            Ok(DiscrepancyPoint {
                n,
                median_sup_distance,
                replications,
                error_count,
            })
        })
        .collect()
}

/// [`discrepancy_experiment`] over the config's `n_grid`, wrapped as a report.
pub fn discrepancy_report(config: &SimulationConfig) -> Result<DiscrepancyReport> {
    config.validate()?;
    let start = Instant::now();
    let points = discrepancy_experiment(
        &config.design,
        &config.sizes(),
        config.replications,
        config.seed,
    )?;
    Ok(DiscrepancyReport {
        schema_version: SCHEMA_VERSION,
        config: config.clone(),
        points,
        wall_time_ms: elapsed_ms(start),
    })
}

/// Median of the mean-centered max-ratio diagnostic for each `n` in `n_grid`.
pub fn max_ratio_experiment(
    design: &Design,
    n_grid: &[usize],
    replications: usize,
    seed: u64,
) -> Result<Vec<(usize, f64)>> {
    design.validate()?;
    n_grid
        .iter()
        .map(|&n| {
            let ratios: Vec<Option<f64>> = (0..replications)
                .into_par_iter()
                .map(|r| {
                    let sample = draw(design, n, seed, r).ok()?;
                    max_ratio_diagnostic(&sample, Center::SampleMean).ok()
                })
                .collect();
            let mut good: Vec<f64> = ratios.into_iter().flatten().collect();
            let m = median(&mut good)
                .ok_or(Error::DegenerateSample("every replication was degenerate"))?;
            Ok((n, m))
        })
        .collect()
}

/// `s_n^{-2} Σ Z_i²`.
pub fn raikov_diagnostic(sample: &Sample, profile: &VarianceProfile) -> Result<f64> {
    if sample.len() != profile.len() {
        return Err(Error::LengthMismatch {
            expected: sample.len(),
            found: profile.len(),
        });
    }
    Ok(sample.sum_of_squares() / profile.total())
}
