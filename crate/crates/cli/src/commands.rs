//! Subcommand bodies. Each one adapts library calls to text output.

use std::fs;
use std::path::Path;
use std::time::Instant;

use facimean_core::harness::{
    coverage_experiment, discrepancy_report, fclt_fit_experiment, generate_sample, persist_report,
    replication_rng, Report, SimulationConfig,
};
use facimean_core::{
    build_interval, functional_limit_quantile, max_ratio_diagnostic, student_process, Center,
    ConfidenceInterval, Error, FunctionalKind, IntervalMethod, Sample, TimeFunctionKind,
    VarianceProfile,
};
use serde_json::json;

use crate::data::read_values;
use crate::error::CliError;
use crate::{Experiment, Method, PathKind, QuantileKind};

/// Heuristic, non-normative cutoff for the max-ratio warning.
pub const MAX_RATIO_WARNING: f64 = 0.05;

fn load_sample(path: &Path) -> Result<Sample, CliError> {
    Ok(Sample::new(read_values(path)?)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Sup => "sup",
        Method::T0 => "t0",
        Method::Integral => "integral",
    }
}

pub fn ci(
    data: &Path,
    method: Method,
    alpha: f64,
    t0: Option<f64>,
    json_out: bool,
) -> Result<(), CliError> {
    let interval_method = match (method, t0) {
        (Method::T0, Some(t0)) => IntervalMethod::FixedT0 { t0 },
        (Method::T0, None) => {
            return Err(CliError::Usage("--t0 is required for --method t0".into()))
        }
        (_, Some(_)) => {
            return Err(CliError::Usage(
                "--t0 is only valid with --method t0".into(),
            ))
        }
        (Method::Sup, None) => IntervalMethod::SupIntersection,
        (Method::Integral, None) => IntervalMethod::IntegralWeighted,
    };
    let sample = load_sample(data)?;
    let ci: ConfidenceInterval = build_interval(&sample, interval_method, alpha)?;
    let ratio = max_ratio_diagnostic(&sample, Center::SampleMean)?;
    if json_out {
        let mut record = json!({
            "method": method_name(method),
            "alpha": alpha,
            "lower": ci.lower,
            "upper": ci.upper,
            "empty": ci.empty,
            "n": sample.len(),
            "max_ratio": ratio,
        });
        if let Some(t0) = t0 {
            record["t0"] = json!(t0);
        }
        println!("{record}");
    } else {
        let t0_field = t0.map(|t| format!(" t0={t}")).unwrap_or_default();
        println!(
            "method={}{t0_field} alpha={alpha} lower={} upper={} empty={} n={} max_ratio={ratio}",
            method_name(method),
            ci.lower,
            ci.upper,
            ci.empty,
            sample.len()
        );
    }
    Ok(())
}

pub fn quantile(
    kind: QuantileKind,
    alpha: f64,
    t0: Option<f64>,
    json_out: bool,
) -> Result<(), CliError> {
    let functional = match (kind, t0) {
        (QuantileKind::Endpoint, t0) => FunctionalKind::Endpoint {
            t0: t0.unwrap_or(1.0),
        },
        (_, Some(_)) => {
            return Err(CliError::Usage(
                "--t0 is only valid with --kind endpoint".into(),
            ))
        }
        (QuantileKind::Sup, None) => FunctionalKind::SupAbs,
        (QuantileKind::Integral, None) => FunctionalKind::Integral,
    };
    let q = functional_limit_quantile(functional, alpha)?;
    if json_out {
        println!(
            "{}",
            json!({ "kind": functional, "alpha": alpha, "quantile": q })
        );
    } else {
        println!("{q:.6}");
    }
    Ok(())
}

pub fn diagnose(data: &Path, json_out: bool) -> Result<(), CliError> {
    let sample = load_sample(data)?;
    if sample.len() < 2 {
        return Err(Error::TooFewObservations {
            needed: 2,
            got: sample.len(),
        }
        .into());
    }
    if sample.is_constant() {
        return Err(Error::DegenerateSample("all observations are equal").into());
    }
    let ratio = max_ratio_diagnostic(&sample, Center::SampleMean)?;
    let css = sample.centered_sum_of_squares();
    let warn = ratio > MAX_RATIO_WARNING;
    if json_out {
        println!(
            "{}",
            json!({
                "n": sample.len(),
                "max_ratio": ratio,
                "centered_sum_of_squares": css,
                "warning": warn,
            })
        );
    } else {
        println!(
            "n={} max_ratio={ratio} centered_sum_of_squares={css}",
            sample.len()
        );
        if warn {
            println!(
                "WARNING: max_ratio {ratio} exceeds the heuristic threshold {MAX_RATIO_WARNING}; \
                 a single observation dominates the spread"
            );
        }
    }
    Ok(())
}

pub fn simulate(
    config_path: &Path,
    experiment: Experiment,
    out: &Path,
    threads: usize,
    record_timing: bool,
    dump_sample: Option<&Path>,
) -> Result<(), CliError> {
    let text = fs::read_to_string(config_path).map_err(|source| CliError::Io {
        path: config_path.to_path_buf(),
        source,
    })?;
    let config: SimulationConfig = serde_json::from_str(&text).map_err(|source| Error::Json {
        path: config_path.to_path_buf(),
        source,
    })?;
    config.validate()?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("--threads: {e}")))?;
    let start = Instant::now();
    let report = pool.install(|| -> Result<Report, Error> {
        Ok(match experiment {
            Experiment::Coverage => Report::Coverage(coverage_experiment(&config)?),
            Experiment::Fit => Report::Fit(fclt_fit_experiment(&config, &config.functionals)?),
            Experiment::Discrepancy => Report::Discrepancy(discrepancy_report(&config)?),
        })
    })?;
    let elapsed = start.elapsed().as_millis();
    let report = if record_timing {
        report
    } else {
        report.without_timing()
    };
    persist_report(&report, out)?;

    if let Some(path) = dump_sample {
        let sample = generate_sample(
            &config.design,
            config.n,
            &mut replication_rng(config.seed, 0),
        )?;
        let mut text = String::new();
        for z in sample.values() {
            text.push_str(&format!("{z}\n"));
        }
        write_file(path, &text)?;
    }

    println!(
        "{} wall_time_ms={elapsed} out={}",
        report.summary(),
        out.display()
    );
    Ok(())
}

pub fn path(
    data: &Path,
    kind: PathKind,
    mu: Option<f64>,
    variances: Option<&Path>,
    out: &Path,
) -> Result<(), CliError> {
    let sample = load_sample(data)?;
    let time_kind = match kind {
        PathKind::Centered => TimeFunctionKind::CenteredSquares,
        PathKind::Raw => TimeFunctionKind::RawSquares {
            center: mu.ok_or_else(|| CliError::Usage("--mu is required for --kind raw".into()))?,
        },
        PathKind::Oracle => {
            let path = variances.ok_or_else(|| {
                CliError::Usage("--variances is required for --kind oracle".into())
            })?;
            TimeFunctionKind::OracleVariance(VarianceProfile::new(read_values(path)?)?)
        }
    };
    let process = student_process(&sample, &time_kind)?;
    let mut text = String::new();
    for (c, v) in process.breakpoints().iter().zip(process.values()) {
        text.push_str(&format!("{c} {v}\n"));
    }
    write_file(out, &text)?;
    Ok(())
}
