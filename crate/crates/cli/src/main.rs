use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod data;
mod error;

use error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "facimean",
    version,
    about = "Functional asymptotic confidence intervals for a common mean"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Sup,
    T0,
    Integral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuantileKind {
    Sup,
    Endpoint,
    Integral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Experiment {
    Coverage,
    Fit,
    Discrepancy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PathKind {
    Oracle,
    Centered,
    Raw,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Confidence interval for the common mean of a data file.
    Ci {
        #[arg(long)]
        data: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        alpha: f64,
        /// Required for `--method t0`.
        #[arg(long)]
        t0: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Critical value of a limit law.
    Quantile {
        #[arg(long, value_enum)]
        kind: QuantileKind,
        #[arg(long)]
        alpha: f64,
        /// Endpoint time; defaults to 1.
        #[arg(long)]
        t0: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Max-ratio diagnostic of a data file.
    Diagnose {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run a Monte Carlo experiment from a JSON config.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum)]
        experiment: Experiment,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads; 0 uses all cores. Does not affect results.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Store the elapsed wall time in the report (makes it run-dependent).
        #[arg(long)]
        record_timing: bool,
        /// Write the first replication's sample, one value per line.
        #[arg(long)]
        dump_sample: Option<PathBuf>,
    },
    /// Write a Student-process path as `breakpoint value` rows.
    Path {
        #[arg(long)]
        data: PathBuf,
        #[arg(long, value_enum)]
        kind: PathKind,
        /// Center for `--kind raw`.
        #[arg(long)]
        mu: Option<f64>,
        /// Variances for `--kind oracle`, one per line.
        #[arg(long)]
        variances: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Ci {
            data,
            method,
            alpha,
            t0,
            json,
        } => commands::ci(&data, method, alpha, t0, json),
        Command::Quantile {
            kind,
            alpha,
            t0,
            json,
        } => commands::quantile(kind, alpha, t0, json),
        Command::Diagnose { data, json } => commands::diagnose(&data, json),
        Command::Simulate {
            config,
            experiment,
            out,
            threads,
            record_timing,
            dump_sample,
        } => commands::simulate(
            &config,
            experiment,
            &out,
            threads,
            record_timing,
            dump_sample.as_deref(),
        ),
        Command::Path {
            data,
            kind,
            mu,
            variances,
            out,
        } => commands::path(&data, kind, mu, variances.as_deref(), &out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}: {e}", e.kind());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
