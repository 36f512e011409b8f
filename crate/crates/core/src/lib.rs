//! Functional asymptotic confidence intervals (FACIs) for the common mean of
//! independent observations, built from data-based Student processes, plus a
//! Monte Carlo harness that checks the limit laws behind them.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod error;
pub mod faci;
pub mod harness;
pub mod student;
pub mod sum;
pub mod wiener;

pub use error::{Error, Result};
pub use faci::{
    build_interval, cached_quantile, faci_integral, faci_sup, faci_t0, ConfidenceInterval,
    IntervalMethod,
};
pub use student::{
    endpoint_functional, integral_functional, max_ratio_diagnostic, nu_weights,
    self_normalized_process, self_normalized_sum, student_process, student_statistic,
    sup_abs_functional, time_function, Center, Sample, StepProcess, TimeFunctionKind,
    VarianceProfile,
};
pub use wiener::{
    functional_limit_quantile, normal_cdf, normal_quantile, simulate_wiener_path,
    sup_abs_wiener_cdf, sup_abs_wiener_quantile, FunctionalKind, WienerPath,
};
