//! Sample-level statistics, time functions, Student processes and their functionals.

mod functionals;
mod process;
mod sample;
mod stats;
mod time;

pub use functionals::{endpoint_functional, integral_functional, sup_abs_functional};
pub use process::{self_normalized_process, student_process, StepProcess};
pub use sample::{Sample, VarianceProfile};
pub use stats::{max_ratio_diagnostic, nu_weights, self_normalized_sum, student_statistic, Center};
pub use time::{time_function, TimeFunctionKind};
