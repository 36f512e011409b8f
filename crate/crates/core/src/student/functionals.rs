//! Path functionals of step processes.

use crate::error::{Error, Result};
use crate::student::process::StepProcess;
use crate::student::sample::Sample;
use crate::student::time::{time_function, TimeFunctionKind};
use crate::sum::CompensatedSum;

/// `sup_{0≤t≤1} |X(t)|`, taken over the values the path attains.
pub fn sup_abs_functional(process: &StepProcess) -> f64 {
    process
        .attained_values()
        .fold(0.0_f64, |acc, v| acc.max(v.abs()))
}

/// `∫_0^1 X(t) dt`, exact for the step path.
pub fn integral_functional(process: &StepProcess) -> f64 {
    let c = process.breakpoints();
    let v = process.values();
    let mut acc = CompensatedSum::new();
    for k in 0..process.sample_size() {
        acc.add((c[k + 1] - c[k]) * v[k]);
    }
    acc.value()
}

/// `X(t0)` with the index taken from `kind`'s time function on `sample`.
///
/// `sample` need not be the sample that produced `process`; the fixed-`t0`
/// interval evaluates a recentered process at the original sample's time index.
pub fn endpoint_functional(
    process: &StepProcess,
    sample: &Sample,
    kind: &TimeFunctionKind,
    t0: f64,
) -> Result<f64> {
    if !(t0 > 0.0 && t0 <= 1.0) {
        return Err(Error::domain(format!("t0 = {t0} is outside (0, 1]")));
    }
    let k = time_function(kind, sample, t0)?;
    process
        .values()
        .get(k)
        .copied()
        .ok_or(Error::LengthMismatch {
            expected: k + 1,
            found: process.values().len(),
        })
}
