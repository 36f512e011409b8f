//! Step-function paths on `[0, 1]` and the Student / self-normalized processes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::student::sample::Sample;
use crate::student::time::{check_unit_interval, index_at, TimeFunctionKind};

/// A right-continuous step path: value `values[k]` on `[breakpoints[k], breakpoints[k+1])`,
/// with `values[n]` attained at `t = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawStepProcess", into = "RawStepProcess")]
pub struct StepProcess {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
    // Unnormalized weights behind the breakpoints; evaluation compares against
    // these so that thresholds like t = 0.5 are not disturbed by division.
    cumulative: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawStepProcess {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

impl TryFrom<RawStepProcess> for StepProcess {
    type Error = Error;

    fn try_from(raw: RawStepProcess) -> Result<Self> {
        StepProcess::new(raw.breakpoints, raw.values)
    }
}

impl From<StepProcess> for RawStepProcess {
    fn from(p: StepProcess) -> Self {
        RawStepProcess {
            breakpoints: p.breakpoints,
            values: p.values,
        }
    }
}

impl StepProcess {
    pub fn new(breakpoints: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if breakpoints.len() != values.len() {
            return Err(Error::LengthMismatch {
                expected: breakpoints.len(),
                found: values.len(),
            });
        }
        if breakpoints.len() < 2 {
            return Err(Error::domain(
                "a step process needs at least two breakpoints",
            ));
        }
        let last = breakpoints.len() - 1;
        if breakpoints[0] != 0.0 || breakpoints[last] != 1.0 {
            return Err(Error::domain("breakpoints must start at 0 and end at 1"));
        }
        if breakpoints.windows(2).any(|w| !(w[0] <= w[1])) {
            return Err(Error::domain("breakpoints must be nondecreasing"));
        }
        if values[0] != 0.0 {
            return Err(Error::domain("a step process starts at 0"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("step values must be finite"));
        }
        Ok(Self {
            cumulative: breakpoints.clone(),
            breakpoints,
            values,
        })
    }

    /// Builds the path from cumulative weights `C_0 = 0, ..., C_n > 0`.
    pub(crate) fn from_cumulative(cumulative: Vec<f64>, values: Vec<f64>) -> Self {
        debug_assert_eq!(cumulative.len(), values.len());
        let n = cumulative.len() - 1;
        let total = cumulative[n];
        let mut breakpoints: Vec<f64> = cumulative.iter().map(|c| c / total).collect();
        breakpoints[n] = 1.0;
        Self {
            breakpoints,
            values,
            cumulative,
        }
    }

    /// `c_0, ..., c_n`.
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// `v_0, ..., v_n`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Number of observations behind the path (`n`, one less than the number of breakpoints).
    pub fn sample_size(&self) -> usize {
        self.values.len() - 1
    }

    /// Index `k` of the segment containing `t`.
    pub fn index_at(&self, t: f64) -> Result<usize> {
        check_unit_interval(t)?;
        Ok(index_at(&self.cumulative, t))
    }

    pub fn value_at(&self, t: f64) -> Result<f64> {
        Ok(self.values[self.index_at(t)?])
    }

    /// True when segment `k` has positive width or is the terminal point.
    pub fn is_attained(&self, k: usize) -> bool {
        k == self.sample_size() || self.cumulative[k] < self.cumulative[k + 1]
    }

    /// Values the path actually takes for some `t ∈ [0, 1]`.
    pub fn attained_values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.values.len())
            .filter(|&k| self.is_attained(k))
            .map(|k| self.values[k])
    }
}

/// The Student process `t ↦ (S_{K(t)} / √n) / sqrt(Σ(Z_i − Z̄)² / (n − 1))`.
pub fn student_process(sample: &Sample, kind: &TimeFunctionKind) -> Result<StepProcess> {
    let css = sample.studentizable()?;
    let cumulative = kind.cumulative_weights(sample)?;
    let n = sample.len() as f64;
    let root_n = n.sqrt();
    let scale = (css / (n - 1.0)).sqrt();
    let values = sample
        .partial_sums()
        .into_iter()
        .map(|s| (s / root_n) / scale)
        .collect();
    Ok(StepProcess::from_cumulative(cumulative, values))
}

/// The self-normalized process `t ↦ S_{K(t)} / sqrt(Σ_{i=1}^n Z_i²)`.
///
/// The denominator always runs over the full sample.
pub fn self_normalized_process(sample: &Sample, kind: &TimeFunctionKind) -> Result<StepProcess> {
    sample.studentizable()?;
    let ss = sample.sum_of_squares();
    if ss <= 0.0 {
        return Err(Error::DegenerateSample("all observations are zero"));
    }
    let cumulative = kind.cumulative_weights(sample)?;
    let root = ss.sqrt();
    let values = sample
        .partial_sums()
        .into_iter()
        .map(|s| s / root)
        .collect();
    Ok(StepProcess::from_cumulative(cumulative, values))
}
