//! Sample-level statistics.

use crate::error::{Error, Result};
use crate::student::sample::Sample;

/// `T_n = (Σ Z_i / √n) / sqrt(Σ(Z_i − Z̄)² / (n − 1))`.
pub fn student_statistic(sample: &Sample) -> Result<f64> {
    let css = sample.studentizable()?;
    let n = sample.len() as f64;
    // Same operation order as the terminal value of `student_process`.
    let total = sample.partial_sums()[sample.len()];
    Ok((total / n.sqrt()) / (css / (n - 1.0)).sqrt())
}

/// `V_n = Σ Z_i / sqrt(Σ Z_i²)`.
pub fn self_normalized_sum(sample: &Sample) -> Result<f64> {
    let ss = sample.sum_of_squares();
    if ss <= 0.0 {
        return Err(Error::DegenerateSample("all observations are zero"));
    }
    Ok(sample.partial_sums()[sample.len()] / ss.sqrt())
}

/// Center used by [`max_ratio_diagnostic`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Center {
    SampleMean,
    Known(f64),
}

/// `max_i (Z_i − c)² / Σ_i (Z_i − c)²`.
pub fn max_ratio_diagnostic(sample: &Sample, center: Center) -> Result<f64> {
    let c = match center {
        Center::SampleMean => {
            if sample.is_constant() {
                return Err(Error::DegenerateWeights);
            }
            sample.mean()
        }
        Center::Known(mu) => mu,
    };
    let total = sample.sum_of_squares_about(c);
    if total <= 0.0 {
        return Err(Error::DegenerateWeights);
    }
    let max = sample
        .values()
        .iter()
        .map(|z| (z - c) * (z - c))
        .fold(0.0_f64, f64::max);
    Ok((max / total).min(1.0))
}

/// `ν_k = (Z_k − Z̄)² / Σ(Z_i − Z̄)²` for `k = 1..n`.
pub fn nu_weights(sample: &Sample) -> Result<Vec<f64>> {
    if sample.is_constant() {
        return Err(Error::DegenerateSample("all observations are equal"));
    }
    let mean = sample.mean();
    let css = sample.sum_of_squares_about(mean);
    if css <= 0.0 {
        return Err(Error::DegenerateSample("all observations are equal"));
    }
    Ok(sample
        .values()
        .iter()
        .map(|z| (z - mean) * (z - mean) / css)
        .collect())
}
