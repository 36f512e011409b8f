//! Integer-valued time functions `[0, 1] → {0, ..., n}`.
//!
//! Each kind is defined by nondecreasing cumulative weights `C_0 = 0 ≤ C_1 ≤ ... ≤ C_n`,
//! and the time function at `t` is the largest `m` with `C_m ≤ t·C_n`.

use crate::error::{Error, Result};
use crate::student::sample::{Sample, VarianceProfile};
use crate::sum::monotone_prefix_sums;

#[derive(Debug, Clone, PartialEq)]
pub enum TimeFunctionKind {
    /// Cumulative true variances `s_m²`.
    OracleVariance(VarianceProfile),
    /// Cumulative raw squares `Σ_{i≤m} (Z_i − μ)²` about a known center.
    RawSquares { center: f64 },
    /// Cumulative mean-centered squares `Σ_{i≤m} (Z_i − Z̄)²`.
    CenteredSquares,
}

impl TimeFunctionKind {
    /// The cumulative weights `C_0, ..., C_n` for `sample`.
    pub fn cumulative_weights(&self, sample: &Sample) -> Result<Vec<f64>> {
        let weights = match self {
            TimeFunctionKind::OracleVariance(profile) => {
                if profile.len() != sample.len() {
                    return Err(Error::LengthMismatch {
                        expected: sample.len(),
                        found: profile.len(),
                    });
                }
                profile.cumulative().to_vec()
            }
            TimeFunctionKind::RawSquares { center } => {
                let c = *center;
                monotone_prefix_sums(sample.values().iter().map(|z| (z - c) * (z - c)))
            }
            TimeFunctionKind::CenteredSquares => {
                if sample.is_constant() {
                    return Err(Error::DegenerateWeights);
                }
                let mean = sample.mean();
                monotone_prefix_sums(sample.values().iter().map(|z| (z - mean) * (z - mean)))
            }
        };
        if weights[weights.len() - 1] <= 0.0 {
            return Err(Error::DegenerateWeights);
        }
        Ok(weights)
    }
}

/// Largest `m` with `cumulative[m] ≤ t · cumulative[n]`.
pub(crate) fn index_at(cumulative: &[f64], t: f64) -> usize {
    let threshold = t * cumulative[cumulative.len() - 1];
    // cumulative[0] = 0 ≤ threshold for t ≥ 0, so the count is at least one.
    cumulative.partition_point(|&c| c <= threshold) - 1
}

pub(crate) fn check_unit_interval(t: f64) -> Result<()> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(Error::domain(format!("t = {t} is outside [0, 1]")))
    }
}

/// Evaluates the time function of `kind` for `sample` at `t`.
pub fn time_function(kind: &TimeFunctionKind, sample: &Sample, t: f64) -> Result<usize> {
    check_unit_interval(t)?;
    let cumulative = kind.cumulative_weights(sample)?;
    Ok(index_at(&cumulative, t))
}
