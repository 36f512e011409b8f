use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sum::{self, monotone_prefix_sums, prefix_sums};

/// An ordered sample of real observations `Z_1, ..., Z_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    /// Wraps `values`, rejecting empty input and non-finite entries.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::TooFewObservations { needed: 1, got: 0 });
        }
        if let Some((i, x)) = values.iter().enumerate().find(|(_, x)| !x.is_finite()) {
            return Err(Error::domain(format!(
                "observation {} is not finite ({x})",
                i + 1
            )));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn sum(&self) -> f64 {
        sum::sum(self.values.iter().copied())
    }

    pub fn mean(&self) -> f64 {
        self.sum() / self.len() as f64
    }

    /// `Σ Z_i²`.
    pub fn sum_of_squares(&self) -> f64 {
        sum::sum(self.values.iter().map(|z| z * z))
    }

    /// `Σ (Z_i − c)²`.
    pub fn sum_of_squares_about(&self, center: f64) -> f64 {
        sum::sum(self.values.iter().map(|z| (z - center) * (z - center)))
    }

    /// `Σ (Z_i − Z̄)²`.
    pub fn centered_sum_of_squares(&self) -> f64 {
        self.sum_of_squares_about(self.mean())
    }

    /// Partial sums `S_0 = 0, S_1, ..., S_n`.
    pub fn partial_sums(&self) -> Vec<f64> {
        prefix_sums(self.values.iter().copied())
    }

    /// The sample `Z_i + shift`.
    pub fn shifted(&self, shift: f64) -> Sample {
        Sample {
            values: self.values.iter().map(|z| z + shift).collect(),
        }
    }

    /// True when every observation is the same value.
    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    pub(crate) fn require_len(&self, needed: usize) -> Result<()> {
        if self.len() < needed {
            Err(Error::TooFewObservations {
                needed,
                got: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Checks the preconditions shared by every Studentized operation and
    /// returns the centered sum of squares.
    pub(crate) fn studentizable(&self) -> Result<f64> {
        self.require_len(2)?;
        let css = self.centered_sum_of_squares();
        if self.is_constant() || css <= 0.0 {
            return Err(Error::DegenerateSample("all observations are equal"));
        }
        Ok(css)
    }
}

impl TryFrom<Vec<f64>> for Sample {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        Sample::new(values)
    }
}

impl From<Sample> for Vec<f64> {
    fn from(s: Sample) -> Self {
        s.values
    }
}

/// Variances `σ_1², ..., σ_n²` with cumulative sums `s_0² = 0, ..., s_n²`.
#[derive(Debug, Clone, PartialEq)]
pub struct VarianceProfile {
    sigma2: Vec<f64>,
    cumulative: Vec<f64>,
}

impl VarianceProfile {
    pub fn new(sigma2: Vec<f64>) -> Result<Self> {
        if sigma2.is_empty() {
            return Err(Error::TooFewObservations { needed: 1, got: 0 });
        }
        if let Some((i, v)) = sigma2
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::domain(format!(
                "variance {} must be positive and finite, got {v}",
                i + 1
            )));
        }
        let cumulative = monotone_prefix_sums(sigma2.iter().copied());
        Ok(Self { sigma2, cumulative })
    }

    pub fn sigma2(&self) -> &[f64] {
        &self.sigma2
    }

    /// `s_0², s_1², ..., s_n²`.
    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    /// `s_n²`.
    pub fn total(&self) -> f64 {
        self.cumulative[self.sigma2.len()]
    }

    pub fn len(&self) -> usize {
        self.sigma2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma2.is_empty()
    }
}
