use rand::Rng;
use rand_distr::{Cauchy, Distribution, StandardNormal, StudentT};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::student::{Sample, VarianceProfile};

/// Data-generating design with a known common mean (or center of symmetry) `mu`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Design {
    IidNormal {
        mu: f64,
        sigma: f64,
    },
    /// Normal with standard deviations cycled from `sigma_pattern`.
    HeteroNormal {
        mu: f64,
        sigma_pattern: Vec<f64>,
    },
    IidUniform {
        mu: f64,
        half_width: f64,
    },
    /// `mu ± magnitude` with equal probability.
    SymmetricTwoPoint {
        mu: f64,
        magnitude: f64,
    },
    /// `mu` plus a Student-t variate.
    SymmetricT {
        mu: f64,
        df: f64,
    },
    Cauchy {
        mu: f64,
        scale: f64,
    },
}

fn positive(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidConfig(format!(
            "{name} must be positive, got {x}"
        )))
    }
}

impl Design {
    pub fn validate(&self) -> Result<()> {
        if !self.mu().is_finite() {
            return Err(Error::InvalidConfig("mu must be finite".into()));
        }
        match self {
            Design::IidNormal { sigma, .. } => positive("sigma", *sigma),
            Design::HeteroNormal { sigma_pattern, .. } => {
                if sigma_pattern.is_empty() {
                    return Err(Error::InvalidConfig("sigma_pattern is empty".into()));
                }
                sigma_pattern
                    .iter()
                    .try_for_each(|s| positive("sigma_pattern", *s))
            }
            Design::IidUniform { half_width, .. } => positive("half_width", *half_width),
            Design::SymmetricTwoPoint { magnitude, .. } => positive("magnitude", *magnitude),
            Design::SymmetricT { df, .. } => positive("df", *df),
            Design::Cauchy { scale, .. } => positive("scale", *scale),
        }
    }

    pub fn mu(&self) -> f64 {
        match *self {
            Design::IidNormal { mu, .. }
            | Design::HeteroNormal { mu, .. }
            | Design::IidUniform { mu, .. }
            | Design::SymmetricTwoPoint { mu, .. }
            | Design::SymmetricT { mu, .. }
            | Design::Cauchy { mu, .. } => mu,
        }
    }

    /// Finite variances satisfying the Lindeberg condition.
    pub fn lindeberg_ok(&self) -> bool {
        matches!(
            self,
            Design::IidNormal { .. }
                | Design::HeteroNormal { .. }
                | Design::IidUniform { .. }
                | Design::SymmetricTwoPoint { .. }
        )
    }

    /// Symmetric about `mu` with a vanishing max-ratio.
    pub fn symmetric_ok(&self) -> bool {
        !self.negative_control()
    }

    /// Symmetric but outside the max-ratio hypothesis.
    pub fn negative_control(&self) -> bool {
        matches!(self, Design::Cauchy { .. })
    }

    /// `Var Z_i` (1-based `i`), or `None` when infinite or undefined.
    pub fn variance(&self, i: usize) -> Option<f64> {
        match self {
            Design::IidNormal { sigma, .. } => Some(sigma * sigma),
            Design::HeteroNormal { sigma_pattern, .. } => {
                let s = sigma_pattern[(i - 1) % sigma_pattern.len()];
                Some(s * s)
            }
            Design::IidUniform { half_width, .. } => Some(half_width * half_width / 3.0),
            Design::SymmetricTwoPoint { magnitude, .. } => Some(magnitude * magnitude),
            Design::SymmetricT { df, .. } if *df > 2.0 => Some(df / (df - 2.0)),
            Design::SymmetricT { .. } | Design::Cauchy { .. } => None,
        }
    }

    /// `σ_1², ..., σ_n²`.
    pub fn variance_profile(&self, n: usize) -> Result<VarianceProfile> {
        let sigma2 = (1..=n)
            .map(|i| {
                self.variance(i).ok_or_else(|| {
                    Error::UnsupportedDesign(format!("{self:?} has infinite variance"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        VarianceProfile::new(sigma2)
    }

    fn draw<R: Rng + ?Sized>(&self, i: usize, rng: &mut R) -> f64 {
        match self {
            Design::IidNormal { mu, sigma } => {
                let z: f64 = rng.sample(StandardNormal);
                mu + sigma * z
            }
            Design::HeteroNormal { mu, sigma_pattern } => {
                let z: f64 = rng.sample(StandardNormal);
                mu + sigma_pattern[i % sigma_pattern.len()] * z
            }
            Design::IidUniform { mu, half_width } => {
                mu + half_width * (2.0 * rng.random::<f64>() - 1.0)
            }
            Design::SymmetricTwoPoint { mu, magnitude } => {
                if rng.random::<bool>() {
                    mu + magnitude
                } else {
                    mu - magnitude
                }
            }
            Design::SymmetricT { mu, df } => {
                let t = StudentT::new(*df).expect("validated df");
                mu + t.sample(rng)
            }
            Design::Cauchy { mu, scale } => {
                let c = Cauchy::new(0.0, *scale).expect("validated scale");
                mu + c.sample(rng)
            }
        }
    }
}

/// `n` independent draws from `design`.
pub fn generate_sample<R: Rng + ?Sized>(design: &Design, n: usize, rng: &mut R) -> Result<Sample> {
    design.validate()?;
    Sample::new((0..n).map(|i| design.draw(i, rng)).collect())
}
