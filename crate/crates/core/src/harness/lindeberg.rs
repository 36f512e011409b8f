//! Lindeberg ratio `s_n^{-2} Σ E[(Z_i − μ)² 1{|Z_i − μ| ≥ ε s_n}]` for a design.

use crate::error::{Error, Result};
use crate::harness::design::Design;
use crate::harness::quadrature::adaptive_simpson;
use crate::student::VarianceProfile;
use crate::sum::CompensatedSum;
use crate::wiener::normal_pdf;

/// `E[X² 1{|X| ≥ c}]` for `X ~ N(0, 1)`: `2(cφ(c) + 1 − Φ(c))`.
pub fn normal_truncated_second_moment(c: f64) -> f64 {
    let upper_tail = 0.5 * libm::erfc(c / std::f64::consts::SQRT_2);
    2.0 * (c * normal_pdf(c) + upper_tail)
}

fn student_t_pdf(x: f64, df: f64) -> f64 {
    let log_norm = libm::lgamma((df + 1.0) / 2.0)
        - libm::lgamma(df / 2.0)
        - 0.5 * (df * std::f64::consts::PI).ln();
    (log_norm - (df + 1.0) / 2.0 * (x * x / df).ln_1p()).exp()
}

/// `E[(Z_i − μ)² 1{|Z_i − μ| ≥ c}]` for observation `i` (1-based).
fn truncated_second_moment(design: &Design, i: usize, c: f64) -> Result<f64> {
    Ok(match design {
        Design::IidNormal { sigma, .. } => {
            sigma * sigma * normal_truncated_second_moment(c / sigma)
        }
        Design::HeteroNormal { sigma_pattern, .. } => {
            let sigma = sigma_pattern[(i - 1) % sigma_pattern.len()];
            sigma * sigma * normal_truncated_second_moment(c / sigma)
        }
        Design::IidUniform { half_width: h, .. } => {
            if c >= *h {
                0.0
            } else {
                (h * h * h - c * c * c) / (3.0 * h)
            }
        }
        Design::SymmetricTwoPoint { magnitude: m, .. } => {
            if *m >= c {
                m * m
            } else {
                0.0
            }
        }
        Design::SymmetricT { df, .. } if *df > 2.0 => {
            let df = *df;
            let variance = df / (df - 2.0);
            let core = 2.0 * adaptive_simpson(&|x| x * x * student_t_pdf(x, df), 0.0, c, 1e-12);
            (variance - core).max(0.0)
        }
        _ => {
            return Err(Error::UnsupportedDesign(format!(
                "{design:?} has infinite variance"
            )))
        }
    })
}

/// The Lindeberg ratio of `design` at sample size `n` and truncation level `epsilon`.
pub fn lindeberg_profile(design: &Design, n: usize, epsilon: f64) -> Result<f64> {
    design.validate()?;
    if n == 0 {
        return Err(Error::TooFewObservations { needed: 1, got: 0 });
    }
    if !(epsilon > 0.0) {
        return Err(Error::domain(format!(
            "epsilon = {epsilon} must be positive"
        )));
    }
    let profile: VarianceProfile = design.variance_profile(n)?;
    let s_n = profile.total().sqrt();
    let c = epsilon * s_n;
    let period = match design {
        Design::HeteroNormal { sigma_pattern, .. } => sigma_pattern.len(),
        _ => 1,
    };
    // Terms repeat with the design's period; evaluate each distinct one once.
    let mut acc = CompensatedSum::new();
    for j in 1..=period.min(n) {
        let count = (n - j) / period + 1;
        acc.add(count as f64 * truncated_second_moment(design, j, c)?);
    }
    Ok(acc.value() / profile.total())
}
