//! Confidence intervals for the common mean built from functionals of the
//! data-based Student process.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::student::{nu_weights, time_function, Sample, TimeFunctionKind};
use crate::sum::CompensatedSum;
use crate::wiener::{functional_limit_quantile, FunctionalKind};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum IntervalMethod {
    /// Intersection over `k = 1..n` driven by the sup-functional.
    SupIntersection,
    /// Endpoint of the process at a fixed `t0`.
    FixedT0 { t0: f64 },
    /// Integral functional, `ν`-weighted partial sums.
    IntegralWeighted,
}

impl IntervalMethod {
    pub fn functional(&self) -> FunctionalKind {
        match *self {
            IntervalMethod::SupIntersection => FunctionalKind::SupAbs,
            IntervalMethod::FixedT0 { t0 } => FunctionalKind::Endpoint { t0 },
            IntervalMethod::IntegralWeighted => FunctionalKind::Integral,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            IntervalMethod::SupIntersection => "sup".to_string(),
            IntervalMethod::FixedT0 { t0 } => format!("t0({t0})"),
            IntervalMethod::IntegralWeighted => "integral".to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceInterval {
    pub lower: f64,
    pub upper: f64,
    /// Nominal level `1 − α`.
    pub level: f64,
    pub method: IntervalMethod,
    pub empty: bool,
}

impl ConfidenceInterval {
    pub fn contains(&self, mu: f64) -> bool {
        !self.empty && self.lower <= mu && mu <= self.upper
    }

    pub fn length(&self) -> f64 {
        if self.empty {
            0.0
        } else {
            self.upper - self.lower
        }
    }
}

type QuantileKey = (u8, u64, u64);

fn quantile_cache() -> &'static RwLock<HashMap<QuantileKey, f64>> {
    static CACHE: OnceLock<RwLock<HashMap<QuantileKey, f64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// [`functional_limit_quantile`] memoized per `(kind, alpha)`.
pub fn cached_quantile(kind: FunctionalKind, alpha: f64) -> Result<f64> {
    let key = match kind {
        FunctionalKind::SupAbs => (0, 0, alpha.to_bits()),
        FunctionalKind::Endpoint { t0 } => (1, t0.to_bits(), alpha.to_bits()),
        FunctionalKind::Integral => (2, 0, alpha.to_bits()),
    };
    if let Some(&q) = quantile_cache()
        .read()
        .expect("quantile cache poisoned")
        .get(&key)
    {
        return Ok(q);
    }
    let q = functional_limit_quantile(kind, alpha)?;
    // Racing fills compute the same value, so last write wins harmlessly.
    quantile_cache()
        .write()
        .expect("quantile cache poisoned")
        .insert(key, q);
    Ok(q)
}

/// `sqrt(n · Σ(Z_i − Z̄)² / (n − 1))`, shared by all three half-widths.
fn studentized_scale(sample: &Sample) -> Result<f64> {
    let css = sample.studentizable()?;
    let n = sample.len() as f64;
    Ok((n * css / (n - 1.0)).sqrt())
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("alpha = {alpha} is outside (0, 1)")))
    }
}

/// `∩_{k=1}^n [(S_k − H)/k, (S_k + H)/k]` with `H = a·sqrt(n·Σ(Z_i − Z̄)²/(n − 1))`.
///
/// An empty intersection is returned with `empty = true`, not as an error.
pub fn faci_sup(sample: &Sample, alpha: f64) -> Result<ConfidenceInterval> {
    check_alpha(alpha)?;
    let scale = studentized_scale(sample)?;
    let a = cached_quantile(FunctionalKind::SupAbs, alpha)?;
    let half = a * scale;
    let partial = sample.partial_sums();
    let mut lower = f64::NEG_INFINITY;
    let mut upper = f64::INFINITY;
    for (k, s) in partial.iter().enumerate().skip(1) {
        let k = k as f64;
        lower = lower.max((s - half) / k);
        upper = upper.min((s + half) / k);
    }
    Ok(ConfidenceInterval {
        lower,
        upper,
        level: 1.0 - alpha,
        method: IntervalMethod::SupIntersection,
        empty: lower > upper,
    })
}

/// `[(S_K − H)/K, (S_K + H)/K]` with `K` the centered-squares time index at `t0`
/// and `H = z_{α/2}·√t0·sqrt(n·Σ(Z_i − Z̄)²/(n − 1))`.
pub fn faci_t0(sample: &Sample, t0: f64, alpha: f64) -> Result<ConfidenceInterval> {
    check_alpha(alpha)?;
    if !(t0 > 0.0 && t0 <= 1.0) {
        return Err(Error::domain(format!("t0 = {t0} is outside (0, 1]")));
    }
    let scale = studentized_scale(sample)?;
    let k = time_function(&TimeFunctionKind::CenteredSquares, sample, t0)?;
    if k == 0 {
        return Err(Error::ZeroTimeIndex { t0 });
    }
    let q = cached_quantile(FunctionalKind::Endpoint { t0 }, alpha)?;
    let half = q * scale;
    let s = sample.partial_sums()[k];
    let kf = k as f64;
    Ok(ConfidenceInterval {
        lower: (s - half) / kf,
        upper: (s + half) / kf,
        level: 1.0 - alpha,
        method: IntervalMethod::FixedT0 { t0 },
        empty: false,
    })
}

/// `[(C − H)/D, (C + H)/D]` with `C = Σ_{k<n} ν_{k+1} S_k`, `D = Σ_{k<n} ν_{k+1} k`
/// and `H = (z_{α/2}/√3)·sqrt(n·Σ(Z_i − Z̄)²/(n − 1))`.
pub fn faci_integral(sample: &Sample, alpha: f64) -> Result<ConfidenceInterval> {
    check_alpha(alpha)?;
    let scale = studentized_scale(sample)?;
    let nu = nu_weights(sample)?;
    let partial = sample.partial_sums();
    let n = sample.len();
    let mut center = CompensatedSum::new();
    let mut denom = CompensatedSum::new();
    for k in 1..n {
        center.add(nu[k] * partial[k]);
        denom.add(nu[k] * k as f64);
    }
    let (c, d) = (center.value(), denom.value());
    if d <= 0.0 {
        return Err(Error::DegenerateWeightedCenter);
    }
    let q = cached_quantile(FunctionalKind::Integral, alpha)?;
    let half = q * scale;
    Ok(ConfidenceInterval {
        lower: (c - half) / d,
        upper: (c + half) / d,
        level: 1.0 - alpha,
        method: IntervalMethod::IntegralWeighted,
        empty: false,
    })
}

/// Dispatches to the constructor for `method`.
pub fn build_interval(
    sample: &Sample,
    method: IntervalMethod,
    alpha: f64,
) -> Result<ConfidenceInterval> {
    match method {
        IntervalMethod::SupIntersection => faci_sup(sample, alpha),
        IntervalMethod::FixedT0 { t0 } => faci_t0(sample, t0, alpha),
        IntervalMethod::IntegralWeighted => faci_integral(sample, alpha),
    }
}
