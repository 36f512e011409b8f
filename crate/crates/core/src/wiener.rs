//! Limit laws of the Student-process functionals: `sup_{0≤t≤1}|W(t)|`, the
//! standard normal, and a discretized Wiener-path sampler.

use std::f64::consts::{FRAC_2_SQRT_PI, PI, SQRT_2};

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A continuous functional on `D[0, 1]` with a known Wiener limit law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FunctionalKind {
    /// `sup_t |X(t)|`, limit `sup_t |W(t)|`.
    SupAbs,
    /// `X(t0)`, limit `N(0, t0)`.
    Endpoint { t0: f64 },
    /// `∫ X(t) dt`, limit `N(0, 1/3)`.
    Integral,
}

impl FunctionalKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FunctionalKind::Endpoint { t0 } if !(t0 > 0.0 && t0 <= 1.0) => {
                Err(Error::domain(format!("t0 = {t0} is outside (0, 1]")))
            }
            _ => Ok(()),
        }
    }

    /// CDF of the limit law at `x`.
    pub fn reference_cdf(&self, x: f64) -> f64 {
        match *self {
            FunctionalKind::SupAbs => sup_abs_cdf_series(x),
            FunctionalKind::Endpoint { t0 } => normal_cdf(x / t0.sqrt()),
            FunctionalKind::Integral => normal_cdf(x * 3f64.sqrt()),
        }
    }

    /// Short tag naming the limit law.
    pub fn reference_law(&self) -> String {
        match *self {
            FunctionalKind::SupAbs => "sup|W|".to_string(),
            FunctionalKind::Endpoint { t0 } => format!("N(0,{t0})"),
            FunctionalKind::Integral => "N(0,1/3)".to_string(),
        }
    }
}

fn check_probability(p: f64, what: &str) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} = {p} is outside (0, 1)")))
    }
}

/// Theta-series `(4/π) Σ_{k≥0} (−1)^k/(2k+1) · exp(−π²(2k+1)²/(8a²))`, 0 for `a ≤ 0`.
pub(crate) fn sup_abs_cdf_series(a: f64) -> f64 {
    if a.is_nan() || a <= 0.0 {
        return 0.0;
    }
    if a == f64::INFINITY {
        return 1.0;
    }
    let scale = PI * PI / (8.0 * a * a);
    let mut total = 0.0;
    let mut k = 0u64;
    loop {
        let odd = (2 * k + 1) as f64;
        let term = (-scale * odd * odd).exp() / odd;
        if term < 1e-16 {
            break;
        }
        if k.is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
        k += 1;
    }
    (4.0 / PI * total).clamp(0.0, 1.0)
}

/// `P(sup_{0≤t≤1} |W(t)| ≤ a)`.
pub fn sup_abs_wiener_cdf(a: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::domain(format!("a = {a} must be positive")));
    }
    Ok(sup_abs_cdf_series(a))
}

/// The `a` with `P(sup_{0≤t≤1} |W(t)| > a) = alpha`, by bisection on the series CDF.
pub fn sup_abs_wiener_quantile(alpha: f64) -> Result<f64> {
    check_probability(alpha, "alpha")?;
    let target = 1.0 - alpha;
    let mut lo = 1.0;
    while sup_abs_cdf_series(lo) > target {
        lo *= 0.5;
        if lo < 1e-3 {
            return Err(Error::domain(format!("alpha = {alpha} is too close to 1")));
        }
    }
    let mut hi = 2.0;
    while sup_abs_cdf_series(hi) < target {
        hi *= 2.0;
        if hi > 1e3 {
            return Err(Error::domain(format!("alpha = {alpha} is too close to 0")));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if sup_abs_cdf_series(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-14 * hi {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / SQRT_2)
}

/// Standard normal density.
pub fn normal_pdf(x: f64) -> f64 {
    // 1/√(2π) = (2/√π) / (2√2)
    FRAC_2_SQRT_PI / (2.0 * SQRT_2) * (-0.5 * x * x).exp()
}

/// Acklam's rational approximation to `Φ^{-1}(p)` for `p ≤ 0.5`.
fn acklam_lower(p: f64) -> f64 {
    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.383577518672690e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const P_LOW: f64 = 0.02425;

    if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    }
}

/// `Φ^{-1}(p)`: rational approximation followed by one Halley step.
pub fn normal_quantile(p: f64) -> Result<f64> {
    check_probability(p, "p")?;
    if p == 0.5 {
        return Ok(0.0);
    }
    if p > 0.5 {
        // 1 − p is exact on [0.5, 1).
        return Ok(-normal_quantile(1.0 - p)?);
    }
    let x = acklam_lower(p);
    let e = normal_cdf(x) - p;
    let u = e / normal_pdf(x);
    Ok(x - u / (1.0 + 0.5 * x * u))
}

/// Critical value of `kind`'s limit law at level `alpha`.
///
/// `SupAbs` is the sup-|W| quantile; `Endpoint(t0)` is `z_{α/2}·√t0`;
/// `Integral` is `z_{α/2}/√3`.
pub fn functional_limit_quantile(kind: FunctionalKind, alpha: f64) -> Result<f64> {
    kind.validate()?;
    check_probability(alpha, "alpha")?;
    match kind {
        FunctionalKind::SupAbs => sup_abs_wiener_quantile(alpha),
        FunctionalKind::Endpoint { t0 } => Ok(normal_quantile(1.0 - alpha / 2.0)? * t0.sqrt()),
        FunctionalKind::Integral => Ok(normal_quantile(1.0 - alpha / 2.0)? / 3f64.sqrt()),
    }
}

/// `W(j/m)` for `j = 0..=m`.
#[derive(Debug, Clone, PartialEq)]
pub struct WienerPath {
    values: Vec<f64>,
}

impl WienerPath {
    pub fn grid_size(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Maximum of `|W|` over the grid.
    pub fn sup_abs(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, w| m.max(w.abs()))
    }

    /// Trapezoid approximation of `∫_0^1 W(t) dt`.
    pub fn trapezoid_integral(&self) -> f64 {
        let m = self.grid_size() as f64;
        let inner: f64 = self.values.windows(2).map(|w| w[0] + w[1]).sum();
        inner / (2.0 * m)
    }
}

/// Cumulative sums of independent `N(0, 1/m)` increments.
pub fn simulate_wiener_path<R: Rng + ?Sized>(grid_size: usize, rng: &mut R) -> Result<WienerPath> {
    if grid_size == 0 {
        return Err(Error::domain("grid size must be at least 1"));
    }
    let step = (1.0 / grid_size as f64).sqrt();
    let mut values = Vec::with_capacity(grid_size + 1);
    let mut w = 0.0;
    values.push(w);
    for _ in 0..grid_size {
        let z: f64 = rng.sample(StandardNormal);
        w += step * z;
        values.push(w);
    }
    Ok(WienerPath { values })
}
