//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use facimean_core::harness::{
    coverage_experiment, discrepancy_experiment, fclt_fit_experiment, generate_sample,
    lindeberg_profile, max_ratio_experiment, normal_truncated_second_moment, replication_rng,
    Design, SimulationConfig,
};
use facimean_core::{
    faci_integral, faci_sup, faci_t0, integral_functional, nu_weights, self_normalized_process,
    self_normalized_sum, simulate_wiener_path, student_process, sup_abs_functional,
    sup_abs_wiener_quantile, time_function, Error, FunctionalKind, IntervalMethod, Sample,
    TimeFunctionKind, VarianceProfile,
};
use rand::Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mixed_designs() -> Vec<Design> {
    vec![
        Design::IidNormal {
            mu: 0.7,
            sigma: 1.3,
        },
        Design::HeteroNormal {
            mu: -2.0,
            sigma_pattern: vec![0.5, 1.0, 2.0],
        },
        Design::IidUniform {
            mu: 4.0,
            half_width: 2.0,
        },
        Design::SymmetricTwoPoint {
            mu: 1.0,
            magnitude: 0.5,
        },
        Design::SymmetricT { mu: -0.3, df: 2.0 },
        Design::Cauchy {
            mu: 0.0,
            scale: 1.0,
        },
    ]
}

/// `count` non-degenerate samples with `n ∈ {2, ..., 50}` over the mixed designs.
fn random_samples(count: usize, seed: u64) -> Vec<(Design, Sample)> {
    let designs = mixed_designs();
    let mut out = Vec::with_capacity(count);
    let mut stream = 0u64;
    while out.len() < count {
        let mut rng = replication_rng(seed, stream);
        stream += 1;
        let design = designs[out.len() % designs.len()].clone();
        let n = rng.random_range(2..=50);
        let sample = generate_sample(&design, n, &mut rng).unwrap();
        if !sample.is_constant() {
            out.push((design, sample));
        }
    }
    out
}

// 1 ------------------------------------------------------------------------

fn identity_student_vs_self_normalized() -> Outcome {
    let mut worst = 0.0_f64;
    let mut checks = 0usize;
    for (design, sample) in random_samples(1000, 101) {
        let n = sample.len() as f64;
        let v = self_normalized_sum(&sample).map_err(|e| e.to_string())?;
        let factor = ((n - v * v) / (n - 1.0)).sqrt();
        for kind in [
            TimeFunctionKind::CenteredSquares,
            TimeFunctionKind::RawSquares {
                center: design.mu(),
            },
        ] {
            let student = student_process(&sample, &kind).map_err(|e| e.to_string())?;
            let normalized = self_normalized_process(&sample, &kind).map_err(|e| e.to_string())?;
            for j in 0..64 {
                let t = j as f64 / 63.0;
                let a = student.value_at(t).unwrap();
                let b = normalized.value_at(t).unwrap() / factor;
                let scale = a.abs().max(b.abs());
                let rel = if scale == 0.0 {
                    0.0
                } else {
                    (a - b).abs() / scale
                };
                worst = worst.max(rel);
                checks += 1;
            }
        }
    }
    ensure(worst <= 1e-12, || {
        format!("max relative error {worst:e} > 1e-12")
    })?;
    Ok(format!("{checks} checks, max relative error {worst:.2e}"))
}

// 2 ------------------------------------------------------------------------

/// Exact integer description of a sample drawn from the grid `{k/4 : |k| ≤ 8}`.
struct GridCase {
    /// `4·Z_i`.
    quarters: Vec<i64>,
    /// Oracle variances in halves: `σ_i² = halves_i / 2`.
    halves: Vec<i64>,
}

impl GridCase {
    fn n(&self) -> usize {
        self.quarters.len()
    }

    fn values(&self) -> Vec<f64> {
        self.quarters.iter().map(|&q| q as f64 / 4.0).collect()
    }

    /// Whether `Z̄` is exactly representable, so every float step is exact.
    fn exact_mean(&self) -> bool {
        self.quarters.iter().sum::<i64>() % self.n() as i64 == 0
    }

    /// Integer weights proportional to each kind's increments.
    fn weights(&self, kind: usize) -> Vec<i128> {
        let n = self.n() as i64;
        let total: i64 = self.quarters.iter().sum();
        match kind {
            // n·4(Z_i − Z̄) = n·q_i − Σq
            0 => self
                .quarters
                .iter()
                .map(|&q| ((n * q - total) as i128).pow(2))
                .collect(),
            // 4(Z_i − 1/4) = q_i − 1
            1 => self
                .quarters
                .iter()
                .map(|&q| ((q - 1) as i128).pow(2))
                .collect(),
            _ => self.halves.iter().map(|&h| h as i128).collect(),
        }
    }

    fn kind(&self, kind: usize) -> TimeFunctionKind {
        match kind {
            0 => TimeFunctionKind::CenteredSquares,
            1 => TimeFunctionKind::RawSquares { center: 0.25 },
            _ => TimeFunctionKind::OracleVariance(
                VarianceProfile::new(self.halves.iter().map(|&h| h as f64 / 2.0).collect())
                    .unwrap(),
            ),
        }
    }
}

fn cumulative(weights: &[i128]) -> Vec<i128> {
    let mut c = vec![0i128];
    for w in weights {
        c.push(c.last().unwrap() + w);
    }
    c
}

/// `sup{m : C_m ≤ (num/den)·C_n}` by a direct scan.
fn brute_time(c: &[i128], num: i128, den: i128) -> usize {
    let n = c.len() - 1;
    let mut best = 0;
    for m in 0..=n {
        if den * c[m] <= num * c[n] {
            best = m;
        }
    }
    best
}

fn is_tie(c: &[i128], num: i128, den: i128) -> bool {
    let n = c.len() - 1;
    c.iter().any(|&cm| den * cm == num * c[n])
}

/// Student-process values with plain loops.
fn brute_values(z: &[f64]) -> Vec<f64> {
    let n = z.len();
    let mut mean = 0.0;
    for x in z {
        mean += x;
    }
    mean /= n as f64;
    let mut css = 0.0;
    for x in z {
        css += (x - mean) * (x - mean);
    }
    let denom = (css / (n as f64 - 1.0)).sqrt();
    let mut out = vec![0.0];
    let mut s = 0.0;
    for x in z {
        s += x;
        out.push((s / (n as f64).sqrt()) / denom);
    }
    out
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs()))
}

fn brute_force_equivalence() -> Outcome {
    let mut rng = replication_rng(202, 0);
    let mut cases = Vec::new();
    while cases.len() < 1000 {
        let n = 2 + cases.len() % 5;
        let quarters: Vec<i64> = (0..n).map(|_| rng.random_range(-8..=8)).collect();
        if quarters.windows(2).all(|w| w[0] == w[1]) {
            continue;
        }
        let halves = (0..n).map(|_| rng.random_range(1..=4)).collect();
        cases.push(GridCase { quarters, halves });
    }
    let exact = cases.iter().filter(|c| c.exact_mean()).count();
    let alpha = 0.05;
    let a = sup_abs_wiener_quantile(alpha).unwrap();
    let (mut time_checks, mut skipped) = (0usize, 0usize);

    for (idx, case) in cases.iter().enumerate() {
        let z = case.values();
        let sample = Sample::new(z.clone()).unwrap();
        let n = case.n();
        let fail = |what: &str| format!("case {idx} {:?}: {what}", case.quarters);

        for kind_id in 0..3 {
            let weights = case.weights(kind_id);
            let c = cumulative(&weights);
            if c[n] == 0 {
                continue;
            }
            let kind = case.kind(kind_id);
            for j in 0..=64i128 {
                if is_tie(&c, j, 64) && !case.exact_mean() && kind_id == 0 {
                    skipped += 1;
                    continue;
                }
                let t = j as f64 / 64.0;
                let got = time_function(&kind, &sample, t).unwrap();
                if got != brute_time(&c, j, 64) {
                    return Err(fail(&format!("time function kind {kind_id} at t={t}")));
                }
                time_checks += 1;
            }

            // Sup over t: K(t) only changes at the breakpoints C_j / C_n.
            let values = brute_values(&z);
            let process = student_process(&sample, &kind).unwrap();
            let mut sup = 0.0_f64;
            for j in 0..=n {
                sup = sup.max(values[brute_time(&c, c[j], c[n])].abs());
            }
            if !close(sup_abs_functional(&process), sup) {
                return Err(fail(&format!("sup functional kind {kind_id}")));
            }

            // Integral: sum over distinct breakpoints of width × value.
            let mut ratios: Vec<i128> = c.clone();
            ratios.dedup();
            let mut integral = 0.0;
            for w in ratios.windows(2) {
                let width = (w[1] - w[0]) as f64 / c[n] as f64;
                integral += width * values[brute_time(&c, w[0], c[n])];
            }
            if !close(integral_functional(&process), integral) {
                return Err(fail(&format!("integral functional kind {kind_id}")));
            }
        }

        // Intervals, verbatim.
        let mean_total: f64 = z.iter().sum();
        let mean = mean_total / n as f64;
        let css: f64 = z.iter().map(|x| (x - mean) * (x - mean)).sum();
        let scale = (n as f64 * css / (n as f64 - 1.0)).sqrt();
        let mut partial = vec![0.0];
        for x in &z {
            partial.push(partial.last().unwrap() + x);
        }

        let h = a * scale;
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (k, s) in partial.iter().enumerate().skip(1) {
            lo = lo.max((s - h) / k as f64);
            hi = hi.min((s + h) / k as f64);
        }
        let ci = faci_sup(&sample, alpha).unwrap();
        if ci.empty != (lo > hi) || (!ci.empty && !(close(ci.lower, lo) && close(ci.upper, hi))) {
            return Err(fail("sup interval"));
        }
        // Membership of μ implies the recentered process stays within a.
        for g in 0..41 {
            let mu = -2.0 + g as f64 * 0.1;
            if ci.contains(mu) && (mu - ci.lower).min(ci.upper - mu) > 1e-9 {
                let p = student_process(&sample.shifted(-mu), &TimeFunctionKind::CenteredSquares)
                    .unwrap();
                if sup_abs_functional(&p) > a + 1e-9 {
                    return Err(fail(&format!("sup membership at mu={mu}")));
                }
            }
        }

        let c0 = cumulative(&case.weights(0));
        for (num, t0) in [(16i128, 0.25), (32, 0.5), (48, 0.75), (64, 1.0)] {
            if is_tie(&c0, num, 64) && !case.exact_mean() {
                continue;
            }
            let k = brute_time(&c0, num, 64);
            let got = faci_t0(&sample, t0, alpha);
            if k == 0 {
                if !matches!(got, Err(Error::ZeroTimeIndex { .. })) {
                    return Err(fail(&format!("t0={t0} should hit a zero time index")));
                }
                continue;
            }
            let q = 1.959963984540054 * t0.sqrt();
            let ci = got.map_err(|e| fail(&e.to_string()))?;
            let lo = (partial[k] - q * scale) / k as f64;
            let hi = (partial[k] + q * scale) / k as f64;
            if !(close(ci.lower, lo) && close(ci.upper, hi)) {
                return Err(fail(&format!("t0={t0} interval")));
            }
        }

        let mut num = 0.0;
        let mut den = 0.0;
        for k in 1..n {
            let nu = (z[k] - mean) * (z[k] - mean) / css;
            num += nu * partial[k];
            den += nu * k as f64;
        }
        let q = 1.959963984540054 / 3f64.sqrt();
        let ci = faci_integral(&sample, alpha).unwrap();
        if !(close(ci.lower, (num - q * scale) / den) && close(ci.upper, (num + q * scale) / den)) {
            return Err(fail("integral interval"));
        }
    }
    Ok(format!(
        "{} cases ({exact} exact-mean), {time_checks} time-function checks, {skipped} float ties skipped",
        cases.len()
    ))
}

// 3 ------------------------------------------------------------------------

fn integral_weighted_representation() -> Outcome {
    let mut worst = 0.0_f64;
    for (design, sample) in random_samples(1000, 303) {
        let mu = design.mu();
        let n = sample.len();
        let process = student_process(&sample.shifted(-mu), &TimeFunctionKind::CenteredSquares)
            .map_err(|e| e.to_string())?;
        let nu = nu_weights(&sample).map_err(|e| e.to_string())?;
        let z = sample.values();
        let mean = sample.mean();
        let css: f64 = z.iter().map(|x| (x - mean) * (x - mean)).sum();
        let denom = (css / (n as f64 - 1.0)).sqrt();
        let mut partial = 0.0;
        let mut weighted = 0.0;
        for k in 1..n {
            partial += z[k - 1] - mu;
            weighted += nu[k] * (partial / (n as f64).sqrt()) / denom;
        }
        let exact = integral_functional(&process);
        let err = (exact - weighted).abs() / exact.abs().max(1.0);
        worst = worst.max(err);
    }
    ensure(worst <= 1e-12, || format!("max error {worst:e} > 1e-12"))?;
    Ok(format!("1000 samples, max error {worst:.2e}"))
}

// 4 ------------------------------------------------------------------------

fn sup_quantile_monte_carlo() -> Outcome {
    let paths = 100_000u64;
    let grid = 1 << 14;
    let mut sups: Vec<f64> = (0..paths)
        .into_par_iter()
        .map(|i| {
            simulate_wiener_path(grid, &mut replication_rng(404, i))
                .unwrap()
                .sup_abs()
        })
        .collect();
    sups.sort_by(f64::total_cmp);
    let mut parts = Vec::new();
    let mut worst = 0.0_f64;
    for alpha in [0.01, 0.05, 0.10] {
        let idx = ((1.0 - alpha) * paths as f64).ceil() as usize - 1;
        let mc = sups[idx];
        let series = sup_abs_wiener_quantile(alpha).unwrap();
        worst = worst.max((mc - series).abs());
        parts.push(format!("alpha={alpha}: series {series:.4} mc {mc:.4}"));
    }
    ensure(worst <= 0.02, || {
        format!("{} (max gap {worst:.4} > 0.02)", parts.join(", "))
    })?;
    Ok(format!("{}; max gap {worst:.4}", parts.join(", ")))
}

// 5, 6 ---------------------------------------------------------------------

fn coverage_within(
    design: Design,
    n: usize,
    seed: u64,
    targets: &[(IntervalMethod, f64)],
) -> Outcome {
    let config = SimulationConfig::new(design, n, 10_000, 0.05, seed)
        .with_methods(targets.iter().map(|(m, _)| *m).collect());
    let report = coverage_experiment(&config).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    let mut ok = true;
    for (stats, (method, tol)) in report.methods.iter().zip(targets) {
        let c = stats.empirical_coverage;
        let pass = (c - 0.95).abs() <= *tol;
        ok &= pass;
        parts.push(format!(
            "{} {c:.4} (±{tol}, empty {}, errors {})",
            method.label(),
            stats.empty_count,
            stats.error_count
        ));
    }
    let line = parts.join("; ");
    if ok {
        Ok(line)
    } else {
        Err(line)
    }
}

fn coverage_lindeberg_class() -> Outcome {
    coverage_within(
        Design::HeteroNormal {
            mu: 3.0,
            sigma_pattern: vec![0.5, 1.0, 2.0],
        },
        500,
        505,
        &[
            (IntervalMethod::FixedT0 { t0: 1.0 }, 0.010),
            (IntervalMethod::IntegralWeighted, 0.015),
            (IntervalMethod::SupIntersection, 0.015),
        ],
    )
}

fn coverage_symmetric_class() -> Outcome {
    coverage_within(
        Design::SymmetricT { mu: 1.0, df: 2.0 },
        2000,
        606,
        &[(IntervalMethod::FixedT0 { t0: 1.0 }, 0.02)],
    )
}

// 7, 8 ---------------------------------------------------------------------

fn fclt_fit() -> Outcome {
    let kinds = [
        FunctionalKind::SupAbs,
        FunctionalKind::Endpoint { t0: 0.5 },
        FunctionalKind::Integral,
    ];
    let config = SimulationConfig::new(
        Design::IidNormal {
            mu: 0.0,
            sigma: 1.0,
        },
        2000,
        5000,
        0.05,
        707,
    );
    let report = fclt_fit_experiment(&config, &kinds).map_err(|e| e.to_string())?;
    let line = report
        .functionals
        .iter()
        .map(|f| format!("KS[{}] {:.4}", f.reference_law, f.ks_distance))
        .collect::<Vec<_>>()
        .join(", ");
    if report.functionals.iter().all(|f| f.ks_distance <= 0.03) {
        Ok(line)
    } else {
        Err(format!("{line} (limit 0.03)"))
    }
}

fn negative_control() -> Outcome {
    let design = Design::Cauchy {
        mu: 0.0,
        scale: 1.0,
    };
    let config = SimulationConfig::new(design.clone(), 2000, 5000, 0.05, 808);
    let report =
        fclt_fit_experiment(&config, &[FunctionalKind::SupAbs]).map_err(|e| e.to_string())?;
    let ks = report.functionals[0].ks_distance;
    let medians = max_ratio_experiment(&design, &[100, 400, 1600, 6400], 2000, 809)
        .map_err(|e| e.to_string())?;
    let line = format!(
        "KS[sup|W|] {ks:.4} (≥ 0.05); median max-ratio {}",
        medians
            .iter()
            .map(|(n, m)| format!("n={n}: {m:.3}"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    if ks >= 0.05 && medians.iter().all(|(_, m)| *m >= 0.2) {
        Ok(line)
    } else {
        Err(line)
    }
}

// 9 ------------------------------------------------------------------------

fn discrepancy_decreases() -> Outcome {
    let design = Design::HeteroNormal {
        mu: 0.0,
        sigma_pattern: vec![0.5, 1.0, 2.0],
    };
    let points = discrepancy_experiment(&design, &[100, 400, 1600, 6400], 2000, 909)
        .map_err(|e| e.to_string())?;
    let line = points
        .iter()
        .map(|p| format!("n={}: {:.4}", p.n, p.median_sup_distance))
        .collect::<Vec<_>>()
        .join(", ");
    if points
        .windows(2)
        .all(|w| w[1].median_sup_distance < w[0].median_sup_distance)
    {
        Ok(line)
    } else {
        Err(format!("{line} (not strictly decreasing)"))
    }
}

// 10 -----------------------------------------------------------------------

/// `2∫_c^{c+40} x² φ(x) dx` by composite Simpson.
fn truncated_moment_quadrature(c: f64) -> f64 {
    let phi = |x: f64| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let (lo, hi) = (c, c + 40.0);
    let m = 400_000;
    let h = (hi - lo) / m as f64;
    let f = |x: f64| x * x * phi(x);
    let mut acc = f(lo) + f(hi);
    for i in 1..m {
        acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(lo + i as f64 * h);
    }
    2.0 * acc * h / 3.0
}

fn lindeberg_profile_decay() -> Outcome {
    let design = Design::IidNormal {
        mu: 0.0,
        sigma: 1.0,
    };
    let eps = 0.1;
    let mut values = Vec::new();
    for n in [100usize, 10_000] {
        let profile = lindeberg_profile(&design, n, eps).map_err(|e| e.to_string())?;
        let c = eps * (n as f64).sqrt();
        let oracle = truncated_moment_quadrature(c);
        let closed = normal_truncated_second_moment(c);
        ensure((profile - closed).abs() < 1e-15, || {
            format!("n={n}: profile {profile} is not the closed form {closed}")
        })?;
        ensure((closed - oracle).abs() <= 1e-6, || {
            format!("n={n}: closed form {closed} vs quadrature {oracle}")
        })?;
        values.push(profile);
    }
    ensure(values[1] < values[0] / 10.0, || {
        format!("{values:?} not decaying tenfold")
    })?;
    Ok(format!(
        "profile(100) = {:.6}, profile(10^4) = {:.3e}",
        values[0], values[1]
    ))
}

// 11 -----------------------------------------------------------------------

fn simulate_cli(config: &Path, experiment: &str, out: &Path, threads: &str) -> Result<(), String> {
    let status = Command::new(env!("CARGO_BIN_EXE_facimean"))
        .args(["simulate", "--config"])
        .arg(config)
        .args(["--experiment", experiment, "--threads", threads, "--out"])
        .arg(out)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(status.status.success(), || {
        String::from_utf8_lossy(&status.stderr).into_owned()
    })
}

fn determinism() -> Outcome {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let configs = [
        (
            "coverage",
            r#"{"schema_version":1,"design":{"type":"iid_normal","mu":0,"sigma":1},
                "n":500,"replications":2000,"alpha":0.5,"seed":42}"#,
        ),
        (
            "fit",
            r#"{"schema_version":1,"design":{"type":"symmetric_t","mu":1,"df":2},
                "n":300,"replications":500,"alpha":0.05,"seed":7}"#,
        ),
        (
            "discrepancy",
            r#"{"schema_version":1,"design":{"type":"hetero_normal","mu":3,"sigma_pattern":[0.5,1,2]},
                "n":100,"replications":300,"alpha":0.05,"seed":9,"n_grid":[50,200]}"#,
        ),
    ];
    for (experiment, body) in configs {
        let cfg = dir.path().join(format!("{experiment}.json"));
        fs::write(&cfg, body).map_err(|e| e.to_string())?;
        let runs = [("1", "a"), ("1", "b"), ("8", "c")];
        let mut outputs = Vec::new();
        for (threads, tag) in runs {
            let out = dir.path().join(format!("{experiment}-{tag}.json"));
            simulate_cli(&cfg, experiment, &out, threads)?;
            outputs.push(fs::read(&out).map_err(|e| e.to_string())?);
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || {
            format!("{experiment} reports differ across runs/threads")
        })?;
    }
    Ok("coverage, fit, discrepancy: byte-identical at 1 thread (x2) and 8 threads".into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "student/self-normalized identity",
            budget: Some(Duration::from_secs(1)),
            run: identity_student_vs_self_normalized,
        },
        Criterion {
            id: 2,
            name: "brute-force oracle equivalence",
            budget: Some(Duration::from_secs(10)),
            run: brute_force_equivalence,
        },
        Criterion {
            id: 3,
            name: "integral weighted-sum representation",
            budget: None,
            run: integral_weighted_representation,
        },
        Criterion {
            id: 4,
            name: "sup|W| quantile vs Monte Carlo",
            budget: Some(Duration::from_secs(120)),
            run: sup_quantile_monte_carlo,
        },
        Criterion {
            id: 5,
            name: "coverage, Lindeberg class",
            budget: Some(Duration::from_secs(300)),
            run: coverage_lindeberg_class,
        },
        Criterion {
            id: 6,
            name: "coverage, symmetric class",
            budget: Some(Duration::from_secs(300)),
            run: coverage_symmetric_class,
        },
        Criterion {
            id: 7,
            name: "functional CLT fit",
            budget: Some(Duration::from_secs(300)),
            run: fclt_fit,
        },
        Criterion {
            id: 8,
            name: "Cauchy negative control",
            budget: None,
            run: negative_control,
        },
        Criterion {
            id: 9,
            name: "oracle vs empirical time function",
            budget: Some(Duration::from_secs(300)),
            run: discrepancy_decreases,
        },
        Criterion {
            id: 10,
            name: "Lindeberg profile",
            budget: None,
            run: lindeberg_profile_decay,
        },
        Criterion {
            id: 11,
            name: "simulate determinism",
            budget: None,
            run: determinism,
        },
    ];
    let filter: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for c in criteria
        .iter()
        .filter(|c| filter.is_empty() || filter.contains(&c.id))
    {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(detail), Some(budget)) = (&outcome, c.budget) {
            if elapsed > budget {
                outcome = Err(format!(
                    "{detail} (runtime {elapsed:.2?} over budget {budget:?})"
                ));
            }
        }
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("[{tag}] {:>2} {}: {detail} [{elapsed:.2?}]", c.id, c.name);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    } else {
        println!("all acceptance criteria passed");
        ExitCode::SUCCESS
    }
}
