use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faci::IntervalMethod;
use crate::harness::design::Design;
use crate::wiener::FunctionalKind;

pub const SCHEMA_VERSION: u32 = 1;

fn default_functionals() -> Vec<FunctionalKind> {
    vec![
        FunctionalKind::SupAbs,
        FunctionalKind::Endpoint { t0: 0.5 },
        FunctionalKind::Integral,
    ]
}

fn default_methods() -> Vec<IntervalMethod> {
    vec![
        IntervalMethod::SupIntersection,
        IntervalMethod::FixedT0 { t0: 1.0 },
        IntervalMethod::IntegralWeighted,
    ]
}

/// One Monte Carlo experiment.
///
/// `functionals` feeds the fit experiment and `n_grid` the discrepancy
/// experiment; both have defaults so one file can drive any experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulationConfig {
    pub schema_version: u32,
    pub design: Design,
    pub n: usize,
    pub replications: usize,
    pub alpha: f64,
    pub seed: u64,
    #[serde(default = "default_methods")]
    pub methods: Vec<IntervalMethod>,
    #[serde(default = "default_functionals")]
    pub functionals: Vec<FunctionalKind>,
    #[serde(default)]
    pub n_grid: Vec<usize>,
}

impl SimulationConfig {
    pub fn new(design: Design, n: usize, replications: usize, alpha: f64, seed: u64) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            design,
            n,
            replications,
            alpha,
            seed,
            methods: default_methods(),
            functionals: default_functionals(),
            n_grid: Vec::new(),
        }
    }

    pub fn with_methods(mut self, methods: Vec<IntervalMethod>) -> Self {
        self.methods = methods;
        self
    }

    pub fn with_functionals(mut self, functionals: Vec<FunctionalKind>) -> Self {
        self.functionals = functionals;
        self
    }

    pub fn with_n_grid(mut self, n_grid: Vec<usize>) -> Self {
        self.n_grid = n_grid;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |field: &str, why: String| Error::InvalidConfig(format!("`{field}`: {why}"));
        if self.schema_version != SCHEMA_VERSION {
            return Err(bad(
                "schema_version",
                format!("expected {SCHEMA_VERSION}, got {}", self.schema_version),
            ));
        }
        self.design
            .validate()
            .map_err(|e| bad("design", e.to_string()))?;
        if self.n < 2 {
            return Err(bad("n", format!("must be at least 2, got {}", self.n)));
        }
        if self.replications < 1 {
            return Err(bad("replications", "must be at least 1".into()));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(bad("alpha", format!("{} is outside (0, 1)", self.alpha)));
        }
        for m in &self.methods {
            if let IntervalMethod::FixedT0 { t0 } = m {
                if !(*t0 > 0.0 && *t0 <= 1.0) {
                    return Err(bad("methods", format!("t0 = {t0} is outside (0, 1]")));
                }
            }
        }
        for f in &self.functionals {
            f.validate()
                .map_err(|e| bad("functionals", e.to_string()))?;
        }
        if let Some(n) = self.n_grid.iter().find(|&&n| n < 2) {
            return Err(bad("n_grid", format!("sizes must be at least 2, got {n}")));
        }
        Ok(())
    }

    /// `n_grid`, or `[n]` when empty.
    pub fn sizes(&self) -> Vec<usize> {
        if self.n_grid.is_empty() {
            vec![self.n]
        } else {
            self.n_grid.clone()
        }
    }
}
