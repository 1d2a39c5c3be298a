//! Suite configuration, the sequential runner, and the JSON report.

use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::checks::{
    check_index, find_check, generate_instance, grid_points, registry, run_check, sharpness_probe, CheckSpec,
    Expectation, GridPoint, IntervalParams, Witness, PROBE_CHECKS,
};
use crate::error::{Error, Result};
use crate::gen::{stream_index, Seed};
use crate::means::{representing_betweenness, RepresentingFn};

/// Which checks to run.
#[derive(Clone, Debug, Default, PartialEq)]
pub enum CheckSelection {
    #[default]
    All,
    Only(Vec<String>),
}

impl Serialize for CheckSelection {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CheckSelection::All => serializer.serialize_str("all"),
            CheckSelection::Only(ids) => ids.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for CheckSelection {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Word(String),
            List(Vec<String>),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Word(w) if w == "all" => Ok(CheckSelection::All),
            Raw::Word(w) => Ok(CheckSelection::Only(vec![w])),
            Raw::List(ids) => Ok(CheckSelection::Only(ids)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub checks: CheckSelection,
    pub trials: usize,
    pub dims: Vec<usize>,
    pub seed: u64,
    pub tol: f64,
    pub v_grid: Vec<f64>,
    pub p_grid: Vec<f64>,
    pub interval_params: IntervalParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report_path: Option<PathBuf>,
    /// Labels of extra representing-function means joining the catalog.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub extra_means: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            checks: CheckSelection::All,
            trials: 200,
            dims: vec![1, 2, 4, 8],
            seed: 0,
            tol: 1e-9,
            v_grid: vec![0.1, 0.25, 0.5, 0.75, 0.9],
            p_grid: vec![2.0, 2.5, 3.0, 5.0],
            interval_params: IntervalParams::default(),
            report_path: None,
            extra_means: Vec::new(),
        }
    }
}

pub const MAX_DIM: usize = 64;

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if let CheckSelection::Only(ids) = &self.checks {
            if ids.is_empty() {
                return bad("check list is empty".into());
            }
            for id in ids {
                find_check(id)?;
            }
        }
        if self.trials == 0 {
            return bad("trials must be positive".into());
        }
        if self.dims.is_empty() || self.dims.iter().any(|&n| n == 0 || n > MAX_DIM) {
            return bad(format!("dims must be a non-empty list in 1..={MAX_DIM}"));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return bad(format!("tol must be positive, got {}", self.tol));
        }
        if self.v_grid.is_empty() || self.v_grid.iter().any(|v| !(0.0..=1.0).contains(v)) {
            return bad("v_grid must be a non-empty list in [0, 1]".into());
        }
        if self.p_grid.is_empty() || self.p_grid.iter().any(|p| !(*p >= 2.0 && p.is_finite())) {
            return bad("p_grid must be a non-empty list of values ≥ 2".into());
        }
        self.interval_params.validate().map_err(|e| Error::Config(e.to_string()))?;
        self.representing_means().map(|_| ())
    }

    /// Extra means, each certified between `!_v` and `∇_v` on the weight grid.
    pub fn representing_means(&self) -> Result<Vec<RepresentingFn>> {
        self.extra_means
            .iter()
            .map(|label| {
                let h = RepresentingFn::from_label(label)?;
                for &v in &self.v_grid {
                    let cert = representing_betweenness(|x| h.eval(v, x), v)?;
                    if !cert.ok {
                        return Err(Error::Config(format!("{label} is not between harmonic and arithmetic at v = {v}")));
                    }
                }
                Ok(h)
            })
            .collect()
    }

    pub fn selected(&self) -> Vec<&'static CheckSpec> {
        match &self.checks {
            CheckSelection::All => registry().iter().collect(),
            CheckSelection::Only(ids) => registry().iter().filter(|c| ids.iter().any(|id| id == c.id)).collect(),
        }
    }

    pub fn grid_for(&self, spec: &CheckSpec) -> Vec<GridPoint> {
        grid_points(spec.grid, &self.v_grid, &self.p_grid)
    }
}

/// Parses and validates a JSON config, filling in defaults.
pub fn parse_config(text: &str) -> Result<SuiteConfig> {
    let cfg: SuiteConfig = serde_json::from_str(text).map_err(|e| match e.classify() {
        serde_json::error::Category::Data => Error::Config(e.to_string()),
        _ => Error::Config(format!("malformed JSON: {e}")),
    })?;
    cfg.validate()?;
    Ok(cfg)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepParams {
    pub dims: Vec<usize>,
    pub grid: Vec<GridPoint>,
}

/// Aggregate over every instance of one check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check_id: String,
    pub expectation: Expectation,
    pub params: SweepParams,
    /// Instances evaluated (skips excluded).
    pub trials: usize,
    pub skips: usize,
    /// Instances whose evaluation raised an error other than a precondition.
    pub errors: usize,
    pub failures: usize,
    pub min_margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharpness_gap: Option<f64>,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub error_messages: Vec<String>,
}

impl CheckSummary {
    pub fn counts_against_suite(&self) -> bool {
        self.expectation == Expectation::Asserted && (self.failures > 0 || self.errors > 0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: SuiteConfig,
    pub results: Vec<CheckSummary>,
    pub elapsed_seconds: f64,
    pub version: String,
}

impl Report {
    /// 0 when no asserted check failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.results.iter().any(CheckSummary::counts_against_suite))
    }

    pub fn result(&self, check_id: &str) -> Option<&CheckSummary> {
        self.results.iter().find(|r| r.check_id == check_id)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))
    }
}

const KEPT_ERROR_MESSAGES: usize = 5;

/// Runs every instance of one check.
pub fn run_check_sweep(cfg: &SuiteConfig, spec: &CheckSpec) -> Result<CheckSummary> {
    let idx = check_index(spec.id)? as u64;
    let extra = cfg.representing_means()?;
    let grid = cfg.grid_for(spec);
    let mut out = CheckSummary {
        check_id: spec.id.to_string(),
        expectation: spec.expectation,
        params: SweepParams {
            dims: cfg.dims.clone(),
            grid: grid.clone(),
        },
        trials: 0,
        skips: 0,
        errors: 0,
        failures: 0,
        min_margin: None,
        sharpness_gap: None,
        witnesses: Vec::new(),
        error_messages: Vec::new(),
    };
    for &n in &cfg.dims {
        for (gi, &point) in grid.iter().enumerate() {
            for k in 0..cfg.trials {
                let seed = Seed::with_stream(cfg.seed, stream_index(&[idx, n as u64, gi as u64, k as u64]));
                let outcome = generate_instance(spec, n, point, k, &cfg.interval_params, &extra, seed)
                    .and_then(|inst| run_check(spec.id, &inst, cfg.tol));
                match outcome {
                    Ok(r) => {
                        out.trials += 1;
                        out.min_margin = Some(out.min_margin.map_or(r.margin, |m| m.min(r.margin)));
                        if let Some(w) = r.witness {
                            out.failures += 1;
                            out.witnesses.push(w);
                        }
                    }
                    Err(Error::Precondition(_)) => out.skips += 1,
                    Err(e) => {
                        out.skips += 1;
                        out.errors += 1;
                        if out.error_messages.len() < KEPT_ERROR_MESSAGES {
                            out.error_messages.push(format!("dim {n}, {point:?}, trial {k}: {e}"));
                        }
                    }
                }
            }
        }
    }
    if PROBE_CHECKS.contains(&spec.id) {
        out.sharpness_gap = suite_sharpness_gap(cfg, spec.id);
    }
    Ok(out)
}

/// Largest probe gap over the configured parameter sets that the probe accepts.
fn suite_sharpness_gap(cfg: &SuiteConfig, id: &str) -> Option<f64> {
    let pairs: Vec<(f64, f64)> = if id == "cor10" {
        cfg.interval_params.bounds.clone()
    } else {
        cfg.interval_params.sandwich.clone()
    };
    let mut gap: Option<f64> = None;
    for (s, t) in pairs {
        for &v in &cfg.v_grid {
            if let Ok(p) = sharpness_probe(id, s, t, v) {
                gap = Some(gap.map_or(p.gap, |g| g.max(p.gap)));
            }
        }
    }
    gap
}

/// Runs the configured suite and writes the report when a path is set.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let results = cfg
        .selected()
        .into_iter()
        .map(|spec| run_check_sweep(cfg, spec))
        .collect::<Result<Vec<_>>>()?;
    let report = Report {
        config: cfg.clone(),
        results,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    if let Some(path) = &cfg.report_path {
        std::fs::write(path, report.to_json()?)
            .map_err(|e| Error::Io(format!("cannot write report to {}: {e}", path.display())))?;
    }
    Ok(report)
}
