//! The inequality registry: every statement as a named predicate with a
//! signed, scale-free Loewner margin.

mod eval;
mod instance;
mod probe;
mod registry;

use serde::{Deserialize, Serialize};

pub use eval::{evaluate, Part};
pub use instance::{generate_instance, grid_points, GridPoint, Instance, IntervalParams, Params};
pub use probe::{sharpness_probe, Probe, ProbeSide, PROBE_CHECKS};
pub use registry::{
    check_index, find_check, list_checks, registry, CheckListing, CheckSpec, Expectation, GridKind, InstanceKind,
    MeanUse,
};

use crate::error::Result;

/// The failing sub-comparison and the instance it failed on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub part: usize,
    pub label: String,
    pub margin: f64,
    pub instance: Instance,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub params: Params,
    /// Minimum margin over all sub-comparisons.
    pub margin: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharpness_gap: Option<f64>,
}

/// Evaluates `check_id` on `instance`.
///
/// A precondition violation is returned as `Error::Precondition` so callers
/// can count it as a skip.
pub fn run_check(check_id: &str, instance: &Instance, tol: f64) -> Result<CheckResult> {
    let spec = find_check(check_id)?;
    let parts = evaluate(spec, instance)?;
    let (worst, part) = parts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.margin, i))
        .fold((f64::INFINITY, 0), |acc, x| if x.0 < acc.0 || x.0.is_nan() { x } else { acc });
    let pass = worst >= -tol;
    Ok(CheckResult {
        check_id: spec.id.to_string(),
        params: instance.params.clone(),
        margin: worst,
        pass,
        witness: (!pass).then(|| Witness {
            part,
            label: parts[part].label.clone(),
            margin: worst,
            instance: instance.clone(),
        }),
        sharpness_gap: None,
    })
}
