use nalgebra::{Complex, DVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::registry::{CheckSpec, GridKind, InstanceKind, MeanUse, ABOVE_ONE, BELOW_ZERO};
use crate::error::{Error, Result};
use crate::functions::with_class;
use crate::gen::{random_pd_with, random_unit_vector_with, OrderedBounds, Seed, SpectralInterval};
use crate::maps::MapDescriptor;
use crate::means::{MeanDescriptor, RepresentingFn};
use crate::Hermitian;

/// Parameter record carried by instances and results. Absent fields do not
/// apply to the check.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<f64>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    pub big_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<OrderedBounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    /// Scalar argument of the pointwise checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<Seed>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub means: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub function: Option<String>,
}

impl Params {
    pub(crate) fn need(&self, value: Option<f64>, name: &str) -> Result<f64> {
        value.ok_or_else(|| Error::InvalidParameter(format!("instance is missing parameter `{name}`")))
    }

    pub fn weight(&self) -> Result<f64> {
        self.need(self.v, "v")
    }

    pub fn sandwich(&self) -> Result<(f64, f64)> {
        Ok((self.need(self.s, "s")?, self.need(self.t, "t")?))
    }

    pub fn range(&self) -> Result<(f64, f64)> {
        Ok((self.need(self.m, "m")?, self.need(self.big_m, "M")?))
    }

    pub fn ordered(&self) -> Result<OrderedBounds> {
        self.bounds
            .ok_or_else(|| Error::InvalidParameter("instance is missing ordered bounds".into()))
    }
}

/// Everything a check needs to evaluate: operands, parameters, and the map,
/// function, means and vectors it quantifies over.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Hermitian>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Hermitian>,
    pub params: Params,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<MapDescriptor>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub means: Vec<MeanDescriptor>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vectors: Vec<DVector<Complex<f64>>>,
}

impl Instance {
    pub fn scalar(params: Params) -> Self {
        Self {
            a: None,
            b: None,
            params,
            map: None,
            means: Vec::new(),
            vectors: Vec::new(),
        }
    }

    pub fn pair(a: Hermitian, b: Hermitian, params: Params) -> Self {
        Self {
            a: Some(a),
            b: Some(b),
            ..Self::scalar(params)
        }
    }

    pub fn operands(&self) -> Result<(&Hermitian, &Hermitian)> {
        match (&self.a, &self.b) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::InvalidParameter("instance has no operands".into())),
        }
    }
}

/// One point of a check's sweep.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    pub v: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
}

impl GridPoint {
    pub fn weight(v: f64) -> Self {
        Self { v, p: None }
    }
}

/// Grid points of `grid` given the configured weight and power grids.
pub fn grid_points(grid: GridKind, v_grid: &[f64], p_grid: &[f64]) -> Vec<GridPoint> {
    match grid {
        GridKind::UnitWeights => v_grid.iter().map(|&v| GridPoint::weight(v)).collect(),
        GridKind::Half => vec![GridPoint::weight(0.5)],
        GridKind::AboveOne => ABOVE_ONE.iter().map(|&v| GridPoint::weight(v)).collect(),
        GridKind::BelowZero => BELOW_ZERO.iter().map(|&v| GridPoint::weight(v)).collect(),
        GridKind::Outside => ABOVE_ONE
            .iter()
            .chain(BELOW_ZERO.iter())
            .map(|&v| GridPoint::weight(v))
            .collect(),
        GridKind::Powers => p_grid.iter().map(|&p| GridPoint { v: 0.5, p: Some(p) }).collect(),
    }
}

/// Named parameter sets that instances cycle through by trial index.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct IntervalParams {
    /// `(s, t)` for `sA ≤ B ≤ tA`.
    pub sandwich: Vec<(f64, f64)>,
    /// `(m2, m1, M1, M2)` for separated spectra.
    pub ordered: Vec<(f64, f64, f64, f64)>,
    /// `(m, M)` for `mI ≤ A, B ≤ MI`.
    pub bounds: Vec<(f64, f64)>,
}

impl Default for IntervalParams {
    fn default() -> Self {
        Self {
            sandwich: vec![(0.5, 2.0), (0.25, 1.5), (1.0, 1.0), (1.2, 3.0), (0.1, 0.8), (0.3, 5.0)],
            ordered: vec![(1.0, 2.0, 3.0, 5.0), (0.5, 1.0, 1.5, 4.0), (1.0, 1.0, 4.0, 4.0), (0.2, 1.0, 2.0, 10.0)],
            bounds: vec![(1.0, 4.0), (0.5, 2.0), (1.0, 10.0), (2.0, 3.0)],
        }
    }
}

impl IntervalParams {
    pub fn validate(&self) -> Result<()> {
        if self.sandwich.is_empty() || self.ordered.is_empty() || self.bounds.is_empty() {
            return Err(Error::InvalidParameter("interval parameter sets must be non-empty".into()));
        }
        for &(s, t) in &self.sandwich {
            SpectralInterval::new(s, t)?;
        }
        for &(m2, m1, big_m1, big_m2) in &self.ordered {
            OrderedBounds::new(m2, m1, big_m1, big_m2)?;
        }
        for &(m, big_m) in &self.bounds {
            if !(m > 0.0 && m < big_m && big_m.is_finite()) {
                return Err(Error::InvalidParameter(format!("bounds need 0 < m < M, got ({m}, {big_m})")));
            }
        }
        Ok(())
    }
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo.ln()..=hi.ln()).exp()
}

/// Random separated bounds with gaps of varying width.
pub(crate) fn random_ordered_bounds(rng: &mut ChaCha8Rng) -> OrderedBounds {
    let m2 = log_uniform(rng, 0.1, 5.0);
    let m1 = m2 * rng.random_range(1.0..3.0);
    let big_m1 = m1 * rng.random_range(1.01..4.0);
    let big_m2 = big_m1 * rng.random_range(1.0..4.0);
    OrderedBounds {
        low_min: m2,
        low_max: m1,
        high_min: big_m1,
        high_max: big_m2,
    }
}

/// Builds the instance for trial `trial` of `spec` at grid point `point`.
///
/// Parameter sets are taken round-robin from `sets`; maps and functions
/// cycle through their catalogs by trial index; everything random is drawn
/// from `seed`.
pub fn generate_instance(
    spec: &CheckSpec,
    n: usize,
    point: GridPoint,
    trial: usize,
    sets: &IntervalParams,
    extra_means: &[RepresentingFn],
    seed: Seed,
) -> Result<Instance> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension must be positive".into()));
    }
    let mut rng = seed.rng();
    let v = point.v;
    let mut params = Params {
        v: Some(v),
        p: point.p,
        dim: n,
        seed: Some(seed),
        ..Params::default()
    };
    let mut inst = match spec.instance {
        InstanceKind::Sandwich => {
            let (s, t) = sets.sandwich[trial % sets.sandwich.len()];
            params.s = Some(s);
            params.t = Some(t);
            let a = random_pd_with(n, SpectralInterval { lo: 0.5, hi: 2.0 }, &mut rng)?;
            let c = random_pd_with(n, SpectralInterval::new(s, t)?, &mut rng)?;
            let b = c.sandwich_by(&a.sqrt()?)?;
            Instance::pair(a, b, params)
        }
        InstanceKind::Bounded => {
            let (m, big_m) = sets.bounds[trial % sets.bounds.len()];
            params.m = Some(m);
            params.big_m = Some(big_m);
            let range = SpectralInterval::new(m, big_m)?;
            let a = random_pd_with(n, range, &mut rng)?;
            let b = random_pd_with(n, range, &mut rng)?;
            Instance::pair(a, b, params)
        }
        InstanceKind::OrderedLowHigh | InstanceKind::OrderedHighLow | InstanceKind::OrderedBySign => {
            let (m2, m1, big_m1, big_m2) = sets.ordered[trial % sets.ordered.len()];
            let bounds = OrderedBounds::new(m2, m1, big_m1, big_m2)?;
            params.bounds = Some(bounds);
            let low = random_pd_with(n, bounds.low(), &mut rng)?;
            let high = random_pd_with(n, bounds.high(), &mut rng)?;
            let low_first = match spec.instance {
                InstanceKind::OrderedLowHigh => true,
                InstanceKind::OrderedHighLow => false,
                _ => v > 1.0,
            };
            if low_first {
                Instance::pair(low, high, params)
            } else {
                Instance::pair(high, low, params)
            }
        }
        InstanceKind::Scalar => {
            match spec.id {
                "lemma21_signs" => params.x = Some(rng.random_range(1e-3..=1.0)),
                "xi_vs_specht" => {
                    let x = log_uniform(&mut rng, 0.05, 20.0);
                    let y = log_uniform(&mut rng, 0.05, 20.0);
                    params.s = Some(x.min(y));
                    params.t = Some(x.max(y));
                }
                _ => params.bounds = Some(random_ordered_bounds(&mut rng)),
            }
            Instance::scalar(params)
        }
    };
    if spec.uses_map {
        let map = MapDescriptor::catalog(n, trial, rng.random());
        inst.params.map = Some(map.label());
        inst.map = Some(map);
    }
    if let Some(class) = spec.function {
        let list = with_class(class);
        inst.params.function = Some(list[trial % list.len()].label.to_string());
    }
    if spec.means != MeanUse::None {
        inst.means = MeanDescriptor::canonical(v).to_vec();
        inst.means
            .extend(extra_means.iter().map(|&h| MeanDescriptor::representing(h, v)));
        inst.params.means = inst.means.iter().map(|m| m.label()).collect();
    }
    for _ in 0..spec.vectors {
        inst.vectors.push(random_unit_vector_with(n, &mut rng)?);
    }
    Ok(inst)
}
