//! Positive linear maps on Hermitian matrices.
//!
//! Unitaries and isometries are regenerated from their seeds on every
//! application, so a descriptor stays small enough to live in a report.

use nalgebra::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gen::{random_pd_with, random_unitary, Seed, SpectralInterval};
use crate::hermitian::{loewner_margin, CMatrix, HermitianMatrix};
use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum MapDescriptor {
    Identity,
    /// `X ↦ U* X U` with a Haar unitary drawn from `seed`.
    UnitaryConjugation { seed: u64 },
    /// `X ↦ V* X V` with `V` the first `out_dim` columns of a Haar unitary,
    /// scaled by `1 + distortion`. Unital iff `distortion = 0`.
    Compression {
        seed: u64,
        out_dim: usize,
        #[serde(default)]
        distortion: f64,
    },
    /// Keeps the diagonal blocks of a partition into `blocks` nearly equal
    /// contiguous parts and zeroes the rest.
    Pinching { blocks: usize },
    /// `X ↦ (tr X / n) I`.
    NormalizedTrace,
    ConvexCombination { weights: Vec<f64>, maps: Vec<MapDescriptor> },
}

fn block_sizes(n: usize, blocks: usize) -> Vec<usize> {
    let k = blocks.clamp(1, n);
    (0..k).map(|i| n / k + usize::from(i < n % k)).collect()
}

impl MapDescriptor {
    pub fn label(&self) -> String {
        match self {
            MapDescriptor::Identity => "identity".into(),
            MapDescriptor::UnitaryConjugation { seed } => format!("unitary({seed})"),
            MapDescriptor::Compression {
                seed,
                out_dim,
                distortion,
            } if *distortion == 0.0 => format!("compression({seed},{out_dim})"),
            MapDescriptor::Compression {
                seed,
                out_dim,
                distortion,
            } => format!("compression({seed},{out_dim},{distortion})"),
            MapDescriptor::Pinching { blocks } => format!("pinching({blocks})"),
            MapDescriptor::NormalizedTrace => "normalized_trace".into(),
            MapDescriptor::ConvexCombination { weights, maps } => {
                let parts: Vec<String> = weights
                    .iter()
                    .zip(maps)
                    .map(|(w, m)| format!("{w}*{}", m.label()))
                    .collect();
                format!("convex[{}]", parts.join("+"))
            }
        }
    }

    /// Whether the map is unital by construction.
    pub fn unital(&self) -> bool {
        match self {
            MapDescriptor::Compression { distortion, .. } => *distortion == 0.0,
            MapDescriptor::ConvexCombination { maps, .. } => maps.iter().all(|m| m.unital()),
            _ => true,
        }
    }

    /// Output dimension on `n × n` inputs.
    pub fn out_dim(&self, n: usize) -> Result<usize> {
        match self {
            MapDescriptor::Compression { out_dim, .. } => {
                if *out_dim == 0 || *out_dim > n {
                    return Err(Error::DimensionMismatch {
                        left: n,
                        right: *out_dim,
                    });
                }
                Ok(*out_dim)
            }
            MapDescriptor::ConvexCombination { weights, maps } => {
                self.validate_weights(weights, maps)?;
                let dims = maps.iter().map(|m| m.out_dim(n)).collect::<Result<Vec<_>>>()?;
                if dims.windows(2).any(|w| w[0] != w[1]) {
                    return Err(Error::InvalidParameter(format!(
                        "convex combination mixes output dimensions {dims:?}"
                    )));
                }
                Ok(dims[0])
            }
            _ => Ok(n),
        }
    }

    fn validate_weights(&self, weights: &[f64], maps: &[MapDescriptor]) -> Result<()> {
        if weights.len() != maps.len() || maps.is_empty() {
            return Err(Error::InvalidParameter(
                "convex combination needs one weight per map".into(),
            ));
        }
        let total: f64 = weights.iter().sum();
        if weights.iter().any(|w| !(*w >= 0.0)) || (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "convex weights must be nonnegative and sum to 1, got {weights:?}"
            )));
        }
        Ok(())
    }

    /// Deterministic catalog entry `index` for inputs of dimension `n`.
    pub fn catalog(n: usize, index: usize, seed: u64) -> MapDescriptor {
        match index % 6 {
            0 => MapDescriptor::Identity,
            1 => MapDescriptor::UnitaryConjugation { seed },
            2 => MapDescriptor::Compression {
                seed,
                out_dim: n.saturating_sub(1).max(1),
                distortion: 0.0,
            },
            3 => MapDescriptor::Pinching { blocks: 2 },
            4 => MapDescriptor::NormalizedTrace,
            _ => MapDescriptor::ConvexCombination {
                weights: vec![0.25, 0.75],
                maps: vec![
                    MapDescriptor::UnitaryConjugation { seed },
                    MapDescriptor::Pinching { blocks: 2 },
                ],
            },
        }
    }
}

fn cast_matrix<T: Real>(m: &CMatrix<f64>) -> CMatrix<T> {
    m.map(|z| Complex::new(T::lit(z.re), T::lit(z.im)))
}

/// Applies `Φ` to `X`.
pub fn apply_map<T: Real>(d: &MapDescriptor, x: &HermitianMatrix<T>) -> Result<HermitianMatrix<T>> {
    let n = x.dim();
    match d {
        MapDescriptor::Identity => Ok(x.clone()),
        MapDescriptor::UnitaryConjugation { seed } => {
            let u = random_unitary(n, Seed::new(*seed))?;
            x.congruence(&cast_matrix(&u))
        }
        MapDescriptor::Compression {
            seed,
            out_dim,
            distortion,
        } => {
            let k = d.out_dim(n)?;
            debug_assert_eq!(k, *out_dim);
            let u = random_unitary(n, Seed::new(*seed))?;
            let v = u.columns(0, k).into_owned() * Complex::new(1.0 + distortion, 0.0);
            x.congruence(&cast_matrix(&v))
        }
        MapDescriptor::Pinching { blocks } => {
            let sizes = block_sizes(n, *blocks);
            let mut out = x.as_matrix().clone();
            let mut owner = Vec::with_capacity(n);
            for (b, &size) in sizes.iter().enumerate() {
                owner.extend(std::iter::repeat_n(b, size));
            }
            for i in 0..n {
                for j in 0..n {
                    if owner[i] != owner[j] {
                        out[(i, j)] = Complex::new(T::zero(), T::zero());
                    }
                }
            }
            HermitianMatrix::new(out)
        }
        MapDescriptor::NormalizedTrace => {
            let trace = (0..n).fold(T::zero(), |acc, i| acc + x.entry(i, i).re);
            Ok(HermitianMatrix::scalar(n, trace / T::lit(n as f64)))
        }
        MapDescriptor::ConvexCombination { weights, maps } => {
            let k = d.out_dim(n)?;
            let mut acc = HermitianMatrix::zeros(k);
            for (w, m) in weights.iter().zip(maps) {
                acc = acc.combine(T::one(), &apply_map(m, x)?, T::lit(*w))?;
            }
            Ok(acc)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MapValidation {
    pub positive_ok: bool,
    pub unital_ok: bool,
    /// Smallest normalized margin `0 ≤ Φ(X)` over the sampled PSD inputs.
    pub worst_margin: f64,
    /// `‖Φ(I) − I‖₂`.
    pub unital_defect: f64,
}

/// Samples `trials` random PSD inputs (including rank-deficient ones) and
/// checks positivity of the outputs and, when claimed, unitality.
pub fn validate_map(d: &MapDescriptor, n: usize, trials: usize, seed: Seed) -> Result<MapValidation> {
    let tol = f64::DEFAULT_TOL;
    let k = d.out_dim(n)?;
    let mut rng = seed.rng();
    let mut worst = f64::INFINITY;
    for trial in 0..trials.max(1) {
        let x = random_pd_with(n, SpectralInterval { lo: 1e-3, hi: 10.0 }, &mut rng)?;
        // every other trial drops to rank one
        let x = if trial % 2 == 1 {
            let eig = x.eigh();
            eig.recompose(|w| if w == eig.values[n - 1] { w } else { 0.0 })
        } else {
            x
        };
        let y = apply_map(d, &x)?;
        worst = worst.min(loewner_margin(&HermitianMatrix::zeros(k), &y)?);
    }
    let image = apply_map(d, &HermitianMatrix::<f64>::identity(n))?;
    let unital_defect = image.sub(&HermitianMatrix::identity(k))?.norm2();
    Ok(MapValidation {
        positive_ok: worst >= -tol,
        unital_ok: !d.unital() || unital_defect <= 1e-10,
        worst_margin: worst,
        unital_defect,
    })
}
