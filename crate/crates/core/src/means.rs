//! Weighted operator means.
//!
//! The arithmetic, geometric and harmonic means are defined for every real
//! weight; only the harmonic one can fail, when `(1−v)A⁻¹ + vB⁻¹` is not
//! positive definite. General means are given by a representing function `h`
//! through `A^{1/2} h(A^{-1/2} B A^{-1/2}) A^{1/2}`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hermitian::HermitianMatrix;
use crate::scalar::Real;

/// Built-in representing functions for non-canonical means.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RepresentingFn {
    /// Weighted power mean `((1−v) + v·x^r)^{1/r}`, `r ∈ [−1, 1] \ {0}`.
    PowerMean(f64),
}

impl RepresentingFn {
    /// Every built-in representing function.
    pub fn registry() -> Vec<RepresentingFn> {
        vec![RepresentingFn::PowerMean(-0.5), RepresentingFn::PowerMean(0.5)]
    }

    pub fn label(&self) -> String {
        match self {
            RepresentingFn::PowerMean(r) => format!("power_mean({r})"),
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::registry()
            .into_iter()
            .find(|h| h.label() == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn eval<T: Real>(&self, v: T, x: T) -> T {
        match *self {
            RepresentingFn::PowerMean(r) => {
                let r = T::lit(r);
                ((T::one() - v) + v * x.powf(r)).powf(r.recip())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MeanKind {
    Arithmetic,
    Geometric,
    Harmonic,
    Representing(RepresentingFn),
}

/// A weighted operator mean `σ_v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeanDescriptor {
    pub kind: MeanKind,
    pub v: f64,
}

impl MeanDescriptor {
    pub fn arithmetic(v: f64) -> Self {
        Self {
            kind: MeanKind::Arithmetic,
            v,
        }
    }

    pub fn geometric(v: f64) -> Self {
        Self {
            kind: MeanKind::Geometric,
            v,
        }
    }

    pub fn harmonic(v: f64) -> Self {
        Self {
            kind: MeanKind::Harmonic,
            v,
        }
    }

    pub fn representing(h: RepresentingFn, v: f64) -> Self {
        Self {
            kind: MeanKind::Representing(h),
            v,
        }
    }

    /// Harmonic, geometric and arithmetic means at weight `v`, in Loewner order.
    pub fn canonical(v: f64) -> [Self; 3] {
        [Self::harmonic(v), Self::geometric(v), Self::arithmetic(v)]
    }

    pub fn label(&self) -> String {
        match self.kind {
            MeanKind::Arithmetic => format!("arithmetic({})", self.v),
            MeanKind::Geometric => format!("geometric({})", self.v),
            MeanKind::Harmonic => format!("harmonic({})", self.v),
            MeanKind::Representing(h) => format!("{}({})", h.label(), self.v),
        }
    }

    /// Scalar value of the mean of `a, b > 0`.
    pub fn scalar<T: Real>(&self, a: T, b: T) -> T {
        let v = T::lit(self.v);
        let one = T::one();
        match self.kind {
            MeanKind::Arithmetic => (one - v) * a + v * b,
            MeanKind::Geometric => a.powf(one - v) * b.powf(v),
            MeanKind::Harmonic => ((one - v) / a + v / b).recip(),
            MeanKind::Representing(h) => a * h.eval(v, b / a),
        }
    }
}

impl fmt::Display for MeanDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Serialize, Deserialize)]
struct MeanJson {
    kind: String,
    v: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl Serialize for MeanDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (kind, label) = match self.kind {
            MeanKind::Arithmetic => ("arithmetic", None),
            MeanKind::Geometric => ("geometric", None),
            MeanKind::Harmonic => ("harmonic", None),
            MeanKind::Representing(h) => ("representing", Some(h.label())),
        };
        MeanJson {
            kind: kind.to_string(),
            v: self.v,
            label,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MeanDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MeanJson::deserialize(deserializer)?;
        let kind = match raw.kind.as_str() {
            "arithmetic" => MeanKind::Arithmetic,
            "geometric" => MeanKind::Geometric,
            "harmonic" => MeanKind::Harmonic,
            "representing" => {
                let label = raw
                    .label
                    .ok_or_else(|| D::Error::custom("representing mean needs a label"))?;
                MeanKind::Representing(RepresentingFn::from_label(&label).map_err(D::Error::custom)?)
            }
            other => return Err(D::Error::custom(format!("unknown mean kind `{other}`"))),
        };
        Ok(MeanDescriptor { kind, v: raw.v })
    }
}

/// `A^{1/2}` and `A^{-1/2}` from one eigendecomposition.
fn root_pair<T: Real>(a: &HermitianMatrix<T>) -> Result<(HermitianMatrix<T>, HermitianMatrix<T>)> {
    let eig = a.eigh();
    let lowest = eig.values[0];
    let norm = lowest.abs().max(eig.values[eig.values.len() - 1].abs());
    if lowest <= T::lit(T::PD_FLOOR) * norm {
        return Err(Error::NotPositiveDefinite {
            min_eigenvalue: lowest.to_f64(),
        });
    }
    Ok((eig.recompose(|x| x.sqrt()), eig.recompose(|x| x.sqrt().recip())))
}

/// `A^{1/2} φ(A^{-1/2} B A^{-1/2}) A^{1/2}` for `A, B > 0`.
pub fn perspective<T: Real>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    phi: impl Fn(T) -> T,
) -> Result<HermitianMatrix<T>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    b.ensure_positive_definite()?;
    let (root, inv_root) = root_pair(a)?;
    let inner = b.sandwich_by(&inv_root)?;
    let transformed = inner.apply_fn(phi, Some(T::zero()))?;
    transformed.sandwich_by(&root)
}

/// Evaluates `A σ_v B` for positive definite `A, B`.
pub fn weighted_mean<T: Real>(
    d: &MeanDescriptor,
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Result<HermitianMatrix<T>> {
    let v = T::lit(d.v);
    let one = T::one();
    match d.kind {
        MeanKind::Arithmetic => {
            a.ensure_positive_definite()?;
            b.ensure_positive_definite()?;
            a.combine(one - v, b, v)
        }
        MeanKind::Geometric => perspective(a, b, |x| x.powf(v)),
        MeanKind::Harmonic => {
            let combined = a.inverse()?.combine(one - v, &b.inverse()?, v)?;
            let w = combined.min_eigenvalue();
            let norm = combined.norm2();
            if w <= T::lit(T::PD_FLOOR) * norm {
                return Err(Error::HarmonicNotPositive {
                    v: d.v,
                    min_eigenvalue: w.to_f64(),
                });
            }
            combined.inverse()
        }
        MeanKind::Representing(h) => perspective(a, b, |x| h.eval(v, x)),
    }
}

/// Result of the grid certificate `x/(v+(1−v)x) ≤ h(x) ≤ (1−v)+vx`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Betweenness {
    pub ok: bool,
    /// Largest signed excursion outside the band; `≤ 0` means inside.
    pub worst_violation: f64,
    pub at: f64,
}

pub const BETWEENNESS_GRID: usize = 1000;

/// Checks that a representing function lies between the harmonic and
/// arithmetic representing functions on 1000 log-spaced points of
/// `[1e−3, 1e3]`.
pub fn representing_betweenness(h: impl Fn(f64) -> f64, v: f64) -> Result<Betweenness> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::InvalidParameter(format!("weight {v} outside [0, 1]")));
    }
    let (lo, hi) = (1e-3f64.ln(), 1e3f64.ln());
    let mut worst = f64::NEG_INFINITY;
    let mut at = 1.0;
    for i in 0..BETWEENNESS_GRID {
        let x = (lo + (hi - lo) * i as f64 / (BETWEENNESS_GRID - 1) as f64).exp();
        let hx = h(x);
        if !hx.is_finite() {
            return Err(Error::NonFinite(format!("representing function at x = {x}")));
        }
        let lower = x / (v + (1.0 - v) * x);
        let upper = (1.0 - v) + v * x;
        let excursion = (lower - hx).max(hx - upper);
        if excursion > worst {
            worst = excursion;
            at = x;
        }
    }
    Ok(Betweenness {
        ok: worst <= 1e-12,
        worst_violation: worst,
        at,
    })
}
