//! Tsallis relative operator entropy and its two-sided bounds on pairs with
//! separated spectra.

use serde::{Deserialize, Serialize};

use crate::constants::{arith, geom, harm};
use crate::error::{Error, Result};
use crate::gen::OrderedBounds;
use crate::hermitian::HermitianMatrix;
use crate::means::{perspective, weighted_mean, MeanDescriptor};
use crate::scalar::Real;

/// `T_v(A|B) = (A♯_vB − A)/v` for `v ∈ (0, 1]`.
///
/// Also evaluates `A^{1/2} ln_v(A^{-1/2}BA^{-1/2}) A^{1/2}` and fails if the
/// two routes disagree by more than `1e−10` relative to the operands' scale.
pub fn tsallis<T: Real>(a: &HermitianMatrix<T>, b: &HermitianMatrix<T>, v: T) -> Result<HermitianMatrix<T>> {
    if !(v > T::zero() && v <= T::one()) {
        return Err(Error::InvalidParameter(format!("Tsallis weight {v} outside (0, 1]")));
    }
    let via_mean = weighted_mean(&MeanDescriptor::geometric(v.to_f64()), a, b)?
        .sub(a)?
        .scale(v.recip());
    let via_log = perspective(a, b, |x| (x.powf(v) - T::one()) / v)?;
    let scale = T::one().max(a.norm2() + b.norm2()).to_f64() / v.to_f64();
    let gap = via_mean.max_abs_diff(&via_log);
    let allowed = if T::DEFAULT_TOL < 1e-6 { 1e-10 } else { T::DEFAULT_TOL };
    if gap > allowed * scale {
        return Err(Error::SelfCheck(format!(
            "Tsallis entropy routes differ by {gap:e}"
        )));
    }
    Ok(via_mean)
}

/// Which operand carries the low spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectralCase {
    /// `spec(A)` low, `spec(B)` high.
    LowHigh,
    /// `spec(B)` low, `spec(A)` high.
    HighLow,
}

#[derive(Clone, Debug)]
pub struct EntropyBounds<T: Real> {
    pub nabla_lo: HermitianMatrix<T>,
    pub nabla_hi: HermitianMatrix<T>,
    pub harm_lo: HermitianMatrix<T>,
    pub harm_hi: HermitianMatrix<T>,
}

/// Scalar pairs `(a, b)` feeding the bound constants: the outer pair uses
/// the extreme bounds, the inner pair the bounds adjacent to the gap, each
/// ordered as (bound on A, bound on B).
pub(crate) fn scalar_pairs<T: Real>(case: SpectralCase, bounds: &OrderedBounds) -> ((T, T), (T, T)) {
    let lo_min = T::lit(bounds.low_min);
    let lo_max = T::lit(bounds.low_max);
    let hi_min = T::lit(bounds.high_min);
    let hi_max = T::lit(bounds.high_max);
    match case {
        SpectralCase::LowHigh => ((lo_min, hi_max), (lo_max, hi_min)),
        SpectralCase::HighLow => ((hi_max, lo_min), (hi_min, lo_max)),
    }
}

fn spectrum_within<T: Real>(x: &HermitianMatrix<T>, lo: f64, hi: f64, name: &str) -> Result<()> {
    let w = x.eigenvalues();
    let (min, max) = (w[0].to_f64(), w[w.len() - 1].to_f64());
    let slack = 1e-10 * hi.max(1.0);
    if min < lo - slack || max > hi + slack {
        return Err(Error::Precondition(format!(
            "spectrum of {name} is [{min}, {max}], outside [{lo}, {hi}]"
        )));
    }
    Ok(())
}

/// Checks the separated-spectra layout for the given case.
pub fn check_ordered<T: Real>(
    case: SpectralCase,
    bounds: &OrderedBounds,
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Result<()> {
    bounds.validate()?;
    let (low, high) = match case {
        SpectralCase::LowHigh => ((a, "A"), (b, "B")),
        SpectralCase::HighLow => ((b, "B"), (a, "A")),
    };
    spectrum_within(low.0, bounds.low_min, bounds.low_max, low.1)?;
    spectrum_within(high.0, bounds.high_min, bounds.high_max, high.1)
}

/// `(c_♯ X − c A) / (v c)`.
fn bound<T: Real>(
    sharp: T,
    denom: T,
    x: &HermitianMatrix<T>,
    a: &HermitianMatrix<T>,
    v: T,
) -> Result<HermitianMatrix<T>> {
    x.combine(sharp / (v * denom), a, -(v.recip()))
}

/// Upper and lower bounds on `T_v(A|B)` from the reverse mean inequalities on
/// separated spectra.
///
/// The harmonic family uses the inner mean `A!_vB`, which is what the
/// functional-calculus argument produces; [`printed_harm_bounds`] keeps the
/// `A∇_vB` variant for comparison.
pub fn c8_bounds<T: Real>(
    case: SpectralCase,
    bounds: &OrderedBounds,
    v: T,
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Result<EntropyBounds<T>> {
    if !(v > T::zero() && v <= T::one()) {
        return Err(Error::InvalidParameter(format!("Tsallis weight {v} outside (0, 1]")));
    }
    check_ordered(case, bounds, a, b)?;
    let ((oa, ob), (ia, ib)) = scalar_pairs::<T>(case, bounds);
    let vf = v.to_f64();
    let nabla = weighted_mean(&MeanDescriptor::arithmetic(vf), a, b)?;
    let harmonic = weighted_mean(&MeanDescriptor::harmonic(vf), a, b)?;
    Ok(EntropyBounds {
        nabla_lo: bound(geom(v, oa, ob), arith(v, oa, ob), &nabla, a, v)?,
        nabla_hi: bound(geom(v, ia, ib), arith(v, ia, ib), &nabla, a, v)?,
        harm_lo: bound(geom(v, ia, ib), harm(v, ia, ib), &harmonic, a, v)?,
        harm_hi: bound(geom(v, oa, ob), harm(v, oa, ob), &harmonic, a, v)?,
    })
}

/// The harmonic-family bounds with `A∇_vB` as the inner mean, as printed.
/// Returns `(lower, upper)`; the lower one is not a valid bound in general.
pub fn printed_harm_bounds<T: Real>(
    case: SpectralCase,
    bounds: &OrderedBounds,
    v: T,
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Result<(HermitianMatrix<T>, HermitianMatrix<T>)> {
    if !(v > T::zero() && v <= T::one()) {
        return Err(Error::InvalidParameter(format!("Tsallis weight {v} outside (0, 1]")));
    }
    check_ordered(case, bounds, a, b)?;
    let ((oa, ob), (ia, ib)) = scalar_pairs::<T>(case, bounds);
    let nabla = weighted_mean(&MeanDescriptor::arithmetic(v.to_f64()), a, b)?;
    Ok((
        bound(geom(v, ia, ib), harm(v, ia, ib), &nabla, a, v)?,
        bound(geom(v, oa, ob), harm(v, oa, ob), &nabla, a, v)?,
    ))
}
