//! Scalar constants and auxiliary functions behind the reverse mean
//! inequalities.
//!
//! Everything here is a pure scalar function. The interval constants `ξ`, `ψ`
//! and `α` are endpoint maxima of functions that equal 1 at `x = 1` and are
//! monotone on either side of it, so their maxima over `[s, t]` sit at `s` or
//! `t`; the attaining endpoint is recorded because sharpness probes need it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Auxiliary scalar functions of `x > 0` at weight `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AuxFn {
    /// `((1−v) + v x) / x^v`, the arithmetic-over-geometric ratio.
    F,
    /// `x^v ((1−v) + v/x)`, the geometric-over-harmonic ratio.
    G,
    /// `(1−v+vx)(1−v+v/x)`, the arithmetic-over-harmonic ratio.
    H,
    /// `x^v / ((1−v) + v x)`.
    FHat,
    /// `f(x) − f(1/x)`.
    FReflect,
    /// `g(x) − g(1/x)`.
    GReflect,
}

pub fn f_ratio<T: Real>(v: T, x: T) -> T {
    ((T::one() - v) + v * x) / x.powf(v)
}

pub fn g_ratio<T: Real>(v: T, x: T) -> T {
    x.powf(v) * ((T::one() - v) + v / x)
}

pub fn h_ratio<T: Real>(v: T, x: T) -> T {
    let one = T::one();
    (one - v + v * x) * (one - v + v / x)
}

pub fn f_hat<T: Real>(v: T, x: T) -> T {
    x.powf(v) / ((T::one() - v) + v * x)
}

pub fn aux_scalar<T: Real>(name: AuxFn, v: T, x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::InvalidParameter(format!("x = {x} must be positive")));
    }
    Ok(match name {
        AuxFn::F => f_ratio(v, x),
        AuxFn::G => g_ratio(v, x),
        AuxFn::H => h_ratio(v, x),
        AuxFn::FHat => f_hat(v, x),
        AuxFn::FReflect => f_ratio(v, x) - f_ratio(v, x.recip()),
        AuxFn::GReflect => g_ratio(v, x) - g_ratio(v, x.recip()),
    })
}

/// Closed-form derivative of `f_v`: `v(1−v)(x−1)x^{−v−1}`.
pub fn f_ratio_derivative<T: Real>(v: T, x: T) -> T {
    v * (T::one() - v) * (x - T::one()) * x.powf(-v - T::one())
}

/// Closed-form derivative of `f_v(x) − f_v(1/x)`.
pub fn f_reflect_derivative<T: Real>(v: T, x: T) -> T {
    let one = T::one();
    v * (one - v) * (x - one) * (one - x.powf(T::lit(2.0) * v - one)) / x.powf(v + one)
}

/// Closed-form derivative of `g_v(x) − g_v(1/x)`.
pub fn g_reflect_derivative<T: Real>(v: T, x: T) -> T {
    let one = T::one();
    v * (one - v) * (x - one) * (x.powf(T::lit(2.0) * v - one) - one) / x.powf(v + one)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Endpoint {
    S,
    T,
}

impl Endpoint {
    pub fn pick<T: Copy>(self, s: T, t: T) -> T {
        match self {
            Endpoint::S => s,
            Endpoint::T => t,
        }
    }
}

/// `ξ`, `ψ` and `α` over a sandwich interval `[s, t]`, with the endpoint
/// attaining each maximum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstantBundle<T> {
    pub xi: T,
    pub psi: T,
    pub alpha: T,
    pub xi_at: Endpoint,
    pub psi_at: Endpoint,
    pub alpha_at: Endpoint,
}

fn endpoint_max<T: Real>(at_s: T, at_t: T) -> (T, Endpoint) {
    if at_s >= at_t {
        (at_s, Endpoint::S)
    } else {
        (at_t, Endpoint::T)
    }
}

pub fn endpoint_constants<T: Real>(s: T, t: T, v: T) -> Result<ConstantBundle<T>> {
    if !(s > T::zero()) || !(s <= t) || !t.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "sandwich interval needs 0 < s ≤ t, got s = {s}, t = {t}"
        )));
    }
    if !(v >= T::zero() && v <= T::one()) {
        return Err(Error::InvalidParameter(format!("weight {v} outside [0, 1]")));
    }
    let (xi, xi_at) = endpoint_max(f_ratio(v, s), f_ratio(v, t));
    let (psi, psi_at) = endpoint_max(g_ratio(v, s), g_ratio(v, t));
    let (alpha, alpha_at) = endpoint_max(h_ratio(v, s), h_ratio(v, t));
    Ok(ConstantBundle {
        xi,
        psi,
        alpha,
        xi_at,
        psi_at,
        alpha_at,
    })
}

/// A weight together with `min{v, 1−v}` and `max{v, 1−v}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Weight<T> {
    pub v: T,
    pub lambda: T,
    pub mu: T,
}

impl<T: Real> Weight<T> {
    pub fn new(v: T) -> Self {
        let w = T::one() - v;
        Self {
            v,
            lambda: v.min(w),
            mu: v.max(w),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarMeanKind {
    Arith,
    Geom,
    Harm,
}

pub fn scalar_mean<T: Real>(kind: ScalarMeanKind, v: T, a: T, b: T) -> Result<T> {
    if !(a > T::zero() && b > T::zero()) {
        return Err(Error::InvalidParameter(format!(
            "scalar mean needs positive arguments, got {a}, {b}"
        )));
    }
    Ok(scalar_mean_unchecked(kind, v, a, b))
}

pub(crate) fn scalar_mean_unchecked<T: Real>(kind: ScalarMeanKind, v: T, a: T, b: T) -> T {
    let one = T::one();
    match kind {
        ScalarMeanKind::Arith => (one - v) * a + v * b,
        ScalarMeanKind::Geom => a.powf(one - v) * b.powf(v),
        ScalarMeanKind::Harm => ((one - v) / a + v / b).recip(),
    }
}

pub(crate) fn arith<T: Real>(v: T, a: T, b: T) -> T {
    scalar_mean_unchecked(ScalarMeanKind::Arith, v, a, b)
}

pub(crate) fn geom<T: Real>(v: T, a: T, b: T) -> T {
    scalar_mean_unchecked(ScalarMeanKind::Geom, v, a, b)
}

pub(crate) fn harm<T: Real>(v: T, a: T, b: T) -> T {
    scalar_mean_unchecked(ScalarMeanKind::Harm, v, a, b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalKind {
    Kantorovich,
    Specht,
}

/// Kantorovich constant `(t+1)² / (4t)`.
pub fn kantorovich<T: Real>(t: T) -> T {
    let one = T::one();
    (t + one) * (t + one) / (T::lit(4.0) * t)
}

/// Specht ratio `t^{1/(t−1)} / (e·ln t^{1/(t−1)})`, continuous at `t = 1`.
pub fn specht<T: Real>(t: T) -> T {
    let eps = t - T::one();
    if eps.abs() < T::lit(1e-6) {
        return T::one() + eps * eps / T::lit(8.0);
    }
    // u = ln t / (t − 1); S = e^u / (e u) = exp(u − 1 − ln u)
    let u = t.ln() / eps;
    (u - T::one() - u.ln()).exp()
}

pub fn classical_constant<T: Real>(kind: ClassicalKind, t: T) -> Result<T> {
    if !(t > T::zero()) {
        return Err(Error::InvalidParameter(format!("t = {t} must be positive")));
    }
    Ok(match kind {
        ClassicalKind::Kantorovich => kantorovich(t),
        ClassicalKind::Specht => specht(t),
    })
}

/// Constants for raising the `∇ ≤ c·♯` inequality under a positive map to a
/// power `p ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerConstants<T> {
    pub p: T,
    /// `((m+M)² / (4^{2/p} mM))^p`.
    pub c_lin: T,
    /// `(M^{p−1}+m^{p−1})² / (4 m^{p−1} M^{p−1}) · ((M+m)/(2√(mM)))^p`.
    pub c_fur: T,
    /// `min(c_lin, c_fur)`.
    pub eta: T,
}

pub fn power_constants<T: Real>(m: T, big_m: T, p: T) -> Result<PowerConstants<T>> {
    if !(p >= T::lit(2.0)) {
        return Err(Error::InvalidParameter(format!("power p = {p} must be at least 2")));
    }
    if !(m > T::zero() && m < big_m) {
        return Err(Error::InvalidParameter(format!("bounds need 0 < m < M, got {m}, {big_m}")));
    }
    let one = T::one();
    let four = T::lit(4.0);
    let sum = m + big_m;
    let c_lin = (sum * sum / (four.powf(T::lit(2.0) / p) * m * big_m)).powf(p);
    let lo = m.powf(p - one);
    let hi = big_m.powf(p - one);
    let c_fur = (hi + lo) * (hi + lo) / (four * lo * hi) * (sum / (T::lit(2.0) * (m * big_m).sqrt())).powf(p);
    Ok(PowerConstants {
        p,
        c_lin,
        c_fur,
        eta: c_lin.min(c_fur),
    })
}

/// Difference `c_lin − c_fur` as a function of the ratio `x = M/m ≥ 1`.
pub fn f_p_value<T: Real>(p: T, x: T) -> Result<T> {
    if !(p >= T::lit(2.0)) || !(x >= T::one()) {
        return Err(Error::InvalidParameter(format!(
            "need p ≥ 2 and x ≥ 1, got p = {p}, x = {x}"
        )));
    }
    let one = T::one();
    let four = T::lit(4.0);
    let lin = ((x + one) * (x + one) / (four.powf(T::lit(2.0) / p) * x)).powf(p);
    let xp = x.powf(p - one);
    let fur = (one + xp) * (one + xp) / (four * xp) * ((one + x) / (T::lit(2.0) * x.sqrt())).powf(p);
    Ok(lin - fur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn aux_examples() {
        for v in [0.0, 0.2, 0.7, 1.0] {
            assert_eq!(aux_scalar(AuxFn::F, v, 1.0).unwrap(), 1.0);
        }
        assert_relative_eq!(aux_scalar(AuxFn::F, 0.3, 2.0).unwrap(), 1.055928115263106, epsilon = 1e-14);
        assert_relative_eq!(aux_scalar(AuxFn::H, 0.3, 0.5).unwrap(), 1.105, epsilon = 1e-14);
        assert!(aux_scalar(AuxFn::G, 0.3, 0.0).is_err());
        assert!(aux_scalar(AuxFn::G, 0.3, -1.0).is_err());
    }

    #[test]
    fn endpoint_examples() {
        let unit = endpoint_constants(1.0, 1.0, 0.37).unwrap();
        assert_eq!((unit.xi, unit.psi, unit.alpha), (1.0, 1.0, 1.0));

        let (m, big_m) = (1.0, 4.0);
        let c = endpoint_constants(m / big_m, big_m / m, 0.5).unwrap();
        assert_relative_eq!(c.xi, 1.25, epsilon = 1e-15);
        assert_relative_eq!(c.psi, 1.25, epsilon = 1e-15);
        assert_relative_eq!(c.xi * c.psi, 25.0 / 16.0, epsilon = 1e-14);

        let c = endpoint_constants(0.5, 2.0, 0.3).unwrap();
        assert_relative_eq!(c.xi, 1.055928115263106, epsilon = 1e-14);
        assert_eq!(c.xi_at, Endpoint::T);
        assert_relative_eq!(c.psi, 1.0559281152631061, epsilon = 1e-14);
        assert_eq!(c.psi_at, Endpoint::S);
        assert_relative_eq!(c.alpha, 1.105, epsilon = 1e-14);
        assert!(c.alpha < c.xi * c.psi);
        assert_relative_eq!(c.xi * c.psi, 1.1149841846030955, epsilon = 1e-14);

        assert!(endpoint_constants(2.0, 1.0, 0.5).is_err());
        assert!(endpoint_constants(0.0, 1.0, 0.5).is_err());
        assert!(endpoint_constants(0.5, 1.0, 1.5).is_err());
    }

    #[test]
    fn scalar_mean_examples() {
        assert_relative_eq!(scalar_mean(ScalarMeanKind::Geom, 0.5, 1.0, 4.0).unwrap(), 2.0, epsilon = 1e-15);
        assert_relative_eq!(scalar_mean(ScalarMeanKind::Harm, 0.5, 1.0, 4.0).unwrap(), 1.6, epsilon = 1e-15);
        assert_eq!(scalar_mean(ScalarMeanKind::Arith, 0.25, 2.0, 2.0).unwrap(), 2.0);
        assert!(scalar_mean(ScalarMeanKind::Arith, 0.25, 0.0, 2.0).is_err());
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_constant(ClassicalKind::Specht, 1.0).unwrap(), 1.0);
        assert_relative_eq!(classical_constant(ClassicalKind::Kantorovich, 4.0).unwrap(), 1.5625);
        assert_relative_eq!(
            classical_constant(ClassicalKind::Specht, 4.0).unwrap(),
            1.2637407212158114,
            epsilon = 1e-14
        );
        assert!(classical_constant(ClassicalKind::Specht, 0.0).is_err());
        // continuity across the expansion switch
        let inside = specht::<f64>(1.0 + 0.9e-6);
        let outside = specht::<f64>(1.0 + 1.1e-6);
        assert!((inside - outside).abs() < 1e-12);
        assert!((specht::<f64>(0.25) - specht(4.0)).abs() < 1e-14);
    }

    #[test]
    fn power_examples() {
        for x in [1.0, 4.0, 10.0] {
            assert!(f_p_value::<f64>(2.0, x).unwrap().abs() < 1e-10);
        }
        assert!(f_p_value(2.5, 7.0).unwrap() > 0.0);
        assert!(f_p_value(5.0, 8.0).unwrap() < 0.0);
        let pc = power_constants(1.0, 4.0, 2.0).unwrap();
        assert_relative_eq!(pc.c_lin, pc.c_fur, epsilon = 1e-12);
        assert_relative_eq!(pc.c_lin, (25.0f64 / 16.0).powi(2), epsilon = 1e-12);
        let pc = power_constants(2.0, 14.0, 2.5).unwrap();
        assert_eq!(pc.eta, pc.c_fur);
        assert!(power_constants(1.0, 4.0, 1.5).is_err());
        assert!(power_constants(4.0, 4.0, 2.0).is_err());
    }

    #[test]
    fn weight_split() {
        let w = Weight::new(0.3);
        assert_relative_eq!(w.lambda, 0.3);
        assert_relative_eq!(w.mu, 0.7);
        assert_relative_eq!(w.lambda + w.mu, 1.0);
    }

    #[test]
    fn single_precision_constants() {
        let c = endpoint_constants(0.5f32, 2.0, 0.3).unwrap();
        assert!((c.xi - 1.055928).abs() < 1e-5);
    }
}
