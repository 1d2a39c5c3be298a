use std::fmt::{Debug, Display};

use nalgebra::RealField;

/// Floating-point scalar the matrix layer is generic over.
///
/// The associated tolerances are expressed in units of the scalar's own
/// precision; the `f64` values are the reference ones used by the check suite.
pub trait Real: RealField + Copy + Debug + Display + Send + Sync + 'static {
    /// Default pass tolerance on a normalized Loewner margin.
    const DEFAULT_TOL: f64;
    /// Relative entrywise tolerance for Hermitian symmetry.
    const HERMITIAN_TOL: f64;
    /// Relative floor below which an eigenvalue counts as non-positive.
    const PD_FLOOR: f64;

    fn lit(x: f64) -> Self {
        nalgebra::convert(x)
    }

    fn to_f64(self) -> f64;
}

impl Real for f64 {
    const DEFAULT_TOL: f64 = 1e-9;
    const HERMITIAN_TOL: f64 = 1e-12;
    const PD_FLOOR: f64 = 1e-12;

    fn to_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    const DEFAULT_TOL: f64 = 1e-4;
    const HERMITIAN_TOL: f64 = 1e-5;
    const PD_FLOOR: f64 = 1e-6;

    fn to_f64(self) -> f64 {
        self as f64
    }
}
