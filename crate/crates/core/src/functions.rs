//! Scalar functions with declared operator classes.
//!
//! Operator monotonicity and concavity cannot be read off pointwise values, so
//! the classes below are declarations (all classically known) that
//! [`verify_function_class`] tries to falsify on random matrix pairs.

use std::fmt;

use nalgebra::{Complex, DVector};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gen::{random_pd_with, random_unit_vector_with, Seed, SpectralInterval};
use crate::hermitian::{loewner_margin, HermitianMatrix};
use crate::scalar::Real;
use crate::Hermitian;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionClass {
    Monotone,
    MonotoneDecreasing,
    Convex,
    Concave,
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FunctionClass::Monotone => "monotone",
            FunctionClass::MonotoneDecreasing => "monotone_decreasing",
            FunctionClass::Convex => "convex",
            FunctionClass::Concave => "concave",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ScalarFn {
    /// `x^r`.
    Power(f64),
    /// `x / (1 + x)`.
    Saturating,
    /// `log(1 + x)`.
    Log1p,
    /// `1 / (1 + x)`.
    InvOnePlus,
}

impl ScalarFn {
    pub fn eval<T: Real>(&self, x: T) -> T {
        let one = T::one();
        match *self {
            ScalarFn::Power(r) if r == 1.0 => x,
            ScalarFn::Power(r) if r == 2.0 => x * x,
            ScalarFn::Power(r) if r == -1.0 => x.recip(),
            ScalarFn::Power(r) => x.powf(T::lit(r)),
            ScalarFn::Saturating => x / (one + x),
            ScalarFn::Log1p => x.ln_1p(),
            ScalarFn::InvOnePlus => (one + x).recip(),
        }
    }

    /// Spectral floor for the functional calculus; `None` means unrestricted.
    pub fn domain_floor(&self) -> Option<f64> {
        match *self {
            ScalarFn::Power(r) if r == 1.0 || r == 2.0 => None,
            ScalarFn::Power(_) => Some(0.0),
            ScalarFn::Saturating | ScalarFn::Log1p | ScalarFn::InvOnePlus => Some(-1.0),
        }
    }
}

/// A registered scalar function and its declared operator classes.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionDescriptor {
    pub label: &'static str,
    pub func: ScalarFn,
    pub classes: Vec<FunctionClass>,
    pub nonnegative: bool,
}

impl FunctionDescriptor {
    pub fn has_class(&self, class: FunctionClass) -> bool {
        self.classes.contains(&class)
    }

    pub fn eval_scalar<T: Real>(&self, x: T) -> T {
        self.func.eval(x)
    }
}

fn entry(label: &'static str, func: ScalarFn, classes: &[FunctionClass], nonnegative: bool) -> FunctionDescriptor {
    FunctionDescriptor {
        label,
        func,
        classes: classes.to_vec(),
        nonnegative,
    }
}

/// The built-in registry, in a fixed order.
pub fn registry() -> Vec<FunctionDescriptor> {
    use FunctionClass::*;
    let inc = [Monotone, Concave];
    vec![
        entry("x^0.25", ScalarFn::Power(0.25), &inc, true),
        entry("x^0.5", ScalarFn::Power(0.5), &inc, true),
        entry("x^0.75", ScalarFn::Power(0.75), &inc, true),
        entry("x", ScalarFn::Power(1.0), &inc, true),
        entry("x/(1+x)", ScalarFn::Saturating, &inc, true),
        entry("log(1+x)", ScalarFn::Log1p, &inc, true),
        entry("x^-0.25", ScalarFn::Power(-0.25), &[MonotoneDecreasing], true),
        entry("x^-0.5", ScalarFn::Power(-0.5), &[MonotoneDecreasing], true),
        entry("x^-1", ScalarFn::Power(-1.0), &[MonotoneDecreasing, Convex], true),
        entry("1/(1+x)", ScalarFn::InvOnePlus, &[MonotoneDecreasing], true),
        entry("x^2", ScalarFn::Power(2.0), &[Convex], true),
    ]
}

pub fn lookup(label: &str) -> Result<FunctionDescriptor> {
    registry()
        .into_iter()
        .find(|d| d.label == label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

/// Registry members declaring `class`, in registry order.
pub fn with_class(class: FunctionClass) -> Vec<FunctionDescriptor> {
    registry().into_iter().filter(|d| d.has_class(class)).collect()
}

/// Functional calculus `f(A)`.
pub fn eval_fn<T: Real>(d: &FunctionDescriptor, a: &HermitianMatrix<T>) -> Result<HermitianMatrix<T>> {
    a.apply_fn(|x| d.func.eval(x), d.func.domain_floor().map(T::lit))
}

/// Outcome of a randomized falsification attempt.
#[derive(Clone, Debug)]
pub struct ClassVerification {
    pub consistent: bool,
    pub worst_margin: f64,
    /// The pair attaining the worst margin when the declaration was falsified.
    pub witness: Option<(Hermitian, Hermitian)>,
}

const WIDE: SpectralInterval = SpectralInterval { lo: 0.05, hi: 20.0 };

/// Ordered pair `A ≤ B`: `B = A + c·hh*` with a random unit `h`, which keeps
/// the perturbation rank one and the inequality tight.
fn ordered_pd_pair(n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Result<(Hermitian, Hermitian)> {
    let a = random_pd_with(n, WIDE, rng)?;
    let h: DVector<Complex<f64>> = random_unit_vector_with(n, rng)?;
    let c: f64 = rng.random_range(0.1..10.0);
    let bump = HermitianMatrix::new(&h * h.adjoint() * Complex::new(c, 0.0))?;
    Ok((a.clone(), a.add(&bump)?))
}

/// Tries to falsify `class` for `d` over `trials` random instances.
///
/// `class` need not be declared by `d`, which is how known non-members such
/// as `x²` are shown to fail. The pair attaining the worst margin is kept.
pub fn verify_function_class(
    d: &FunctionDescriptor,
    class: FunctionClass,
    n: usize,
    trials: usize,
    seed: Seed,
) -> Result<ClassVerification> {
    let tol = f64::DEFAULT_TOL;
    let mut rng = seed.rng();
    let mut worst = f64::INFINITY;
    let mut worst_pair = None;
    for _ in 0..trials.max(1) {
        let margin;
        let pair;
        match class {
            FunctionClass::Monotone | FunctionClass::MonotoneDecreasing => {
                let (a, b) = ordered_pd_pair(n, &mut rng)?;
                let fa = eval_fn(d, &a)?;
                let fb = eval_fn(d, &b)?;
                margin = if class == FunctionClass::Monotone {
                    loewner_margin(&fa, &fb)?
                } else {
                    loewner_margin(&fb, &fa)?
                };
                pair = (a, b);
            }
            FunctionClass::Convex | FunctionClass::Concave => {
                let a = random_pd_with(n, WIDE, &mut rng)?;
                let b = random_pd_with(n, WIDE, &mut rng)?;
                let mid = a.combine(0.5, &b, 0.5)?;
                let avg = eval_fn(d, &a)?.combine(0.5, &eval_fn(d, &b)?, 0.5)?;
                let f_mid = eval_fn(d, &mid)?;
                margin = if class == FunctionClass::Concave {
                    loewner_margin(&avg, &f_mid)?
                } else {
                    loewner_margin(&f_mid, &avg)?
                };
                pair = (a, b);
            }
        }
        if margin < worst {
            worst = margin;
            worst_pair = Some(pair);
        }
    }
    let consistent = worst >= -tol;
    Ok(ClassVerification {
        consistent,
        worst_margin: worst,
        witness: if consistent { None } else { worst_pair },
    })
}
