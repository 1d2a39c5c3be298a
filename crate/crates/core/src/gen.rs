//! Seeded generators for the random instances the checks run on.
//!
//! Every draw is a pure function of `(n, parameters, seed, stream)`: the seed
//! value keys a ChaCha generator and the stream index selects an independent
//! ChaCha stream, so trials can be evaluated in any order.

use nalgebra::{Complex, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermitian::{CMatrix, HermitianMatrix};
use crate::Hermitian;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub value: u64,
    pub stream: u64,
}

impl Seed {
    pub fn new(value: u64) -> Self {
        Self { value, stream: 0 }
    }

    pub fn with_stream(value: u64, stream: u64) -> Self {
        Self { value, stream }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.value);
        rng.set_stream(self.stream);
        rng
    }
}

/// Deterministic 64-bit mixing of several keys into one stream index.
pub fn stream_index(keys: &[u64]) -> u64 {
    keys.iter().fold(0x9E37_79B9_7F4A_7C15u64, |acc, &k| splitmix(acc ^ splitmix(k)))
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralInterval {
    pub lo: f64,
    pub hi: f64,
}

impl SpectralInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "spectral interval needs 0 < lo ≤ hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }
}

fn complex_gaussian(rng: &mut ChaCha8Rng) -> Complex<f64> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn random_unitary_with(n: usize, rng: &mut ChaCha8Rng) -> Result<CMatrix<f64>> {
    if n == 0 {
        return Err(Error::InvalidParameter("unitary dimension must be positive".into()));
    }
    let z = CMatrix::from_fn(n, n, |_, _| complex_gaussian(rng));
    let qr = z.qr();
    let mut q = qr.q();
    let r = qr.r();
    // Haar correction: make diag(R) positive real
    for j in 0..n {
        let d = r[(j, j)];
        let norm = d.norm();
        let phase = if norm > 0.0 { d / norm } else { Complex::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    Ok(q)
}

/// Haar-distributed unitary.
pub fn random_unitary(n: usize, seed: Seed) -> Result<CMatrix<f64>> {
    random_unitary_with(n, &mut seed.rng())
}

pub fn random_pd_with(n: usize, interval: SpectralInterval, rng: &mut ChaCha8Rng) -> Result<Hermitian> {
    let SpectralInterval { lo, hi } = SpectralInterval::new(interval.lo, interval.hi)?;
    if n == 0 {
        return Err(Error::InvalidParameter("dimension must be positive".into()));
    }
    let mut spectrum: Vec<f64> = (0..n).map(|_| rng.random_range(lo..=hi)).collect();
    if n >= 2 {
        spectrum[0] = lo;
        spectrum[1] = hi;
    }
    if lo == hi || n == 1 {
        return Ok(HermitianMatrix::diag(&spectrum));
    }
    let u = random_unitary_with(n, rng)?;
    HermitianMatrix::diag(&spectrum).congruence(&u.adjoint())
}

/// Positive definite matrix with spectrum in `[lo, hi]`, both endpoints
/// attained when `n ≥ 2`, conjugated by a Haar unitary.
pub fn random_pd(n: usize, interval: SpectralInterval, seed: Seed) -> Result<Hermitian> {
    random_pd_with(n, interval, &mut seed.rng())
}

/// Pair with `sA ≤ B ≤ tA`, built as `B = A^{1/2} C A^{1/2}` with
/// `spec(C) ⊂ [s, t]`.
pub fn sandwich_pair(n: usize, s: f64, t: f64, seed: Seed) -> Result<(Hermitian, Hermitian)> {
    let ratio = SpectralInterval::new(s, t)?;
    let mut rng = seed.rng();
    let a = random_pd_with(n, SpectralInterval { lo: 0.5, hi: 2.0 }, &mut rng)?;
    let c = random_pd_with(n, ratio, &mut rng)?;
    let b = c.sandwich_by(&a.sqrt()?)?;
    Ok((a, b))
}

/// Spectral layout `low_min ≤ spec(X) ≤ low_max < high_min ≤ spec(Y) ≤ high_max`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderedBounds {
    pub low_min: f64,
    pub low_max: f64,
    pub high_min: f64,
    pub high_max: f64,
}

impl OrderedBounds {
    pub fn new(low_min: f64, low_max: f64, high_min: f64, high_max: f64) -> Result<Self> {
        let b = Self {
            low_min,
            low_max,
            high_min,
            high_max,
        };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.low_min > 0.0
            && self.low_min <= self.low_max
            && self.low_max < self.high_min
            && self.high_min <= self.high_max
            && self.high_max.is_finite();
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "ordered bounds need 0 < {} ≤ {} < {} ≤ {}",
                self.low_min, self.low_max, self.high_min, self.high_max
            )));
        }
        Ok(())
    }

    pub fn low(&self) -> SpectralInterval {
        SpectralInterval {
            lo: self.low_min,
            hi: self.low_max,
        }
    }

    pub fn high(&self) -> SpectralInterval {
        SpectralInterval {
            lo: self.high_min,
            hi: self.high_max,
        }
    }
}

/// `(A, B)` with `A` in the low interval and `B` in the high one.
pub fn ordered_pair(n: usize, bounds: OrderedBounds, seed: Seed) -> Result<(Hermitian, Hermitian)> {
    bounds.validate()?;
    let mut rng = seed.rng();
    let a = random_pd_with(n, bounds.low(), &mut rng)?;
    let b = random_pd_with(n, bounds.high(), &mut rng)?;
    Ok((a, b))
}

pub fn random_unit_vector_with(n: usize, rng: &mut ChaCha8Rng) -> Result<DVector<Complex<f64>>> {
    if n == 0 {
        return Err(Error::InvalidParameter("vector dimension must be positive".into()));
    }
    loop {
        let h = DVector::from_fn(n, |_, _| complex_gaussian(rng));
        let norm = h.norm();
        if norm > 1e-300 {
            return Ok(h.unscale(norm));
        }
    }
}

/// Uniform draw from the complex unit sphere.
pub fn random_unit_vector(n: usize, seed: Seed) -> Result<DVector<Complex<f64>>> {
    random_unit_vector_with(n, &mut seed.rng())
}
