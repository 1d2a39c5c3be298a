//! Dense complex Hermitian matrices, their spectral calculus and the Loewner
//! order.

use nalgebra::{Complex, DMatrix, DVector, SymmetricEigen};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense complex matrix with entries of precision `T`.
pub type CMatrix<T> = DMatrix<Complex<T>>;

/// Eigendecomposition `A = V diag(values) V*` with ascending eigenvalues.
#[derive(Clone, Debug)]
pub struct Eigh<T: Real> {
    pub values: DVector<T>,
    pub vectors: CMatrix<T>,
}

impl<T: Real> Eigh<T> {
    /// Rebuilds `V diag(phi(w)) V*`.
    pub fn recompose(&self, phi: impl Fn(T) -> T) -> HermitianMatrix<T> {
        let n = self.values.len();
        let mut scaled = self.vectors.clone();
        for j in 0..n {
            let w = Complex::new(phi(self.values[j]), T::zero());
            for z in scaled.column_mut(j).iter_mut() {
                *z *= w;
            }
        }
        HermitianMatrix::symmetrized(&scaled * self.vectors.adjoint())
    }
}

/// A dense complex Hermitian matrix.
///
/// The constructor enforces Hermitian symmetry up to a relative tolerance and
/// then stores the exactly symmetrized part, so every value of this type is
/// Hermitian to the last bit.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix<T: Real> {
    data: CMatrix<T>,
}

fn modulus<T: Real>(z: Complex<T>) -> T {
    (z.re * z.re + z.im * z.im).sqrt()
}

/// Largest relative deviation from Hermitian symmetry, measured against the
/// largest absolute entry.
pub fn symmetry_defect<T: Real>(m: &CMatrix<T>) -> f64 {
    let scale = m.iter().map(|z| modulus(*z).to_f64()).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..=i {
            let d = modulus(m[(i, j)] - m[(j, i)].conj()).to_f64();
            worst = worst.max(d);
        }
    }
    worst / scale
}

/// Eigendecomposition of a general complex square matrix, rejecting inputs
/// whose symmetry defect exceeds the Hermitian tolerance.
pub fn eigh<T: Real>(m: &CMatrix<T>) -> Result<Eigh<T>> {
    Ok(HermitianMatrix::new(m.clone())?.eigh())
}

impl<T: Real> HermitianMatrix<T> {
    pub fn new(data: CMatrix<T>) -> Result<Self> {
        if data.nrows() != data.ncols() {
            return Err(Error::NotSquare {
                rows: data.nrows(),
                cols: data.ncols(),
            });
        }
        if data.nrows() == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("matrix entry".into()));
        }
        let defect = symmetry_defect(&data);
        if defect > T::HERMITIAN_TOL {
            return Err(Error::NotHermitian {
                defect,
                tol: T::HERMITIAN_TOL,
            });
        }
        Ok(Self::symmetrized(data))
    }

    /// `(M + M*)/2` without any tolerance check.
    pub(crate) fn symmetrized(m: CMatrix<T>) -> Self {
        let half = Complex::new(T::lit(0.5), T::zero());
        let data = (&m + m.adjoint()) * half;
        Self { data }
    }

    pub fn from_real(m: DMatrix<T>) -> Result<Self> {
        Self::new(m.map(|x| Complex::new(x, T::zero())))
    }

    /// Real symmetric matrix from row slices.
    pub fn from_rows(rows: &[&[T]]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare {
                rows: n,
                cols: rows.first().map_or(0, |r| r.len()),
            });
        }
        Self::from_real(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn diag(entries: &[T]) -> Self {
        let n = entries.len();
        assert!(n > 0, "diagonal matrix needs at least one entry");
        let data = CMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Complex::new(entries[i], T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        });
        Self { data }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn scalar(n: usize, c: T) -> Self {
        Self::diag(&vec![c; n])
    }

    pub fn zeros(n: usize) -> Self {
        Self::scalar(n, T::zero())
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn as_matrix(&self) -> &CMatrix<T> {
        &self.data
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.data
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex<T> {
        self.data[(i, j)]
    }

    /// Eigendecomposition with eigenvalues in ascending order.
    pub fn eigh(&self) -> Eigh<T> {
        let n = self.dim();
        if n == 1 {
            return Eigh {
                values: DVector::from_element(1, self.data[(0, 0)].re),
                vectors: CMatrix::identity(1, 1),
            };
        }
        let eig = SymmetricEigen::new(self.data.clone());
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            eig.eigenvalues[a]
                .partial_cmp(&eig.eigenvalues[b])
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let values = DVector::from_fn(n, |i, _| eig.eigenvalues[order[i]]);
        let vectors = CMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
        Eigh { values, vectors }
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Vec<T> {
        if self.dim() == 1 {
            return vec![self.data[(0, 0)].re];
        }
        let mut w: Vec<T> = self.data.clone().symmetric_eigenvalues().iter().copied().collect();
        w.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        w
    }

    pub fn min_eigenvalue(&self) -> T {
        self.eigenvalues()[0]
    }

    pub fn max_eigenvalue(&self) -> T {
        *self.eigenvalues().last().expect("non-empty spectrum")
    }

    /// Spectral norm, the largest absolute eigenvalue.
    pub fn norm2(&self) -> T {
        let w = self.eigenvalues();
        w[0].abs().max(w[w.len() - 1].abs())
    }

    /// Spectral calculus `V diag(phi(w)) V*`.
    ///
    /// With `domain_floor = Some(c)` every eigenvalue must exceed
    /// `c + PD_FLOOR * ‖A‖₂`; `None` leaves the spectrum unrestricted.
    pub fn apply_fn(&self, phi: impl Fn(T) -> T, domain_floor: Option<T>) -> Result<Self> {
        let eig = self.eigh();
        if let Some(floor) = domain_floor {
            let n = eig.values.len();
            let norm = eig.values[0].abs().max(eig.values[n - 1].abs());
            let threshold = floor + T::lit(T::PD_FLOOR) * norm;
            let lowest = eig.values[0];
            if lowest <= threshold {
                return Err(Error::DomainViolation {
                    eigenvalue: lowest.to_f64(),
                    floor: threshold.to_f64(),
                });
            }
        }
        let out = eig.recompose(phi);
        if out.data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("function value on spectrum".into()));
        }
        Ok(out)
    }

    /// Errors unless the matrix is positive definite beyond the relative floor.
    pub fn ensure_positive_definite(&self) -> Result<()> {
        let w = self.eigenvalues();
        let norm = w[0].abs().max(w[w.len() - 1].abs());
        if w[0] <= T::lit(T::PD_FLOOR) * norm {
            return Err(Error::NotPositiveDefinite {
                min_eigenvalue: w[0].to_f64(),
            });
        }
        Ok(())
    }

    pub fn powf(&self, r: T) -> Result<Self> {
        self.apply_fn(|x| x.powf(r), Some(T::zero()))
    }

    pub fn sqrt(&self) -> Result<Self> {
        self.apply_fn(|x| x.sqrt(), Some(T::zero()))
    }

    pub fn inverse(&self) -> Result<Self> {
        self.apply_fn(|x| x.recip(), Some(T::zero()))
    }

    /// `C* X C` for a (possibly rectangular) matrix `C`.
    pub fn congruence(&self, c: &CMatrix<T>) -> Result<Self> {
        if c.nrows() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: c.nrows(),
            });
        }
        Ok(Self::symmetrized(c.adjoint() * &self.data * c))
    }

    /// `C* X C` for a Hermitian `C`, the form used by the geometric mean.
    pub fn sandwich_by(&self, c: &HermitianMatrix<T>) -> Result<Self> {
        self.congruence(&c.data)
    }

    pub fn scale(&self, a: T) -> Self {
        Self {
            data: &self.data * Complex::new(a, T::zero()),
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            data: &self.data + &other.data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            data: &self.data - &other.data,
        })
    }

    /// `a·X + b·Y`.
    pub fn combine(&self, a: T, other: &Self, b: T) -> Result<Self> {
        self.check_dim(other)?;
        let ca = Complex::new(a, T::zero());
        let cb = Complex::new(b, T::zero());
        Ok(Self {
            data: &self.data * ca + &other.data * cb,
        })
    }

    /// `a·X + c·I`.
    pub fn shift(&self, a: T, c: T) -> Self {
        let mut data = &self.data * Complex::new(a, T::zero());
        for i in 0..self.dim() {
            data[(i, i)].re += c;
        }
        Self { data }
    }

    /// Real part of `⟨X h, h⟩`.
    pub fn quadratic_form(&self, h: &DVector<Complex<T>>) -> Result<T> {
        if h.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: h.len(),
            });
        }
        Ok(h.dotc(&(&self.data * h)).re)
    }

    /// Converts between precisions.
    pub fn cast<U: Real>(&self) -> HermitianMatrix<U> {
        HermitianMatrix {
            data: self
                .data
                .map(|z| Complex::new(U::lit(z.re.to_f64()), U::lit(z.im.to_f64()))),
        }
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| modulus(*a - *b).to_f64())
            .fold(0.0, f64::max)
    }
}

/// Signed, scale-normalized Loewner margin of `L ≤ R`:
/// `λ_min(R − L) / max(1, ‖R‖₂ + ‖L‖₂)`.
pub fn loewner_margin<T: Real>(l: &HermitianMatrix<T>, r: &HermitianMatrix<T>) -> Result<T> {
    let diff = r.sub(l)?;
    let normalizer = T::one().max(r.norm2() + l.norm2());
    Ok(diff.min_eigenvalue() / normalizer)
}

/// Scalar version of [`loewner_margin`] for `l ≤ r`.
pub fn scalar_margin<T: Real>(l: T, r: T) -> T {
    (r - l) / T::one().max(r.abs() + l.abs())
}

#[derive(Serialize, Deserialize)]
struct MatrixJson<T> {
    dim: usize,
    re: Vec<T>,
    im: Vec<T>,
}

impl<T: Real + Serialize> Serialize for HermitianMatrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.dim();
        let mut re = Vec::with_capacity(n * n);
        let mut im = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                re.push(self.data[(i, j)].re);
                im.push(self.data[(i, j)].im);
            }
        }
        MatrixJson { dim: n, re, im }.serialize(serializer)
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for HermitianMatrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MatrixJson::<T>::deserialize(deserializer)?;
        let n = raw.dim;
        if raw.re.len() != n * n || raw.im.len() != n * n {
            return Err(D::Error::custom(format!(
                "expected {} entries for dim {n}",
                n * n
            )));
        }
        let data = CMatrix::from_fn(n, n, |i, j| Complex::new(raw.re[i * n + j], raw.im[i * n + j]));
        HermitianMatrix::new(data).map_err(D::Error::custom)
    }
}
