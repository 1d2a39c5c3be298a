pub mod checks;
pub mod constants;
pub mod entropy;
pub mod error;
pub mod functions;
pub mod gen;
pub mod hermitian;
pub mod maps;
pub mod means;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};
pub use hermitian::{loewner_margin, HermitianMatrix};
pub use scalar::Real;

/// Double-precision Hermitian matrix, the precision the check suite runs at.
pub type Hermitian = HermitianMatrix<f64>;
/// Single-precision Hermitian matrix.
pub type Hermitian32 = HermitianMatrix<f32>;
