use thiserror::Error;

/// Errors produced by the matrix layer, the mean and map constructors, and the
/// check registry.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian: symmetry defect {defect:e} exceeds tolerance {tol:e}")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("domain violation: eigenvalue {eigenvalue:e} is not above floor {floor:e}")]
    DomainViolation { eigenvalue: f64, floor: f64 },

    #[error("not positive definite: minimum eigenvalue {min_eigenvalue:e}")]
    NotPositiveDefinite { min_eigenvalue: f64 },

    #[error("harmonic mean undefined at weight {v}: combined inverse has minimum eigenvalue {min_eigenvalue:e}")]
    HarmonicNotPositive { v: f64, min_eigenvalue: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("self-check failed: {0}")]
    SelfCheck(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
