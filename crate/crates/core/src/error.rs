use thiserror::Error;

/// Errors raised while validating inputs or assembling Bloch-space data.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("Hilbert space dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("matrix has non-finite entries")]
    NonFinite,

    #[error("matrix is not Hermitian: residual {residual:.3e} exceeds tolerance {tol:.0e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("coordinate vector must have length {full} (full) or {reduced} (reduced), got {found}")]
    BadCoordinateLength {
        full: usize,
        reduced: usize,
        found: usize,
    },

    #[error("state is not positive semidefinite: min eigenvalue {min_eig:.3e}")]
    UnphysicalState { min_eig: f64 },

    #[error("time grid must be finite, start at 0 and increase strictly")]
    BadTimeGrid,

    #[error("trajectories are defined on different time grids")]
    GridMismatch,

    #[error("no witness amplitude α ≥ {min_alpha:.0e} admits physical states in any growth direction")]
    WitnessSearchFailed { min_alpha: f64 },

    #[error("invalid survey configuration: {0}")]
    BadSurveyConfig(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
