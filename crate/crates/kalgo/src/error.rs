//! Parameter validation errors.

use thiserror::Error;

/// Rejected construction parameters for filters and the noise injector.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("matrix size must be an even integer >= 2, got {0}")]
    MatrixSize(u32),
    #[error("noise density must be within [0, 1], got {0}")]
    Density(f64),
    #[error("salt fraction must be within [0, 1], got {0}")]
    SaltFraction(f64),
}
