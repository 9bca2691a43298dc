//! Error type shared across the crate.

use num::complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, CoreError>;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("root finding did not converge within {iterations} iterations")]
    Convergence {
        iterations: usize,
        /// Best iterate found, for diagnostics.
        best: Vec<Complex64>,
    },

    #[error("matrix is not a complex structure: J^2 != -I")]
    NotComplexStructure,

    #[error("subspace does not split the complexification: W and conj(W) overlap")]
    Decomposition,

    #[error("frame brackets leave the span of v and w: {0}")]
    NotSubalgebra(String),

    #[error("invalid lattice data: {0}")]
    InvalidSpec(String),

    #[error("classification needs a verified lattice: {0}")]
    Classification(String),

    #[error("parse error: {0}")]
    Parse(String),
}
