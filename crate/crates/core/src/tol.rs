//! Numeric tolerances used across the crate.
//!
//! Exact rational arithmetic carries most of the load, so these only govern
//! the floating-point edges: root finding, eigenvalue tests, and residual
//! checks after solving over the reals. Each constant documents the scale it
//! compares against so callers can judge whether the default fits their data.

/// General-purpose tolerance for floating-point comparisons and the default
/// for the command line tools. Relative to quantities of order one.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Maximum residual accepted when recovering integer coordinates from a
/// floating-point solve. Looser than [`DEFAULT_TOL`] because the solve chains
/// several operations on lattice generators of moderate size.
pub const INTEGER_RESIDUAL_TOL: f64 = 1e-6;

/// Tolerance for comparing computed eigenvalues and polynomial roots, and for
/// deciding whether a root is real (imaginary part below this bound).
pub const EIGEN_TOL: f64 = 1e-8;

/// An eigenvalue of a symmetric matrix below this magnitude counts as zero
/// when reading off a metric signature.
pub const SIGNATURE_EIGENVALUE_TOL: f64 = 1e-10;

/// Condition number bound above which an eigenvector matrix is treated as
/// numerically singular in the diagonalizability cross-check.
pub const CONDITION_LIMIT: f64 = 1e8;
