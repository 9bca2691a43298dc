//! Exact and floating-point linear algebra primitives.
//!
//! Everything downstream builds on four pieces: a dense generic matrix
//! ([`Mat`]), arbitrary-precision rational and Gaussian rational scalars,
//! integer polynomials with exact characteristic/minimal polynomial
//! computations, and a small set of numeric routines (LU, Jacobi eigenvalues,
//! Durand-Kerner roots) for the places where exact arithmetic is not
//! available.

pub mod linalg;
pub mod mat;
pub mod poly;
pub mod rational;
pub mod roots;

pub use linalg::{
    cond_1_f64, det_exact, det_f64, in_span, integer_recover, inverse_exact, inverse_f64,
    lu_solve_f64, max_abs, max_abs_c, nullspace_f64, rank_exact, rank_f64, solve_exact,
    solve_overdetermined_c64, span_equal, span_rank, symmetric_eigenvalues, FieldScalar,
};
pub use mat::{Mat, Scalar};
pub use poly::{char_poly, char_poly_f64, min_poly, min_poly_squarefree, poly_gcd, IntPolynomial};
pub use rational::{
    parse_rational, rat, rational_from_f64, rational_to_f64, GaussianRational, Rational,
};
pub use roots::{cluster_roots, poly_roots, poly_roots_f64};
