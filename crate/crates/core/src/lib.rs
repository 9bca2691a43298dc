//! Computational toolkit for three-dimensional complex solvable Lie groups
//! and their compact quotients.
//!
//! The crate models the three isomorphism classes of simply connected
//! three-dimensional complex solvable Lie groups (abelian, nilpotent,
//! non-nilpotent), checks the lattice constructions that make their quotients
//! compact, and computes the invariants that tell the resulting solvmanifolds
//! apart: first Betti numbers, integrability of almost complex structures,
//! bracket normal forms of invariant frames, and existence of pseudo-Kahler
//! structures.
//!
//! Arithmetic is exact (arbitrary-precision rationals and Gaussian rationals)
//! wherever the underlying data is rational; floating point appears only for
//! eigenvalues, polynomial roots, and residual checks, with tolerances
//! centralized in [`tol`].

pub mod algebra;
pub mod cohomology;
pub mod complex_structure;
pub mod error;
pub mod frames;
pub mod kernel;
pub mod lattice;
pub mod pseudokahler;
pub mod tol;

pub use error::{CoreError, Result};
pub use kernel::{GaussianRational, IntPolynomial, Mat, Rational};
