//! Pseudo-Kahler structures on the compact quotients.
//!
//! The candidate form lives in the global coordinate chart `(x, y, z)` of the
//! group, where it has constant coefficients and is therefore closed:
//!
//! ```text
//! omega = i dx ^ conj(dx) + dy ^ conj(dz) + conj(dy) ^ dz.
//! ```
//!
//! In the real basis `(X, X', Y, Y', Z, Z')` this is the skew matrix with
//! `omega(X, X') = omega(Y, Z) = omega(Y', Z') = 2`. It is compatible with
//! the standard complex structure and the associated metric has signature
//! `(4, 2)`, so a quotient inheriting it is pseudo-Kahler, never Kahler.
//!
//! Whether the form descends to a quotient is a translation question: pulling
//! back along translation by an element with `x`-part `lambda` multiplies the
//! `(y, z)` terms by `exp(2i Im lambda)`. The form descends exactly when that
//! factor is 1 for every lattice generator, which singles out the quotients
//! with first Betti number 3.

use crate::cohomology::{h1_report, H1Report};
use crate::complex_structure::AlmostComplexStructure;
use crate::error::{CoreError, Result};
use crate::kernel::{rat, rational_to_f64, symmetric_eigenvalues, Mat, Rational};
use crate::lattice::{x_parts, LatticeSpec, SolvmanifoldType};
use crate::tol::SIGNATURE_EIGENVALUE_TOL;
use num::complex::Complex64;
use num::Zero;
use serde::Serialize;

/// A 2-form with constant coefficients, stored as its skew-symmetric matrix
/// in the real basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantTwoForm {
    mat: Mat<Rational>,
}

impl ConstantTwoForm {
    /// Validates skew-symmetry.
    pub fn new(mat: Mat<Rational>) -> Result<Self> {
        if !mat.is_square() {
            return Err(CoreError::Dimension("2-form matrix must be square".into()));
        }
        let n = mat.rows();
        for i in 0..n {
            for j in 0..n {
                if mat[(i, j)] != -mat[(j, i)].clone() {
                    return Err(CoreError::InvalidSpec(
                        "2-form matrix must be skew-symmetric".into(),
                    ));
                }
            }
        }
        Ok(ConstantTwoForm { mat })
    }

    pub fn matrix(&self) -> &Mat<Rational> {
        &self.mat
    }

    /// Evaluates the form on a pair of vectors.
    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, ui) in u.iter().enumerate().take(self.mat.rows()) {
            for (j, vj) in v.iter().enumerate().take(self.mat.cols()) {
                acc += ui.clone() * self.mat[(i, j)].clone() * vj.clone();
            }
        }
        acc
    }
}

/// The standard form `i dx ^ conj(dx) + dy ^ conj(dz) + conj(dy) ^ dz` in the
/// real basis `(X, X', Y, Y', Z, Z')`.
pub fn omega_standard() -> ConstantTwoForm {
    let mut mat = Mat::<Rational>::zeros(6, 6);
    for (i, j) in [(0, 1), (2, 4), (3, 5)] {
        mat[(i, j)] = rat(2, 1);
        mat[(j, i)] = rat(-2, 1);
    }
    ConstantTwoForm { mat }
}

/// Whether `omega(J u, J v) = omega(u, v)` holds identically, checked exactly
/// as the matrix identity `J^T Omega J = Omega`.
pub fn compatible(omega: &ConstantTwoForm, j: &AlmostComplexStructure) -> bool {
    let jm = j.matrix();
    jm.transpose().matmul(omega.matrix()).matmul(jm) == *omega.matrix()
}

/// The symmetric matrix `g(u, v) = omega(u, J v)`, exact. Symmetry is the
/// caller's concern: it holds whenever `omega` and `J` are compatible.
pub fn metric(omega: &ConstantTwoForm, j: &AlmostComplexStructure) -> Mat<Rational> {
    omega.matrix().matmul(j.matrix())
}

/// Inertia of a symmetric rational matrix: eigenvalue counts
/// `(positive, negative, zero)`, with eigenvalues below
/// [`SIGNATURE_EIGENVALUE_TOL`] in magnitude counted as zero.
pub fn signature(g: &Mat<Rational>) -> (usize, usize, usize) {
    let gf = g.map(rational_to_f64);
    let eigs = symmetric_eigenvalues(&gf);
    let mut counts = (0, 0, 0);
    for e in eigs {
        if e > SIGNATURE_EIGENVALUE_TOL {
            counts.0 += 1;
        } else if e < -SIGNATURE_EIGENVALUE_TOL {
            counts.1 += 1;
        } else {
            counts.2 += 1;
        }
    }
    counts
}

/// Factor picked up by the `(y, z)` part of the standard form under pullback
/// along translation by an element with `x`-part `lambda`: `dy` scales by
/// `e^lambda` and `conj(dz)` by `conj(e^-lambda)`, so the product is
/// `exp(lambda - conj(lambda)) = exp(2i Im lambda)`. The form is preserved
/// exactly when `Im lambda` is an integer multiple of pi.
pub fn translation_pullback_factor(lambda: Complex64) -> Complex64 {
    Complex64::new(0.0, 2.0 * lambda.im).exp()
}

/// Existence report for a pseudo-Kahler structure on the quotient.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PseudoKahlerReport {
    /// Classification of the quotient.
    pub kind: SolvmanifoldType,
    /// First Betti number, the existence criterion.
    pub h1: usize,
    /// Whether the quotient carries a pseudo-Kahler structure: `h1 == 3`.
    pub exists: bool,
    /// Pullback factors of the standard form along the lattice generators
    /// with a nontrivial `x`-part. Empty unless the group is the solvable
    /// kind, whose generators act on `(y, z)` by `e^{+-x}`.
    pub standard_form_factors: Vec<[f64; 2]>,
    /// Whether every factor is 1 within `tol`, i.e. the standard form
    /// descends. `None` when the factor description does not apply
    /// (nilpotent translations shear `z` instead of scaling it).
    pub standard_form_invariant: Option<bool>,
    /// Exact compatibility of the standard form with the standard complex
    /// structure.
    pub compatible: bool,
    /// Inertia `(positive, negative, zero)` of the associated metric.
    pub signature: (usize, usize, usize),
    /// No zero eigenvalues in the metric.
    pub nondegenerate: bool,
    /// Both positive and negative eigenvalues present: pseudo-Kahler, not
    /// Kahler.
    pub indefinite: bool,
}

/// Decides pseudo-Kahler existence for the quotient defined by a verified
/// lattice and collects the supporting diagnostics of the standard form.
pub fn pseudo_kahler_report(spec: &LatticeSpec, tol: f64) -> Result<PseudoKahlerReport> {
    let H1Report { kind, h1, .. } = h1_report(spec, tol)?;
    let omega = omega_standard();
    let j0 = AlmostComplexStructure::standard(6);
    let g = metric(&omega, &j0);
    let sig = signature(&g);

    let (factors, invariant) = match spec {
        LatticeSpec::Abelian(_) => (Vec::new(), Some(true)),
        LatticeSpec::Nilpotent(_) => (Vec::new(), None),
        LatticeSpec::Solvable(_) => {
            let factors: Vec<Complex64> = x_parts(spec)
                .into_iter()
                .map(translation_pullback_factor)
                .collect();
            let one = Complex64::new(1.0, 0.0);
            let invariant = factors.iter().all(|f| (f - one).norm() <= tol);
            (factors.iter().map(|f| [f.re, f.im]).collect(), Some(invariant))
        }
    };

    Ok(PseudoKahlerReport {
        kind,
        h1,
        exists: h1 == 3,
        standard_form_factors: factors,
        standard_form_invariant: invariant,
        compatible: compatible(&omega, &j0),
        signature: sig,
        nondegenerate: sig.2 == 0,
        indefinite: sig.0 > 0 && sig.1 > 0,
    })
}

/// Closed-form existence per classification type, for cross-checking the
/// computed route: only the complex torus and the type (3b) quotients carry
/// pseudo-Kahler structures.
pub fn pseudo_kahler_exists_for_type(t: SolvmanifoldType) -> bool {
    matches!(t, SolvmanifoldType::Type1 | SolvmanifoldType::Type3b)
}

/// Chevalley-Eilenberg differential of a constant 1-form `alpha`, exact:
/// `(d alpha)(e_i, e_j) = -alpha([e_i, e_j])`.
pub fn ce_d1(g: &crate::algebra::LieAlgebra, alpha: &[Rational]) -> ConstantTwoForm {
    assert_eq!(alpha.len(), g.dim());
    let n = g.dim();
    let mut mat = Mat::<Rational>::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let bracket = g.bracket(&g.basis_vector(i), &g.basis_vector(j));
            let mut val = Rational::zero();
            for (k, c) in bracket.iter().enumerate() {
                val -= alpha[k].clone() * c.clone();
            }
            mat[(i, j)] = val.clone();
            mat[(j, i)] = -val;
        }
    }
    ConstantTwoForm { mat }
}

/// Chevalley-Eilenberg differential of a constant 2-form, exact: the nonzero
/// values of
/// `(d omega)(e_i, e_j, e_k) = -omega([e_i, e_j], e_k) + omega([e_i, e_k], e_j) - omega([e_j, e_k], e_i)`
/// over triples `i < j < k`.
pub fn ce_d2(
    g: &crate::algebra::LieAlgebra,
    omega: &ConstantTwoForm,
) -> Vec<((usize, usize, usize), Rational)> {
    assert_eq!(omega.matrix().rows(), g.dim());
    let n = g.dim();
    let basis: Vec<Vec<Rational>> = (0..n).map(|k| g.basis_vector(k)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut val = -omega.eval(&g.bracket(&basis[i], &basis[j]), &basis[k]);
                val += omega.eval(&g.bracket(&basis[i], &basis[k]), &basis[j]);
                val -= omega.eval(&g.bracket(&basis[j], &basis[k]), &basis[i]);
                if !val.is_zero() {
                    out.push(((i, j, k), val));
                }
            }
        }
    }
    out
}
