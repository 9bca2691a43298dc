//! First Betti number of the compact quotients.
//!
//! The count splits into two parts. The Lie-algebra part is the dimension of
//! the abelianization `g/[g, g]` and depends only on the isomorphism class.
//! The correction term `dim W` lives on the quotient `[g, g]/[n, n]` (with `n`
//! the nilradical): it is 2 exactly when every lattice generator acts
//! real-semisimply on that carrier, and 0 otherwise. Only the solvable kind
//! has a nonzero carrier, and there a generator with logarithm `x` acts by
//! multiplication with `e^x` on the `y` coordinate and `e^{-x}` on the `z`
//! coordinate, giving a real 4x4 matrix to test for diagonalizability.
//!
//! Diagonalizability is decided twice, by independent routes that must agree:
//! a minimal-polynomial test (squarefree with real roots) as the primary
//! check, and an eigenbasis test (clustered eigenvalues real, eigenvector
//! matrix well-conditioned) as the cross-check.

use crate::algebra::catalog_entry;
use crate::error::{CoreError, Result};
use crate::kernel::{
    char_poly_f64, cluster_roots, cond_1_f64, lu_solve_f64, max_abs, nullspace_f64, poly_roots_f64,
    Mat,
};
use crate::lattice::{classify, x_parts, LatticeSpec, SolvmanifoldType};
use crate::tol::{CONDITION_LIMIT, EIGEN_TOL};
use num::complex::Complex64;
use serde::Serialize;

/// Two roots of a minimal polynomial closer than this are treated as one
/// repeated root. Repeated roots recovered numerically scatter by about the
/// square root of the residual tolerance, well below this bound, while
/// distinct eigenvalues of the conjugation actions differ by far more.
pub const MULTIPLE_ROOT_SEP: f64 = 1e-4;

/// Cluster separation when grouping characteristic polynomial roots into
/// candidate eigenvalues for the eigenbasis cross-check. A root of
/// multiplicity four resolved to residual 1e-8 can scatter by about
/// (1e-8)^(1/4) = 1e-2, while distinct eigenvalues of the conjugation
/// actions differ by a few tenths at least, so 0.05 separates them safely.
const CLUSTER_SEP: f64 = 0.05;

/// Dimension of `H^1(g, C)`, the space of closed left-invariant 1-forms
/// modulo exact ones. Equals `dim g - dim [g, g]`.
pub fn h1_lie(g: &crate::algebra::LieAlgebra) -> usize {
    g.dim() - g.derived_dim()
}

/// Real 2x2 matrix of multiplication by `c` on `R^2 = C`.
pub fn mult_block(c: Complex64) -> Mat<f64> {
    Mat::from_rows(vec![vec![c.re, -c.im], vec![c.im, c.re]])
}

/// Action induced on `span(Y, Y', Z, Z')` by conjugation with a group element
/// whose logarithm has `x`-part `x`: block diagonal multiplication by `e^x`
/// on the `y` plane and `e^{-x}` on the `z` plane.
pub fn conjugation_action(x: Complex64) -> Mat<f64> {
    let mut m = Mat::zeros(4, 4);
    m.set_block(0, 0, &mult_block(x.exp()));
    m.set_block(2, 2, &mult_block((-x).exp()));
    m
}

/// Monic minimal polynomial of a real matrix, coefficients lowest degree
/// first. Successive powers are flattened and the first power that lies in
/// the span of the lower ones (by least squares, relative residual below
/// `tol`) determines the coefficients.
pub fn min_poly_coeffs_f64(m: &Mat<f64>, tol: f64) -> Result<Vec<f64>> {
    assert!(m.is_square());
    let n = m.rows();
    let dim = n * n;
    let mut powers: Vec<Vec<f64>> = vec![Mat::<f64>::identity(n).flat().to_vec()];
    let mut current = Mat::<f64>::identity(n);
    let rel_tol = tol.max(1e-12);
    for k in 1..=n {
        current = current.matmul(m);
        let target: Vec<f64> = current.flat().to_vec();
        let scale = powers
            .iter()
            .chain(std::iter::once(&target))
            .flat_map(|p| p.iter())
            .fold(1.0f64, |acc, x| acc.max(x.abs()));
        // Normal equations for the k-column least squares problem.
        let mut gram = Mat::<f64>::zeros(k, k);
        let mut rhs = vec![0.0; k];
        for i in 0..k {
            for j in 0..k {
                gram[(i, j)] = (0..dim).map(|t| powers[i][t] * powers[j][t]).sum();
            }
            rhs[i] = (0..dim).map(|t| powers[i][t] * target[t]).sum();
        }
        if let Ok(sol) = lu_solve_f64(&gram, &rhs) {
            let residual = (0..dim)
                .map(|t| {
                    let fit: f64 = (0..k).map(|i| sol[i] * powers[i][t]).sum();
                    (fit - target[t]).abs()
                })
                .fold(0.0f64, f64::max);
            if residual <= rel_tol * scale {
                let mut coeffs: Vec<f64> = sol.iter().map(|c| -c).collect();
                coeffs.push(1.0);
                return Ok(coeffs);
            }
        }
        powers.push(target);
    }
    // Cayley-Hamilton guarantees acceptance at k = n for any reasonable
    // conditioning, so reaching this point means the solves went bad.
    Err(CoreError::Decomposition)
}

/// Whether a real square matrix is diagonalizable over `R`, decided by the
/// minimal polynomial: squarefree (no two roots within [`MULTIPLE_ROOT_SEP`])
/// with all roots real (imaginary parts below [`EIGEN_TOL`]).
pub fn real_diagonalizable(m: &Mat<f64>, tol: f64) -> Result<bool> {
    let coeffs = min_poly_coeffs_f64(m, tol)?;
    if coeffs.len() == 1 {
        // Minimal polynomial of degree zero cannot happen for a nonempty
        // matrix; degree one below always passes both tests.
        return Err(CoreError::Decomposition);
    }
    let roots = poly_roots_f64(&coeffs, EIGEN_TOL)?;
    if roots.iter().any(|r| r.im.abs() > EIGEN_TOL) {
        return Ok(false);
    }
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            if (roots[i] - roots[j]).norm() < MULTIPLE_ROOT_SEP {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Derivative of a polynomial given by coefficients lowest degree first.
fn poly_derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| k as f64 * c)
        .collect()
}

/// Refine a real cluster center of the given multiplicity to near machine
/// precision. A k-fold root of `p` is a simple root of the (k-1)-th
/// derivative, where Newton converges quadratically even though the root
/// locations recovered from `p` itself scatter like the k-th root of the
/// residual. Returns the starting value if the iteration stalls.
fn refine_center(coeffs: &[f64], center: f64, multiplicity: usize) -> f64 {
    let mut d = coeffs.to_vec();
    for _ in 1..multiplicity {
        d = poly_derivative(&d);
    }
    let dd = poly_derivative(&d);
    let eval = |cs: &[f64], x: f64| cs.iter().rev().fold(0.0, |acc, c| acc * x + c);
    let mut x = center;
    for _ in 0..60 {
        let slope = eval(&dd, x);
        if slope.abs() < f64::EPSILON {
            break;
        }
        let step = eval(&d, x) / slope;
        x -= step;
        if step.abs() < 1e-15 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

/// Cross-check for [`real_diagonalizable`]: cluster the characteristic
/// polynomial roots, require every cluster center to be real, collect
/// numerical eigenvectors per cluster, and accept when they fill the space
/// with an eigenvector matrix of condition number below [`CONDITION_LIMIT`].
pub fn real_diagonalizable_eigenbasis(m: &Mat<f64>, _tol: f64) -> Result<bool> {
    assert!(m.is_square());
    let n = m.rows();
    let coeffs = char_poly_f64(m);
    let roots = poly_roots_f64(&coeffs, EIGEN_TOL)?;
    let clusters = cluster_roots(&roots, CLUSTER_SEP);
    // Cluster centers average away the conjugate-symmetric scatter of
    // repeated roots; a genuinely complex eigenvalue keeps its imaginary
    // part and fails here.
    if clusters.iter().any(|(c, _)| c.im.abs() > CLUSTER_SEP) {
        return Ok(false);
    }
    // Refined centers are accurate to machine precision, so pivots of the
    // shifted matrix that belong to other eigenvalues stay at the gap scale
    // and a fixed rank cutoff between the two is safe.
    let rank_tol = 1e-6;
    let mut columns: Vec<Vec<f64>> = Vec::new();
    for (center, count) in &clusters {
        let refined = refine_center(&coeffs, center.re, *count);
        let mut shifted = m.clone();
        for i in 0..n {
            shifted[(i, i)] -= refined;
        }
        columns.extend(nullspace_f64(&shifted, rank_tol));
    }
    if columns.len() != n {
        return Ok(false);
    }
    let basis = Mat::from_cols(columns);
    Ok(cond_1_f64(&basis) < CONDITION_LIMIT)
}

/// [`real_diagonalizable`] and its eigenbasis cross-check, required to agree.
fn diagonalizable_checked(m: &Mat<f64>, tol: f64) -> Result<bool> {
    let primary = real_diagonalizable(m, tol)?;
    let cross = real_diagonalizable_eigenbasis(m, tol)?;
    if primary != cross {
        return Err(CoreError::Classification(format!(
            "diagonalizability tests disagree (minimal polynomial: {primary}, eigenbasis: {cross}) \
             on a matrix with max entry {}",
            max_abs(m)
        )));
    }
    Ok(primary)
}

/// Dimension of the semisimple part `W` of the lattice action on
/// `[g, g]/[n, n]`: 0 when that carrier is trivial (abelian and nilpotent
/// kinds), otherwise 2 exactly when the conjugation action of every lattice
/// generator, and of their product, is diagonalizable over `R`.
pub fn dim_w(spec: &LatticeSpec, tol: f64) -> Result<usize> {
    let entry = catalog_entry(spec.group_kind());
    let g = &entry.complex_algebra;
    let nilradical: Vec<_> = entry
        .nilradical_indices
        .iter()
        .map(|&i| g.basis_vector(i))
        .collect();
    let carrier = g.derived_dim() - g.bracket_span_dim(&nilradical, &nilradical);
    if carrier == 0 {
        return Ok(0);
    }
    let actions: Vec<Mat<f64>> = x_parts(spec).iter().map(|&x| conjugation_action(x)).collect();
    let mut all = actions.clone();
    if let [a, b] = &actions[..] {
        // A joint eigenbasis must also diagonalize products, so the product
        // of the two generator actions is checked alongside them.
        all.push(a.matmul(b));
    }
    for m in &all {
        if !diagonalizable_checked(m, tol)? {
            return Ok(0);
        }
    }
    Ok(carrier)
}

/// Shortcut for [`dim_w`] that never builds a matrix: the conjugation action
/// with `x`-part `x` is real-diagonalizable exactly when `e^x` is real.
pub fn dim_w_shortcut(spec: &LatticeSpec) -> usize {
    let entry = catalog_entry(spec.group_kind());
    let g = &entry.complex_algebra;
    let nilradical: Vec<_> = entry
        .nilradical_indices
        .iter()
        .map(|&i| g.basis_vector(i))
        .collect();
    if g.derived_dim() == g.bracket_span_dim(&nilradical, &nilradical) {
        return 0;
    }
    if x_parts(spec).iter().all(|x| x.exp().im.abs() <= EIGEN_TOL) {
        2
    } else {
        0
    }
}

/// First Betti number split into its two contributions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H1Report {
    /// Classification of the quotient the lattice defines.
    pub kind: SolvmanifoldType,
    /// Contribution of the Lie algebra: `dim g - dim [g, g]`.
    pub dim_h1_lie: usize,
    /// Contribution of the semisimple part of the lattice action.
    pub dim_w: usize,
    /// Total: `dim_h1_lie + dim_w`.
    pub h1: usize,
}

/// First Betti number of the quotient defined by a verified lattice.
///
/// Classification failures (invalid lattice data) are returned as errors.
/// The two contributions are computed independently of the classification
/// and recombined; they match the closed-form table in [`h1_for_type`].
pub fn h1_report(spec: &LatticeSpec, tol: f64) -> Result<H1Report> {
    let kind = classify(spec, tol)?;
    let g = catalog_entry(spec.group_kind()).complex_algebra;
    let dim_h1_lie = h1_lie(&g);
    let dim_w = dim_w(spec, tol)?;
    let report = H1Report {
        kind,
        dim_h1_lie,
        dim_w,
        h1: dim_h1_lie + dim_w,
    };
    debug_assert_eq!(report.h1, h1_for_type(report.kind));
    Ok(report)
}

/// Closed-form first Betti number per classification type.
pub fn h1_for_type(t: SolvmanifoldType) -> usize {
    match t {
        SolvmanifoldType::Type1 => 3,
        SolvmanifoldType::Type2 => 2,
        SolvmanifoldType::Type3a => 1,
        SolvmanifoldType::Type3b => 3,
    }
}
