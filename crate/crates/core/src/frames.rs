//! Complex frames on the solvable real form and the operator identity they
//! satisfy.
//!
//! A frame is a change of basis respecting the splitting into the `(X, X')`
//! plane and the carrier `span(Y, Y', Z, Z')`: a real 2x2 matrix `Q` turns
//! `(X, X')` into `(U, U')`, a real 4x4 matrix `P` turns `(Y, Y', Z, Z')`
//! into `(V, V', W, W')`, and the complex combinations are
//!
//! ```text
//! u = U + iU',    v = V + iV',    w = W + iW'.
//! ```
//!
//! When the carrier brackets of `u` close on `span(v, w)` they define a 2x2
//! complex matrix `A` through `[u, v] = 2(Av)` in the `(v, w)` coordinates.
//! The basis frame `Q = P = I` gives `A = diag(-1, 1)` exactly, and the
//! diagonal operator `S = diag(-1, -1, 1, 1)` on the carrier intertwines `P`
//! with a block form of `A` (the `eq` identity checked by
//! [`intertwining_residual`]). For frames with symmetric `Q` of nonzero trace
//! and `P` of the form `K (x) I`, the spectrum of `A` is `+-(trace Q) / 2`,
//! which [`lemma2_verify`] checks together with an explicit conjugator to
//! diagonal form.

use crate::algebra::{catalog_entry, GroupKind, LieAlgebra};
use crate::error::{CoreError, Result};
use crate::kernel::{max_abs, rat, solve_overdetermined_c64, Mat, Rational};
use num::complex::Complex64;
use num::Zero;
use rand::Rng;
use serde::Serialize;

/// A frame given by its two block matrices: `q` (2x2) mixes `(X, X')`,
/// `p` (4x4) mixes `(Y, Y', Z, Z')`.
#[derive(Debug, Clone, PartialEq)]
pub struct FramePair {
    pub q: Mat<f64>,
    pub p: Mat<f64>,
}

impl FramePair {
    /// Validates the block shapes.
    pub fn new(q: Mat<f64>, p: Mat<f64>) -> Result<Self> {
        if q.rows() != 2 || q.cols() != 2 {
            return Err(CoreError::Dimension(format!(
                "frame block q must be 2x2, got {}x{}",
                q.rows(),
                q.cols()
            )));
        }
        if p.rows() != 4 || p.cols() != 4 {
            return Err(CoreError::Dimension(format!(
                "frame block p must be 4x4, got {}x{}",
                p.rows(),
                p.cols()
            )));
        }
        Ok(FramePair { q, p })
    }

    /// The identity frame.
    pub fn identity() -> Self {
        FramePair {
            q: Mat::identity(2),
            p: Mat::identity(4),
        }
    }
}

/// The complex vectors `(u, v, w)` of a frame, as coordinate vectors in the
/// real-form basis `(X, X', Y, Y', Z, Z')`.
pub fn frame_vectors(frame: &FramePair) -> (Vec<Complex64>, Vec<Complex64>, Vec<Complex64>) {
    let q = &frame.q;
    let p = &frame.p;
    let mut u = vec![Complex64::zero(); 6];
    u[0] = Complex64::new(q[(0, 0)], q[(0, 1)]);
    u[1] = Complex64::new(q[(1, 0)], q[(1, 1)]);
    let column = |c0: usize, c1: usize| -> Vec<Complex64> {
        let mut out = vec![Complex64::zero(); 6];
        for k in 0..4 {
            out[2 + k] = Complex64::new(p[(k, c0)], p[(k, c1)]);
        }
        out
    };
    (u, column(0, 1), column(2, 3))
}

/// The 2x2 complex bracket matrix `A` of a frame on the solvable real form,
/// defined by `[u, v] = 2(a_11 v + a_12 w)` and `[u, w] = 2(a_21 v + a_22 w)`.
///
/// Returns [`CoreError::NotSubalgebra`] when either bracket leaves
/// `span_C(v, w)` by more than `tol` relative to the data size, so a
/// successful return certifies that `(v, w)` spans an `ad u`-invariant
/// complex plane.
pub fn bracket_matrix(g: &LieAlgebra, frame: &FramePair, tol: f64) -> Result<Mat<Complex64>> {
    assert_eq!(g.dim(), 6, "frames live on the 6-dimensional real form");
    let (u, v, w) = frame_vectors(frame);
    let span = Mat::from_cols(vec![v[2..6].to_vec(), w[2..6].to_vec()]);
    let scale = max_abs(&frame.p).max(max_abs(&frame.q)).max(1.0);
    let mut rows = Vec::with_capacity(2);
    for target in [&v, &w] {
        let bracket = g.bracket_c64(&u, target);
        debug_assert!(
            bracket[0].norm() < 1e-14 && bracket[1].norm() < 1e-14,
            "carrier brackets must stay inside the carrier"
        );
        let rhs: Vec<Complex64> = bracket[2..6].iter().map(|c| c / 2.0).collect();
        let (coeffs, residual) = solve_overdetermined_c64(&span, &rhs);
        if residual > tol * scale * scale {
            return Err(CoreError::NotSubalgebra(format!(
                "bracket leaves span(v, w) with residual {residual:.3e}"
            )));
        }
        rows.push(coeffs);
    }
    Ok(Mat::from_rows(rows))
}

/// The operator `S = (ad X + ad X' T) / 2` restricted to the carrier
/// `span(Y, Y', Z, Z')`, where `T` is multiplication by `-i` on the carrier
/// (coordinates `(a, b) -> (b, -a)` on each of the two real planes).
/// Everything is exact rational arithmetic; on the solvable real form the
/// result is `diag(-1, -1, 1, 1)`.
pub fn s_operator() -> Mat<Rational> {
    let real_form = catalog_entry(GroupKind::Solvable).real_form;
    let restrict = |m: &Mat<Rational>| -> Mat<Rational> {
        Mat::from_fn(4, 4, |i, j| m[(2 + i, 2 + j)].clone())
    };
    let ad_x = restrict(&real_form.ad_matrix(&real_form.basis_vector(0)));
    let ad_xp = restrict(&real_form.ad_matrix(&real_form.basis_vector(1)));
    let mut t = Mat::<Rational>::zeros(4, 4);
    for block in [0, 2] {
        t[(block, block + 1)] = rat(1, 1);
        t[(block + 1, block)] = rat(-1, 1);
    }
    ad_x.add(&ad_xp.matmul(&t)).scale(&rat(1, 2))
}

/// Real 2x2 matrix of multiplication by the conjugate of `c`, the building
/// block of the intertwining identity.
fn conj_mult_block(c: Complex64) -> Mat<f64> {
    Mat::from_rows(vec![vec![c.re, c.im], vec![-c.im, c.re]])
}

/// Residual of the intertwining identity between a frame and its bracket
/// matrix: `s S P = P M` where `s = (trace q) / 2`, `S = diag(-1, -1, 1, 1)`
/// and `M` is the block matrix with 2x2 blocks `M[i][j]` = multiplication by
/// `conj(A[j][i])`. Returns the largest entry of `s S P - P M`; frames with
/// symmetric `q` drive it to rounding level, and for `q = I` the factor `s`
/// is 1 and the identity holds without rescaling.
pub fn intertwining_residual(frame: &FramePair, a: &Mat<Complex64>) -> f64 {
    assert!(a.rows() == 2 && a.cols() == 2);
    let s = (frame.q[(0, 0)] + frame.q[(1, 1)]) / 2.0;
    let s_p = {
        let mut m = frame.p.clone();
        for j in 0..4 {
            m[(0, j)] *= -s;
            m[(1, j)] *= -s;
            m[(2, j)] *= s;
            m[(3, j)] *= s;
        }
        m
    };
    let mut block = Mat::<f64>::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            block.set_block(2 * i, 2 * j, &conj_mult_block(a[(j, i)]));
        }
    }
    max_abs(&s_p.sub(&frame.p.matmul(&block)))
}

/// Diagnostic record for the diagonalization lemma on a single frame.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lemma2Report {
    /// Whether `q` is symmetric, the hypothesis under which the spectrum
    /// formula applies.
    pub q_symmetric: bool,
    /// Whether `trace q` is nonzero, so the two eigenvalues are distinct.
    pub trace_nonzero: bool,
    /// Whether the computed spectrum of `A` is `+-(trace q) / 2`.
    pub eigenvalues_match: bool,
    /// Columns conjugating `A` to `diag(-s, s)` with `s = (trace q) / 2`,
    /// present when the eigenvalues match and the eigenvectors are
    /// independent and real.
    pub conjugator: Option<Vec<Vec<f64>>>,
}

/// Eigenvalues of a 2x2 complex matrix in closed form, smaller real part
/// first.
pub fn spectrum_2x2(a: &Mat<Complex64>) -> [Complex64; 2] {
    assert!(a.rows() == 2 && a.cols() == 2);
    let tr = a[(0, 0)] + a[(1, 1)];
    let det = a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)];
    let disc = (tr * tr - 4.0 * det).sqrt();
    let (l1, l2) = ((tr - disc) / 2.0, (tr + disc) / 2.0);
    if (l1.re, l1.im) <= (l2.re, l2.im) {
        [l1, l2]
    } else {
        [l2, l1]
    }
}

/// Eigenvector of a 2x2 complex matrix for the eigenvalue `lambda`, not
/// normalized. Falls back to coordinate vectors for diagonal matrices.
fn eigenvector_2x2(a: &Mat<Complex64>, lambda: Complex64) -> Vec<Complex64> {
    let b = a[(0, 1)];
    let c = a[(1, 0)];
    if b.norm() > c.norm() && b.norm() > 1e-300 {
        vec![b, lambda - a[(0, 0)]]
    } else if c.norm() > 1e-300 {
        vec![lambda - a[(1, 1)], c]
    } else if (a[(0, 0)] - lambda).norm() <= (a[(1, 1)] - lambda).norm() {
        vec![Complex64::new(1.0, 0.0), Complex64::zero()]
    } else {
        vec![Complex64::zero(), Complex64::new(1.0, 0.0)]
    }
}

/// Checks the diagonalization lemma on one frame: for symmetric `q` with
/// nonzero trace (and `p` leaving the bracket matrix well-defined), `A` has
/// spectrum `+-s` with `s = (trace q) / 2`, and the eigenvector matrix
/// conjugates `A` to `diag(-s, s)`.
///
/// A frame violating the hypotheses is reported with the corresponding flag
/// cleared rather than rejected, so callers can probe the boundary of the
/// lemma. Only a bracket that fails to close on `span(v, w)` is an error.
pub fn lemma2_verify(g: &LieAlgebra, frame: &FramePair, tol: f64) -> Result<Lemma2Report> {
    let q = &frame.q;
    let scale = max_abs(q).max(1.0);
    let q_symmetric = (q[(0, 1)] - q[(1, 0)]).abs() <= tol * scale;
    let s = (q[(0, 0)] + q[(1, 1)]) / 2.0;
    let trace_nonzero = s.abs() > tol * scale;

    let a = bracket_matrix(g, frame, tol)?;
    let spectrum = spectrum_2x2(&a);
    let expected = [Complex64::new(-s, 0.0), Complex64::new(s, 0.0)];
    let spec_tol = crate::tol::EIGEN_TOL.max(tol) * scale;
    let eigenvalues_match = {
        let direct =
            (spectrum[0] - expected[0]).norm() <= spec_tol && (spectrum[1] - expected[1]).norm() <= spec_tol;
        let swapped =
            (spectrum[0] - expected[1]).norm() <= spec_tol && (spectrum[1] - expected[0]).norm() <= spec_tol;
        direct || swapped
    };

    let conjugator = if eigenvalues_match && trace_nonzero {
        let cols = [
            eigenvector_2x2(&a, expected[0]),
            eigenvector_2x2(&a, expected[1]),
        ];
        let imag = cols
            .iter()
            .flat_map(|col| col.iter().map(|c| c.im.abs()))
            .fold(0.0f64, f64::max);
        let r = Mat::from_cols(cols.iter().map(|col| col.iter().map(|c| c.re).collect()).collect());
        let det = r[(0, 0)] * r[(1, 1)] - r[(0, 1)] * r[(1, 0)];
        let col_scale = max_abs(&r).max(1e-300);
        if imag <= spec_tol && det.abs() > tol * col_scale * col_scale {
            Some(vec![
                vec![r[(0, 0)], r[(0, 1)]],
                vec![r[(1, 0)], r[(1, 1)]],
            ])
        } else {
            None
        }
    } else {
        None
    };

    Ok(Lemma2Report {
        q_symmetric,
        trace_nonzero,
        eigenvalues_match,
        conjugator,
    })
}

/// Random frame satisfying the lemma hypotheses: symmetric `q` with trace
/// and determinant bounded away from zero, and `p = k (x) I` for a 2x2 block
/// `k` with determinant at least 1/4 in magnitude.
pub fn random_valid_frame(rng: &mut impl Rng) -> FramePair {
    let q = loop {
        let (a, b, d): (f64, f64, f64) = (
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        if (a + d).abs() >= 0.5 && (a * d - b * b).abs() >= 0.1 {
            break Mat::from_rows(vec![vec![a, b], vec![b, d]]);
        }
    };
    let k = loop {
        let k: Vec<Vec<f64>> = (0..2)
            .map(|_| (0..2).map(|_| rng.gen_range(-2.0..2.0)).collect())
            .collect();
        if (k[0][0] * k[1][1] - k[0][1] * k[1][0]).abs() >= 0.25 {
            break k;
        }
    };
    let mut p = Mat::<f64>::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            p[(2 * i, 2 * j)] = k[i][j];
            p[(2 * i + 1, 2 * j + 1)] = k[i][j];
        }
    }
    FramePair { q, p }
}
