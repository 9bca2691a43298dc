//! Elimination-based linear algebra, exact and floating point.
//!
//! The exact routines run Gaussian elimination over any field scalar with an
//! exact zero test (rationals, Gaussian rationals) and never introduce rounding.
//! The floating-point routines use partial pivoting with explicit tolerances
//! and exist for the numeric layers (eigenvalues, lattice residuals).

use super::mat::{Mat, Scalar};
use crate::error::{CoreError, Result};
use num::complex::Complex64;
use std::ops::Div;

/// Field scalar with an exact zero test, usable as an elimination pivot.
pub trait FieldScalar: Scalar + Div<Output = Self> {}
impl<T> FieldScalar for T where T: Scalar + Div<Output = T> {}

/// Row-reduces `m` in place, returning the rank. Exact arithmetic.
fn row_echelon<T: FieldScalar>(m: &mut Mat<T>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[(r, col)].is_zero()) else {
            continue;
        };
        m.swap_rows(rank, pivot);
        let p = m[(rank, col)].clone();
        for r in rank + 1..rows {
            if m[(r, col)].is_zero() {
                continue;
            }
            let factor = m[(r, col)].clone() / p.clone();
            for c in col..cols {
                let sub = factor.clone() * m[(rank, c)].clone();
                m[(r, c)] = m[(r, c)].clone() - sub;
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank_exact<T: FieldScalar>(m: &Mat<T>) -> usize {
    let mut work = m.clone();
    row_echelon(&mut work)
}

/// Rank of the span of `vectors` (each a coordinate vector).
pub fn span_rank<T: FieldScalar>(vectors: &[Vec<T>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank_exact(&Mat::from_rows(vectors.to_vec()))
}

/// Whether `v` lies in the span of `basis`. Exact arithmetic.
pub fn in_span<T: FieldScalar>(basis: &[Vec<T>], v: &[T]) -> bool {
    let r = span_rank(basis);
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    span_rank(&all) == r
}

/// Whether two families of vectors span the same subspace.
pub fn span_equal<T: FieldScalar>(a: &[Vec<T>], b: &[Vec<T>]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    if ra != rb {
        return false;
    }
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    span_rank(&all) == ra
}

pub fn det_exact<T: FieldScalar>(m: &Mat<T>) -> T {
    assert!(m.is_square());
    let n = m.rows();
    let mut work = m.clone();
    let mut det = T::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !work[(r, col)].is_zero()) else {
            return T::zero();
        };
        if pivot != col {
            work.swap_rows(col, pivot);
            det = -det;
        }
        let p = work[(col, col)].clone();
        det = det * p.clone();
        for r in col + 1..n {
            if work[(r, col)].is_zero() {
                continue;
            }
            let factor = work[(r, col)].clone() / p.clone();
            for c in col..n {
                let sub = factor.clone() * work[(col, c)].clone();
                work[(r, c)] = work[(r, c)].clone() - sub;
            }
        }
    }
    det
}

/// Solves `a * x = b` for square invertible `a`, columns of `b` independently.
/// Returns `None` when `a` is singular. Exact arithmetic.
pub fn solve_exact<T: FieldScalar>(a: &Mat<T>, b: &Mat<T>) -> Option<Mat<T>> {
    assert!(a.is_square());
    assert_eq!(a.rows(), b.rows());
    let n = a.rows();
    let mut work = a.hstack(b);
    // Forward elimination with exact pivots.
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[(r, col)].is_zero())?;
        work.swap_rows(col, pivot);
        let p = work[(col, col)].clone();
        for r in 0..n {
            if r == col || work[(r, col)].is_zero() {
                continue;
            }
            let factor = work[(r, col)].clone() / p.clone();
            for c in col..work.cols() {
                let sub = factor.clone() * work[(col, c)].clone();
                work[(r, c)] = work[(r, c)].clone() - sub;
            }
        }
    }
    let mut x = Mat::zeros(n, b.cols());
    for i in 0..n {
        let p = work[(i, i)].clone();
        for j in 0..b.cols() {
            x[(i, j)] = work[(i, n + j)].clone() / p.clone();
        }
    }
    Some(x)
}

pub fn inverse_exact<T: FieldScalar>(a: &Mat<T>) -> Option<Mat<T>> {
    solve_exact(a, &Mat::identity(a.rows()))
}

// ---------------------------------------------------------------------------
// Floating point (f64) routines.
// ---------------------------------------------------------------------------

/// Relative pivot threshold below which an f64 elimination is declared singular.
const F64_PIVOT_EPS: f64 = 1e-12;

/// Solves `a * x = b` by LU with partial pivoting.
pub fn lu_solve_f64(a: &Mat<f64>, b: &[f64]) -> Result<Vec<f64>> {
    assert!(a.is_square());
    assert_eq!(a.rows(), b.len());
    let n = a.rows();
    let scale = a.flat().iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let mut work = a.clone();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let (pivot, mag) = (col..n)
            .map(|r| (r, work[(r, col)].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag <= F64_PIVOT_EPS * scale {
            return Err(CoreError::Singular(format!(
                "pivot {mag:.3e} below threshold in column {col}"
            )));
        }
        work.swap_rows(col, pivot);
        rhs.swap(col, pivot);
        for r in col + 1..n {
            let factor = work[(r, col)] / work[(col, col)];
            if factor == 0.0 {
                continue;
            }
            for c in col..n {
                let sub = factor * work[(col, c)];
                work[(r, c)] -= sub;
            }
            rhs[r] -= factor * rhs[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = rhs[i];
        for j in i + 1..n {
            acc -= work[(i, j)] * x[j];
        }
        x[i] = acc / work[(i, i)];
    }
    Ok(x)
}

pub fn det_f64(a: &Mat<f64>) -> f64 {
    assert!(a.is_square());
    let n = a.rows();
    let mut work = a.clone();
    let mut det = 1.0;
    for col in 0..n {
        let (pivot, mag) = (col..n)
            .map(|r| (r, work[(r, col)].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag == 0.0 {
            return 0.0;
        }
        if pivot != col {
            work.swap_rows(col, pivot);
            det = -det;
        }
        det *= work[(col, col)];
        for r in col + 1..n {
            let factor = work[(r, col)] / work[(col, col)];
            for c in col..n {
                let sub = factor * work[(col, c)];
                work[(r, c)] -= sub;
            }
        }
    }
    det
}

pub fn inverse_f64(a: &Mat<f64>) -> Result<Mat<f64>> {
    let n = a.rows();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        cols.push(lu_solve_f64(a, &e)?);
    }
    Ok(Mat::from_cols(cols))
}

/// Numeric rank with an absolute pivot tolerance.
pub fn rank_f64(m: &Mat<f64>, tol: f64) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut work = m.clone();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let (pivot, mag) = (rank..rows)
            .map(|r| (r, work[(r, col)].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag <= tol {
            continue;
        }
        work.swap_rows(rank, pivot);
        for r in rank + 1..rows {
            let factor = work[(r, col)] / work[(rank, col)];
            for c in col..cols {
                let sub = factor * work[(rank, c)];
                work[(r, c)] -= sub;
            }
        }
        rank += 1;
    }
    rank
}

/// Basis for the kernel of `m`, one vector per free column after Gaussian
/// elimination with partial pivoting.  Pivots smaller than `tol` times the
/// largest entry of `m` are treated as zero.
pub fn nullspace_f64(m: &Mat<f64>, tol: f64) -> Vec<Vec<f64>> {
    let (rows, cols) = (m.rows(), m.cols());
    let scale = max_abs(m).max(1.0);
    let mut work = m.clone();
    // pivot_in_col[c] = row holding the pivot of column c, if any
    let mut pivot_in_col: Vec<Option<usize>> = vec![None; cols];
    let mut next_row = 0;
    for col in 0..cols {
        if next_row == rows {
            break;
        }
        let (pivot, mag) = (next_row..rows)
            .map(|r| (r, work[(r, col)].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if mag <= tol * scale {
            continue;
        }
        work.swap_rows(next_row, pivot);
        let inv = 1.0 / work[(next_row, col)];
        for c in col..cols {
            work[(next_row, c)] *= inv;
        }
        for r in 0..rows {
            if r != next_row {
                let factor = work[(r, col)];
                if factor != 0.0 {
                    for c in col..cols {
                        let sub = factor * work[(next_row, c)];
                        work[(r, c)] -= sub;
                    }
                }
            }
        }
        pivot_in_col[col] = Some(next_row);
        next_row += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_in_col[free].is_some() {
            continue;
        }
        let mut v = vec![0.0; cols];
        v[free] = 1.0;
        for c in 0..cols {
            if let Some(r) = pivot_in_col[c] {
                v[c] = -work[(r, free)];
            }
        }
        basis.push(v);
    }
    basis
}

pub fn max_abs(m: &Mat<f64>) -> f64 {
    m.flat().iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
}

pub fn max_abs_c(m: &Mat<Complex64>) -> f64 {
    m.flat().iter().fold(0.0f64, |acc, x| acc.max(x.norm()))
}

/// 1-norm condition number estimate via the explicit inverse.
pub fn cond_1_f64(a: &Mat<f64>) -> f64 {
    let norm1 = |m: &Mat<f64>| {
        (0..m.cols())
            .map(|j| (0..m.rows()).map(|i| m[(i, j)].abs()).sum::<f64>())
            .fold(0.0f64, f64::max)
    };
    match inverse_f64(a) {
        Ok(inv) => norm1(a) * norm1(&inv),
        Err(_) => f64::INFINITY,
    }
}

/// Recovers integer coordinates of `v` in the lattice spanned by the columns
/// of `basis`: solves `basis * c = v`, rounds, and accepts when the rounded
/// combination reproduces `v` within `tol` in the max norm.
///
/// Returns `Ok(None)` when the residual check fails and an error when the
/// basis itself is singular.
pub fn integer_recover(basis: &Mat<f64>, v: &[f64], tol: f64) -> Result<Option<Vec<i64>>> {
    let c = lu_solve_f64(basis, v)?;
    let rounded: Vec<i64> = c.iter().map(|x| x.round() as i64).collect();
    let approx = basis.mul_vec(&rounded.iter().map(|&k| k as f64).collect::<Vec<_>>());
    let residual = approx
        .iter()
        .zip(v)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    if residual < tol {
        Ok(Some(rounded))
    } else {
        Ok(None)
    }
}

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi method.
///
/// # Panics
/// Panics if `m` is not square or visibly asymmetric.
pub fn symmetric_eigenvalues(m: &Mat<f64>) -> Vec<f64> {
    assert!(m.is_square());
    let n = m.rows();
    let scale = max_abs(m).max(1.0);
    for i in 0..n {
        for j in 0..n {
            assert!(
                (m[(i, j)] - m[(j, i)]).abs() <= 1e-9 * scale,
                "matrix is not symmetric"
            );
        }
    }
    let mut a = m.clone();
    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                off = off.max(a[(i, j)].abs());
            }
        }
        if off <= 1e-14 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.abs() <= 1e-16 * scale {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    eigs.sort_by(f64::total_cmp);
    eigs
}

/// Solves the (possibly overdetermined) complex system `cols * x = rhs` where
/// `cols` has full column rank, then reports the solution together with the
/// max-norm residual over all rows. Used for membership-in-span decisions.
pub fn solve_overdetermined_c64(cols: &Mat<Complex64>, rhs: &[Complex64]) -> (Vec<Complex64>, f64) {
    let m = cols.rows();
    let k = cols.cols();
    assert_eq!(m, rhs.len());
    assert!(k <= m);
    let mut work = cols.clone();
    let mut b = rhs.to_vec();
    let mut perm: Vec<usize> = (0..m).collect();
    for col in 0..k {
        let (pivot, mag) = (col..m)
            .map(|r| (r, work[(r, col)].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag == 0.0 {
            // Rank-deficient column family: report an unusable fit.
            return (vec![Complex64::new(0.0, 0.0); k], f64::INFINITY);
        }
        work.swap_rows(col, pivot);
        b.swap(col, pivot);
        perm.swap(col, pivot);
        for r in 0..m {
            if r == col {
                continue;
            }
            let factor = work[(r, col)] / work[(col, col)];
            if factor.norm() == 0.0 {
                continue;
            }
            for c in col..k {
                let sub = factor * work[(col, c)];
                work[(r, c)] -= sub;
            }
            let sub = factor * b[col];
            b[r] -= sub;
        }
    }
    let x: Vec<Complex64> = (0..k).map(|i| b[i] / work[(i, i)]).collect();
    let fit = cols.mul_vec(&x);
    let residual = fit
        .iter()
        .zip(rhs)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0f64, f64::max);
    (x, residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{rat, Rational};
    use num::traits::Zero;

    #[test]
    fn exact_rank_and_det() {
        let m = Mat::from_rows(vec![
            vec![rat(1, 1), rat(2, 1), rat(3, 1)],
            vec![rat(2, 1), rat(4, 1), rat(6, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
        ]);
        assert_eq!(rank_exact(&m), 2);
        assert!(det_exact(&m).is_zero());

        let id = Mat::<Rational>::identity(3);
        assert_eq!(det_exact(&id), rat(1, 1));
    }

    #[test]
    fn exact_solve_and_inverse() {
        let a = Mat::from_rows(vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(1, 1)]]);
        let inv = inverse_exact(&a).unwrap();
        assert_eq!(a.matmul(&inv), Mat::identity(2));
        let b = Mat::from_cols(vec![vec![rat(1, 1), rat(0, 1)]]);
        let x = solve_exact(&a, &b).unwrap();
        assert_eq!(a.matmul(&x), b);
    }

    #[test]
    fn span_predicates() {
        let e1 = vec![rat(1, 1), rat(0, 1)];
        let e2 = vec![rat(0, 1), rat(1, 1)];
        let diag = vec![rat(1, 1), rat(1, 1)];
        assert!(in_span(&[e1.clone(), e2.clone()], &diag));
        assert!(!in_span(std::slice::from_ref(&e1), &diag));
        assert!(span_equal(
            &[e1.clone(), diag.clone()],
            &[e1.clone(), e2.clone()]
        ));
    }

    #[test]
    fn integer_recovery_roundtrip() {
        let basis = Mat::from_rows(vec![vec![1.0, 0.5], vec![0.0, 0.5]]);
        let v = [3.5, 0.5]; // 3*g1 + 1*g2
        let got = integer_recover(&basis, &v, 1e-9).unwrap().unwrap();
        assert_eq!(got, vec![3, 1]);
        let off = [3.51, 0.5];
        assert!(integer_recover(&basis, &off, 1e-9).unwrap().is_none());
        let singular = Mat::from_rows(vec![vec![1.0, 1.0], vec![1.0, 1.0]]);
        assert!(integer_recover(&singular, &v, 1e-9).is_err());
    }

    #[test]
    fn jacobi_eigenvalues_of_known_matrix() {
        let m = Mat::from_rows(vec![vec![2.0, 1.0], vec![1.0, 2.0]]);
        let eigs = symmetric_eigenvalues(&m);
        assert!((eigs[0] - 1.0).abs() < 1e-12);
        assert!((eigs[1] - 3.0).abs() < 1e-12);
    }
}
