//! Polynomial root finding by simultaneous Durand-Kerner iteration.
//!
//! The iteration refines all roots at once and needs no derivative bookkeeping,
//! which keeps the implementation small and the behavior easy to audit. Roots
//! are always returned sorted lexicographically by (re, im) so downstream
//! reports are deterministic.

use super::poly::IntPolynomial;
use crate::error::{CoreError, Result};
use num::complex::Complex64;

/// Iteration cap for Durand-Kerner.
pub const MAX_ITERATIONS: usize = 500;

/// Per-step movement below which the iteration is considered converged.
pub const MOVEMENT_TOL: f64 = 1e-12;

/// Roots of an integer polynomial. See [`poly_roots_f64`].
pub fn poly_roots(p: &IntPolynomial, tol: f64) -> Result<Vec<Complex64>> {
    poly_roots_f64(&p.to_f64_coeffs(), tol)
}

/// Roots of a real polynomial given by coefficients lowest degree first.
///
/// Zero roots are split off exactly, the rest go through Durand-Kerner. Each
/// returned root `r` satisfies `|p(r)| / sum(|coeff|) < tol`; if the iteration
/// cannot deliver that within [`MAX_ITERATIONS`] steps the error carries the
/// best iterate found. Repeated roots converge only to about the square root
/// of machine precision, so pick `tol` accordingly when multiplicities are
/// expected.
pub fn poly_roots_f64(coeffs: &[f64], tol: f64) -> Result<Vec<Complex64>> {
    let mut cs: Vec<f64> = coeffs.to_vec();
    while cs.last() == Some(&0.0) {
        cs.pop();
    }
    if cs.len() <= 1 {
        return Err(CoreError::Dimension(
            "root finding needs degree at least one".into(),
        ));
    }
    if cs.iter().any(|c| !c.is_finite()) {
        return Err(CoreError::Parse("non-finite polynomial coefficient".into()));
    }

    // Factor out t^k so the constant term is nonzero.
    let zero_count = cs.iter().take_while(|&&c| c == 0.0).count();
    let mut roots = vec![Complex64::new(0.0, 0.0); zero_count];
    cs.drain(..zero_count);

    if cs.len() > 1 {
        let lead = *cs.last().unwrap();
        let monic: Vec<Complex64> = cs.iter().map(|c| Complex64::new(c / lead, 0.0)).collect();
        roots.extend(durand_kerner(&monic, &cs, tol)?);
    }

    roots.sort_by_key(sort_key);
    Ok(roots)
}

/// Lexicographic (re, im) key quantized to a 1e-10 grid, so that conjugate
/// pairs with cancellation-level real-part noise still order deterministically
/// by imaginary part.
fn sort_key(z: &Complex64) -> (i128, i128) {
    const GRID: f64 = 1e-10;
    ((z.re / GRID).round() as i128, (z.im / GRID).round() as i128)
}

/// Core iteration on a monic polynomial (coefficients lowest first, last = 1).
fn durand_kerner(monic: &[Complex64], original: &[f64], tol: f64) -> Result<Vec<Complex64>> {
    let n = monic.len() - 1;
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    // The standard non-real, non-unit starting spread.
    let seed = Complex64::new(0.4, 0.9);
    let mut ws: Vec<Complex64> = (0..n)
        .map(|i| seed.powu(i as u32 + 1))
        .collect();

    let coeff_scale: f64 = original.iter().map(|c| c.abs()).sum::<f64>().max(1.0);
    let residual_ok = |ws: &[Complex64]| {
        ws.iter()
            .all(|&w| eval(w).norm() * original.last().unwrap().abs() / coeff_scale < tol)
    };

    for _ in 0..MAX_ITERATIONS {
        let mut movement = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= ws[i] - ws[j];
                }
            }
            if denom.norm() == 0.0 {
                // Collided iterates: nudge and continue.
                ws[i] += Complex64::new(1e-8, 1e-8);
                movement = f64::MAX;
                continue;
            }
            let delta = eval(ws[i]) / denom;
            ws[i] -= delta;
            movement = movement.max(delta.norm());
        }
        if movement < MOVEMENT_TOL || residual_ok(&ws) {
            break;
        }
    }

    if !residual_ok(&ws) || ws.iter().any(|w| !w.re.is_finite() || !w.im.is_finite()) {
        return Err(CoreError::Convergence {
            iterations: MAX_ITERATIONS,
            best: ws,
        });
    }
    Ok(ws)
}

/// Groups numerically coincident roots, returning `(center, multiplicity)`
/// pairs. Two roots belong to the same cluster when they lie within `sep`.
pub fn cluster_roots(roots: &[Complex64], sep: f64) -> Vec<(Complex64, usize)> {
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    for &r in roots {
        match clusters
            .iter_mut()
            .find(|(c, k)| (*c / (*k as f64) - r).norm() < sep)
        {
            Some((c, k)) => {
                *c += r;
                *k += 1;
            }
            None => clusters.push((r, 1)),
        }
    }
    clusters
        .into_iter()
        .map(|(sum, k)| (sum / (k as f64), k))
        .collect()
}
