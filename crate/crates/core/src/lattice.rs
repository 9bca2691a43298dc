//! Group laws, lattice specifications, and lattice verification for the
//! nilpotent and non-nilpotent groups.
//!
//! Both groups are semidirect products `C^2 x| C` and their lattices have the
//! shape `Delta x| Lambda`: a rank-4 lattice `Delta` in the `(y, z)` plane
//! together with `x`-translations that preserve it. Preservation is decided
//! by conjugating each `Delta` generator and recovering integer coordinates
//! in the generator basis; the eigen-data conditions that make this work are
//! checked numerically against the supplied integer matrices.

use crate::algebra::GroupKind;
use crate::error::{CoreError, Result};
use crate::kernel::{
    det_exact, integer_recover, min_poly_squarefree, rat, Mat,
};
use num::complex::Complex64;
use num::BigInt;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;

/// A point of the group in exponential coordinates `(x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
}

impl GroupElement {
    pub fn new(x: Complex64, y: Complex64, z: Complex64) -> Self {
        GroupElement { x, y, z }
    }

    pub fn from_f64(x: f64, y: f64, z: f64) -> Self {
        GroupElement {
            x: Complex64::new(x, 0.0),
            y: Complex64::new(y, 0.0),
            z: Complex64::new(z, 0.0),
        }
    }
}

pub fn group_identity() -> GroupElement {
    GroupElement::new(
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
    )
}

/// Group multiplication. Abelian: componentwise. Nilpotent:
/// `(x1+x2, y1+y2, z1+z2+x1 y2)`. Solvable:
/// `(x1+x2, y1 + e^{x1} y2, z1 + e^{-x1} z2)`.
pub fn group_mul(kind: GroupKind, a: &GroupElement, b: &GroupElement) -> GroupElement {
    match kind {
        GroupKind::Abelian => GroupElement::new(a.x + b.x, a.y + b.y, a.z + b.z),
        GroupKind::Nilpotent => {
            GroupElement::new(a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y)
        }
        GroupKind::Solvable => GroupElement::new(
            a.x + b.x,
            a.y + a.x.exp() * b.y,
            a.z + (-a.x).exp() * b.z,
        ),
    }
}

pub fn group_inverse(kind: GroupKind, a: &GroupElement) -> GroupElement {
    match kind {
        GroupKind::Abelian => GroupElement::new(-a.x, -a.y, -a.z),
        GroupKind::Nilpotent => GroupElement::new(-a.x, -a.y, -a.z + a.x * a.y),
        GroupKind::Solvable => {
            GroupElement::new(-a.x, -(-a.x).exp() * a.y, -a.x.exp() * a.z)
        }
    }
}

/// Upper-triangular 3x3 realization of the nilpotent group.
pub fn embed_nil(g: &GroupElement) -> Mat<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    Mat::from_rows(vec![
        vec![one, g.x, g.z],
        vec![zero, one, g.y],
        vec![zero, zero, one],
    ])
}

/// 4x4 realization of the solvable group with `e^{+-x}` on the diagonal.
pub fn embed_solv(g: &GroupElement) -> Mat<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    Mat::from_rows(vec![
        vec![g.x.exp(), zero, zero, g.y],
        vec![zero, (-g.x).exp(), zero, g.z],
        vec![zero, zero, one, g.x],
        vec![zero, zero, zero, one],
    ])
}

/// Complex number on the wire: `[re, im]`.
pub type CPair = [f64; 2];

pub fn cpair_to_c64(p: CPair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

pub fn c64_to_cpair(c: Complex64) -> CPair {
    [c.re, c.im]
}

/// Lattice data for the nilpotent group: an integer matrix `A` with non-real
/// eigenvalue `lambda` and eigenvector `alpha`; `beta` shifts the `z`-parts
/// of the generators and is unconstrained.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeSpecNil {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    pub lambda: CPair,
    pub alpha: Vec<CPair>,
    pub beta: Vec<CPair>,
}

/// Lattice data for the solvable group: commuting semisimple `A, B` in
/// `SL(4, Z)` with eigenvectors `alpha, beta` for eigenvalue pairs
/// `(gamma^{-1}, gamma)` and `(delta^{-1}, delta)`. When `k_mu` is set the
/// second translation is `mu = k pi i` instead of `log delta`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeSpecSolv {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    pub gamma: CPair,
    pub delta: CPair,
    pub alpha: Vec<CPair>,
    pub beta: Vec<CPair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_mu: Option<i64>,
}

/// Lattice data for the abelian group: six real-independent vectors in `C^3`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeSpecAbelian {
    pub generators: Vec<Vec<CPair>>,
}

/// Tagged union covering all three kinds; the `kind` tag matches
/// [`GroupKind`] serialization.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LatticeSpec {
    Abelian(LatticeSpecAbelian),
    Nilpotent(LatticeSpecNil),
    Solvable(LatticeSpecSolv),
}

impl LatticeSpec {
    pub fn group_kind(&self) -> GroupKind {
        match self {
            LatticeSpec::Abelian(_) => GroupKind::Abelian,
            LatticeSpec::Nilpotent(_) => GroupKind::Nilpotent,
            LatticeSpec::Solvable(_) => GroupKind::Solvable,
        }
    }
}

/// Four-way classification of the compact quotients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolvmanifoldType {
    Type1,
    Type2,
    Type3a,
    Type3b,
}

impl fmt::Display for SolvmanifoldType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SolvmanifoldType::Type1 => "type1",
            SolvmanifoldType::Type2 => "type2",
            SolvmanifoldType::Type3a => "type3a",
            SolvmanifoldType::Type3b => "type3b",
        };
        f.write_str(s)
    }
}

/// Outcome of checking a nilpotent-group lattice specification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NilLatticeReport {
    /// "generic" for the eigenvector template, "gaussian_closure" for the
    /// degenerate `alpha = 0` form whose lattice is the Gaussian integers.
    pub mode: String,
    pub det_unit: bool,
    pub eigen_ok: bool,
    pub lambda_nonreal: bool,
    pub delta_generators_independent_over_r: bool,
    pub preserved_by_phi1: bool,
    pub preserved_by_phi_lambda: bool,
    pub valid: bool,
    pub notes: Vec<String>,
}

/// Outcome of checking a solvable-group lattice specification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolvLatticeReport {
    pub commute: bool,
    pub semisimple_a: bool,
    pub semisimple_b: bool,
    pub det_one: bool,
    pub eigen_relations_ok: bool,
    pub generators_independent: bool,
    pub preserved_by_phi_lambda: bool,
    pub preserved_by_phi_mu: bool,
    pub lambda_mu_independent: bool,
    pub mu_matches_delta: bool,
    pub lambda: CPair,
    pub mu: CPair,
    pub subtype: Option<SolvmanifoldType>,
    pub valid: bool,
    pub notes: Vec<String>,
}

/// Outcome of checking an abelian lattice specification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AbelianLatticeReport {
    pub generators_independent_over_r: bool,
    pub valid: bool,
}

fn int_mat(rows: &[Vec<i64>], n: usize, what: &str) -> Result<Mat<i64>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(CoreError::InvalidSpec(format!("{what} must be {n}x{n}")));
    }
    Ok(Mat::from_rows(rows.to_vec()))
}

fn complex_vec(pairs: &[CPair], n: usize, what: &str) -> Result<Vec<Complex64>> {
    if pairs.len() != n {
        return Err(CoreError::InvalidSpec(format!(
            "{what} must have {n} entries"
        )));
    }
    Ok(pairs.iter().map(|&p| cpair_to_c64(p)).collect())
}

fn apply_int(m: &Mat<i64>, v: &[Complex64]) -> Vec<Complex64> {
    (0..m.rows())
        .map(|i| {
            v.iter()
                .enumerate()
                .map(|(j, c)| c * m[(i, j)] as f64)
                .sum()
        })
        .collect()
}

fn is_gaussian_integer(c: Complex64, tol: f64) -> bool {
    (c.re - c.re.round()).abs() < tol && (c.im - c.im.round()).abs() < tol
}

/// `(y, z)` in `C^2` flattened to real coordinates `(Re y, Im y, Re z, Im z)`.
fn yz_real(y: Complex64, z: Complex64) -> Vec<f64> {
    vec![y.re, y.im, z.re, z.im]
}

fn det_is(m: &Mat<i64>, allowed: &[i64]) -> bool {
    let d = det_exact(&m.map(|&v| rat(v, 1)));
    allowed.iter().any(|&a| d == rat(a, 1))
}

fn mat_to_bigint(m: &Mat<i64>) -> Mat<BigInt> {
    m.map(|&v| BigInt::from(v))
}

/// Integer-coordinate recovery of `target` in the column basis `gens`,
/// tolerating a singular basis by reporting failure.
fn recovers(gens: &Mat<f64>, target: &[f64], tol: f64) -> bool {
    matches!(integer_recover(gens, target, tol), Ok(Some(_)))
}

/// Residual tolerance for integer recovery, intentionally looser than the
/// eigenvalue tolerance (see [`crate::tol::INTEGER_RESIDUAL_TOL`]).
fn recovery_tol(tol: f64) -> f64 {
    tol.max(crate::tol::INTEGER_RESIDUAL_TOL)
}

/// Checks a nilpotent-group lattice specification.
///
/// The generic template takes `Delta` generated by `(alpha_1, beta_1)`,
/// `(alpha_2, beta_2)`, `(0, alpha_1)`, `(0, alpha_2)` in the `(y, z)` plane
/// and `Lambda` generated by `1` and `lambda`; conjugation by `x` sends
/// `(y, z)` to `(y, z + x y)`. The degenerate form `alpha = 0` signals the
/// Gaussian-integer lattice, which is checked by closure instead.
pub fn verify_lattice_nil(spec: &LatticeSpecNil, tol: f64) -> Result<NilLatticeReport> {
    let a = int_mat(&spec.a, 2, "A")?;
    let lambda = cpair_to_c64(spec.lambda);
    let alpha = complex_vec(&spec.alpha, 2, "alpha")?;
    let beta = complex_vec(&spec.beta, 2, "beta")?;

    let det_unit = det_is(&a, &[1, -1]);
    let lambda_nonreal = lambda.im.abs() > tol;
    let mut notes = Vec::new();

    if alpha[0].norm() < tol && alpha[1].norm() < tol {
        return verify_nil_gaussian(&a, lambda, det_unit, lambda_nonreal, tol, notes);
    }

    let a_alpha = apply_int(&a, &alpha);
    let eigen_ok = a_alpha
        .iter()
        .zip(&alpha)
        .all(|(got, al)| (got - lambda * al).norm() < tol);

    let gens: Vec<Vec<f64>> = vec![
        yz_real(alpha[0], beta[0]),
        yz_real(alpha[1], beta[1]),
        yz_real(Complex64::new(0.0, 0.0), alpha[0]),
        yz_real(Complex64::new(0.0, 0.0), alpha[1]),
    ];
    let gen_mat = Mat::from_cols(gens);
    let independent = crate::kernel::rank_f64(&gen_mat, tol) == 4;

    let phi = |x: Complex64, y: Complex64, z: Complex64| (y, z + x * y);
    let check_phi = |x: Complex64| -> bool {
        if !independent {
            return false;
        }
        let rtol = recovery_tol(tol);
        let images = [
            phi(x, alpha[0], beta[0]),
            phi(x, alpha[1], beta[1]),
            phi(x, Complex64::new(0.0, 0.0), alpha[0]),
            phi(x, Complex64::new(0.0, 0.0), alpha[1]),
        ];
        images
            .iter()
            .all(|&(y, z)| recovers(&gen_mat, &yz_real(y, z), rtol))
    };
    let preserved_by_phi1 = check_phi(Complex64::new(1.0, 0.0));
    let preserved_by_phi_lambda = check_phi(lambda);

    if !independent {
        notes.push("generator matrix is singular; preservation not attempted".into());
    }
    let valid = det_unit
        && eigen_ok
        && lambda_nonreal
        && independent
        && preserved_by_phi1
        && preserved_by_phi_lambda;
    Ok(NilLatticeReport {
        mode: "generic".into(),
        det_unit,
        eigen_ok,
        lambda_nonreal,
        delta_generators_independent_over_r: independent,
        preserved_by_phi1,
        preserved_by_phi_lambda,
        valid,
        notes,
    })
}

/// Degenerate nil path: the lattice is `Z[i]^3` (all three coordinates
/// Gaussian integers) and validity is closure of those coordinates under the
/// group law, its inverses, and conjugation by `1` and `lambda`.
fn verify_nil_gaussian(
    a: &Mat<i64>,
    lambda: Complex64,
    det_unit: bool,
    lambda_nonreal: bool,
    tol: f64,
    mut notes: Vec<String>,
) -> Result<NilLatticeReport> {
    notes.push("degenerate alpha: checking Gaussian-integer closure instead of the eigenvector template".into());

    let lambda_gaussian = is_gaussian_integer(lambda, tol);
    if !lambda_gaussian {
        notes.push("lambda is not a Gaussian integer, closure must fail".into());
    }
    // A should still express multiplication by lambda on the basis (1, i):
    // columns A e_1 = lambda * 1, A e_2 = lambda * i in (re, im) coordinates.
    let i = Complex64::new(0.0, 1.0);
    let col_ok = |col: usize, expect: Complex64| {
        (a[(0, col)] as f64 - expect.re).abs() < tol && (a[(1, col)] as f64 - expect.im).abs() < tol
    };
    let eigen_ok = col_ok(0, lambda) && col_ok(1, lambda * i);

    // Deterministic sample of Gaussian-integer points; products and inverses
    // must stay Gaussian-integer.
    let mut sample = Vec::new();
    for s in 0..24u32 {
        let f = |k: u32| ((s.wrapping_mul(2654435761).wrapping_add(k * 40503) >> 7) % 7) as f64 - 3.0;
        sample.push(GroupElement::new(
            Complex64::new(f(1), f(2)),
            Complex64::new(f(3), f(4)),
            Complex64::new(f(5), f(6)),
        ));
    }
    let gaussian_pt =
        |g: &GroupElement| [g.x, g.y, g.z].iter().all(|&c| is_gaussian_integer(c, tol));
    let mut closure = true;
    for g1 in &sample {
        let inv = group_inverse(GroupKind::Nilpotent, g1);
        closure &= gaussian_pt(&inv);
        for g2 in &sample {
            closure &= gaussian_pt(&group_mul(GroupKind::Nilpotent, g1, g2));
        }
    }
    // Conjugation by the Lambda generators x = 1 and x = lambda on pure
    // (y, z) points.
    let conj_preserves = |x: Complex64| -> bool {
        sample.iter().all(|g| {
            let d = GroupElement::new(Complex64::new(0.0, 0.0), g.y, g.z);
            let t = GroupElement::new(x, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
            let conj = group_mul(
                GroupKind::Nilpotent,
                &group_mul(GroupKind::Nilpotent, &t, &d),
                &group_inverse(GroupKind::Nilpotent, &t),
            );
            gaussian_pt(&conj)
        })
    };
    let preserved_by_phi1 = closure && conj_preserves(Complex64::new(1.0, 0.0));
    let preserved_by_phi_lambda = closure && lambda_gaussian && conj_preserves(lambda);

    // The standard generators (1, 0), (i, 0), (0, 1), (0, i) of Z[i]^2.
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let gen_mat = Mat::from_cols(vec![
        yz_real(one, zero),
        yz_real(i, zero),
        yz_real(zero, one),
        yz_real(zero, i),
    ]);
    let independent = crate::kernel::rank_f64(&gen_mat, tol) == 4;

    let valid = det_unit
        && eigen_ok
        && lambda_nonreal
        && independent
        && preserved_by_phi1
        && preserved_by_phi_lambda;
    Ok(NilLatticeReport {
        mode: "gaussian_closure".into(),
        det_unit,
        eigen_ok,
        lambda_nonreal,
        delta_generators_independent_over_r: independent,
        preserved_by_phi1,
        preserved_by_phi_lambda,
        valid,
        notes,
    })
}

/// Checks a solvable-group lattice specification.
///
/// `Delta` is generated by `(alpha_i, beta_i)` for `i = 1..4`; conjugation by
/// the translation with `x`-part `lambda = log gamma` sends `(y, z)` to
/// `(gamma y, gamma^{-1} z)`, and similarly for `mu`. The eigen-relations
/// make those conjugates integer combinations of the generators, which is
/// verified directly by integer recovery.
pub fn verify_lattice_solv(spec: &LatticeSpecSolv, tol: f64) -> Result<SolvLatticeReport> {
    let a = int_mat(&spec.a, 4, "A")?;
    let b = int_mat(&spec.b, 4, "B")?;
    let gamma = cpair_to_c64(spec.gamma);
    let delta = cpair_to_c64(spec.delta);
    let alpha = complex_vec(&spec.alpha, 4, "alpha")?;
    let beta = complex_vec(&spec.beta, 4, "beta")?;
    if gamma.norm() < tol || delta.norm() < tol {
        return Err(CoreError::InvalidSpec(
            "gamma and delta must be nonzero".into(),
        ));
    }
    let mut notes = Vec::new();

    let commute = a.matmul(&b) == b.matmul(&a);
    let semisimple_a = min_poly_squarefree(&mat_to_bigint(&a));
    let semisimple_b = min_poly_squarefree(&mat_to_bigint(&b));
    let det_one = det_is(&a, &[1]) && det_is(&b, &[1]);

    let close = |u: &[Complex64], v: &[Complex64]| {
        u.iter().zip(v).all(|(x, y)| (x - y).norm() < tol)
    };
    let scaled = |v: &[Complex64], c: Complex64| -> Vec<Complex64> {
        v.iter().map(|x| x * c).collect()
    };
    let eigen_relations_ok = close(&apply_int(&a, &alpha), &scaled(&alpha, gamma.inv()))
        && close(&apply_int(&a, &beta), &scaled(&beta, gamma))
        && close(&apply_int(&b, &alpha), &scaled(&alpha, delta.inv()))
        && close(&apply_int(&b, &beta), &scaled(&beta, delta));

    let gens: Vec<Vec<f64>> = (0..4).map(|k| yz_real(alpha[k], beta[k])).collect();
    let gen_mat = Mat::from_cols(gens);
    let generators_independent = crate::kernel::rank_f64(&gen_mat, tol) == 4;

    let lambda = gamma.ln();
    let mu = match spec.k_mu {
        Some(k) => {
            notes.push(format!("mu taken as {k} pi i by the k_mu convention"));
            Complex64::new(0.0, k as f64 * PI)
        }
        None => delta.ln(),
    };
    let mu_matches_delta = (mu.exp() - delta).norm() < recovery_tol(tol);
    if !mu_matches_delta {
        notes.push("exp(mu) does not reproduce delta; k_mu parity is inconsistent with delta".into());
    }
    if spec.k_mu.is_some() && b == Mat::identity(4) {
        notes.push(
            "identity B interpreted as acting through mu = k pi i with delta = exp(mu); k must be even for delta = 1".into(),
        );
    }

    let check_phi = |factor: Complex64| -> bool {
        if !generators_independent {
            return false;
        }
        let rtol = recovery_tol(tol);
        (0..4).all(|k| {
            let image = yz_real(factor * alpha[k], factor.inv() * beta[k]);
            recovers(&gen_mat, &image, rtol)
        })
    };
    let preserved_by_phi_lambda = check_phi(lambda.exp());
    let preserved_by_phi_mu = check_phi(mu.exp());

    let indep_det = lambda.re * mu.im - lambda.im * mu.re;
    let lambda_mu_independent = indep_det.abs() > tol;
    if !lambda_mu_independent {
        notes.push("lambda and mu are linearly dependent over R; the x-translations do not span a lattice".into());
    }

    let valid = commute
        && semisimple_a
        && semisimple_b
        && det_one
        && eigen_relations_ok
        && generators_independent
        && preserved_by_phi_lambda
        && preserved_by_phi_mu
        && lambda_mu_independent
        && mu_matches_delta;
    let subtype = if valid {
        if gamma.im.abs() > tol || delta.im.abs() > tol {
            Some(SolvmanifoldType::Type3a)
        } else {
            Some(SolvmanifoldType::Type3b)
        }
    } else {
        None
    };

    Ok(SolvLatticeReport {
        commute,
        semisimple_a,
        semisimple_b,
        det_one,
        eigen_relations_ok,
        generators_independent,
        preserved_by_phi_lambda,
        preserved_by_phi_mu,
        lambda_mu_independent,
        mu_matches_delta,
        lambda: c64_to_cpair(lambda),
        mu: c64_to_cpair(mu),
        subtype,
        valid,
        notes,
    })
}

/// Checks an abelian lattice specification: six generators of `C^3` that are
/// independent over the reals.
pub fn verify_lattice_abelian(
    spec: &LatticeSpecAbelian,
    tol: f64,
) -> Result<AbelianLatticeReport> {
    if spec.generators.len() != 6 {
        return Err(CoreError::InvalidSpec(
            "abelian lattice needs 6 generators".into(),
        ));
    }
    let mut cols = Vec::new();
    for g in &spec.generators {
        let v = complex_vec(g, 3, "generator")?;
        cols.push(vec![v[0].re, v[0].im, v[1].re, v[1].im, v[2].re, v[2].im]);
    }
    let independent = crate::kernel::rank_f64(&Mat::from_cols(cols), tol) == 6;
    Ok(AbelianLatticeReport {
        generators_independent_over_r: independent,
        valid: independent,
    })
}

/// Classifies a lattice specification into the four quotient types, failing
/// on specifications that do not verify.
pub fn classify(spec: &LatticeSpec, tol: f64) -> Result<SolvmanifoldType> {
    match spec {
        LatticeSpec::Abelian(s) => {
            if verify_lattice_abelian(s, tol)?.valid {
                Ok(SolvmanifoldType::Type1)
            } else {
                Err(CoreError::Classification(
                    "abelian generators are not independent over R".into(),
                ))
            }
        }
        LatticeSpec::Nilpotent(s) => {
            if verify_lattice_nil(s, tol)?.valid {
                Ok(SolvmanifoldType::Type2)
            } else {
                Err(CoreError::Classification(
                    "nilpotent lattice conditions fail".into(),
                ))
            }
        }
        LatticeSpec::Solvable(s) => {
            let report = verify_lattice_solv(s, tol)?;
            report.subtype.ok_or_else(|| {
                CoreError::Classification("solvable lattice conditions fail".into())
            })
        }
    }
}

/// The `x`-parts of the lattice translations (empty for abelian, `1, lambda`
/// for nilpotent, `lambda, mu` for solvable).
pub fn x_parts(spec: &LatticeSpec) -> Vec<Complex64> {
    match spec {
        LatticeSpec::Abelian(_) => vec![],
        LatticeSpec::Nilpotent(s) => vec![Complex64::new(1.0, 0.0), cpair_to_c64(s.lambda)],
        LatticeSpec::Solvable(s) => {
            let mu = match s.k_mu {
                Some(k) => Complex64::new(0.0, k as f64 * PI),
                None => cpair_to_c64(s.delta).ln(),
            };
            vec![cpair_to_c64(s.gamma).ln(), mu]
        }
    }
}

/// The standard abelian lattice `Z[i]^3`.
pub fn example_abelian() -> LatticeSpec {
    let mut generators = Vec::new();
    for k in 0..3 {
        for im in [0.0, 1.0] {
            let mut v = vec![[0.0, 0.0]; 3];
            v[k] = [1.0 - im, im];
            generators.push(v);
        }
    }
    LatticeSpec::Abelian(LatticeSpecAbelian { generators })
}

/// The Gaussian-integer lattice of the nilpotent group (the degenerate
/// specification routed through the closure check).
pub fn example1_iwasawa() -> LatticeSpec {
    LatticeSpec::Nilpotent(LatticeSpecNil {
        a: vec![vec![0, -1], vec![1, 0]],
        lambda: [0.0, 1.0],
        alpha: vec![[0.0, 0.0], [0.0, 0.0]],
        beta: vec![[0.0, 0.0], [0.0, 0.0]],
    })
}

/// The quartic whose companion matrix drives [`example2`].
pub fn example2_char_poly() -> crate::kernel::IntPolynomial {
    crate::kernel::IntPolynomial::from_i64(&[1, -1, 3, -1, 1])
}

/// Solvable lattice from the degree-4 companion matrix of
/// `t^4 - t^3 + 3t^2 - t + 1`, whose four eigenvalues are non-real; `gamma`
/// is the one with `|gamma| > 1` and positive imaginary part. Produces a
/// type (3a) quotient.
pub fn example2() -> Result<LatticeSpec> {
    let p = example2_char_poly();
    let companion = p.companion();
    let roots = crate::kernel::poly_roots(&p, crate::tol::DEFAULT_TOL)?;
    let gamma = roots
        .iter()
        .copied()
        .find(|r| r.norm() > 1.0 && r.im > 0.0)
        .ok_or_else(|| CoreError::Classification("expected a root outside the unit circle".into()))?;
    let powers = |c: Complex64| -> Vec<CPair> {
        (0..4).map(|k| c64_to_cpair(c.powi(k))).collect()
    };
    let a: Vec<Vec<i64>> = (0..4)
        .map(|i| (0..4).map(|j| companion[(i, j)].to_string().parse().unwrap()).collect())
        .collect();
    Ok(LatticeSpec::Solvable(LatticeSpecSolv {
        a,
        b: identity_rows(4),
        gamma: c64_to_cpair(gamma),
        delta: [1.0, 0.0],
        alpha: powers(gamma.inv()),
        beta: powers(gamma),
        k_mu: Some(2),
    }))
}

/// Solvable lattice doubling `A0 = [[2,1],[1,1]]` with real eigenvalue
/// `gamma = (3 + sqrt 5)/2` and the twist `epsilon = i`. Produces a
/// type (3b) quotient.
pub fn example3() -> LatticeSpec {
    let gamma = (3.0 + 5.0f64.sqrt()) / 2.0;
    solv_spec_from_sl2(&[[2, 1], [1, 1]], gamma, 2)
}

fn identity_rows(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Builds the doubled-block solvable spec from a hyperbolic `SL(2, Z)` matrix
/// with largest eigenvalue `gamma`: `A = A0 (+) A0`, eigenvectors twisted by
/// `epsilon = i`, `B = I`, `mu = k_mu pi i`.
fn solv_spec_from_sl2(a0: &[[i64; 2]; 2], gamma: f64, k_mu: i64) -> LatticeSpec {
    let [[p, q], [r, s]] = *a0;
    let a = vec![
        vec![p, q, 0, 0],
        vec![r, s, 0, 0],
        vec![0, 0, p, q],
        vec![0, 0, r, s],
    ];
    // Eigenvector of A0 for eigenvalue t with q != 0: (q, t - p).
    let evec = |t: f64| -> (f64, f64) { (q as f64, t - p as f64) };
    let (a1, a2) = evec(1.0 / gamma);
    let (b1, b2) = evec(gamma);
    let twist = |c1: f64, c2: f64| -> Vec<CPair> {
        vec![[c1, 0.0], [c2, 0.0], [0.0, c1], [0.0, c2]]
    };
    LatticeSpec::Solvable(LatticeSpecSolv {
        a,
        b: identity_rows(4),
        gamma: [gamma, 0.0],
        delta: [1.0, 0.0],
        alpha: twist(a1, a2),
        beta: twist(b1, b2),
        k_mu: Some(k_mu),
    })
}

/// Random type (3b) specification: a hyperbolic word in the standard
/// `SL(2, Z)` generators, doubled as in [`example3`].
pub fn random_type3b_spec(rng: &mut impl Rng) -> LatticeSpec {
    // Products of [[1, m], [0, 1]] and [[1, 0], [n, 1]] with m, n >= 1 have
    // trace > 2, hence real distinct eigenvalues.
    let m = rng.gen_range(1..=3i64);
    let n = rng.gen_range(1..=3i64);
    let extra = rng.gen_range(0..=2i64);
    // [[1, m], [0, 1]] * [[1, 0], [n, 1]] = [[1 + mn, m], [n, 1]], then an
    // optional extra upper shear keeps entries varied.
    let base = [[1 + m * n, m], [n, 1]];
    let a0 = [
        [base[0][0] + extra * base[1][0], base[0][1] + extra * base[1][1]],
        [base[1][0], base[1][1]],
    ];
    let tr = (a0[0][0] + a0[1][1]) as f64;
    let gamma = (tr + (tr * tr - 4.0).sqrt()) / 2.0;
    let k_mu = 2 * rng.gen_range(1..=3i64);
    solv_spec_from_sl2(&a0, gamma, k_mu)
}

/// Random type (3a) specification: the companion matrix of a palindromic
/// quartic `t^4 - a t^3 + b t^2 - a t + 1` chosen with `a^2 < 4(b - 2)`, so
/// all four roots are non-real and off the unit circle.
pub fn random_type3a_spec(rng: &mut impl Rng) -> Result<LatticeSpec> {
    let a_coef = rng.gen_range(-3..=3i64);
    let b_coef = (a_coef * a_coef + 3) / 4 + 3 + rng.gen_range(0..=2i64);
    let p = crate::kernel::IntPolynomial::from_i64(&[1, -a_coef, b_coef, -a_coef, 1]);
    let companion = p.companion();
    let roots = crate::kernel::poly_roots(&p, crate::tol::DEFAULT_TOL)?;
    let gamma = roots
        .iter()
        .copied()
        .find(|r| r.norm() > 1.0 && r.im > 0.0)
        .ok_or_else(|| CoreError::Classification("expected a non-real root outside the unit circle".into()))?;
    let powers = |c: Complex64| -> Vec<CPair> {
        (0..4).map(|k| c64_to_cpair(c.powi(k))).collect()
    };
    let a: Vec<Vec<i64>> = (0..4)
        .map(|i| (0..4).map(|j| companion[(i, j)].to_string().parse().unwrap()).collect())
        .collect();
    Ok(LatticeSpec::Solvable(LatticeSpecSolv {
        a,
        b: identity_rows(4),
        gamma: c64_to_cpair(gamma),
        delta: [1.0, 0.0],
        alpha: powers(gamma.inv()),
        beta: powers(gamma),
        k_mu: Some(2 * rng.gen_range(1..=3i64)),
    }))
}
