//! Almost complex structures on real Lie algebras and their integrability.
//!
//! An almost complex structure is a rational matrix `J` with `J^2 = -I`. Two
//! integrability tests are provided and proved against each other in the test
//! suite: the Nijenhuis tensor vanishing, and closure of the `-i` eigenspace
//! `h_J = { u + i J u }` under the complexified bracket. Both sides run in
//! exact arithmetic, so the equivalence is checked with no tolerance at all.

use crate::algebra::LieAlgebra;
use crate::error::{CoreError, Result};
use crate::kernel::{
    in_span, inverse_exact, parse_rational, span_rank, GaussianRational, Mat, Rational,
};
use num::traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// A linear map `J` on a real Lie algebra with `J^2 = -I`, stored exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "JsonJ", into = "JsonJ")]
pub struct AlmostComplexStructure {
    mat: Mat<Rational>,
}

impl AlmostComplexStructure {
    /// Validates that the matrix is square of even dimension and squares to
    /// minus the identity.
    pub fn new(mat: Mat<Rational>) -> Result<Self> {
        if !mat.is_square() || !mat.rows().is_multiple_of(2) {
            return Err(CoreError::NotComplexStructure);
        }
        let n = mat.rows();
        if mat.matmul(&mat) != Mat::identity(n).neg() {
            return Err(CoreError::NotComplexStructure);
        }
        Ok(AlmostComplexStructure { mat })
    }

    /// The standard structure on an interleaved realified basis:
    /// `J f_{2k} = f_{2k+1}`, `J f_{2k+1} = -f_{2k}`. This is multiplication
    /// by `i` when the real algebra came from [`LieAlgebra::realify`].
    pub fn standard(dim: usize) -> Self {
        assert!(dim.is_multiple_of(2), "almost complex structures need even dimension");
        let mut mat = Mat::zeros(dim, dim);
        for k in 0..dim / 2 {
            mat[(2 * k + 1, 2 * k)] = crate::kernel::rat(1, 1);
            mat[(2 * k, 2 * k + 1)] = crate::kernel::rat(-1, 1);
        }
        AlmostComplexStructure { mat }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &Mat<Rational> {
        &self.mat
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.mat.mul_vec(v)
    }
}

/// Wire format: entries as `"p/q"` strings, row major.
#[derive(Serialize, Deserialize)]
struct JsonJ {
    matrix: Vec<Vec<String>>,
}

impl From<AlmostComplexStructure> for JsonJ {
    fn from(j: AlmostComplexStructure) -> Self {
        JsonJ {
            matrix: j
                .mat
                .rows_iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<JsonJ> for AlmostComplexStructure {
    type Error = CoreError;

    fn try_from(j: JsonJ) -> Result<Self> {
        let rows = j
            .matrix
            .into_iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<Vec<Vec<Rational>>>>()?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(CoreError::InvalidSpec("matrix is not square".into()));
        }
        AlmostComplexStructure::new(Mat::from_rows(rows))
    }
}

/// Nijenhuis tensor `N_J(u, v) = [Ju, Jv] - J[Ju, v] - J[u, Jv] - [u, v]`,
/// computed exactly.
pub fn nijenhuis(
    g: &LieAlgebra,
    j: &AlmostComplexStructure,
    u: &[Rational],
    v: &[Rational],
) -> Vec<Rational> {
    let ju = j.apply(u);
    let jv = j.apply(v);
    let mut out = g.bracket(&ju, &jv);
    for (o, t) in out.iter_mut().zip(j.apply(&g.bracket(&ju, v))) {
        *o -= t;
    }
    for (o, t) in out.iter_mut().zip(j.apply(&g.bracket(u, &jv))) {
        *o -= t;
    }
    for (o, t) in out.iter_mut().zip(g.bracket(u, v)) {
        *o -= t;
    }
    out
}

/// Whether `N_J` vanishes identically (checked on basis pairs, which is
/// enough by bilinearity).
pub fn is_integrable(g: &LieAlgebra, j: &AlmostComplexStructure) -> bool {
    assert_eq!(g.dim(), j.dim(), "structure and algebra dimensions differ");
    for a in 0..g.dim() {
        for b in (a + 1)..g.dim() {
            let n = nijenhuis(g, j, &g.basis_vector(a), &g.basis_vector(b));
            if n.iter().any(|c| !c.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// Basis of the `-i` eigenspace `h_J = { u + i J u }` inside the
/// complexification, as Gaussian rational coordinate vectors.
pub fn h_from_j(j: &AlmostComplexStructure) -> Vec<Vec<GaussianRational>> {
    let n = j.dim();
    let mut basis: Vec<Vec<GaussianRational>> = Vec::new();
    for k in 0..n {
        let col = j.matrix().col(k);
        let cand: Vec<GaussianRational> = (0..n)
            .map(|m| {
                let re = if m == k {
                    crate::kernel::rat(1, 1)
                } else {
                    Rational::zero()
                };
                GaussianRational::new(re, col[m].clone())
            })
            .collect();
        basis.push(cand);
        if span_rank(&basis) < basis.len() {
            basis.pop();
        }
        if basis.len() == n / 2 {
            break;
        }
    }
    debug_assert_eq!(basis.len(), n / 2);
    basis
}

/// Reconstructs the almost complex structure whose `-i` eigenspace is the
/// span of `w`. Requires `w` to consist of `dim/2` vectors meeting their
/// conjugates only in zero, so that every real vector splits as `a + conj(a)`
/// with `a` in the span; then `J` maps `a + conj(a)` to `-i a + i conj(a)`.
pub fn j_from_subspace(
    dim: usize,
    w: &[Vec<GaussianRational>],
) -> Result<AlmostComplexStructure> {
    if w.len() != dim / 2 || w.iter().any(|v| v.len() != dim) {
        return Err(CoreError::Decomposition);
    }
    let mut cols: Vec<Vec<GaussianRational>> = w.to_vec();
    cols.extend(w.iter().map(|v| v.iter().map(|c| c.conj()).collect()));
    let m = Mat::from_cols(cols);
    let minv = inverse_exact(&m).ok_or(CoreError::Decomposition)?;
    let mut jmat = Mat::zeros(dim, dim);
    for k in 0..dim {
        // Coordinates of e_k in the W + conj(W) splitting; the W component is
        // a_k = sum_m x_m w_m and J e_k = -i a_k + i conj(a_k) = 2 Im(a_k).
        let x = minv.col(k);
        let mut a = vec![GaussianRational::zero(); dim];
        for (xm, wv) in x.iter().take(dim / 2).zip(w) {
            for (acc, c) in a.iter_mut().zip(wv) {
                *acc = acc.clone() + xm.clone() * c.clone();
            }
        }
        for (row, am) in a.iter().enumerate() {
            jmat[(row, k)] = am.im.clone() + am.im.clone();
        }
    }
    AlmostComplexStructure::new(jmat)
}

/// Whether the span of the given complexified vectors is closed under the
/// bracket, decided exactly.
pub fn is_subalgebra(g: &LieAlgebra, vecs: &[Vec<GaussianRational>]) -> bool {
    for (i, x) in vecs.iter().enumerate() {
        for y in vecs.iter().skip(i + 1) {
            let w = g.bracket_gaussian(x, y);
            if !in_span(vecs, &w) {
                return false;
            }
        }
    }
    true
}

/// A random almost complex structure, produced by conjugating the standard
/// one with a random invertible rational matrix. Every `J` with `J^2 = -I`
/// arises this way, so sampling is unbiased across conjugacy.
pub fn random_conjugate_j(dim: usize, rng: &mut impl Rng) -> AlmostComplexStructure {
    loop {
        let g = Mat::from_fn(dim, dim, |_, _| {
            crate::kernel::rat(rng.gen_range(-3..=3), rng.gen_range(1..=2))
        });
        let Some(ginv) = inverse_exact(&g) else {
            continue;
        };
        let j0 = AlmostComplexStructure::standard(dim);
        let jmat = g.matmul(j0.matrix()).matmul(&ginv);
        return AlmostComplexStructure { mat: jmat };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, LieAlgebra};
    use crate::kernel::{rat, span_equal};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    /// J pairing X with X' but crossing Y with Z and Y' with Z'.
    fn crossed_j() -> AlmostComplexStructure {
        let mut m = Mat::zeros(6, 6);
        let one = || rat(1, 1);
        let neg = || rat(-1, 1);
        m[(1, 0)] = one();
        m[(0, 1)] = neg();
        m[(4, 2)] = one();
        m[(2, 4)] = neg();
        m[(5, 3)] = one();
        m[(3, 5)] = neg();
        AlmostComplexStructure::new(m).unwrap()
    }

    #[test]
    fn standard_structure_is_integrable_on_all_real_forms() {
        for entry in catalog() {
            let g = &entry.real_form;
            let j0 = AlmostComplexStructure::standard(g.dim());
            assert!(is_integrable(g, &j0), "{:?}", entry.kind);
        }
    }

    #[test]
    fn crossed_structure_is_not_integrable_on_the_solvable_form() {
        let g = LieAlgebra::solvable3().realify();
        let j = crossed_j();
        // Hand computation in the (X, X', Y, Y', Z, Z') basis:
        // N(X, Y) = [X', Z] - J[X', Y] - J[X, Z] - [X, Y]
        //         = Z' + Z' + Y + Y = 2Y + 2Z'.
        let n = nijenhuis(&g, &j, &g.basis_vector(0), &g.basis_vector(2));
        let mut expect = vec![rat(0, 1); 6];
        expect[2] = rat(2, 1);
        expect[5] = rat(2, 1);
        assert_eq!(n, expect);
        assert!(!is_integrable(&g, &j));
    }

    #[test]
    fn eigenspace_of_standard_structure_is_the_holomorphic_span() {
        let j0 = AlmostComplexStructure::standard(6);
        let h = h_from_j(&j0);
        assert_eq!(h.len(), 3);
        // Expected: f_{2k} + i f_{2k+1} for k = 0, 1, 2.
        let expect: Vec<Vec<GaussianRational>> = (0..3)
            .map(|k| {
                let mut v = vec![GaussianRational::zero(); 6];
                v[2 * k] = GaussianRational::from_rational(rat(1, 1));
                v[2 * k + 1] = GaussianRational::i();
                v
            })
            .collect();
        assert!(span_equal(&h, &expect));
    }

    #[test]
    fn eigenspace_really_is_an_eigenspace() {
        let mut rng = StdRng::seed_from_u64(3);
        let j = random_conjugate_j(6, &mut rng);
        for v in h_from_j(&j) {
            // J v (applied entrywise over Gaussian rationals) must equal -i v.
            let jv: Vec<GaussianRational> = (0..6)
                .map(|r| {
                    (0..6)
                        .map(|c| {
                            GaussianRational::from_rational(j.matrix()[(r, c)].clone())
                                * v[c].clone()
                        })
                        .fold(GaussianRational::zero(), |a, b| a + b)
                })
                .collect();
            let minus_iv: Vec<GaussianRational> =
                v.iter().map(|c| -(GaussianRational::i() * c.clone())).collect();
            assert_eq!(jv, minus_iv);
        }
    }

    #[test]
    fn subspace_roundtrip_recovers_the_structure_exactly() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..10 {
            let j = random_conjugate_j(6, &mut rng);
            let h = h_from_j(&j);
            let back = j_from_subspace(6, &h).unwrap();
            assert_eq!(back, j);
        }
    }

    #[test]
    fn integrability_agrees_with_eigenspace_closure() {
        let mut rng = StdRng::seed_from_u64(29);
        for entry in catalog() {
            let g = &entry.real_form;
            let mut integrable_seen = 0;
            for _ in 0..15 {
                let j = random_conjugate_j(g.dim(), &mut rng);
                let direct = is_integrable(g, &j);
                let via_span = is_subalgebra(g, &h_from_j(&j));
                assert_eq!(direct, via_span, "{:?}", entry.kind);
                if direct {
                    integrable_seen += 1;
                }
            }
            // The abelian bracket vanishes, so every structure is integrable
            // there; elsewhere random conjugates are usually not.
            if entry.kind == crate::algebra::GroupKind::Abelian {
                assert_eq!(integrable_seen, 15);
            }
        }
    }

    #[test]
    fn mixed_span_is_not_a_subalgebra() {
        // span{X, Y + Z} in the real solvable form: [X, Y + Z] = -Y + Z,
        // which needs opposite signs of the two generators.
        let g = LieAlgebra::solvable3().realify();
        let embed = |k: usize| {
            let mut v = vec![GaussianRational::zero(); 6];
            v[k] = GaussianRational::from_rational(rat(1, 1));
            v
        };
        let mut y_plus_z = vec![GaussianRational::zero(); 6];
        y_plus_z[2] = GaussianRational::from_rational(rat(1, 1));
        y_plus_z[4] = GaussianRational::from_rational(rat(1, 1));
        assert!(!is_subalgebra(&g, &[embed(0), y_plus_z]));
        // span{Y, Z} is abelian, hence closed.
        assert!(is_subalgebra(&g, &[embed(2), embed(4)]));
    }

    #[test]
    fn validation_rejects_non_structures() {
        assert!(AlmostComplexStructure::new(Mat::identity(6)).is_err());
        assert!(AlmostComplexStructure::new(Mat::<Rational>::zeros(5, 5)).is_err());
    }

    #[test]
    fn json_roundtrip_is_exact() {
        let mut rng = StdRng::seed_from_u64(41);
        let j = random_conjugate_j(6, &mut rng);
        let s = serde_json::to_string(&j).unwrap();
        let back: AlmostComplexStructure = serde_json::from_str(&s).unwrap();
        assert_eq!(back, j);
        // A matrix that fails J^2 = -I must not deserialize.
        let bad = serde_json::to_string(&JsonJ {
            matrix: vec![vec!["1".into(), "0".into()], vec!["0".into(), "1".into()]],
        })
        .unwrap();
        assert!(serde_json::from_str::<AlmostComplexStructure>(&bad).is_err());
    }
}
