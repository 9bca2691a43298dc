//! Finite-dimensional Lie algebras with rational structure constants.
//!
//! A [`LieAlgebra`] stores the brackets of a fixed basis exactly, so Jacobi,
//! unimodularity, and the derived and lower central series are decided with
//! no rounding at all. The same structure constants serve double duty: read
//! over the rationals they describe a real Lie algebra, read over the
//! Gaussian rationals (or `Complex64`) they describe its complexification.
//!
//! [`catalog`] lists the three isomorphism classes of simply connected
//! three-dimensional complex solvable Lie groups by their algebras, together
//! with the six-dimensional real form produced by [`LieAlgebra::realify`].

use crate::error::{CoreError, Result};
use crate::kernel::{rat, span_rank, GaussianRational, Mat, Rational, Scalar};
use num::complex::Complex64;
use num::traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// The three isomorphism classes of simply connected three-dimensional
/// complex solvable Lie groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    /// `(C^3, +)`.
    Abelian,
    /// The complex Heisenberg group: nilpotent, `[X, Y] = Z`.
    Nilpotent,
    /// The non-nilpotent group: `[X, Y] = -Y`, `[X, Z] = Z`.
    Solvable,
}

impl GroupKind {
    pub const ALL: [GroupKind; 3] = [GroupKind::Abelian, GroupKind::Nilpotent, GroupKind::Solvable];
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupKind::Abelian => "abelian",
            GroupKind::Nilpotent => "nilpotent",
            GroupKind::Solvable => "solvable",
        };
        f.write_str(s)
    }
}

/// A Lie algebra given by structure constants on a fixed basis `e_0..e_{n-1}`.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; the rest follow by
/// antisymmetry. Construction checks shape but not the Jacobi identity, which
/// is a separate, reportable property ([`LieAlgebra::jacobi_holds`]).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AlgebraJson", into = "AlgebraJson")]
pub struct LieAlgebra {
    dim: usize,
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl LieAlgebra {
    /// Builds an algebra from `(i, j, coefficients of [e_i, e_j])` triples.
    /// Requires `i < j < dim` and coefficient vectors of length `dim`;
    /// all-zero brackets are dropped so equal algebras compare equal.
    pub fn new(dim: usize, entries: Vec<(usize, usize, Vec<Rational>)>) -> Result<Self> {
        let mut brackets = BTreeMap::new();
        for (i, j, coeffs) in entries {
            if i >= j || j >= dim {
                return Err(CoreError::InvalidSpec(format!(
                    "bracket indices ({i}, {j}) out of range for dimension {dim}"
                )));
            }
            if coeffs.len() != dim {
                return Err(CoreError::InvalidSpec(format!(
                    "bracket ({i}, {j}) has {} coefficients, expected {dim}",
                    coeffs.len()
                )));
            }
            if coeffs.iter().any(|c| !c.is_zero())
                && brackets.insert((i, j), coeffs).is_some() {
                    return Err(CoreError::InvalidSpec(format!(
                        "bracket ({i}, {j}) given twice"
                    )));
                }
        }
        Ok(LieAlgebra { dim, brackets })
    }

    /// The abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            brackets: BTreeMap::new(),
        }
    }

    /// Three-dimensional Heisenberg algebra: `[e_0, e_1] = e_2`.
    pub fn heisenberg3() -> Self {
        let mut e2 = vec![rat(0, 1); 3];
        e2[2] = rat(1, 1);
        LieAlgebra::new(3, vec![(0, 1, e2)]).unwrap()
    }

    /// Three-dimensional non-nilpotent solvable algebra:
    /// `[e_0, e_1] = -e_1`, `[e_0, e_2] = e_2`.
    pub fn solvable3() -> Self {
        let mut m_e1 = vec![rat(0, 1); 3];
        m_e1[1] = rat(-1, 1);
        let mut e2 = vec![rat(0, 1); 3];
        e2[2] = rat(1, 1);
        LieAlgebra::new(3, vec![(0, 1, m_e1), (0, 2, e2)]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Structure constants of `[e_i, e_j]` for any `i != j`, using
    /// antisymmetry for `i > j`. Diagonal entries are zero.
    pub fn structure_coeffs(&self, i: usize, j: usize) -> Vec<Rational> {
        assert!(i < self.dim && j < self.dim);
        if i == j {
            return vec![Rational::zero(); self.dim];
        }
        let (key, negate) = if i < j { ((i, j), false) } else { ((j, i), true) };
        match self.brackets.get(&key) {
            Some(coeffs) if negate => coeffs.iter().map(|c| -c.clone()).collect(),
            Some(coeffs) => coeffs.clone(),
            None => vec![Rational::zero(); self.dim],
        }
    }

    /// Bracket of two coordinate vectors over any scalar ring, with `lift`
    /// injecting the rational structure constants. This is how the one set of
    /// constants acts over the rationals, Gaussian rationals, and `Complex64`.
    pub fn bracket_with<T: Scalar>(
        &self,
        u: &[T],
        v: &[T],
        lift: impl Fn(&Rational) -> T,
    ) -> Vec<T> {
        assert_eq!(u.len(), self.dim, "vector length must match dimension");
        assert_eq!(v.len(), self.dim, "vector length must match dimension");
        let mut out = vec![T::zero(); self.dim];
        for (&(i, j), coeffs) in &self.brackets {
            let factor = u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone();
            if factor == T::zero() {
                continue;
            }
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    out[k] = out[k].clone() + factor.clone() * lift(c);
                }
            }
        }
        out
    }

    /// Exact rational bracket.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        self.bracket_with(u, v, Clone::clone)
    }

    /// Exact bracket of Gaussian rational vectors (the complexified algebra).
    pub fn bracket_gaussian(
        &self,
        u: &[GaussianRational],
        v: &[GaussianRational],
    ) -> Vec<GaussianRational> {
        self.bracket_with(u, v, |c| GaussianRational::from_rational(c.clone()))
    }

    /// Floating-point bracket of complex vectors.
    pub fn bracket_c64(&self, u: &[Complex64], v: &[Complex64]) -> Vec<Complex64> {
        self.bracket_with(u, v, |c| {
            Complex64::new(crate::kernel::rational_to_f64(c), 0.0)
        })
    }

    /// The `k`-th standard basis vector as rational coordinates.
    pub fn basis_vector(&self, k: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[k] = rat(1, 1);
        v
    }

    /// Matrix of `ad(u) = [u, -]` in the defining basis (columns are
    /// `[u, e_j]`).
    pub fn ad_matrix(&self, u: &[Rational]) -> Mat<Rational> {
        let cols = (0..self.dim)
            .map(|j| self.bracket(u, &self.basis_vector(j)))
            .collect();
        Mat::from_cols(cols)
    }

    /// Whether the Jacobi identity holds on all basis triples (equivalently,
    /// everywhere, by trilinearity).
    pub fn jacobi_holds(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let ei = self.basis_vector(i);
                    let ej = self.basis_vector(j);
                    let ek = self.basis_vector(k);
                    let mut total = vec![Rational::zero(); self.dim];
                    for (a, b, c) in [(&ei, &ej, &ek), (&ej, &ek, &ei), (&ek, &ei, &ej)] {
                        let inner = self.bracket(a, b);
                        let term = self.bracket(&inner, c);
                        for (t, s) in total.iter_mut().zip(term) {
                            *t += s;
                        }
                    }
                    if total.iter().any(|t| !t.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether every `ad(e_i)` is traceless. For a Lie group this is
    /// equivalent to the Haar measure being two-sided invariant, a necessary
    /// condition for the group to admit a lattice.
    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|i| {
            self.ad_matrix(&self.basis_vector(i))
                .trace()
                .is_zero()
        })
    }

    /// A maximal independent subset of `[a, b]` over all generator pairs.
    fn product_span(&self, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let mut kept: Vec<Vec<Rational>> = Vec::new();
        for x in a {
            for y in b {
                let w = self.bracket(x, y);
                if w.iter().all(|c| c.is_zero()) {
                    continue;
                }
                kept.push(w);
                if span_rank(&kept) < kept.len() {
                    kept.pop();
                }
            }
        }
        kept
    }

    /// Dimensions of the derived series `g, [g, g], [[g, g], [g, g]], ...`
    /// until the dimension repeats or reaches zero.
    pub fn derived_series_dims(&self) -> Vec<usize> {
        let mut cur: Vec<Vec<Rational>> = (0..self.dim).map(|k| self.basis_vector(k)).collect();
        let mut dims = vec![self.dim];
        loop {
            let next = self.product_span(&cur, &cur);
            dims.push(next.len());
            if next.len() == *dims.get(dims.len() - 2).unwrap() || next.is_empty() {
                return dims;
            }
            cur = next;
        }
    }

    /// Dimensions of the lower central series `g, [g, g], [g, [g, g]], ...`
    /// until the dimension repeats or reaches zero.
    pub fn lower_central_series_dims(&self) -> Vec<usize> {
        let all: Vec<Vec<Rational>> = (0..self.dim).map(|k| self.basis_vector(k)).collect();
        let mut cur = all.clone();
        let mut dims = vec![self.dim];
        loop {
            let next = self.product_span(&all, &cur);
            dims.push(next.len());
            if next.len() == *dims.get(dims.len() - 2).unwrap() || next.is_empty() {
                return dims;
            }
            cur = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        *self.derived_series_dims().last().unwrap() == 0
    }

    pub fn is_nilpotent(&self) -> bool {
        *self.lower_central_series_dims().last().unwrap() == 0
    }

    /// Dimension of the derived subalgebra `[g, g]`.
    pub fn derived_dim(&self) -> usize {
        let all: Vec<Vec<Rational>> = (0..self.dim).map(|k| self.basis_vector(k)).collect();
        self.product_span(&all, &all).len()
    }

    /// Dimension of the span of all brackets `[a, b]` with `a` drawn from the
    /// first list and `b` from the second.
    pub fn bracket_span_dim(&self, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> usize {
        self.product_span(a, b).len()
    }

    /// Whether the span of the given vectors is closed under the bracket.
    pub fn closed_under_bracket(&self, vecs: &[Vec<Rational>]) -> bool {
        for x in vecs {
            for y in vecs {
                let w = self.bracket(x, y);
                if !crate::kernel::in_span(vecs, &w) {
                    return false;
                }
            }
        }
        true
    }

    /// The underlying real algebra of the complex algebra these constants
    /// describe, of twice the dimension.
    ///
    /// Basis order interleaves real and imaginary parts: `e_k` of the complex
    /// algebra becomes `f_{2k}` and `i e_k` becomes `f_{2k+1}`. Writing `c`
    /// for a (real rational) structure constant of `[e_i, e_j] = sum c e_k`,
    /// the real brackets are
    /// `[f_{2i}, f_{2j}] = sum c f_{2k}`,
    /// `[f_{2i}, f_{2j+1}] = [f_{2i+1}, f_{2j}] = sum c f_{2k+1}`, and
    /// `[f_{2i+1}, f_{2j+1}] = -sum c f_{2k}`.
    pub fn realify(&self) -> LieAlgebra {
        let n = self.dim;
        let mut entries: Vec<(usize, usize, Vec<Rational>)> = Vec::new();
        let mut push = |a: usize, b: usize, coeffs: Vec<Rational>| {
            if a < b {
                entries.push((a, b, coeffs));
            } else {
                entries.push((b, a, coeffs.into_iter().map(|c| -c).collect()));
            }
        };
        for (&(i, j), coeffs) in &self.brackets {
            let mut real_part = vec![Rational::zero(); 2 * n];
            let mut imag_part = vec![Rational::zero(); 2 * n];
            let mut neg_real = vec![Rational::zero(); 2 * n];
            for (k, c) in coeffs.iter().enumerate() {
                real_part[2 * k] = c.clone();
                imag_part[2 * k + 1] = c.clone();
                neg_real[2 * k] = -c.clone();
            }
            push(2 * i, 2 * j, real_part);
            push(2 * i, 2 * j + 1, imag_part.clone());
            push(2 * i + 1, 2 * j, imag_part);
            push(2 * i + 1, 2 * j + 1, neg_real);
        }
        LieAlgebra::new(2 * n, entries).unwrap()
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}", self.dim)?;
        for (&(i, j), coeffs) in &self.brackets {
            let terms: Vec<String> = coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{c} e{k}"))
                .collect();
            write!(f, ", [e{i}, e{j}] = {}", terms.join(" + "))?;
        }
        f.write_str(")")
    }
}

/// Serialization mirror of [`LieAlgebra`]: rationals travel as `"p/q"`
/// strings so the format is exact and readable.
#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    brackets: Vec<(usize, usize, Vec<String>)>,
}

impl From<LieAlgebra> for AlgebraJson {
    fn from(a: LieAlgebra) -> Self {
        AlgebraJson {
            dim: a.dim,
            brackets: a
                .brackets
                .into_iter()
                .map(|((i, j), coeffs)| {
                    (i, j, coeffs.into_iter().map(|c| c.to_string()).collect())
                })
                .collect(),
        }
    }
}

impl TryFrom<AlgebraJson> for LieAlgebra {
    type Error = CoreError;

    fn try_from(j: AlgebraJson) -> Result<Self> {
        let entries = j
            .brackets
            .into_iter()
            .map(|(i, jx, coeffs)| {
                let parsed: Result<Vec<Rational>> = coeffs
                    .iter()
                    .map(|s| crate::kernel::parse_rational(s))
                    .collect();
                Ok((i, jx, parsed?))
            })
            .collect::<Result<Vec<_>>>()?;
        LieAlgebra::new(j.dim, entries)
    }
}

/// One of the three classes: the complex algebra, its real form, and the
/// basis indices of the complex algebra spanning the nilradical.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub kind: GroupKind,
    pub complex_algebra: LieAlgebra,
    pub real_form: LieAlgebra,
    pub nilradical_indices: Vec<usize>,
}

/// The full classification in a fixed order: abelian, nilpotent, solvable.
pub fn catalog() -> Vec<CatalogEntry> {
    let abelian = LieAlgebra::abelian(3);
    let nilpotent = LieAlgebra::heisenberg3();
    let solvable = LieAlgebra::solvable3();
    vec![
        CatalogEntry {
            kind: GroupKind::Abelian,
            real_form: abelian.realify(),
            complex_algebra: abelian,
            nilradical_indices: vec![0, 1, 2],
        },
        CatalogEntry {
            kind: GroupKind::Nilpotent,
            real_form: nilpotent.realify(),
            complex_algebra: nilpotent,
            nilradical_indices: vec![0, 1, 2],
        },
        CatalogEntry {
            kind: GroupKind::Solvable,
            real_form: solvable.realify(),
            complex_algebra: solvable,
            nilradical_indices: vec![1, 2],
        },
    ]
}

/// The catalog entry for one kind.
pub fn catalog_entry(kind: GroupKind) -> CatalogEntry {
    catalog()
        .into_iter()
        .find(|e| e.kind == kind)
        .expect("catalog covers every kind")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_rational_vec(rng: &mut StdRng, dim: usize) -> Vec<Rational> {
        (0..dim)
            .map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
            .collect()
    }

    #[test]
    fn catalog_algebras_satisfy_jacobi_and_unimodularity() {
        for entry in catalog() {
            assert!(entry.complex_algebra.jacobi_holds(), "{:?}", entry.kind);
            assert!(entry.real_form.jacobi_holds(), "{:?}", entry.kind);
            assert!(entry.complex_algebra.is_unimodular(), "{:?}", entry.kind);
            assert!(entry.real_form.is_unimodular(), "{:?}", entry.kind);
        }
    }

    #[test]
    fn series_dimensions_separate_the_three_kinds() {
        let abelian = LieAlgebra::abelian(3);
        assert_eq!(abelian.derived_series_dims(), vec![3, 0]);
        assert_eq!(abelian.lower_central_series_dims(), vec![3, 0]);
        assert!(abelian.is_nilpotent() && abelian.is_solvable());

        let nil = LieAlgebra::heisenberg3();
        assert_eq!(nil.derived_series_dims(), vec![3, 1, 0]);
        assert_eq!(nil.lower_central_series_dims(), vec![3, 1, 0]);
        assert!(nil.is_nilpotent() && nil.is_solvable());

        let solv = LieAlgebra::solvable3();
        assert_eq!(solv.derived_series_dims(), vec![3, 2, 0]);
        assert_eq!(solv.lower_central_series_dims(), vec![3, 2, 2]);
        assert!(!solv.is_nilpotent());
        assert!(solv.is_solvable());
    }

    #[test]
    fn ad_of_first_generator_in_solvable_algebra() {
        let solv = LieAlgebra::solvable3();
        let ad = solv.ad_matrix(&solv.basis_vector(0));
        let expect = Mat::from_rows(vec![
            vec![rat(0, 1), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(-1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(1, 1)],
        ]);
        assert_eq!(ad, expect);
        assert!(ad.trace().is_zero());
    }

    #[test]
    fn ad_is_a_homomorphism_into_matrix_commutators() {
        let mut rng = StdRng::seed_from_u64(7);
        for entry in catalog() {
            let g = &entry.real_form;
            for _ in 0..20 {
                let u = random_rational_vec(&mut rng, g.dim());
                let v = random_rational_vec(&mut rng, g.dim());
                let lhs = g.ad_matrix(&g.bracket(&u, &v));
                let (au, av) = (g.ad_matrix(&u), g.ad_matrix(&v));
                let rhs = au.matmul(&av).sub(&av.matmul(&au));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn bracket_is_antisymmetric_and_bilinear() {
        let mut rng = StdRng::seed_from_u64(11);
        let g = LieAlgebra::solvable3().realify();
        for _ in 0..20 {
            let u = random_rational_vec(&mut rng, 6);
            let v = random_rational_vec(&mut rng, 6);
            let uv = g.bracket(&u, &v);
            let vu = g.bracket(&v, &u);
            assert!(uv.iter().zip(&vu).all(|(a, b)| (a.clone() + b).is_zero()));
            assert!(g.bracket(&u, &u).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn realified_solvable_matches_hand_written_table() {
        // In the interleaved basis (X, X', Y, Y', Z, Z'):
        //   [X, Y] = -Y    [X, Y'] = -Y'   [X', Y] = -Y'   [X', Y'] = Y
        //   [X, Z] = Z     [X, Z'] = Z'    [X', Z] = Z'    [X', Z'] = -Z
        let r = LieAlgebra::solvable3().realify();
        let coeff = |i: usize, j: usize| r.structure_coeffs(i, j);
        let unit = |k: usize, s: i64| {
            let mut v = vec![rat(0, 1); 6];
            v[k] = rat(s, 1);
            v
        };
        assert_eq!(coeff(0, 2), unit(2, -1));
        assert_eq!(coeff(0, 3), unit(3, -1));
        assert_eq!(coeff(1, 2), unit(3, -1));
        assert_eq!(coeff(1, 3), unit(2, 1));
        assert_eq!(coeff(0, 4), unit(4, 1));
        assert_eq!(coeff(0, 5), unit(5, 1));
        assert_eq!(coeff(1, 4), unit(5, 1));
        assert_eq!(coeff(1, 5), unit(4, -1));
        assert_eq!(coeff(2, 4), vec![rat(0, 1); 6]);
        assert!(r.jacobi_holds());
    }

    #[test]
    fn realify_commutes_with_multiplication_by_i() {
        // [i u, v] = i [u, v] in the complex algebra translates to a bracket
        // identity between shifted coordinate vectors of the real form.
        let g = LieAlgebra::solvable3();
        let r = g.realify();
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..20 {
            let u = random_rational_vec(&mut rng, 3);
            let v = random_rational_vec(&mut rng, 3);
            let embed = |w: &[Rational]| {
                let mut out = vec![Rational::zero(); 6];
                for (k, c) in w.iter().enumerate() {
                    out[2 * k] = c.clone();
                }
                out
            };
            let times_i = |w: &[Rational]| {
                // Multiplication by i sends f_{2k} to f_{2k+1} and f_{2k+1}
                // to -f_{2k}.
                let mut out = vec![Rational::zero(); 6];
                for k in 0..3 {
                    out[2 * k + 1] = w[2 * k].clone();
                    out[2 * k] = -w[2 * k + 1].clone();
                }
                out
            };
            let lhs = r.bracket(&times_i(&embed(&u)), &embed(&v));
            let rhs = times_i(&r.bracket(&embed(&u), &embed(&v)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn nilradical_spans_are_bracket_closed_and_nilpotent() {
        for entry in catalog() {
            let g = &entry.complex_algebra;
            let vecs: Vec<Vec<Rational>> = entry
                .nilradical_indices
                .iter()
                .map(|&k| g.basis_vector(k))
                .collect();
            assert!(g.closed_under_bracket(&vecs), "{:?}", entry.kind);
        }
        // The solvable algebra's nilradical span{e1, e2} is abelian.
        let solv = LieAlgebra::solvable3();
        let w = solv.bracket(&solv.basis_vector(1), &solv.basis_vector(2));
        assert!(w.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn gaussian_bracket_agrees_with_complexified_coordinates() {
        let g = LieAlgebra::solvable3();
        // [X, (1+i) Y] = -(1+i) Y.
        let one_plus_i = GaussianRational::new(rat(1, 1), rat(1, 1));
        let x = vec![
            GaussianRational::from_rational(rat(1, 1)),
            GaussianRational::zero(),
            GaussianRational::zero(),
        ];
        let y = vec![
            GaussianRational::zero(),
            one_plus_i.clone(),
            GaussianRational::zero(),
        ];
        let out = g.bracket_gaussian(&x, &y);
        assert_eq!(out[1], -one_plus_i);
        assert!(out[0].is_zero() && out[2].is_zero());
    }

    #[test]
    fn json_roundtrip_preserves_structure_constants() {
        for entry in catalog() {
            let s = serde_json::to_string(&entry.complex_algebra).unwrap();
            let back: LieAlgebra = serde_json::from_str(&s).unwrap();
            assert_eq!(back, entry.complex_algebra);
            let s6 = serde_json::to_string(&entry.real_form).unwrap();
            let back6: LieAlgebra = serde_json::from_str(&s6).unwrap();
            assert_eq!(back6, entry.real_form);
        }
        // Spot-check the wire format.
        let s = serde_json::to_string(&LieAlgebra::heisenberg3()).unwrap();
        assert!(s.contains("\"dim\":3"));
        assert!(s.contains("[0,1,[\"0\",\"0\",\"1\"]]"));
    }

    #[test]
    fn malformed_specs_are_rejected() {
        let bad_index = LieAlgebra::new(3, vec![(1, 1, vec![rat(1, 1); 3])]);
        assert!(bad_index.is_err());
        let bad_len = LieAlgebra::new(3, vec![(0, 1, vec![rat(1, 1); 2])]);
        assert!(bad_len.is_err());
        let json = r#"{"dim":3,"brackets":[[0,1,["0","x","1"]]]}"#;
        assert!(serde_json::from_str::<LieAlgebra>(json).is_err());
    }
}
