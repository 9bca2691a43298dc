//! Integer polynomials, characteristic and minimal polynomials.
//!
//! Coefficients are `BigInt` and stored lowest degree first, so no computation
//! here ever rounds. The characteristic polynomial uses the Faddeev-LeVerrier
//! recurrence, whose divisions are exact for integer input; the minimal
//! polynomial comes from a Krylov-style reduction of matrix powers with full
//! bookkeeping of the combination coefficients.

use super::mat::Mat;
use super::rational::Rational;
use num::complex::Complex64;
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::BigInt;
use std::fmt;

/// A polynomial with integer coefficients, lowest degree first.
///
/// The zero polynomial is the empty coefficient vector; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Evaluates the polynomial at an integer matrix, exactly.
    pub fn eval_matrix(&self, m: &Mat<BigInt>) -> Mat<BigInt> {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Mat::<BigInt>::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.matmul(m);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Whether the coefficient sequence reads the same in both directions.
    /// For a monic integer polynomial this makes the root set closed under
    /// inversion.
    pub fn is_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Content: the gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| num::Integer::gcd(&acc, c))
    }

    /// Divides out the content and normalizes the leading coefficient to be
    /// positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = self.content();
        if self.leading().is_negative() {
            content = -content;
        }
        Self::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Companion matrix of a monic polynomial: ones on the superdiagonal and
    /// the negated coefficients along the bottom row.
    ///
    /// # Panics
    /// Panics unless the polynomial is monic of degree at least one.
    pub fn companion(&self) -> Mat<BigInt> {
        assert!(self.is_monic() && self.degree().is_some_and(|d| d >= 1));
        let n = self.degree().unwrap();
        let mut m = Mat::<BigInt>::zeros(n, n);
        for i in 0..n - 1 {
            m[(i, i + 1)] = BigInt::one();
        }
        for j in 0..n {
            m[(n - 1, j)] = -self.coeffs[j].clone();
        }
        m
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Characteristic polynomial `det(tI - M)` of an integer matrix by the
/// Faddeev-LeVerrier recurrence. Every division is exact; a failed exactness
/// check would indicate a logic error, not bad input.
pub fn char_poly(m: &Mat<BigInt>) -> IntPolynomial {
    assert!(m.is_square());
    let n = m.rows();
    // c[k] is the coefficient of t^(n-k); c[0] = 1.
    let mut cs = vec![BigInt::one()];
    let mut mk = m.clone();
    for k in 1..=n {
        let tr = mk.trace();
        let (q, r) = num::Integer::div_rem(&tr, &BigInt::from(k as i64));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible");
        let ck = -q;
        if k < n {
            let mut shifted = mk.clone();
            for i in 0..n {
                shifted[(i, i)] += &ck;
            }
            mk = m.matmul(&shifted);
        }
        cs.push(ck);
    }
    cs.reverse();
    IntPolynomial::new(cs)
}

/// Characteristic polynomial of an `f64` matrix, lowest degree first, by the
/// same recurrence in floating point.
pub fn char_poly_f64(m: &Mat<f64>) -> Vec<f64> {
    assert!(m.is_square());
    let n = m.rows();
    let mut cs = vec![1.0f64];
    let mut mk = m.clone();
    for k in 1..=n {
        let ck = -mk.trace() / k as f64;
        if k < n {
            let mut shifted = mk.clone();
            for i in 0..n {
                shifted[(i, i)] += ck;
            }
            mk = m.matmul(&shifted);
        }
        cs.push(ck);
    }
    cs.reverse();
    cs
}

/// Minimal polynomial of an integer matrix: the monic integer polynomial of
/// least degree annihilating it. Computed by reducing successive matrix powers
/// against an echelon basis while tracking combination coefficients, all in
/// exact rational arithmetic.
pub fn min_poly(m: &Mat<BigInt>) -> IntPolynomial {
    assert!(m.is_square());
    let n = m.rows();
    let mq = m.map(|x| Rational::from_integer(x.clone()));
    // Echelon rows over the n^2-dimensional space of matrices, each with the
    // coefficients expressing it as a combination of powers of M.
    let mut echelon: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut power = Mat::<Rational>::identity(n);
    for k in 0..=n {
        let mut w: Vec<Rational> = power.flat().to_vec();
        let mut combo = vec![Rational::zero(); k + 1];
        combo[k] = Rational::one();
        for (pivot, row, row_combo) in &echelon {
            let factor = w[*pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (wi, ri) in w.iter_mut().zip(row) {
                *wi -= &factor * ri;
            }
            for (ci, rc) in combo.iter_mut().zip(row_combo) {
                *ci -= &factor * rc;
            }
        }
        if let Some(pivot) = w.iter().position(|x| !x.is_zero()) {
            let lead = w[pivot].clone();
            for wi in w.iter_mut() {
                *wi /= &lead;
            }
            let mut combo_n = combo;
            for ci in combo_n.iter_mut() {
                *ci /= &lead;
            }
            combo_n.resize(n + 1, Rational::zero());
            echelon.push((pivot, w, combo_n));
            power = power.matmul(&mq);
        } else {
            // First dependency: combo gives the monic minimal polynomial.
            let ints: Vec<BigInt> = combo
                .iter()
                .map(|c| {
                    debug_assert!(c.is_integer(), "minimal polynomial must be integral");
                    c.to_integer()
                })
                .collect();
            return IntPolynomial::new(ints);
        }
    }
    unreachable!("a matrix of size n is annihilated by degree n");
}

/// Polynomial gcd over the integers via the primitive pseudo-remainder
/// sequence. The result is primitive with positive leading coefficient.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).primitive_part();
        a = b;
        b = r;
    }
    a
}

/// Pseudo-remainder of `a` by nonzero `b`: the remainder of
/// `lc(b)^(deg a - deg b + 1) * a` under exact division.
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("pseudo_rem by zero polynomial");
    let mut r = a.clone();
    let lb = b.leading();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lead = r.leading();
        let mut coeffs: Vec<BigInt> = r.coeffs().iter().map(|c| c * &lb).collect();
        for (j, bc) in b.coeffs().iter().enumerate() {
            coeffs[dr - db + j] -= &lead * bc;
        }
        r = IntPolynomial::new(coeffs);
    }
    r
}

/// Whether the minimal polynomial of `m` is squarefree, i.e. has constant gcd
/// with its derivative. Equivalent to semisimplicity of `m` over the rationals.
pub fn min_poly_squarefree(m: &Mat<BigInt>) -> bool {
    let p = min_poly(m);
    let g = poly_gcd(&p, &p.derivative());
    g.degree() == Some(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bmat(rows: Vec<Vec<i64>>) -> Mat<BigInt> {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    /// Cofactor-expansion characteristic polynomial, used as an independent
    /// oracle against the Faddeev-LeVerrier implementation.
    fn char_poly_cofactor(m: &Mat<BigInt>) -> IntPolynomial {
        // det(tI - M) with polynomial entries, expanded along the first row.
        fn det(rows: &[Vec<IntPolynomial>]) -> IntPolynomial {
            let n = rows.len();
            if n == 1 {
                return rows[0][0].clone();
            }
            let mut acc = IntPolynomial::zero();
            for (j, entry) in rows[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<IntPolynomial>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = entry.mul(&det(&minor));
                acc = if j % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
        let n = m.rows();
        let entries: Vec<Vec<IntPolynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = -m[(i, j)].clone();
                        if i == j {
                            IntPolynomial::new(vec![c, BigInt::one()])
                        } else {
                            IntPolynomial::new(vec![c])
                        }
                    })
                    .collect()
            })
            .collect();
        det(&entries)
    }

    #[test]
    fn char_poly_of_identity() {
        let p = char_poly(&bmat(vec![vec![1, 0], vec![0, 1]]));
        assert_eq!(p, IntPolynomial::from_i64(&[1, -2, 1]));
        assert_eq!(p.to_string(), "t^2 - 2t + 1");
    }

    #[test]
    fn char_poly_matches_cofactor_oracle() {
        let samples = vec![
            bmat(vec![vec![0, 1, 0], vec![-2, 3, 1], vec![5, 0, -1]]),
            bmat(vec![
                vec![1, 2, 0, -1],
                vec![0, 1, 1, 0],
                vec![3, -2, 0, 2],
                vec![1, 1, 1, 1],
            ]),
        ];
        for m in samples {
            assert_eq!(char_poly(&m), char_poly_cofactor(&m));
        }
    }

    #[test]
    fn companion_reconstructs_polynomial() {
        let p = IntPolynomial::from_i64(&[1, -1, 3, -1, 1]);
        assert_eq!(char_poly(&p.companion()), p);
    }

    #[test]
    fn min_poly_distinguishes_semisimple_from_nilpotent() {
        let diag = bmat(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(min_poly(&diag), IntPolynomial::from_i64(&[6, -5, 1]));
        assert!(min_poly_squarefree(&diag));

        let jordan = bmat(vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(min_poly(&jordan), IntPolynomial::from_i64(&[1, -2, 1]));
        assert!(!min_poly_squarefree(&jordan));

        let scalar = bmat(vec![vec![4, 0], vec![0, 4]]);
        assert_eq!(min_poly(&scalar), IntPolynomial::from_i64(&[-4, 1]));
        assert!(min_poly_squarefree(&scalar));
    }

    #[test]
    fn min_poly_annihilates() {
        let m = bmat(vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, -3, 2]]);
        let p = min_poly(&m);
        assert!(p.eval_matrix(&m).is_zero_matrix());
    }

    #[test]
    fn gcd_and_squarefree_parts() {
        // (t-1)^2 (t+2) against its derivative shares exactly (t-1).
        let sq = IntPolynomial::from_i64(&[1, -2, 1]); // (t-1)^2
        let shifted = IntPolynomial::from_i64(&[2, 1]); // t+2
        let p = sq.mul(&shifted);
        let g = poly_gcd(&p, &p.derivative());
        assert_eq!(g, IntPolynomial::from_i64(&[-1, 1]));
    }

    #[test]
    fn reciprocal_detection() {
        assert!(IntPolynomial::from_i64(&[1, -1, 3, -1, 1]).is_reciprocal());
        assert!(IntPolynomial::from_i64(&[1, -2, 1]).is_reciprocal());
        assert!(!IntPolynomial::from_i64(&[2, -3, 1]).is_reciprocal());
    }

    #[test]
    fn display_formatting() {
        assert_eq!(
            IntPolynomial::from_i64(&[1, -1, 3, -1, 1]).to_string(),
            "t^4 - t^3 + 3t^2 - t + 1"
        );
        assert_eq!(IntPolynomial::from_i64(&[0, -1]).to_string(), "-t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
